"""Batch command-line interface: JSON in, JSON or text out.

Subcommands
-----------
series-eval    evaluate a series expression over a chosen monoid and ring
dirichlet      arithmetic-function expressions, tabulated up to n-max
puiseux        series with fractional exponents on the rational grid
classify       artinian/noetherian/narrow/finite classification
poset          validate / longest-chain / largest-antichain / strict-pomonoid
category-check run the finiteness-space verification sweep
selftest       condensed property suites of every module

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation
(the latter is always a bug).  Windows are mandatory on lazy-series
commands so every invocation terminates.  Identical invocations,
including the seed, produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import finspace
from .catalog import descriptor_from_json, descriptor_to_json, carrier_from_spec
from .errors import GenSeriesError, InputError, InternalError
from .monoids import CatalogMonoid, Monoid, monoid_from_spec, posnat_mul, rational_grid
from .posets import (FinitePomonoid, FinitePoset, classify_subset,
                     is_strict_pomonoid, largest_antichain, longest_chain,
                     poset_violations)
from .rings import Ring, ring_from_spec
from .series import GenSeries, from_terms, geometric, moebius, zeta
from .selftest import run_selftest

# ---------------------------------------------------------------------------
# expression language

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot tokenize expression at position {pos}")
        pos = m.end()
        number, name, sym = m.groups()
        if number is not None:
            out.append(("num", int(number)))
        elif name is not None:
            out.append(("name", name))
        elif sym.strip():
            if sym not in "+-*·^/()":
                raise InputError(f"unexpected character {sym!r} in expression")
            out.append(("op", "*" if sym == "·" else sym))
    out.append(("end", ""))
    return out


class _ExprParser:
    """terms, +, -, products, parentheses, named builtins."""

    def __init__(self, text: str, monoid: Monoid, ring: Ring, window: int):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.monoid = monoid
        self.ring = ring
        self.window = window

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise InputError(f"expected {kind}, found {tok[1]!r}")
        if value is not None and tok[1] != value:
            raise InputError(f"expected {value!r}, found {tok[1]!r}")
        self.pos += 1
        return tok

    def parse(self) -> GenSeries:
        out = self.expr()
        if self.peek()[0] != "end":
            raise InputError(f"trailing input at token {self.peek()[1]!r}")
        return out

    def expr(self) -> GenSeries:
        acc = self.term()
        while self.peek() == ("op", "+") or self.peek() == ("op", "-"):
            op = self.take("op")[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> GenSeries:
        acc = self.unary()
        while self.peek() == ("op", "*"):
            self.take("op", "*")
            acc = acc * self.unary()
        return acc

    def unary(self) -> GenSeries:
        if self.peek() == ("op", "-"):
            self.take("op", "-")
            return -self.unary()
        return self.atom()

    def atom(self) -> GenSeries:
        kind, value = self.peek()
        if kind == "num":
            self.take("num")
            return self.constant(value)
        if kind == "op" and value == "(":
            self.take("op", "(")
            inner = self.expr()
            self.take("op", ")")
            return inner
        if kind == "name":
            self.take("name")
            if value == "T":
                return self.monomial()
            return self.builtin(value)
        raise InputError(f"expected a term, found {value!r}")

    def constant(self, n: int) -> GenSeries:
        return from_terms(self.monoid, self.ring, [(self.monoid.unit, self.ring.from_int(n))])

    def monomial(self) -> GenSeries:
        if self.peek() == ("op", "^"):
            self.take("op", "^")
            element = self.exponent()
        else:
            element = self._default_generator()
        return from_terms(self.monoid, self.ring, [(element, self.ring.one)])

    def _default_generator(self):
        name = getattr(self.monoid, "carrier", None)
        name = name.name if name is not None else ""
        if name in ("nat", "nat-discrete", "int", "int-discrete", "truncated"):
            element = 1
        elif name == "rational-grid":
            from fractions import Fraction
            element = Fraction(1)
        else:
            raise InputError(f"carrier {name!r} has no default generator; write T^<element>")
        self.monoid.check_element(element)
        return element

    def exponent(self):
        parenthesized = self.peek() == ("op", "(")
        if parenthesized:
            self.take("op", "(")
        sign = 1
        if self.peek() == ("op", "-"):
            self.take("op", "-")
            sign = -1
        kind, value = self.peek()
        if kind == "num":
            self.take("num")
            num = sign * value
            if self.peek() == ("op", "/"):
                self.take("op", "/")
                den = self.take("num")[1]
                from fractions import Fraction
                element = Fraction(num, den)
            else:
                element = num
        elif kind == "name" and sign == 1:
            element = self.take("name")[1]  # a word exponent
        else:
            raise InputError(f"bad exponent near {value!r}")
        if parenthesized:
            self.take("op", ")")
        self.monoid.check_element(element)
        return element

    def builtin(self, name: str) -> GenSeries:
        carrier = getattr(self.monoid, "carrier", None)
        cname = carrier.name if carrier is not None else ""
        if name == "geometric":
            if cname != "nat":
                raise InputError("geometric is a series over the naturals")
            return geometric(self.ring)
        if name == "zeta":
            if cname != "posnat-mul":
                raise InputError("zeta is an arithmetic function (posnat-mul carrier)")
            return zeta(self.ring)
        if name == "moebius":
            if cname != "posnat-mul":
                raise InputError("moebius is an arithmetic function (posnat-mul carrier)")
            return moebius(self.ring, self.window)
        raise InputError(f"unknown name {name!r} (builtins: geometric, zeta, moebius)")


def eval_expression(text: str, monoid: Monoid, ring: Ring, window: int) -> GenSeries:
    return _ExprParser(text, monoid, ring, window).parse()


# ---------------------------------------------------------------------------
# command implementations


def _emit_json(payload):
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))


def _series_payload(series: GenSeries, monoid, ring, window: int):
    terms = series.terms_on(window)
    return {
        "window": window,
        "terms": [[monoid.carrier.element_to_json(m) if isinstance(monoid, CatalogMonoid) else m,
                   ring.element_to_json(c)] for m, c in terms],
        "text": series.render(window),
    }


def _load_input(args):
    if getattr(args, "input", None):
        try:
            with open(args.input, "r", encoding="utf-8") as fh:
                return json.load(fh)
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
    return {}


def _field(args, blob, flag, key, required=True):
    value = getattr(args, flag, None)
    if value is None:
        value = blob.get(key)
    if value is None and required:
        raise InputError(f"missing --{flag.replace('_', '-')} (or {key!r} in --input)")
    return value


def _parse_json_flag(text):
    if not isinstance(text, str):
        return text
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text  # bare names like "nat" are accepted as-is


def _as_int(value, what):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise InputError(f"{what} must be an integer, got {value!r}")
    try:
        return int(value)
    except ValueError as exc:
        raise InputError(f"{what} must be an integer, got {value!r}") from exc


def _terms_from_json(monoid, ring, terms):
    if not isinstance(terms, list):
        raise InputError('"terms" must be a list of [element, coefficient] pairs')
    decoded = []
    for item in terms:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise InputError(f"bad term {item!r}; expected [element, coefficient]")
        decoded.append((monoid.carrier.element_from_json(item[0]),
                        ring.element_from_json(item[1])))
    return from_terms(monoid, ring, decoded)


def cmd_series_eval(args) -> int:
    blob = _load_input(args)
    monoid = monoid_from_spec(_parse_json_flag(_field(args, blob, "monoid", "monoid")))
    ring = ring_from_spec(_parse_json_flag(_field(args, blob, "ring", "ring")))
    window = _as_int(_field(args, blob, "window", "window"), "window")
    terms = blob.get("terms")
    expr = _field(args, blob, "expr", "expr", required=terms is None)
    if expr is not None:
        series = eval_expression(expr, monoid, ring, window)
    else:
        series = _terms_from_json(monoid, ring, terms)
    if args.format == "json":
        _emit_json(_series_payload(series, monoid, ring, window))
    else:
        print(series.render(window))
    return 0


def cmd_dirichlet(args) -> int:
    blob = _load_input(args)
    spec = _field(args, blob, "ring", "ring", required=False) or "int"
    ring = ring_from_spec(_parse_json_flag(spec))
    n_max = _as_int(_field(args, blob, "n_max", "n-max"), "n-max")
    if n_max < 1:
        raise InputError("n-max must be at least 1")
    expr = _field(args, blob, "expr", "expr")
    series = eval_expression(expr, posnat_mul(), ring, n_max)
    rows = [[n, ring.element_to_json(series.coeff(n))] for n in range(1, n_max + 1)]
    if args.format == "json":
        _emit_json({"values": rows})
    else:
        for n, value in rows:
            print(f"{n}\t{value}")
    return 0


def cmd_puiseux(args) -> int:
    blob = _load_input(args)
    monoid = rational_grid()
    spec = _field(args, blob, "ring", "ring", required=False) or "rational"
    ring = ring_from_spec(_parse_json_flag(spec))
    window = _as_int(_field(args, blob, "window", "window"), "window")
    terms = blob.get("terms")
    expr = _field(args, blob, "expr", "expr", required=terms is None)
    if expr is not None:
        series = eval_expression(expr, monoid, ring, window)
    else:
        series = _terms_from_json(monoid, ring, terms)
    if args.format == "json":
        payload = _series_payload(series, monoid, ring, window)
        payload["support"] = descriptor_to_json(monoid.carrier, series.support)
        _emit_json(payload)
    else:
        print(series.render(window))
    return 0


def cmd_classify(args) -> int:
    blob = _load_input(args)
    carrier = carrier_from_spec(_parse_json_flag(_field(args, blob, "carrier", "carrier")))
    desc_json = _field(args, blob, "descriptor", "descriptor")
    if isinstance(desc_json, str):
        try:
            desc_json = json.loads(desc_json)
        except json.JSONDecodeError as exc:
            raise InputError(f"descriptor line {exc.lineno}: {exc.msg}") from exc
    desc = descriptor_from_json(carrier, desc_json)
    result = classify_subset(carrier, desc)
    if args.format == "json":
        _emit_json(result.to_json())
    else:
        flags = result.to_json()
        print(", ".join(f"{k}={'yes' if v else 'no'}" for k, v in sorted(flags.items())))
    return 0


def cmd_poset(args) -> int:
    blob = _load_input(args)
    obj = blob if blob else _parse_json_flag(_field(args, blob, "poset", "poset"))
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise InputError(f"poset line {exc.lineno}: {exc.msg}") from exc
    op = args.operation
    if op == "validate":
        bad = poset_violations(tuple(obj.get("elements", ())),
                               tuple(tuple(r) for r in obj.get("leq", ())))
        if args.format == "json":
            _emit_json({"valid": not bad, "violations": bad})
        else:
            print("valid" if not bad else "invalid: " + "; ".join(bad))
        return 0
    if op == "strict-pomonoid":
        pomonoid = FinitePomonoid.from_json(obj)
        strict = is_strict_pomonoid(pomonoid)
        if args.format == "json":
            _emit_json({"strict": strict})
        else:
            print("strict" if strict else "not strict")
        return 0
    poset = FinitePoset.from_json(obj)
    if op == "longest-chain":
        chain = longest_chain(poset)
        if args.format == "json":
            _emit_json({"chain": chain, "length": len(chain)})
        else:
            print(" < ".join(str(x) for x in chain) if chain else "(empty)")
        return 0
    if op == "largest-antichain":
        anti = largest_antichain(poset)
        if args.format == "json":
            _emit_json({"antichain": anti, "size": len(anti)})
        else:
            print(", ".join(str(x) for x in anti) if anti else "(empty)")
        return 0
    raise InputError(f"unknown poset operation {op!r}")


def cmd_category_check(args) -> int:
    blob = _load_input(args)
    if blob:
        return _check_user_diagram(blob, args)
    failures, summary = finspace.verification_sweep(
        max_size=args.max_size, seed=args.seed,
        parallel_samples=args.samples, cone_cap=60,
        hom_size=min(args.max_size, 2), perp_size=3, family_samples=60)
    if args.format == "json":
        _emit_json({"verified": not failures, "summary": summary, "failures": failures})
    else:
        for line in summary:
            print(line)
        if failures:
            for line in failures:
                print("FAIL " + line)
        else:
            print("all universal properties verified")
    if failures:
        # construction bugs, not user error
        raise InternalError(f"{len(failures)} universal-property failures")
    return 0


def _check_user_diagram(blob, args) -> int:
    """Check a user-supplied span: morphism conditions on one or two legs,
    and equalizer/coequalizer construction + verification on a parallel pair."""
    if "dom" not in blob or "cod" not in blob or "f" not in blob:
        raise InputError('diagram JSON needs "dom", "cod" and "f"')
    dom = finspace.space_from_json(blob["dom"])
    cod = finspace.space_from_json(blob["cod"])
    if len(dom) > 6 or len(cod) > 6:
        raise InputError("diagram carriers are capped at 6 points; "
                         "mediator enumeration is exponential")
    dom_sys = finspace.system_from_json(blob["dom"]) if "family" in blob["dom"] else None
    cod_sys = finspace.system_from_json(blob["cod"]) if "family" in blob["cod"] else None
    f = finspace.partial_fn_from_json(blob["f"], dom, cod)
    result = {"f_morphism": finspace.is_morphism(f, dom_sys, cod_sys)}
    failures = []
    if "g" in blob:
        g = finspace.partial_fn_from_json(blob["g"], dom, cod)
        result["g_morphism"] = finspace.is_morphism(g, dom_sys, cod_sys)
        eq_space, incl = finspace.equalizer(f, g)
        q_space, qmap = finspace.coequalizer(f, g)
        result["equalizer"] = list(eq_space.carrier)
        result["coequalizer_classes"] = [list(lbl) for lbl in q_space.carrier]
        failures = (finspace.verify_equalizer(f, g, eq_space, incl)
                    + finspace.verify_coequalizer(f, g, q_space, qmap))
        result["verified"] = not failures
    if args.format == "json":
        _emit_json(result)
    else:
        for key, value in sorted(result.items()):
            print(f"{key}: {value}")
    if failures:
        raise InternalError(f"{len(failures)} universal-property failures")
    return 0


def cmd_selftest(args) -> int:
    bad = run_selftest(seed=args.seed)
    if bad:
        raise InternalError(f"{bad} self-test suites failed")
    return 0


# ---------------------------------------------------------------------------
# argument plumbing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse exits 2 by default; flag misuse is a validation error
        raise InputError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="genseries",
                     description="generalized power series, poset classification, "
                                 "and a finiteness-space category checker")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, window=False, monoid=False, ring=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--input", metavar="FILE", help="JSON file carrying the fields")
        if monoid:
            p.add_argument("--monoid", help='carrier spec, e.g. nat or {"trunc": 3}')
        if ring:
            p.add_argument("--ring",
                           help='ring spec: int, rational, mat2, {"mod": n}')
        if window:
            p.add_argument("--window", type=int, help="mandatory finite render window")

    p = sub.add_parser("series-eval", help="evaluate a series expression")
    common(p, window=True, monoid=True, ring=True)
    p.add_argument("--expr", help='e.g. "(1 - T) * geometric"')
    p.set_defaults(fn=cmd_series_eval)

    p = sub.add_parser("dirichlet", help="arithmetic-function table")
    common(p, ring=True)
    p.add_argument("--expr", help='e.g. "zeta * zeta" or "zeta * moebius"')
    p.add_argument("--n-max", dest="n_max", type=int, help="table upper end")
    p.set_defaults(fn=cmd_dirichlet)

    p = sub.add_parser("puiseux", help="series with fractional exponents")
    common(p, window=True, ring=True)
    p.add_argument("--expr", help='e.g. "T^(1/2) + T^(1/3)"')
    p.set_defaults(fn=cmd_puiseux)

    p = sub.add_parser("classify", help="order classification of a described subset")
    common(p)
    p.add_argument("--carrier", help="carrier spec")
    p.add_argument("--descriptor", help='descriptor JSON, e.g. {"all": true}')
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("poset", help="finite poset analysis")
    common(p)
    p.add_argument("--operation", required=True,
                   choices=("validate", "longest-chain", "largest-antichain",
                            "strict-pomonoid"))
    p.add_argument("--poset", help="poset JSON")
    p.set_defaults(fn=cmd_poset)

    p = sub.add_parser("category-check", help="verify universal properties")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--input", metavar="FILE",
                   help="check a user diagram instead of running the sweep")
    p.add_argument("--max-size", dest="max_size", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=40)
    p.set_defaults(fn=cmd_category_check)

    p = sub.add_parser("selftest", help="condensed property suites")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.fn(args)
    except json.JSONDecodeError as exc:
        print(f"error: input line {exc.lineno}: {exc.msg}", file=sys.stderr)
        return 1
    except InternalError as exc:
        print(f"internal error (this is a bug): {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except GenSeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

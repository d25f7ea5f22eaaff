"""Finite models of finiteness spaces and finitary partial functions.

A finiteness space is a set with a family of "finitary" subsets closed
under double dual, where the dual of a family is every subset meeting
each member finitely.  On a finite carrier the unique such structure is
the full powerset -- the dual of anything is everything -- so this module
plays two roles:

* the ``SetSystem`` type carries arbitrary (possibly non-closed) families
  so the dual operator and the morphism condition checkers can be
  exercised literally, including against hand-built systems where they
  actually fail;
* the categorical constructions (equalizer, product with adjoined
  points, three-stage coequalizer, coproduct, internal hom, evaluation,
  currying) run on the forced structure, where their universal
  properties can be verified by exhaustively enumerating every candidate
  mediating partial function.

Composition is partial-function composition; the empty partial function
is the zero morphism because the empty space is a zero object.

A note on the total-function variant: if morphisms are required to be
total, the category loses its terminal object once some finitary set is
infinite (the constant map onto a point has the whole carrier as a
pointwise preimage, which is then not dual-finitary), so tensoring with
the empty space has no right adjoint and the category is not closed.
Finite carriers cannot witness this; we record it here and work with
partial functions, where limits, colimits and an internal hom all exist.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import InputError, SizeBoundError

_SYSTEM_CAP = 16  # 2^|X| family enumeration guard


def _key(x):
    return repr(x)


# ---------------------------------------------------------------------------
# spaces and set systems


@dataclass(frozen=True)
class FinSpace:
    """A finite carrier; its finiteness structure is forced (full powerset)."""

    carrier: tuple

    def __len__(self):
        return len(self.carrier)

    def __repr__(self):
        return f"FinSpace({list(self.carrier)!r})"


def space(labels) -> FinSpace:
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise InputError("space carrier has duplicate labels")
    return FinSpace(tuple(sorted(labels, key=_key)))


@dataclass(frozen=True)
class SetSystem:
    """A carrier with an explicit family of subsets, not necessarily closed."""

    carrier: tuple
    family: tuple

    def __post_init__(self):
        carrier = set(self.carrier)
        for u in self.family:
            if not u <= carrier:
                raise InputError(f"family member {set(u)!r} leaves the carrier")


def system(labels, family) -> SetSystem:
    labels = sorted(set(labels), key=_key)
    fam = sorted({frozenset(u) for u in family}, key=_key)
    return SetSystem(tuple(labels), tuple(fam))


def full_system(labels) -> SetSystem:
    """The forced finiteness structure on a finite carrier: all subsets."""
    return system(labels, subsets(labels))


def subsets(labels) -> list[frozenset]:
    labels = list(labels)
    if len(labels) > _SYSTEM_CAP:
        raise SizeBoundError(f"refusing to enumerate 2^{len(labels)} subsets")
    out = []
    for r in range(len(labels) + 1):
        out.extend(frozenset(c) for c in itertools.combinations(labels, r))
    return out


def _is_finite(s) -> bool:
    # explicit carriers are finite; the guard keeps the dual literal
    return True


def perp(s: SetSystem) -> SetSystem:
    """The dual family: subsets meeting every family member finitely."""
    fam = [u2 for u2 in subsets(s.carrier)
           if all(_is_finite(u2 & u) for u in s.family)]
    return system(s.carrier, fam)


# ---------------------------------------------------------------------------
# partial functions


class PartialFn:
    """A partial function between finite spaces, the morphisms of the model."""

    __slots__ = ("dom", "cod", "_map", "_id")

    def __init__(self, dom: FinSpace, cod: FinSpace, mapping):
        mapping = dict(mapping)
        dom_set, cod_set = set(dom.carrier), set(cod.carrier)
        for x, y in mapping.items():
            if x not in dom_set:
                raise InputError(f"{x!r} is not in the domain carrier")
            if y not in cod_set:
                raise InputError(f"{y!r} is not in the codomain carrier")
        self.dom = dom
        self.cod = cod
        self._map = mapping
        self._id = (dom.carrier, cod.carrier,
                    tuple(sorted(mapping.items(), key=_key)))

    def __call__(self, x):
        """The value at x, or None where undefined."""
        return self._map.get(x)

    @property
    def mapping(self) -> dict:
        return dict(self._map)

    def defined_on(self) -> tuple:
        return tuple(x for x in self.dom.carrier if x in self._map)

    def is_total(self) -> bool:
        return len(self._map) == len(self.dom.carrier)

    def is_empty(self) -> bool:
        return not self._map

    def __eq__(self, other):
        return isinstance(other, PartialFn) and self._id == other._id

    def __hash__(self):
        return hash(self._id)

    def __repr__(self):
        items = ", ".join(f"{x!r}→{y!r}" for x, y in self._id[2])
        return f"PartialFn{{{items}}}"


def identity(sp: FinSpace) -> PartialFn:
    return PartialFn(sp, sp, {x: x for x in sp.carrier})


def empty_fn(dom: FinSpace, cod: FinSpace) -> PartialFn:
    """The zero morphism."""
    return PartialFn(dom, cod, {})


def compose(outer: PartialFn, inner: PartialFn) -> PartialFn:
    """outer after inner; defined where both stages are."""
    if inner.cod != outer.dom:
        raise InputError("composition mismatch: inner codomain != outer domain")
    mapping = {}
    for x in inner.defined_on():
        y = outer(inner(x))
        if y is not None:
            mapping[x] = y
    return PartialFn(inner.dom, outer.cod, mapping)


def all_partial_fns(dom: FinSpace, cod: FinSpace):
    """Every partial function dom -> cod: (|cod|+1)^|dom| of them."""
    choices = (None,) + cod.carrier
    for combo in itertools.product(choices, repeat=len(dom.carrier)):
        yield PartialFn(dom, cod, {x: y for x, y in zip(dom.carrier, combo)
                                   if y is not None})


def is_morphism(f: PartialFn, dom_system: SetSystem | None = None,
                cod_system: SetSystem | None = None) -> bool:
    """Check the two finitary conditions of a morphism: the image of every
    finitary set is finitary, and every pointwise preimage is dual-finitary.

    Against the forced structure both hold for any partial function; passing
    hand-restricted systems exercises the checker for real.
    """
    dom_system = dom_system if dom_system is not None else full_system(f.dom.carrier)
    cod_system = cod_system if cod_system is not None else full_system(f.cod.carrier)
    if dom_system.carrier != f.dom.carrier or cod_system.carrier != f.cod.carrier:
        raise InputError("set-system carriers do not match the morphism's spaces")
    cod_family = set(cod_system.family)
    for u in dom_system.family:
        image = frozenset(f(x) for x in u if f(x) is not None)
        if image not in cod_family:
            return False
    dual = set(perp(dom_system).family)
    for b in cod_system.carrier:
        pre = frozenset(x for x in f.dom.carrier if f(x) == b)
        if pre not in dual:
            return False
    return True


# ---------------------------------------------------------------------------
# tensor structure


def tensor(a: FinSpace, b: FinSpace) -> FinSpace:
    return space(itertools.product(a.carrier, b.carrier))


def unit_space() -> FinSpace:
    return space(["*"])


def tensor_mor(f: PartialFn, g: PartialFn) -> PartialFn:
    mapping = {}
    for x in f.defined_on():
        for y in g.defined_on():
            mapping[(x, y)] = (f(x), g(y))
    return PartialFn(tensor(f.dom, g.dom), tensor(f.cod, g.cod), mapping)


def associator(a: FinSpace, b: FinSpace, c: FinSpace) -> PartialFn:
    """((x,y),z) -> (x,(y,z)); a total bijection on carriers."""
    dom = tensor(tensor(a, b), c)
    cod = tensor(a, tensor(b, c))
    return PartialFn(dom, cod, {((x, y), z): (x, (y, z))
                                for x in a.carrier for y in b.carrier for z in c.carrier})


def symmetry(a: FinSpace, b: FinSpace) -> PartialFn:
    return PartialFn(tensor(a, b), tensor(b, a),
                     {(x, y): (y, x) for x in a.carrier for y in b.carrier})


# ---------------------------------------------------------------------------
# limits and colimits


@dataclass(frozen=True)
class Star:
    """The adjoined undefinedness point of one product coordinate."""

    index: int

    def __repr__(self):
        return f"*{self.index}"


def equalizer(f: PartialFn, g: PartialFn) -> tuple[FinSpace, PartialFn]:
    """The subspace where f and g agree as partial functions.

    Agreement at a point means both undefined, or both defined and equal.
    """
    _require_parallel(f, g)
    members = [x for x in f.dom.carrier if f(x) == g(x)]
    eq_space = space(members)
    incl = PartialFn(eq_space, f.dom, {x: x for x in members})
    return eq_space, incl


def product(spaces: list[FinSpace]) -> tuple[FinSpace, list[PartialFn]]:
    """Product: tuples over carriers with an adjoined point each, minus the
    all-adjoined tuple; projections are undefined on adjoined coordinates."""
    primed = [sp.carrier + (Star(i),) for i, sp in enumerate(spaces)]
    all_star = tuple(Star(i) for i in range(len(spaces)))
    tuples = [t for t in itertools.product(*primed) if t != all_star]
    prod = space(tuples)
    projections = []
    for i, sp in enumerate(spaces):
        projections.append(PartialFn(
            prod, sp, {t: t[i] for t in tuples if not isinstance(t[i], Star)}))
    return prod, projections


def coproduct(spaces: list[FinSpace]) -> tuple[FinSpace, list[PartialFn]]:
    """Disjoint union with total injections."""
    labels = [(i, x) for i, sp in enumerate(spaces) for x in sp.carrier]
    cop = space(labels)
    injections = [
        PartialFn(sp, cop, {x: (i, x) for x in sp.carrier})
        for i, sp in enumerate(spaces)
    ]
    return cop, injections


def coequalizer(f: PartialFn, g: PartialFn) -> tuple[FinSpace, PartialFn]:
    """Three-stage coequalizer of a parallel pair.

    Stage one quotients the codomain by the equivalence generated by
    f(x) ~ g(x) where both are defined.  Stage two removes every class hit
    by only one leg (those points must map to "undefined" in any cocone).
    Stage three keeps the classes whose preimage is dual-finitary -- on a
    finite carrier that removes nothing, but the filter is transcribed
    literally so the construction stays reusable beyond finite models.
    The quotient map is partial: undefined on discarded classes.
    """
    _require_parallel(f, g)
    carrier = f.cod.carrier
    parent = {y: y for y in carrier}

    def find(y):
        while parent[y] != y:
            parent[y] = parent[parent[y]]
            y = parent[y]
        return y

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    dom_f, dom_g = set(f.defined_on()), set(g.defined_on())
    for x in dom_f & dom_g:
        union(f(x), g(x))

    classes = {}
    for y in carrier:
        classes.setdefault(find(y), []).append(y)
    # class labels as sorted tuples keep output deterministic
    label_of = {root: tuple(sorted(members, key=_key))
                for root, members in classes.items()}

    one_sided = {label_of[find(f(x))] for x in dom_f - dom_g}
    one_sided |= {label_of[find(g(x))] for x in dom_g - dom_f}
    stage_two = [lbl for lbl in label_of.values() if lbl not in one_sided]

    dual = set(perp(full_system(carrier)).family)
    stage_three = [lbl for lbl in stage_two if frozenset(lbl) in dual]

    kept = set(stage_three)
    q_space = space(stage_three)
    qmap = PartialFn(f.cod, q_space,
                     {y: label_of[find(y)] for y in carrier
                      if label_of[find(y)] in kept})
    return q_space, qmap


def _require_parallel(f: PartialFn, g: PartialFn):
    if f.dom != g.dom or f.cod != g.cod:
        raise InputError("not a parallel pair")


# ---------------------------------------------------------------------------
# internal hom


def _graph_label(mapping) -> tuple:
    return tuple(sorted(mapping.items(), key=_key))


def internal_hom(x: FinSpace, y: FinSpace, bound: int = 4096) -> FinSpace:
    """The space of nonempty partial functions x -> y.

    The carrier has (|y|+1)^|x| - 1 points, so a hard bound guards the
    enumeration.
    """
    count = (len(y) + 1) ** len(x) - 1
    if count > bound:
        raise SizeBoundError(f"internal hom would have {count} points, bound is {bound}")
    labels = [_graph_label(h.mapping) for h in all_partial_fns(x, y) if not h.is_empty()]
    return space(labels)


def hom_family_conditions(w, dom_system: SetSystem, cod_system: SetSystem) -> dict:
    """The three structure conditions for a family member of the hom space.

    w is a collection of graph labels.  Condition "union" asks that the
    union of images of each finitary set is finitary (can fail on
    restricted systems); the two finiteness conditions are literal and
    degenerate-true on finite carriers.
    """
    w = [dict(lbl) for lbl in w]
    cod_family = set(cod_system.family)
    union_ok = True
    for u in dom_system.family:
        image = frozenset(y for h in w for x, y in h.items() if x in u)
        if image not in cod_family:
            union_ok = False
    cofinite_ok = True
    for u in dom_system.family:
        for v2 in perp(cod_system).family:
            hits = [h for h in w
                    if any(x in u and y in v2 for x, y in h.items())]
            if not _is_finite(hits):
                cofinite_ok = False
    pointwise_ok = True
    for u in dom_system.family:
        for y in cod_system.carrier:
            hits = [h for h in w if any(x in u and hy == y for x, hy in h.items())]
            if not _is_finite(hits):
                pointwise_ok = False
    return {"union": union_ok, "cofinite": cofinite_ok, "pointwise": pointwise_ok}


def ev(x: FinSpace, y: FinSpace, bound: int = 4096) -> PartialFn:
    """Evaluation hom(x,y) (x) tensor x -> y: (h, p) -> h(p) where defined."""
    hom = internal_hom(x, y, bound)
    dom = tensor(hom, x)
    mapping = {}
    for lbl in hom.carrier:
        graph = dict(lbl)
        for p, q in graph.items():
            mapping[(lbl, p)] = q
    return PartialFn(dom, y, mapping)


def curry(g: PartialFn, z: FinSpace, x: FinSpace, y: FinSpace,
          bound: int = 4096) -> PartialFn:
    """Transpose z tensor x -> y into z -> hom(x,y).

    Undefined at z-points whose section is the empty partial function.
    """
    if g.dom != tensor(z, x) or g.cod != y:
        raise InputError("curry expects a morphism from the tensor of z and x into y")
    hom = internal_hom(x, y, bound)
    mapping = {}
    for zz in z.carrier:
        section = {xx: g((zz, xx)) for xx in x.carrier if g((zz, xx)) is not None}
        if section:
            mapping[zz] = _graph_label(section)
    return PartialFn(z, hom, mapping)


def uncurry(h: PartialFn, z: FinSpace, x: FinSpace, y: FinSpace) -> PartialFn:
    mapping = {}
    for zz in h.defined_on():
        for xx, yy in dict(h(zz)).items():
            mapping[(zz, xx)] = yy
    return PartialFn(tensor(z, x), y, mapping)


# ---------------------------------------------------------------------------
# universal-property verification


def _mediators(dom: FinSpace, cod: FinSpace, check, limit=2) -> list[PartialFn]:
    """Exhaustively enumerate partial functions dom -> cod passing check.

    Stops after `limit` hits (existence needs one, uniqueness fails at two).
    The candidates are raw graphs, so the search is exhaustive by
    construction rather than by trusting any factorization recipe.
    """
    found = []
    choices = (None,) + cod.carrier
    labels = dom.carrier
    for combo in itertools.product(choices, repeat=len(labels)):
        lookup = dict(zip(labels, combo))
        if check(lambda v, _m=lookup: _m.get(v)):
            found.append(PartialFn(dom, cod, {k: v for k, v in lookup.items()
                                              if v is not None}))
            if len(found) >= limit:
                break
    return found


def default_probes(max_size: int = 2) -> list[FinSpace]:
    pool = ["z1", "z2", "z3"]
    return [space(pool[:k]) for k in range(max_size + 1)]


def verify_equalizer(f: PartialFn, g: PartialFn, eq_space: FinSpace,
                     incl: PartialFn, probes=None) -> list[str]:
    """Check the equalizing cone and, for every probe cone, the unique
    mediator through the inclusion."""
    problems = []
    if compose(f, incl) != compose(g, incl):
        problems.append("inclusion does not equalize the pair")
    for z in probes if probes is not None else default_probes():
        for h in all_partial_fns(z, f.dom):
            if compose(f, h) != compose(g, h):
                continue

            def factors(k, _h=h):
                return all(incl(k(zz)) == _h(zz) if k(zz) is not None else _h(zz) is None
                           for zz in z.carrier)

            hits = _mediators(z, eq_space, factors)
            if len(hits) != 1:
                problems.append(
                    f"equalizer mediation failed for cone {h!r}: {len(hits)} mediators")
    return problems


def verify_product(spaces: list[FinSpace], prod: FinSpace,
                   projections: list[PartialFn], probes=None,
                   rng: random.Random | None = None,
                   cone_cap: int | None = None) -> list[str]:
    """For sampled cones, exhaustively count mediators into the product."""
    problems = []
    for z in probes if probes is not None else default_probes():
        legs = [list(all_partial_fns(z, sp)) for sp in spaces]
        cones = list(itertools.product(*legs))
        if cone_cap is not None and len(cones) > cone_cap:
            cones = (rng or random.Random(0)).sample(cones, cone_cap)
        for cone in cones:

            def factors(k, _cone=cone):
                for pi, fi in zip(projections, _cone):
                    for zz in z.carrier:
                        v = k(zz)
                        via = pi(v) if v is not None else None
                        if via != fi(zz):
                            return False
                return True

            hits = _mediators(z, prod, factors)
            if len(hits) != 1:
                problems.append(
                    f"product mediation failed for a cone from {z!r}: {len(hits)} mediators")
    return problems


def verify_coproduct(spaces: list[FinSpace], cop: FinSpace,
                     injections: list[PartialFn], probes=None,
                     rng: random.Random | None = None,
                     cone_cap: int | None = None) -> list[str]:
    problems = []
    for z in probes if probes is not None else default_probes():
        legs = [list(all_partial_fns(sp, z)) for sp in spaces]
        cocones = list(itertools.product(*legs))
        if cone_cap is not None and len(cocones) > cone_cap:
            cocones = (rng or random.Random(0)).sample(cocones, cone_cap)
        for cocone in cocones:

            def factors(k, _cocone=cocone):
                for si, fi in zip(injections, _cocone):
                    for xx in si.dom.carrier:
                        v = si(xx)
                        via = k(v) if v is not None else None
                        if via != fi(xx):
                            return False
                return True

            hits = _mediators(cop, z, factors)
            if len(hits) != 1:
                problems.append(
                    f"coproduct mediation failed for a cocone into {z!r}: {len(hits)} mediators")
    return problems


def verify_coequalizer(f: PartialFn, g: PartialFn, q_space: FinSpace,
                       qmap: PartialFn, probes=None) -> list[str]:
    problems = []
    if compose(qmap, f) != compose(qmap, g):
        problems.append("quotient map does not coequalize the pair")
    for z in probes if probes is not None else default_probes():
        for h in all_partial_fns(f.cod, z):
            if compose(h, f) != compose(h, g):
                continue

            def factors(k, _h=h):
                for y in f.cod.carrier:
                    v = qmap(y)
                    via = k(v) if v is not None else None
                    if via != _h(y):
                        return False
                return True

            hits = _mediators(q_space, z, factors)
            if len(hits) != 1:
                problems.append(
                    f"coequalizer mediation failed for cocone {h!r}: {len(hits)} mediators")
    return problems


def verify_universal(kind: str, size_cap: int = 3, **kw) -> list[str]:
    """Dispatch by construction kind; empty report means verified.

    The diagram's input carriers must stay within size_cap (default 3):
    mediator enumeration is exponential and meant for desk-scale checking.
    """
    if kind in ("equalizer", "coequalizer"):
        diagram = [kw["f"].dom, kw["f"].cod]
    elif kind in ("product", "coproduct"):
        diagram = kw["spaces"]
    else:
        raise InputError(f"unknown construction kind {kind!r}")
    for sp in diagram:
        if len(sp) > size_cap:
            raise SizeBoundError(
                f"diagram space has {len(sp)} points, verification capped at {size_cap}")
    if kind == "equalizer":
        return verify_equalizer(kw["f"], kw["g"], kw["space"], kw["arrow"],
                                kw.get("probes"))
    if kind == "product":
        return verify_product(kw["spaces"], kw["space"], kw["arrows"],
                              kw.get("probes"), kw.get("rng"), kw.get("cone_cap"))
    if kind == "coproduct":
        return verify_coproduct(kw["spaces"], kw["space"], kw["arrows"],
                                kw.get("probes"), kw.get("rng"), kw.get("cone_cap"))
    return verify_coequalizer(kw["f"], kw["g"], kw["space"], kw["arrow"],
                              kw.get("probes"))


# ---------------------------------------------------------------------------
# JSON codecs for the CLI checker


def space_from_json(obj) -> FinSpace:
    if not isinstance(obj, dict) or "carrier" not in obj:
        raise InputError('space JSON needs a "carrier" list')
    return space(obj["carrier"])


def system_from_json(obj) -> SetSystem:
    """A set system from {"carrier": [...], "family": [[...], ...]}.

    Without an explicit family the forced structure (all subsets) is used.
    """
    sp = space_from_json(obj)
    if "family" not in obj:
        return full_system(sp.carrier)
    return system(sp.carrier, [frozenset(u) for u in obj["family"]])


def partial_fn_from_json(obj, dom: FinSpace, cod: FinSpace) -> PartialFn:
    if not isinstance(obj, dict) or "graph" not in obj:
        raise InputError('morphism JSON needs a "graph" object')
    return PartialFn(dom, cod, dict(obj["graph"]))


# ---------------------------------------------------------------------------
# seeded verification sweep


def _random_parallel_pair(rng: random.Random, max_size: int):
    letters = ["a", "b", "c", "d"]
    nx = rng.randint(0, max_size)
    ny = rng.randint(0, max_size)
    x = space(letters[:nx])
    y = space(letters[:ny])

    def rand_fn():
        mapping = {}
        for lbl in x.carrier:
            pick = rng.randint(0, len(y.carrier))
            if pick > 0:
                mapping[lbl] = y.carrier[pick - 1]
        return PartialFn(x, y, mapping)

    return rand_fn(), rand_fn()


def verification_sweep(max_size: int = 3, seed: int = 0,
                       parallel_samples: int = 500, cone_cap: int = 120,
                       hom_size: int = 2, perp_size: int = 4,
                       family_samples: int = 200) -> tuple[list[str], list[str]]:
    """Run the whole category test battery; returns (failures, summary).

    Equalizers and coequalizers run on seeded random parallel pairs;
    products and coproducts on every pair of carrier sizes up to max_size;
    the curry/uncurry bijection is counted exactly up to hom_size; the
    dual-operator laws are sampled over random families up to perp_size.
    """
    if not 0 <= max_size <= 3:
        raise SizeBoundError("verification sweep supports carrier sizes 0..3")
    rng = random.Random(seed)
    failures: list[str] = []
    summary: list[str] = []
    probes = default_probes(2)

    for _ in range(parallel_samples):
        f, g = _random_parallel_pair(rng, max_size)
        eq_space, incl = equalizer(f, g)
        failures += verify_equalizer(f, g, eq_space, incl, probes)
        q_space, qmap = coequalizer(f, g)
        failures += verify_coequalizer(f, g, q_space, qmap, probes)
    summary.append(f"equalizers+coequalizers: {parallel_samples} parallel pairs")

    letters = ["a", "b", "c"]
    others = ["p", "q", "r"]
    pair_count = 0
    for nx in range(max_size + 1):
        for ny in range(max_size + 1):
            pair = [space(letters[:nx]), space(others[:ny])]
            prod, projs = product(pair)
            failures += verify_product(pair, prod, projs, probes, rng, cone_cap)
            cop, injs = coproduct(pair)
            failures += verify_coproduct(pair, cop, injs, probes, rng, cone_cap)
            pair_count += 1
    prod0, _ = product([])
    if len(prod0) != 0:
        failures.append("empty product is not the empty space")
    summary.append(f"products+coproducts: {pair_count} space pairs, empty product checked")

    bijections = 0
    for nz in range(hom_size + 1):
        for nx in range(hom_size + 1):
            for ny in range(hom_size + 1):
                z = space([f"z{i}" for i in range(nz)])
                x = space([f"x{i}" for i in range(nx)])
                y = space([f"y{i}" for i in range(ny)])
                tens = tensor(z, x)
                raw = list(all_partial_fns(tens, y))
                curried = [curry(gg, z, x, y) for gg in raw]
                if len(set(curried)) != len(raw):
                    failures.append(f"curry not injective at sizes ({nz},{nx},{ny})")
                back = [uncurry(h, z, x, y) for h in curried]
                if back != raw:
                    failures.append(f"uncurry(curry) is not the identity at ({nz},{nx},{ny})")
                hom = internal_hom(x, y)
                count_direct = (len(y) + 1) ** (len(z) * len(x))
                count_hom = (len(hom) + 1) ** len(z)
                if count_direct != count_hom:
                    failures.append(f"hom-tensor count mismatch at ({nz},{nx},{ny})")
                bijections += 1
    summary.append(f"curry/uncurry bijection: {bijections} size combinations")

    fam_checked = 0
    for _ in range(family_samples):
        n = rng.randint(0, perp_size)
        labels = [f"e{i}" for i in range(n)]
        pool = subsets(labels)
        fam = rng.sample(pool, rng.randint(0, len(pool)))
        sys = system(labels, fam)
        once = perp(sys)
        twice = perp(once)
        thrice = perp(twice)
        if not set(sys.family) <= set(twice.family):
            failures.append(f"family not contained in its double dual: {fam!r}")
        if set(thrice.family) != set(once.family):
            failures.append(f"triple dual differs from single dual: {fam!r}")
        fam_checked += 1
    summary.append(f"dual-operator laws: {fam_checked} sampled families")

    zero = space([])
    for k in range(max_size + 1):
        a = space(letters[:k])
        if len(list(all_partial_fns(zero, a))) != 1 or len(list(all_partial_fns(a, zero))) != 1:
            failures.append(f"empty space is not a zero object against size {k}")
    summary.append("zero object: checked against all sizes")

    return failures, summary

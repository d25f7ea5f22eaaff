"""Generalized power series over partial finiteness monoids.

The library couples three toolkits:

* exact coefficient rings and lazy series with convolution over finite
  decompositions (ordinary, Laurent, Dirichlet, Puiseux, free-word and
  degree-capped polynomial rings all arise from one construction);
* a poset toolkit with the artinian/narrow/noetherian classification
  that decides which supports are admissible;
* finite models of finiteness spaces with an exhaustively verified
  categorical structure (limits, colimits, internal hom).
"""

from .catalog import (ALL, All, Carrier, Descriptor, FiniteSet, FreeWords,
                      GridTail, IntDiscrete, IntUsual, NatDiscrete, NatUsual,
                      PosNatDivisibility, PosNatMulUsual, RationalGrid,
                      TailGE, Truncated, carrier_from_spec, descriptor_from_json,
                      descriptor_to_json, finite)
from .errors import (CarrierError, DescriptorError, GenSeriesError, InputError,
                     InternalError, SizeBoundError, StrictnessError)
from .monoids import (CatalogMonoid, Monoid, TableMonoid, catalog_monoids,
                      free_words, integers, integers_discrete, monoid_from_spec,
                      nat, nat_discrete, posnat_div, posnat_mul, rational_grid,
                      truncated)
from .posets import (FinitePomonoid, FinitePoset, OrderClassification,
                     classify_subset, embed_finite_pomonoid,
                     increasing_subsequence, is_strict_map, is_strict_pomonoid,
                     largest_antichain, longest_chain, poset_violations)
from .rings import (IntRing, Mat2Ring, ModRing, RationalRing, Ring,
                    check_ring_axioms, find_noncommuting_pair, ring_from_spec)
from .series import (GenSeries, from_function, from_terms, geometric, moebius,
                     unit_series, zero_series, zeta)
from . import finspace

__version__ = "0.1.0"

__all__ = [
    "ALL", "All", "CarrierError", "Carrier", "CatalogMonoid", "Descriptor",
    "DescriptorError", "FinitePomonoid", "FinitePoset", "FiniteSet",
    "FreeWords", "GenSeries", "GenSeriesError", "GridTail", "InputError",
    "IntDiscrete", "IntRing", "IntUsual", "InternalError", "Mat2Ring",
    "ModRing", "Monoid", "NatDiscrete", "NatUsual", "OrderClassification",
    "PosNatDivisibility", "PosNatMulUsual", "RationalGrid", "RationalRing",
    "Ring", "SizeBoundError", "StrictnessError", "TableMonoid", "TailGE",
    "Truncated", "carrier_from_spec", "catalog_monoids", "check_ring_axioms",
    "classify_subset", "descriptor_from_json", "descriptor_to_json",
    "embed_finite_pomonoid", "find_noncommuting_pair", "finite", "finspace",
    "free_words", "from_function", "from_terms", "geometric",
    "increasing_subsequence", "integers", "integers_discrete", "is_strict_map",
    "is_strict_pomonoid", "largest_antichain", "longest_chain", "moebius",
    "monoid_from_spec", "nat", "nat_discrete", "poset_violations",
    "posnat_div", "posnat_mul", "rational_grid", "ring_from_spec",
    "truncated", "unit_series", "zero_series", "zeta",
]

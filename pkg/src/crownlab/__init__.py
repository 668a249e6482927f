"""Exact combinatorics of crown posets S_n^k and their critical-pair graphs."""

from .crown_core import (
    Crown,
    CrownDomainError,
    Element,
    ResourceGuardError,
    arc_positions,
    automorphism,
    cyclic_between,
    incomparable,
    leq,
    make_crown,
    pair_size,
    parse_element,
    phi,
    phi_pair,
    tau,
    tau_pair,
)
from .critpairs import (
    CritGraph,
    CritPair,
    PairSet,
    adjacent,
    build_graph,
    enumerate_inc,
    inc_pairs,
    is_independent,
    phi_set,
    projections,
    tau_set,
)
from .reversibility import (
    DISJOINT_PROPERTY,
    OVERLAP_PROPERTY,
    AltCycle,
    LinearExtension,
    NonReversible,
    Reversible,
    block_structure,
    classify_sac3,
    consistent_labeling,
    is_maximal_reversible,
    is_reversible,
    is_strict,
    reversibility_certificate,
    reversing_extension,
)
from .canonical import (
    canonical_set,
    enumerate_canonical,
    is_h_contiguous,
    is_maximal_independent,
    noncanonical_extremal,
    recover_sigma,
    sigma_decode,
    sigma_encode,
)
from .transforms import (
    blocking_pairs,
    cycle_gaps,
    fan,
    saturate_fans,
    spread,
    transform,
    transform_with_trace,
)
from .extremal import (
    MatchingCycleSpec,
    check_matching_conditions,
    default_matching_spec,
    downset_of_cycle,
    inr_extremal,
    matching_cycle,
    max_pairs,
    minr_d3_certify,
    sac3,
)
from .solvers import (
    chromatic_number,
    enumerate_maximal_independent,
    enumerate_maximal_reversible,
    enumerate_min_nonreversible,
    max_independent_set,
    max_inr_set,
    max_reversible_set,
    min_reversible_cover,
    random_independent_set,
    strict_cycles,
    verify_battery,
)

__version__ = "0.1.0"

__all__ = [
    "Crown",
    "CrownDomainError",
    "Element",
    "ResourceGuardError",
    "arc_positions",
    "automorphism",
    "cyclic_between",
    "incomparable",
    "leq",
    "make_crown",
    "pair_size",
    "parse_element",
    "phi",
    "phi_pair",
    "tau",
    "tau_pair",
    "CritGraph",
    "CritPair",
    "PairSet",
    "adjacent",
    "build_graph",
    "enumerate_inc",
    "inc_pairs",
    "is_independent",
    "phi_set",
    "projections",
    "tau_set",
    "DISJOINT_PROPERTY",
    "OVERLAP_PROPERTY",
    "AltCycle",
    "LinearExtension",
    "NonReversible",
    "Reversible",
    "block_structure",
    "classify_sac3",
    "consistent_labeling",
    "is_maximal_reversible",
    "is_reversible",
    "is_strict",
    "reversibility_certificate",
    "reversing_extension",
    "canonical_set",
    "enumerate_canonical",
    "is_h_contiguous",
    "is_maximal_independent",
    "noncanonical_extremal",
    "recover_sigma",
    "sigma_decode",
    "sigma_encode",
    "blocking_pairs",
    "cycle_gaps",
    "fan",
    "saturate_fans",
    "spread",
    "transform",
    "transform_with_trace",
    "MatchingCycleSpec",
    "check_matching_conditions",
    "default_matching_spec",
    "downset_of_cycle",
    "inr_extremal",
    "matching_cycle",
    "max_pairs",
    "minr_d3_certify",
    "sac3",
    "chromatic_number",
    "enumerate_maximal_independent",
    "enumerate_maximal_reversible",
    "enumerate_min_nonreversible",
    "max_independent_set",
    "max_inr_set",
    "max_reversible_set",
    "min_reversible_cover",
    "random_independent_set",
    "strict_cycles",
    "verify_battery",
]

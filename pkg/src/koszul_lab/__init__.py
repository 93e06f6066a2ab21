"""Koszul cycles, homology and regularity of monomial ideals.

Exact linear algebra over Q or GF(p), explicit cycle families for powers of
maximal ideals, Betti tables of Segre-Veronese rings, and falsification-style
verification suites for the regularity and generation bounds.
"""

from .fields import QQ, FieldError, PrimeField, RationalField, field_context, parse_field
from .rings import (
    MonomialIdeal,
    RingConfig,
    borel_closure,
    component_basis,
    component_dim,
    ideal_from_dict,
    is_strongly_stable,
    monomial_quotient_dim,
    power_containment,
    power_ideal,
    quotient_component_dim,
    reg_monomial_ideal,
    taylor_caps,
)
from .exterior import (
    KoszulChain,
    alpha_map,
    boundary,
    decompose,
    gamma_map,
    merge_indices,
    sign,
    sort_bracket,
    wedge,
)
from .homology import (
    Coefficients,
    ComponentBasis,
    GradedModule,
    KoszulComplex,
    cycle_module,
    cycle_space,
    free_module,
    generates_up_to,
    generation_degrees,
    homology_dim,
    homology_module,
    quotient_ring_module,
    reg_scan,
    tor_dims,
    tor_violations,
)
from .cycles import (
    CycleFamily,
    Multi2Checker,
    gen2_families,
    multi2_membership,
    symmetrized_cycle,
    z1_generator,
    z1_generator_family,
    z1_power_component,
)
from .veronese import (
    BettiTable,
    InfeasibleError,
    IndexResult,
    SegreVeroneseSpec,
    green_lazarsfeld_index,
    np_check,
    quadric_relation_count,
    veronese_betti,
)
from .harness import (
    CaseRecord,
    SuiteReport,
    probe_q1,
    random_monomial_ideal,
    run_suite,
)

__all__ = [
    "QQ",
    "FieldError",
    "PrimeField",
    "RationalField",
    "field_context",
    "parse_field",
    "MonomialIdeal",
    "RingConfig",
    "borel_closure",
    "component_basis",
    "component_dim",
    "ideal_from_dict",
    "is_strongly_stable",
    "monomial_quotient_dim",
    "power_containment",
    "power_ideal",
    "quotient_component_dim",
    "reg_monomial_ideal",
    "taylor_caps",
    "KoszulChain",
    "alpha_map",
    "boundary",
    "decompose",
    "gamma_map",
    "merge_indices",
    "sign",
    "sort_bracket",
    "wedge",
    "Coefficients",
    "ComponentBasis",
    "GradedModule",
    "KoszulComplex",
    "cycle_module",
    "cycle_space",
    "free_module",
    "generates_up_to",
    "generation_degrees",
    "homology_dim",
    "homology_module",
    "quotient_ring_module",
    "reg_scan",
    "tor_dims",
    "tor_violations",
    "CycleFamily",
    "Multi2Checker",
    "gen2_families",
    "multi2_membership",
    "symmetrized_cycle",
    "z1_generator",
    "z1_generator_family",
    "z1_power_component",
    "BettiTable",
    "InfeasibleError",
    "IndexResult",
    "SegreVeroneseSpec",
    "green_lazarsfeld_index",
    "np_check",
    "quadric_relation_count",
    "veronese_betti",
    "CaseRecord",
    "SuiteReport",
    "probe_q1",
    "random_monomial_ideal",
    "run_suite",
]

__version__ = "0.1.0"

"""Root systems, J-antichains and J-ideals, and irreducible ideals of parabolics."""
from .irreducible import (
    Parabolic,
    ScaleCapError,
    bod,
    check_equivalence,
    classify,
    cond_i,
    cond_ii,
    cond_iii,
    cond_iv,
    enumerate_irreducible_S,
    irreducible_ideal_of_parabolic,
    lemone_witness,
    max_pairing,
    parabolic_from_J,
    parabolic_from_weight,
    perp_census,
    S_of_lambda,
    two_rho,
    verify_corollary,
)
from .poset_ideals import (
    antichain_sum_criterion,
    enumerate_J_antichains,
    enumerate_J_ideals,
    ideal_from_antichain,
    is_abelian_J_antichain,
    is_J_antichain,
    is_J_ideal,
    lemma_checks,
    minimal_elements,
    nilpotence_of_ideal,
)
from .rootsys import (
    ConfigurationError,
    RootSystem,
    RootSystemSpec,
    UnsupportedError,
    build_root_system,
)
from .verify import run_suite

__version__ = "0.1.0"

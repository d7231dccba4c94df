"""Groebner bases, minimal-support codewords and Betti numbers for the
first and second generalized Hamming weights of linear codes over
small finite fields, with brute-force oracles validating every claim
at desk scale."""

from .betti import (
    BettiTable,
    SquarefreeIdeal,
    betti_min,
    betti_numbers,
    check_betti_min_equivalences,
    direct_mins,
)
from .codes import (
    LinearCode,
    Subspace2,
    code_from_matrix,
    d2_pair_oracle,
    ghw,
    ghw_witnesses,
    iter_codewords,
    minimal_support_codewords,
    span2_weight,
    support,
    weight,
)
from .config import DEFAULT_CAPS, Caps
from .counterexample import (
    CounterexampleCode,
    SeedCode,
    build,
    example_seed,
    search_seed,
    verify_mechanism,
    verify_unique_minimal_plane,
)
from .d2 import (
    D2Report,
    analyze,
    check_intersection_bound,
    check_mg_sufficiency,
    compute_m1_m2,
    is_d2_test_set,
)
from .gf import FieldElement, FieldSpec, field_for_q, field_new
from .groebner import (
    Binomial,
    GroebnerBasis,
    associated_codeword,
    compute_mg,
    evaluate,
    reduced_gb,
    reduced_gb_by_degree,
)
from .orders import (
    DEGLEX,
    DEGREVLEX,
    OrderSpec,
    check_block_dominance,
    check_minus_compatibility,
    delta,
    delta_inverse,
    word_compare,
)

__version__ = "0.1.0"

"""Bundled example codes with externally known invariants.

These two codes drive the ``paper-examples`` command and the exact
acceptance checks: a (9,3) ternary code whose reduced basis has 457
binomials (27 of them relation elements) and a (8,2) ternary code whose
nonzero codewords all have weight 6.
"""

from __future__ import annotations

from .codes import code_from_matrix
from .gf import field_new

TERNARY_9_3 = (
    (1, 0, 0, 0, 0, 1, 0, 2, 0),
    (0, 1, 0, 0, 1, 1, 1, 0, 1),
    (0, 0, 1, 1, 2, 2, 1, 1, 0),
)

TERNARY_8_2 = (
    (1, 1, 1, 2, 1, 2, 0, 0),
    (0, 0, 1, 1, 1, 1, 1, 1),
)

EXPECTED_9_3 = {
    "gb_size": 457,
    "rx_count": 27,
    "m1": (2, 0, 0, 0, 0, 2, 0, 1, 0),
    "m2": (0, 1, 0, 0, 1, 1, 1, 0, 1),
    "I": (1, 6, 8),
    "J": (2, 5, 6, 7, 9),
    "d2": 7,
    "intersection": 1,
    # x_{1,1} x_{8,2} - x_{6,2}
    "member_f": {"lead": (((1, 1), 1), ((8, 2), 1)), "trail": (((6, 2), 1),)},
    # x_{6,2} x_{7,2} x_{9,2} - x_{2,1} x_{5,1}
    "member_g": {
        "lead": (((6, 2), 1), ((7, 2), 1), ((9, 2), 1)),
        "trail": (((2, 1), 1), ((5, 1), 1)),
    },
}

EXPECTED_8_2 = {
    "nonzero_weight": 6,
    "d2": 8,
    "intersection": 4,
    "I_size": 6,
    "J_size": 6,
}


def ternary_9_3_code():
    return code_from_matrix(field_new(3), TERNARY_9_3)


def ternary_8_2_code():
    return code_from_matrix(field_new(3), TERNARY_8_2)


def sparse_to_mono(pairs, n, q):
    """Exponent tuple from (((i, j), e), ...) variable records."""
    exps = [0] * (n * (q - 1))
    for (i, j), e in pairs:
        exps[(i - 1) * (q - 1) + (j - 1)] = e
    return tuple(exps)

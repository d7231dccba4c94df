"""Code construction, enumeration, brute-force weights and minimal
supports, anchored on the two bundled reference codes."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbcodes.codes import (
    code_from_matrix,
    codeword_matrix,
    d2_pair_oracle,
    gaussian_binomial,
    ghw,
    ghw_witnesses,
    iter_codewords,
    mat_mul,
    min_weight,
    minimal_support_codewords,
    rank,
    span2,
    span2_weight,
    support,
    support_mask,
    weight,
)
from gbcodes.config import DEFAULT_CAPS
from gbcodes.errors import BadIndex, DependentRows, EmptyCode, TooLarge, ZeroInput
from gbcodes.gf import field_new


def test_identity_code_is_full_space(gf3):
    code = code_from_matrix(gf3, np.eye(3, dtype=int))
    assert code.k == 3 and code.H.shape == (0, 3)
    assert len(list(iter_codewords(code))) == 27


def test_reference_8_2_construction(gf3, code_8_2):
    assert (code_8_2.n, code_8_2.k) == (8, 2)
    words = list(iter_codewords(code_8_2))
    assert len(words) == len(set(words)) == 9
    assert all(code_8_2.contains(w) for w in words)
    assert sorted(weight(w) for w in words if any(w)) == [6] * 8


def test_reference_9_3_construction(code_9_3):
    assert (code_9_3.n, code_9_3.k) == (9, 3)
    assert len(set(iter_codewords(code_9_3))) == 27
    Z = mat_mul(code_9_3.field, code_9_3.G, code_9_3.H.T.copy())
    assert not Z.any()


def test_dependent_rows(gf3):
    with pytest.raises(DependentRows) as exc:
        code_from_matrix(gf3, [[1, 2, 0], [2, 1, 0], [0, 1, 1]])
    assert exc.value.rank == 2
    code = code_from_matrix(gf3, [[1, 2, 0], [2, 1, 0], [0, 1, 1]], allow_dependent=True)
    assert code.k == 2


def test_empty_code(gf3):
    with pytest.raises(EmptyCode):
        code_from_matrix(gf3, [[0, 0, 0]])


def test_enumeration_cap(gf3, code_9_3):
    with pytest.raises(TooLarge):
        codeword_matrix(code_9_3, DEFAULT_CAPS.with_(enumeration=10))


def test_parity_check_null_space(gf3, code_8_2):
    # every word in the null space of H is a codeword and vice versa
    words = set(iter_codewords(code_8_2))
    count = 0
    for w in words:
        assert code_8_2.contains(w)
    full = code_from_matrix(gf3, np.eye(8, dtype=int))
    for w in iter_codewords(full):
        if code_8_2.contains(w):
            count += 1
    assert count == 9


def test_ghw_reference_values(code_8_2, code_9_3):
    assert ghw(code_8_2, 1) == 6
    assert ghw(code_8_2, 2) == 8
    assert ghw(code_9_3, 1) == 3  # exhaustive weight scan over 26 nonzero words
    assert ghw(code_9_3, 2) == 7
    with pytest.raises(BadIndex):
        ghw(code_8_2, 3)
    with pytest.raises(BadIndex):
        ghw(code_8_2, 0)


def test_ghw_strictly_increasing(code_9_3):
    ds = [ghw(code_9_3, i) for i in (1, 2, 3)]
    assert ds == sorted(set(ds)), "Wei monotonicity sanity check"


def test_d2_oracle_agrees_with_subspace_scan(code_8_2, code_9_3, gf3):
    for code in (code_8_2, code_9_3):
        d2_pairs, witness = d2_pair_oracle(code)
        assert d2_pairs == ghw(code, 2)
        dim, wt = span2_weight(code.field, *witness)
        assert (dim, wt) == (2, d2_pairs)
    rng = random.Random(5)
    for _ in range(10):
        rows = [[rng.randrange(3) for _ in range(6)] for _ in range(2)]
        if rank(gf3, rows) != 2:
            continue
        code = code_from_matrix(gf3, rows)
        assert d2_pair_oracle(code)[0] == ghw(code, 2)


def test_ghw_witnesses(code_8_2):
    val, wits = ghw_witnesses(code_8_2, 2, limit=100)
    assert val == 8 and len(wits) == 1  # a (8,2) code has a single plane
    basis = wits[0]
    assert weight_union(basis) == 8


def weight_union(words):
    mask = 0
    for w in words:
        mask |= support_mask(w)
    return mask.bit_count()


def test_gaussian_binomial_counts_subspaces():
    from gbcodes.codes import _iter_rref_bases

    for q, k, i in [(2, 4, 2), (3, 4, 2), (3, 3, 1), (4, 3, 2)]:
        total = sum(B.shape[0] for B in _iter_rref_bases(q, k, i))
        assert total == gaussian_binomial(k, i, q)
        seen = set()
        for B in _iter_rref_bases(q, k, i):
            for t in range(B.shape[0]):
                seen.add(B[t].tobytes())
        assert len(seen) == total


def test_minimal_supports_full_space(gf3):
    code = code_from_matrix(gf3, np.eye(2, dtype=int))
    minimal = minimal_support_codewords(code)
    assert sorted(minimal) == [(0, 1), (0, 2), (1, 0), (2, 0)]


def test_minimal_supports_reference_8_2(code_8_2):
    # all 8 nonzero codewords have equal weight with pairwise
    # incomparable supports, so all are minimal
    minimal = minimal_support_codewords(code_8_2)
    assert len(minimal) == 8
    masks = {support_mask(w) for w in minimal}
    for a in masks:
        for b in masks:
            assert a == b or (a & b) not in (a, b)


def test_minimal_supports_closed_under_scaling(code_9_3):
    minimal = set(minimal_support_codewords(code_9_3))
    assert len(minimal) == 20
    f = code_9_3.field
    for w in minimal:
        for lam in range(2, 3):
            assert tuple(f.mul(lam, a) for a in w) in minimal


def test_minimal_supports_definition(code_9_3):
    minimal = set(minimal_support_codewords(code_9_3))
    words = [w for w in iter_codewords(code_9_3) if any(w)]
    for w in words:
        dominated = any(
            support_mask(v) != support_mask(w)
            and support_mask(v) & support_mask(w) == support_mask(v)
            for v in words
        )
        assert (w in minimal) == (not dominated)


def test_minimal_pair_distinct_supports(code_9_3):
    # independent minimal-support codewords never share a support
    minimal = minimal_support_codewords(code_9_3)
    f = code_9_3.field
    for i, a in enumerate(minimal):
        for b in minimal[i + 1:]:
            dim, _ = span2_weight(f, a, b)
            if dim == 2:
                assert support(a) != support(b)


def test_span2(gf3):
    assert span2_weight(gf3, (1, 2, 0), (1, 1, 0)) == (2, 2)
    assert span2_weight(gf3, (1, 2, 0), (0, 1, 1)) == (2, 3)
    assert span2_weight(gf3, (1, 0, 2), (2, 0, 1)) == (1, 2)  # scalar multiple
    assert span2_weight(gf3, (1, 1, 0), (0, 0, 2)) == (2, 3)  # disjoint supports
    with pytest.raises(ZeroInput):
        span2_weight(gf3, (0, 0, 0), (1, 0, 0))
    s = span2(gf3, (1, 2, 0), (0, 1, 1))
    assert s.wt == 3 and s.support == (1, 2, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 8), st.integers(1, 2), st.integers(1, 2), st.integers(0, 2))
def test_subspace2_weight_is_basis_independent(seed, a, b, c):
    # rebase with a random unimodular 2x2 change; ad - bc != 0 mod 3
    gf3 = field_new(3)
    rng = random.Random(seed)
    rows = [[rng.randrange(3) for _ in range(6)] for _ in range(2)]
    if rank(gf3, rows) != 2:
        return
    d = next(x for x in range(3) if (a * x - b * c) % 3 != 0)
    c1, c2 = tuple(rows[0]), tuple(rows[1])
    f = gf3
    n1 = tuple(f.add(f.mul(a, x), f.mul(b, y)) for x, y in zip(c1, c2))
    n2 = tuple(f.add(f.mul(c, x), f.mul(d, y)) for x, y in zip(c1, c2))
    assert span2_weight(f, c1, c2)[1] == span2_weight(f, n1, n2)[1]


def test_min_weight(code_8_2, code_9_3):
    assert min_weight(code_8_2) == 6
    assert min_weight(code_9_3) == 3

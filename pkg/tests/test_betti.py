"""Hochster-formula Betti numbers: frozen small tables, homology
basics, the Hilbert-series identity, and the recovery checks."""

import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbcodes.betti import (
    BettiTable,
    SquarefreeIdeal,
    betti_min,
    betti_numbers,
    check_betti_min_equivalences,
    direct_mins,
    hilbert_numerator_from_betti,
    hilbert_numerator_from_generators,
    reduced_homology_dims,
    restricted_faces,
    stanley_reisner_complex,
)
from gbcodes.codes import (
    code_from_matrix,
    ghw,
    min_weight,
    minimal_support_codewords,
    rank,
    weight,
)
from gbcodes.config import DEFAULT_CAPS
from gbcodes.errors import TooFewGenerators, TooLarge
from gbcodes.gf import field_new
from gbcodes.sweeps import random_code


def test_ideal_construction():
    ideal = SquarefreeIdeal.from_supports(3, [[1, 2], [2, 3]])
    assert ideal.generator_supports() == [(1, 2), (2, 3)]
    with pytest.raises(ValueError):
        SquarefreeIdeal.from_supports(3, [[1, 2], [1, 2, 3]])  # not an antichain
    with pytest.raises(ValueError):
        SquarefreeIdeal.from_supports(3, [])
    with pytest.raises(ValueError):
        SquarefreeIdeal.from_supports(2, [[3]])


def test_complex_single_edge():
    ideal = SquarefreeIdeal.from_supports(2, [[1, 2]])
    assert stanley_reisner_complex(ideal) == [(), (1,), (2,)]


def test_complex_two_edges():
    ideal = SquarefreeIdeal.from_supports(3, [[1, 2], [2, 3]])
    faces = stanley_reisner_complex(ideal)
    assert (1, 3) in faces and (1, 2) not in faces and (2, 3) not in faces
    assert set(faces) == {(), (1,), (2,), (3,), (1, 3)}


def test_complex_cap():
    ideal = SquarefreeIdeal.from_supports(17, [[1], [17]])
    with pytest.raises(TooLarge):
        stanley_reisner_complex(ideal, DEFAULT_CAPS)


def faces_of(masks_by_card):
    return masks_by_card


def test_homology_hollow_triangle():
    # boundary of a triangle: three vertices, three edges
    ideal = SquarefreeIdeal.from_supports(3, [[1, 2, 3]])
    by_card = restricted_faces(ideal, 0b111)
    for ell in (2, 3, 5):
        dims = reduced_homology_dims(by_card, ell)
        assert dims == {0: 0, 1: 0, 2: 1}


def test_homology_two_points():
    ideal = SquarefreeIdeal.from_supports(2, [[1, 2]])
    by_card = restricted_faces(ideal, 0b11)
    for ell in (2, 3):
        assert reduced_homology_dims(by_card, ell) == {0: 0, 1: 1}


def test_homology_full_simplex():
    ideal = SquarefreeIdeal.from_supports(4, [[4]])  # vertex 4 excluded
    by_card = restricted_faces(ideal, 0b0111)
    dims = reduced_homology_dims(by_card, 2)
    assert all(v == 0 for v in dims.values())


def test_homology_empty_restriction():
    ideal = SquarefreeIdeal.from_supports(2, [[1]])
    by_card = restricted_faces(ideal, 0)
    assert reduced_homology_dims(by_card, 2) == {0: 1}  # {empty set} only


def test_koszul_table():
    ideal = SquarefreeIdeal.from_supports(4, [[1, 2], [3, 4]])
    table = betti_numbers(ideal)
    assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert table.pd == 2


def test_two_generator_chain_table():
    ideal = SquarefreeIdeal.from_supports(3, [[1, 2], [2, 3]])
    table = betti_numbers(ideal)
    assert table.entries == {(0, 0): 1, (1, 2): 2, (2, 3): 1}
    assert direct_mins(ideal) == (2, 3)
    assert betti_min(ideal, 1) == 2
    assert betti_min(ideal, 2) == 3


def test_direct_mins_requires_two_generators():
    ideal = SquarefreeIdeal.from_supports(3, [[1, 2]])
    with pytest.raises(TooFewGenerators):
        direct_mins(ideal)


def _random_ideal(rng, n, count):
    masks = set()
    while len(masks) < count:
        size = rng.randint(1, n)
        masks.add(tuple(sorted(rng.sample(range(1, n + 1), size))))
    # reduce to the antichain of minimal elements
    keep = []
    for s in sorted(masks, key=len):
        if not any(set(t) <= set(s) for t in keep):
            keep.append(s)
    return SquarefreeIdeal.from_supports(n, keep)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 7), st.integers(1, 4))
def test_beta1_counts_generators(seed, n, count):
    ideal = _random_ideal(random.Random(seed), n, count)
    table = betti_numbers(ideal)
    by_size = {}
    for s in ideal.generator_supports():
        by_size[len(s)] = by_size.get(len(s), 0) + 1
    got = {j: v for (i, j), v in table.entries.items() if i == 1 and v}
    assert got == by_size
    assert table.entries[(0, 0)] == 1


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 6), st.integers(1, 4))
def test_field_independence_and_hilbert(seed, n, count):
    ideal = _random_ideal(random.Random(seed), n, count)
    t2 = betti_numbers(ideal, ell=2)
    t3 = betti_numbers(ideal, ell=3)
    assert t2.entries == t3.entries
    assert hilbert_numerator_from_betti(t2, n) == hilbert_numerator_from_generators(ideal)


def test_hilbert_identity_reference_codes(code_9_3, code_8_2):
    for code in (code_9_3, code_8_2):
        ideal = SquarefreeIdeal.from_codewords(
            code.n, minimal_support_codewords(code)
        )
        table = betti_numbers(ideal)
        assert hilbert_numerator_from_betti(table, code.n) == \
            hilbert_numerator_from_generators(ideal)


def test_pruning_matches_unpruned_scan():
    # the cone/union pruning must not change any entry
    rng = random.Random(44)
    for _ in range(6):
        ideal = _random_ideal(rng, 5, rng.randint(1, 4))
        entries = {}
        for W in range(1 << ideal.n):
            dims = reduced_homology_dims(restricted_faces(ideal, W), 2)
            j = W.bit_count()
            for c, dim in dims.items():
                if dim:
                    entries[(j - c, j)] = entries.get((j - c, j), 0) + dim
        assert entries == betti_numbers(ideal).entries


def test_ghw_recovery_small_codes(degrevlex):
    # Betti minima of the minimal-support ideal equal the generalized
    # Hamming weights (frozen oracle: brute-force subspace scan)
    rng = random.Random(7)
    for _ in range(8):
        q = rng.choice([2, 3, 4])
        n = rng.randint(4, 7)
        k = rng.randint(1, 3)
        code = random_code(rng, q, n, k)
        minimal = minimal_support_codewords(code)
        ideal = SquarefreeIdeal.from_codewords(code.n, minimal)
        table = betti_numbers(ideal)
        assert table.pd <= k
        for i in range(1, k + 1):
            assert table.min_j(i) == ghw(code, i)


def test_specific_6_2_code(gf3):
    code = code_from_matrix(gf3, [[1, 0, 2, 1, 0, 1], [0, 1, 1, 1, 2, 0]])
    ideal = SquarefreeIdeal.from_codewords(6, minimal_support_codewords(code))
    table = betti_numbers(ideal)
    assert table.min_j(1) == ghw(code, 1)
    assert table.min_j(2) == ghw(code, 2)


def test_equivalences_with_full_minimal_set(degrevlex):
    rng = random.Random(19)
    for _ in range(5):
        code = random_code(rng, rng.choice([2, 3]), rng.randint(4, 7), 2)
        M = minimal_support_codewords(code)
        result = check_betti_min_equivalences(code, M)
        assert result["equiv_d1"] and result["equiv_d2"]
        assert result["beta1_min"] == result["d1"]
        assert result["beta2_min"] == result["d2"]


def test_equivalence_fails_direction_without_min_weight(degrevlex):
    # remove every minimum-weight codeword: the first Betti minimum must
    # rise above d1, keeping the iff intact
    rng = random.Random(23)
    found = 0
    while found < 3:
        code = random_code(rng, 3, rng.randint(5, 7), 2)
        minimal = minimal_support_codewords(code)
        d1 = min_weight(code)
        M = [w for w in minimal if weight(w) > d1]
        supports = {tuple(sorted(i for i, a in enumerate(w) if a)) for w in M}
        if len(supports) < 2:
            continue
        found += 1
        result = check_betti_min_equivalences(code, M)
        assert result["beta1_min"] > d1
        assert not result["has_min_weight_word"]
        assert result["equiv_d1"]


def test_pair_witness_set(code_9_3, degrevlex):
    from gbcodes.d2 import compute_m1_m2

    m1, m2, I, J, d2v = compute_m1_m2(code_9_3, degrevlex)
    result = check_betti_min_equivalences(code_9_3, [m1, m2])
    assert result["beta2_min"] == d2v == result["d2"]
    assert result["is_d2_test_set"]


def test_betti_json(code_8_2):
    ideal = SquarefreeIdeal.from_codewords(
        code_8_2.n, minimal_support_codewords(code_8_2)
    )
    payload = betti_numbers(ideal).to_json()
    assert payload["pd"] >= 1
    assert all(len(row) == 3 for row in payload["betti"])

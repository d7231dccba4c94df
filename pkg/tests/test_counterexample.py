"""The seed family, the construction invariants, truncated brute force,
and the mechanism pillars."""

import json
from math import comb

import pytest

from gbcodes.codes import rank, support, weight
from gbcodes.config import DEFAULT_CAPS
from gbcodes.counterexample import (
    build,
    example_seed,
    gb_truncation_probe,
    load_generators,
    as_linear_code,
    emit_json,
    search_seed,
    verify_mechanism,
    verify_unique_minimal_plane,
)
from gbcodes.errors import TooLarge, TruncationOutOfRange
from gbcodes.gf import field_for_q
from gbcodes.orders import OrderSpec


@pytest.fixture(scope="module")
def seed3():
    return example_seed(3)


@pytest.fixture(scope="module")
def full3(seed3):
    return build(seed3)


@pytest.mark.parametrize("q", [3, 4, 5])
def test_seed_family_profile(q):
    seed = example_seed(q)
    assert seed.m == 2 * q + 2
    assert seed.d2 == 2 * q + 2
    assert seed.intersection() == 2 * q - 2
    assert 2 * seed.intersection() > len(seed.J) + 1
    assert seed.r == q
    # the two construction conclusions
    assert seed.d2 < 3 * seed.r
    assert seed.d2 < len(seed.I) + seed.r
    assert weight(seed.c2) >= 2 * seed.r
    # every nonzero codeword weighs 2q
    from gbcodes.codes import iter_codewords

    for w in iter_codewords(seed.code):
        if any(w):
            assert weight(w) == 2 * q


def test_seed_family_needs_q_above_2():
    with pytest.raises(ValueError):
        example_seed(2)


def test_seed_basis_is_recomputed(seed3):
    # the (m1, m2) pair comes from the order, not from the natural rows;
    # they still span the seed code
    code = seed3.code
    assert rank(code.field, [seed3.c1, seed3.c2]) == 2
    assert code.contains(seed3.c1) and code.contains(seed3.c2)


def test_search_seed_binary_is_impossible():
    assert search_seed(2, 8) is None


def test_search_seed_small_lengths_fail():
    # below the family length nothing satisfies the inequalities
    assert search_seed(3, 4) is None


def test_search_seed_validates_family(seed3):
    # the family instance itself passes the search validator
    from gbcodes.counterexample import _seed_from_plane

    found = _seed_from_plane(seed3.code, seed3.order, DEFAULT_CAPS)
    assert found is not None
    assert found.c1 == seed3.c1 and found.c2 == seed3.c2


def test_build_full_scale(full3):
    assert full3.ell == comb(8, 3) * 2 ** 3 == 448
    assert full3.n == 8 + 448 * 3 == 1352
    assert full3.k == 450
    assert full3.is_full
    # cover words descend in the seed order
    from gbcodes.orders import word_key

    keys = [
        word_key(full3.seed.order, u, full3.field) for u in full3.P
    ]
    assert all(a > b for a, b in zip(keys, keys[1:]))
    # appended blocks occupy disjoint coordinates with weight r
    offs = [off for _, off in full3.blocks()]
    assert offs == [8 + 3 * i for i in range(448)]


def test_build_truncations(seed3):
    cc = build(seed3, 1)
    assert (cc.n, cc.k) == (11, 3)
    assert rank(cc.field, cc.generators) == 3
    with pytest.raises(TruncationOutOfRange):
        build(seed3, 0)
    with pytest.raises(TruncationOutOfRange):
        build(seed3, 449)


def test_embedding_preserves_supports(seed3):
    cc = build(seed3, 2)
    for row, orig in zip(cc.generators[:2], (seed3.c1, seed3.c2)):
        assert support(row) == support(orig)


@pytest.mark.parametrize("t", [1, 2, 4])
def test_truncated_unique_minimal_plane(seed3, t):
    cc = build(seed3, t)
    v = verify_unique_minimal_plane(cc)
    assert v["status"] == "verified"
    assert v["d2"] == seed3.d2 == 8
    assert v["unique_minimal_plane"]
    assert v["m1_is_c1"] and v["m2_is_c2"]
    # the sufficiency theorem stays silent on these codes
    assert not v["sufficiency_hypothesis"]


def test_mechanism_pillars_full(full3):
    v = verify_mechanism(full3)
    assert v["status"] == "verified"
    assert v["pillar_a_order_dominance"]
    assert v["pillar_b_cover_completeness"]
    assert v["pillar_c_plane_weights"]
    assert "full_scale_gap" in v


def test_mechanism_requires_full(seed3):
    cc = build(seed3, 3)
    with pytest.raises(ValueError):
        verify_mechanism(cc)


def test_cover_membership_direct(full3):
    # the restriction of any in-support word of weight >= r to r of its
    # support coordinates lies in the cover (spot check)
    P_set = set(full3.P)
    w = (1, 2, 0, 1, 0, 2, 0, 1)
    coords = [i for i, a in enumerate(w) if a][:3]
    u = [0] * 8
    for c in coords:
        u[c] = w[c]
    assert tuple(u) in P_set


def test_gb_truncation_probe(seed3):
    probe = gb_truncation_probe(build(seed3, 1))
    assert probe["cosets"] == 3 ** 8
    assert probe["mg_is_test_set"] in (True, False)
    assert probe["gb_size"] > 0


def test_emit_and_reload(full3, tmp_path):
    path = tmp_path / "cx.json"
    emit_json(full3, path)
    payload = json.loads(path.read_text())
    assert payload["schema"] == 1
    assert payload["ell"] == 448 and payload["n"] == 1352 and payload["k"] == 450
    assert payload["dense_prefix"] == 8
    assert len(payload["blocks"]) == 448
    field = field_for_q(payload["field"]["q"])
    gens = load_generators(payload, field)
    assert len(gens) == 450
    assert all(len(g) == 1352 for g in gens)
    # reloaded generators match the built ones
    assert tuple(gens[0]) == full3.generators[0]
    assert tuple(gens[-1]) == full3.generators[-1]


def test_emit_and_reload_truncation(seed3, tmp_path):
    cc = build(seed3, 2)
    path = tmp_path / "cx2.json"
    emit_json(cc, path)
    payload = json.loads(path.read_text())
    gens = load_generators(payload, cc.field)
    assert tuple(map(tuple, gens)) == cc.generators
    code = as_linear_code(cc)
    assert code.k == 4


def test_full_build_capped_for_large_q():
    # the q = 5 full construction has ~811k cover words over 4M
    # coordinates; it must refuse, not thrash
    seed = example_seed(5)
    with pytest.raises(TooLarge):
        build(seed)
    cc = build(seed, 2)
    assert (cc.n, cc.k) == (12 + 10, 4)


def test_mechanism_word_cap(full3):
    with pytest.raises(TooLarge):
        verify_mechanism(full3, DEFAULT_CAPS.with_(mechanism_words=10))

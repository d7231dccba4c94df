"""Order axioms, the word <-> monomial bijection, and the two extra
order conditions; the exhaustive scans double as frozen oracles."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gbcodes.codes import weight
from gbcodes.config import DEFAULT_CAPS
from gbcodes.errors import LengthMismatch, NotInImage
from gbcodes.gf import field_new
from gbcodes.orders import (
    OrderSpec,
    check_block_dominance,
    check_minus_compatibility,
    delta,
    delta_inverse,
    iter_monomials_upto,
    monomial_divides,
    monomial_mul,
    monomial_one,
    monomial_str,
    var_index,
    var_pair,
    word_compare,
    word_key,
)

ORDERS = [OrderSpec("deglex"), OrderSpec("degrevlex")]


def test_variable_indexing():
    # block 1 first, slot j=1 first within a block
    assert var_index(1, 1, 3) == 0
    assert var_index(1, 2, 3) == 1
    assert var_index(9, 2, 3) == 17
    assert var_pair(17, 3) == (9, 2)


@pytest.mark.parametrize("order", ORDERS)
def test_one_is_least(order):
    one = monomial_one(6)
    for mono in iter_monomials_upto(6, 2):
        if mono != one:
            assert order.compare(one, mono) < 0


@pytest.mark.parametrize("order", ORDERS)
def test_order_axioms_exhaustive_degree_3(order):
    # total, multiplicative, degree compatible: all monomials of degree
    # <= 3 in 4 variables (n(q-1) <= 12 holds throughout the corpus)
    monos = list(iter_monomials_upto(4, 3))
    for a in monos:
        for b in monos:
            c = order.compare(a, b)
            assert c == -order.compare(b, a)
            assert (c == 0) == (a == b)
            if sum(a) < sum(b):
                assert c < 0
            if c < 0:
                for v in range(4):
                    unit = tuple(1 if t == v else 0 for t in range(4))
                    assert order.compare(monomial_mul(a, unit), monomial_mul(b, unit)) < 0


@pytest.mark.parametrize("order", ORDERS)
def test_order_transitive_on_sample(order):
    monos = list(iter_monomials_upto(3, 3))
    keys = [order.key(m) for m in monos]
    ranked = sorted(range(len(monos)), key=lambda t: keys[t])
    for a, b in zip(ranked, ranked[1:]):
        assert order.compare(monos[a], monos[b]) < 0


def test_delta_examples(gf3):
    assert delta((0, 0, 0), gf3) == (0,) * 6
    # 2 = alpha, 1 = alpha^2
    assert delta((2, 0, 1), gf3) == (1, 0, 0, 0, 0, 1)
    m1 = (2, 0, 0, 0, 0, 2, 0, 1, 0)
    mono = delta(m1, gf3)
    assert monomial_str(mono, 3) == "x_{1,1}*x_{6,1}*x_{8,2}"
    assert sum(mono) == weight(m1)


def test_delta_inverse_roundtrip(gf3):
    for w in product(range(3), repeat=3):
        assert delta_inverse(delta(w, gf3), gf3, 3) == w
    with pytest.raises(NotInImage):
        delta_inverse((2, 0, 0, 0, 0, 0), gf3, 3)
    with pytest.raises(NotInImage):
        delta_inverse((1, 1, 0, 0, 0, 0), gf3, 3)  # two slots in one block


@settings(max_examples=80, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=6))
def test_delta_roundtrip_gf4(coords):
    gf4 = field_new(2, 2)
    w = tuple(coords)
    assert delta_inverse(delta(w, gf4), gf4, len(w)) == w


def test_degree_equals_weight(gf4):
    for w in product(range(4), repeat=3):
        assert sum(delta(w, gf4)) == weight(w)


@pytest.mark.parametrize("order", ORDERS)
def test_word_compare_weight_monotone(order, gf3):
    # a < b forces w(a) <= w(b) under a degree compatible order
    words = list(product(range(3), repeat=3))
    for a in words:
        for b in words:
            if word_compare(order, a, b, gf3) < 0:
                assert weight(a) <= weight(b)
    with pytest.raises(LengthMismatch):
        word_compare(order, (0, 1), (0, 1, 2), gf3)


@pytest.mark.parametrize("order", ORDERS)
def test_word_order_total(order, gf3):
    words = list(product(range(3), repeat=3))
    keys = [word_key(order, w, gf3) for w in words]
    assert len(set(keys)) == len(words)


def test_trailing_blocks_are_smaller(gf3, degrevlex, deglex):
    a = (0,) * 8 + (1,)
    b = (1,) + (0,) * 8
    assert word_compare(degrevlex, a, b, gf3) < 0
    assert word_compare(deglex, a, b, gf3) < 0


def test_reference_lead_comparison(gf3, degrevlex):
    # degree 3 beats degree 2 under any degree compatible order
    lead = delta((0, 0, 0, 0, 0, 1, 1, 0, 1), gf3)   # x_{6,2} x_{7,2} x_{9,2}
    trail = delta((0, 2, 0, 0, 2, 0, 0, 0, 0), gf3)  # x_{2,1} x_{5,1}
    assert degrevlex.compare(lead, trail) > 0


def test_reference_m1_below_m2(gf3, degrevlex):
    m1 = (2, 0, 0, 0, 0, 2, 0, 1, 0)
    m2 = (0, 1, 0, 0, 1, 1, 1, 0, 1)
    assert word_compare(degrevlex, m1, m2, gf3) < 0


def test_zero_below_everything(gf3, degrevlex):
    zero = (0, 0, 0)
    for w in product(range(3), repeat=3):
        if any(w):
            assert word_compare(degrevlex, zero, w, gf3) < 0


@pytest.mark.parametrize("order", ORDERS)
def test_delta_submultiplicative(order, gf3):
    # delta(a+b) never beats delta(a)*delta(b); equality on disjoint supports
    words = list(product(range(3), repeat=3))
    for a in words:
        for b in words:
            s = tuple(gf3.add(x, y) for x, y in zip(a, b))
            lhs = delta(s, gf3)
            rhs = monomial_mul(delta(a, gf3), delta(b, gf3))
            assert order.compare(lhs, rhs) <= 0
            if not (set(i for i, x in enumerate(a) if x)
                    & set(i for i, x in enumerate(b) if x)):
                assert lhs == rhs


@pytest.mark.parametrize("order", ORDERS)
def test_minus_compatibility_gf3_exhaustive(order, gf3):
    # frozen oracle outcome: the negation condition holds exhaustively
    # for both orders over GF(3) at these lengths
    for n in (2, 3, 4):
        v = check_minus_compatibility(order, gf3, n)
        assert v.mode == "exhaustive"
        assert v.holds, v.witness
        assert v.pairs_checked == 5 ** n


def test_minus_compatibility_char2_shortcut(gf4, degrevlex):
    v = check_minus_compatibility(degrevlex, gf4, 12)
    assert v.mode == "exhaustive" and v.holds and v.pairs_checked == 0


def test_minus_compatibility_sampled_mode(gf5, degrevlex):
    caps = DEFAULT_CAPS.with_(order_scan=10, order_samples=500)
    v = check_minus_compatibility(degrevlex, gf5, 6, caps)
    assert v.mode == "sampled"
    assert v.holds


@pytest.mark.parametrize("order", ORDERS)
def test_block_dominance(order, gf3):
    v = check_block_dominance(order, gf3, 6, 3)
    assert v.mode == "exhaustive" and v.holds
    # m = n: no off-block word of positive weight exists
    v2 = check_block_dominance(order, gf3, 4, 4)
    assert v2.holds and v2.pairs_checked == 0


def test_block_dominance_sampled(gf3, degrevlex):
    caps = DEFAULT_CAPS.with_(order_scan=10, order_samples=300)
    v = check_block_dominance(degrevlex, gf3, 10, 5, caps)
    assert v.mode == "sampled" and v.holds


def test_monomial_divides():
    assert monomial_divides((1, 0, 1), (1, 1, 1))
    assert not monomial_divides((2, 0, 0), (1, 1, 1))

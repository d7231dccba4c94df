"""Monomials over the block variables x_{i,j} and degree-compatible orders.

A length-n word over GF(q) maps to a monomial in n*(q-1) variables:
coordinate i holding alpha^j contributes the variable x_{i,j}.  The
variable ranking is fixed: block i beats block i' when i < i', and
within a block x_{i,1} beats x_{i,2} beats ... x_{i,q-1}.  Exponent
vectors are stored densely, index (i-1)*(q-1)+(j-1), so index 0 is the
greatest variable.

Two orders are provided, both degree compatible: ``deglex`` (degree,
then lexicographic on the ranking) and ``degrevlex`` (degree, then
reverse-lexicographic).  Words inherit a total order through the
monomial map.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .config import DEFAULT_CAPS, Caps
from .errors import LengthMismatch, NotInImage, TooLarge
from .gf import FieldSpec

ORDER_KINDS = ("deglex", "degrevlex")


def var_index(i: int, j: int, q: int) -> int:
    """Dense index of x_{i,j} (1-based block i, exponent slot j in 1..q-1)."""
    return (i - 1) * (q - 1) + (j - 1)


def var_pair(idx: int, q: int) -> tuple[int, int]:
    return idx // (q - 1) + 1, idx % (q - 1) + 1


@dataclass(frozen=True)
class OrderSpec:
    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")

    def key(self, mono: tuple) -> tuple:
        """Sort key: k(a) < k(b) iff a comes strictly before b."""
        deg = sum(mono)
        if self.kind == "deglex":
            return (deg, mono)
        return (deg, tuple(-e for e in reversed(mono)))

    def key_bytes(self, mono: bytes, deg: int | None = None) -> tuple:
        """Same order as :meth:`key` for byte-packed exponents (< 255 each)."""
        if deg is None:
            deg = sum(mono)
        if self.kind == "deglex":
            return (deg, mono)
        return (deg, bytes(255 - e for e in reversed(mono)))

    def compare(self, a: tuple, b: tuple) -> int:
        """-1, 0 or 1 as a is below, equal to or above b."""
        ka, kb = self.key(a), self.key(b)
        return -1 if ka < kb else (0 if ka == kb else 1)


DEGLEX = OrderSpec("deglex")
DEGREVLEX = OrderSpec("degrevlex")


# -- monomial basics ------------------------------------------------------------

def monomial_one(nvars: int) -> tuple:
    return (0,) * nvars


def monomial_degree(mono) -> int:
    return sum(mono)


def monomial_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a, b) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_str(mono: tuple, q: int) -> str:
    """Render as a product of x_{i,j}, greatest variable first."""
    parts = []
    for idx, e in enumerate(mono):
        if e:
            i, j = var_pair(idx, q)
            parts.append(f"x_{{{i},{j}}}" + (f"^{e}" if e > 1 else ""))
    return "*".join(parts) if parts else "1"


# -- the word <-> monomial bijection ------------------------------------------------

def delta(word: tuple, field: FieldSpec) -> tuple:
    """Square-free monomial of a word: x_{i,j} present iff w_i = alpha^j."""
    q = field.q
    exps = [0] * (len(word) * (q - 1))
    for i, a in enumerate(word, start=1):
        if a:
            exps[var_index(i, field.dlog(a), q)] = 1
    return tuple(exps)


def delta_inverse(mono: tuple, field: FieldSpec, n: int) -> tuple:
    q = field.q
    if len(mono) != n * (q - 1):
        raise NotInImage(f"monomial has {len(mono)} slots, expected {n * (q - 1)}")
    word = [0] * n
    for idx, e in enumerate(mono):
        if e == 0:
            continue
        i, j = var_pair(idx, q)
        if e > 1 or word[i - 1]:
            raise NotInImage("monomial is not block-wise square-free")
        word[i - 1] = field.exp(j)
    return tuple(word)


def word_key(order: OrderSpec, word: tuple, field: FieldSpec) -> tuple:
    return order.key(delta(word, field))


def word_compare(order: OrderSpec, a: tuple, b: tuple, field: FieldSpec) -> int:
    if len(a) != len(b):
        raise LengthMismatch(f"word lengths differ: {len(a)} vs {len(b)}")
    return order.compare(delta(a, field), delta(b, field))


# -- checkers for the two extra order conditions ----------------------------------

@dataclass(frozen=True)
class OrderCheckVerdict:
    """Outcome of an order-condition scan.

    ``mode`` is "exhaustive" or "sampled"; downstream theorem checks
    refuse sampled verdicts unless explicitly overridden.
    """

    condition: str
    mode: str
    holds: bool
    pairs_checked: int
    witness: tuple | None = None

    @property
    def label(self) -> str:
        return f"{self.mode}-{'true' if self.holds else 'false'}"

    def to_json(self) -> dict:
        out = {
            "condition": self.condition,
            "mode": self.mode,
            "holds": self.holds,
            "pairs_checked": self.pairs_checked,
        }
        if self.witness is not None:
            out["witness"] = [list(w) for w in self.witness]
        return out


def _neg_word(word, field):
    return tuple(field.neg(a) for a in word)


def _all_words(field, n):
    return list(product(range(field.q), repeat=n))


_minus_cache: dict = {}


def check_minus_compatibility(
    order: OrderSpec,
    field: FieldSpec,
    n: int,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> OrderCheckVerdict:
    """Scan disjoint-support word pairs (a, b) for the negation condition:
    delta(b) < delta(a) implies delta(-b) < delta(-a).

    For q = 2^s negation is the identity and the condition holds for
    every order without scanning.  Otherwise the scan is exhaustive
    when the ordered-pair count (2q-1)^n fits the cap, else sampled.
    """
    q = field.q
    if field.p == 2:
        return OrderCheckVerdict("minus-compatibility", "exhaustive", True, 0)

    cache_key = (order.kind, field._key(), n)
    if cache_key in _minus_cache:
        return _minus_cache[cache_key]

    total = (2 * q - 1) ** n
    if total <= caps.order_scan:
        words = _all_words(field, n)
        keys = [word_key(order, w, field) for w in words]
        # position of a word in the product(...) enumeration: first
        # coordinate most significant
        def widx(w):
            acc = 0
            for c in w:
                acc = acc * q + c
            return acc

        neg_idx = [widx(_neg_word(w, field)) for w in words]
        by_support: dict[int, list[int]] = {}
        for t, w in enumerate(words):
            mask = 0
            for i, c in enumerate(w):
                if c:
                    mask |= 1 << i
            by_support.setdefault(mask, []).append(t)
        full = (1 << n) - 1
        checked = 0
        for mask_a, idxs_a in by_support.items():
            comp = full & ~mask_a
            # iterate subsets of the complement mask
            sub = comp
            while True:
                for tb in by_support.get(sub, ()):
                    kb = keys[tb]
                    nkb = keys[neg_idx[tb]]
                    for ta in idxs_a:
                        checked += 1
                        if kb < keys[ta] and not nkb < keys[neg_idx[ta]]:
                            v = OrderCheckVerdict(
                                "minus-compatibility", "exhaustive", False,
                                checked, (words[ta], words[tb]),
                            )
                            _minus_cache[cache_key] = v
                            return v
                if sub == 0:
                    break
                sub = (sub - 1) & comp
        v = OrderCheckVerdict("minus-compatibility", "exhaustive", True, checked)
        _minus_cache[cache_key] = v
        return v

    rng = rng or random.Random(0)
    for t in range(caps.order_samples):
        a = tuple(rng.randrange(q) for _ in range(n))
        b = tuple(0 if a[i] else rng.randrange(q) for i in range(n))
        if word_compare(order, b, a, field) < 0:
            if not word_compare(order, _neg_word(b, field), _neg_word(a, field), field) < 0:
                return OrderCheckVerdict(
                    "minus-compatibility", "sampled", False, t + 1, (a, b)
                )
    return OrderCheckVerdict(
        "minus-compatibility", "sampled", True, caps.order_samples
    )


def check_block_dominance(
    order: OrderSpec,
    field: FieldSpec,
    n: int,
    m: int,
    caps: Caps = DEFAULT_CAPS,
    rng: random.Random | None = None,
) -> OrderCheckVerdict:
    """Check: equal-weight words u on blocks 1..m and v off them satisfy
    delta(u) > delta(v)."""
    q = field.q
    if not 0 <= m <= n:
        raise ValueError(f"m = {m} outside 0..{n}")
    total = q ** m * q ** (n - m)
    if total <= caps.order_scan:
        checked = 0
        for u_part in product(range(q), repeat=m):
            u = u_part + (0,) * (n - m)
            wu = sum(1 for c in u_part if c)
            if wu == 0:
                continue
            for v_part in product(range(q), repeat=n - m):
                if sum(1 for c in v_part if c) != wu:
                    continue
                v = (0,) * m + v_part
                checked += 1
                if word_compare(order, u, v, field) <= 0:
                    return OrderCheckVerdict(
                        "block-dominance", "exhaustive", False, checked, (u, v)
                    )
        return OrderCheckVerdict("block-dominance", "exhaustive", True, checked)

    rng = rng or random.Random(0)
    lo = list(range(m))
    hi = list(range(m, n))
    checked = 0
    for _ in range(caps.order_samples):
        w = rng.randint(1, min(m, n - m))
        su = rng.sample(lo, w)
        sv = rng.sample(hi, w)
        u = [0] * n
        v = [0] * n
        for i in su:
            u[i] = rng.randrange(1, q)
        for i in sv:
            v[i] = rng.randrange(1, q)
        checked += 1
        if word_compare(order, tuple(u), tuple(v), field) <= 0:
            return OrderCheckVerdict(
                "block-dominance", "sampled", False, checked, (tuple(u), tuple(v))
            )
    return OrderCheckVerdict("block-dominance", "sampled", True, checked)


def iter_monomials_upto(nvars: int, max_deg: int, cap: int = 1_000_000):
    """All exponent tuples of total degree <= max_deg (test helper)."""
    count = 0
    for deg in range(max_deg + 1):
        for bars in combinations(range(deg + nvars - 1), nvars - 1) if nvars > 1 else [()]:
            if nvars == 1:
                yield (deg,)
                count += 1
                continue
            prev = -1
            exps = []
            for b in bars:
                exps.append(b - prev - 1)
                prev = b
            exps.append(deg + nvars - 1 - prev - 1)
            count += 1
            if count > cap:
                raise TooLarge("monomial enumeration exceeded cap")
            yield tuple(exps)

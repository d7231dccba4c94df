"""The m1/m2 machinery and d2-test-set verification.

For a code with k >= 2 and a fixed word order:

    M1 = nonzero codewords m admitting some codeword m' with
         w(<m, m'>) = d2;       m1 = the order-least element of M1.
    M2 = codewords m with w(<m1, m>) = d2;  m2 = its least element.
    I = supp(m1), J = supp(m2).

A subset M of the minimal-support codewords is a d2-test set when two
independent members span a subspace of weight d2.  The sufficiency
check: when |I n J| <= (|J|+1)/2 and the order satisfies the negation
condition, the basis-carried set M_G must be a d2-test set, must carry
m1 itself, and must carry a witness g with w(<m1, c_g>) = d2 and
w(c_g) = w(m2); failures are falsifications, not soft errors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field

from .codes import (
    LinearCode,
    codeword_matrix,
    d2_pair_oracle,
    minimal_support_codewords,
    projective_ids,
    span2_weight,
    support,
    support_mask,
    weight,
    _support_masks,
)
from .config import DEFAULT_CAPS, Caps
from .errors import (
    DimensionTooSmall,
    Falsification,
    NotMinimalSupport,
)
from .groebner import GroebnerBasis, compute_mg
from .orders import OrderSpec, check_minus_compatibility, delta, word_key


@dataclass(frozen=True)
class D2Report:
    m1: tuple
    m2: tuple
    I: tuple
    J: tuple
    d2: int
    intersection: int
    condition_sufficiency: bool          # |I n J| <= (|J|+1)/2
    condition_order: dict                # negation-condition verdict
    mg_is_test_set: bool | None = None
    witnesses: tuple | None = None
    notes: dict = dc_field(default_factory=dict)

    def validate(self):
        checks = {
            "d2 = |I u J|": self.d2
            == (support_mask(self.m1) | support_mask(self.m2)).bit_count(),
            "|I| = w(m1) < d2": len(self.I) == weight(self.m1) and len(self.I) < self.d2,
            "|J| = w(m2) < d2": len(self.J) == weight(self.m2) and len(self.J) < self.d2,
            "|I| <= |J|": len(self.I) <= len(self.J),
            "|I n J| <= (q-1)/q |I|": self.intersection * self.notes["q"]
            <= (self.notes["q"] - 1) * len(self.I),
        }
        bad = [name for name, ok in checks.items() if not ok]
        if bad:
            raise Falsification(
                "d2 report invariant failed: " + "; ".join(bad),
                witness=self.to_json(),
            )
        return self

    def to_json(self) -> dict:
        out = {
            "m1": list(self.m1),
            "m2": list(self.m2),
            "I": list(self.I),
            "J": list(self.J),
            "d2": self.d2,
            "intersection": self.intersection,
            "condition_sufficiency": self.condition_sufficiency,
            "condition_order": self.condition_order,
            "mg_is_test_set": self.mg_is_test_set,
            "notes": self.notes,
        }
        if self.witnesses:
            out["witnesses"] = [list(w) for w in self.witnesses]
        return out


def compute_m1_m2(code: LinearCode, order: OrderSpec, caps: Caps = DEFAULT_CAPS,
                  d2_value: int | None = None):
    """(m1, m2, I, J, d2) for the given code and order.

    Implements the set definitions literally: the partner m' in the M1
    scan ranges over all codewords, multiples included.
    """
    if code.k < 2:
        raise DimensionTooSmall("m1/m2 need k >= 2")
    if d2_value is None:
        d2_value, _ = d2_pair_oracle(code, caps)
    M = codeword_matrix(code, caps)
    N = M.shape[0]
    ids = projective_ids(code, M)
    masks = _support_masks(M)
    field = code.field

    in_m1 = [False] * N
    for a in range(N):
        if ids[a] < 0:
            continue
        if masks[a].bit_count() == d2_value:
            in_m1[a] = True
        mask_a = masks[a]
        for b in range(a + 1, N):
            if ids[b] < 0 or ids[b] == ids[a]:
                continue
            if (mask_a | masks[b]).bit_count() == d2_value:
                in_m1[a] = True
                in_m1[b] = True

    keys = {}

    def key_of(t):
        if t not in keys:
            keys[t] = word_key(order, tuple(int(x) for x in M[t]), field)
        return keys[t]

    m1_idx = min((t for t in range(N) if in_m1[t]), key=key_of)
    m1 = tuple(int(x) for x in M[m1_idx])

    m2_candidates = [
        t
        for t in range(N)
        if ids[t] >= 0
        and ids[t] != ids[m1_idx]
        and (masks[t] | masks[m1_idx]).bit_count() == d2_value
    ]
    m2_idx = min(m2_candidates, key=key_of)
    m2 = tuple(int(x) for x in M[m2_idx])

    if not key_of(m1_idx) < key_of(m2_idx):
        raise Falsification(
            "m1 does not precede m2 in the word order",
            witness={"m1": list(m1), "m2": list(m2)},
        )
    return m1, m2, support(m1), support(m2), d2_value


def is_d2_test_set(code: LinearCode, M_words, caps: Caps = DEFAULT_CAPS,
                   d2_value: int | None = None, minimal=None):
    """(bool, witness pair) for a candidate subset of minimal-support words."""
    if minimal is None:
        minimal = minimal_support_codewords(code, caps)
    minimal_set = set(minimal)
    offenders = [w for w in M_words if tuple(w) not in minimal_set]
    if offenders:
        raise NotMinimalSupport(
            f"{len(offenders)} members lack minimal support, e.g. {offenders[0]}"
        )
    if d2_value is None:
        d2_value, _ = d2_pair_oracle(code, caps)
    words = [tuple(w) for w in M_words]
    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            dim, wt = span2_weight(code.field, words[a], words[b])
            if dim == 2 and wt == d2_value:
                return True, (words[a], words[b])
    return False, None


def check_intersection_bound(code: LinearCode, order: OrderSpec,
                             caps: Caps = DEFAULT_CAPS) -> dict:
    """|I n J| <= (q-1)/q |I| <= (q-1)/q |J|, returned with the quantities."""
    m1, m2, I, J, d2v = compute_m1_m2(code, order, caps)
    inter = len(set(I) & set(J))
    q = code.field.q
    ok = inter * q <= (q - 1) * len(I) and len(I) <= len(J)
    if not ok:
        raise Falsification(
            "intersection bound failed",
            witness={"I": list(I), "J": list(J), "intersection": inter, "q": q},
        )
    return {"intersection": inter, "I_size": len(I), "J_size": len(J), "q": q,
            "bound": (q - 1) * len(I) / q, "holds": ok}


@dataclass(frozen=True)
class TheoremReport:
    name: str
    status: str      # "verified" | "silent" | "falsified"
    details: dict

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status, "details": self.details}


def check_mg_sufficiency(
    code: LinearCode,
    order: OrderSpec,
    caps: Caps = DEFAULT_CAPS,
    gb: GroebnerBasis | None = None,
    allow_sampled_order: bool = False,
    rng: random.Random | None = None,
) -> TheoremReport:
    """Run the sufficiency theorem as an executable check.

    Hypothesis: |I n J| <= (|J|+1)/2 plus the negation condition on the
    order.  When it holds, M_G must be a d2-test set, some basis element
    must carry m1, and some g must satisfy w(<m1, c_g>) = d2 and
    w(c_g) = w(m2); for q = 2^s additionally c_g = m2.  Any failure
    under a met hypothesis raises Falsification.
    """
    field = code.field
    m1, m2, I, J, d2v = compute_m1_m2(code, order, caps)
    inter = len(set(I) & set(J))
    hyp = 2 * inter <= len(J) + 1

    order_verdict = check_minus_compatibility(order, field, code.n, caps, rng)
    details: dict = {
        "m1": list(m1),
        "m2": list(m2),
        "d2": d2v,
        "intersection": inter,
        "J_size": len(J),
        "hypothesis": hyp,
        "order_condition": order_verdict.to_json(),
    }

    if not hyp:
        details["reason"] = "intersection hypothesis not met"
        return TheoremReport("mg-sufficiency", "silent", details)
    if not order_verdict.holds:
        details["reason"] = "order condition fails"
        return TheoremReport("mg-sufficiency", "silent", details)
    if order_verdict.mode == "sampled" and not allow_sampled_order:
        details["reason"] = "order condition only sampled; pass the override to accept"
        return TheoremReport("mg-sufficiency", "silent", details)

    mg, gb = compute_mg(code, order, caps, gb)
    minimal = minimal_support_codewords(code, caps)
    ok_test, witness = is_d2_test_set(code, mg, caps, d2v, minimal)
    details["mg_size"] = len(mg)
    details["mg_is_test_set"] = ok_test
    if witness:
        details["witness"] = [list(w) for w in witness]

    carried = gb.codewords()
    f_ok = m1 in carried
    details["m1_carried"] = f_ok

    g_ok = False
    g_word = None
    cg_eq_m2 = False
    wm2 = weight(m2)
    for c in carried:
        dim, wt = span2_weight(field, m1, c)
        if dim == 2 and wt == d2v and weight(c) == wm2:
            g_ok = True
            g_word = c
            if c == m2:
                cg_eq_m2 = True
                break
    details["g_witness"] = list(g_word) if g_word else None
    details["cg_equals_m2"] = cg_eq_m2

    problems = []
    if not ok_test:
        problems.append("M_G is not a d2-test set")
    if not f_ok:
        problems.append("no basis element carries m1")
    if not g_ok:
        problems.append("no basis element matches the m2 witness contract")
    if field.p == 2 and not cg_eq_m2:
        problems.append("q = 2^s but no basis element carries m2 itself")
    if problems:
        raise Falsification("; ".join(problems), witness=details)
    return TheoremReport("mg-sufficiency", "verified", details)


def analyze(
    code: LinearCode,
    order: OrderSpec,
    caps: Caps = DEFAULT_CAPS,
    with_mg: bool = True,
    allow_sampled_order: bool = False,
    rng: random.Random | None = None,
) -> D2Report:
    """Full d2 report for a code; validates all report invariants."""
    m1, m2, I, J, d2v = compute_m1_m2(code, order, caps)
    inter = len(set(I) & set(J))
    order_verdict = check_minus_compatibility(order, code.field, code.n, caps, rng)
    mg_ok = None
    witness = None
    notes = {"q": code.field.q, "order": order.kind}
    if with_mg:
        mg, gb = compute_mg(code, order, caps)
        mg_ok, witness = is_d2_test_set(code, mg, caps, d2v)
        notes["mg_size"] = len(mg)
        notes["gb_stats"] = gb.stats()
    report = D2Report(
        m1=m1,
        m2=m2,
        I=I,
        J=J,
        d2=d2v,
        intersection=inter,
        condition_sufficiency=2 * inter <= len(J) + 1,
        condition_order=order_verdict.to_json(),
        mg_is_test_set=mg_ok,
        witnesses=witness,
        notes=notes,
    )
    return report.validate()

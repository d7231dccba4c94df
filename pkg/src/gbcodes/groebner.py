"""Reduced Groebner bases of the binomial ideal attached to a linear code.

The ideal identifies two monomials exactly when their evaluations into
F_q^n differ by a codeword, so the quotient's monomial basis is in
bijection with the q^(n-k) syndrome classes.  The basis is computed by
a Moller/FGLM-style traversal:

    keep a frontier of candidate monomials ordered ascending by the
    monomial order, starting at 1.  Pop the least candidate not
    divisible by a recorded lead; compute the syndrome of its
    evaluation.  A repeated syndrome emits the binomial (candidate -
    recorded standard monomial) and records the candidate as a lead; a
    fresh syndrome records the candidate as standard and pushes its
    products with every variable.

Termination leaves exactly q^(n-k) standard monomials and the emitted
set is the unique reduced Groebner basis: leads form an antichain by
the pop-time pruning, trails are standard by construction, and every
binomial is monic.

Monomials travel through the traversal as byte strings (one exponent
per variable, degree never exceeds n+1) for compact heaps and C-speed
comparisons; the public surface uses exponent tuples.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .codes import LinearCode, support_mask, weight
from .config import DEFAULT_CAPS, Caps
from .errors import FrontierOverflow, Falsification, RxElement, ShapeViolation, TooLarge
from .gf import FieldSpec
from .orders import OrderSpec, delta, monomial_divides, monomial_str, var_pair


def evaluate(mono, field: FieldSpec, n: int) -> tuple:
    """Word of a monomial: coordinate i collects sum_j e_(i,j) * alpha^j."""
    q = field.q
    word = [0] * n
    for idx, e in enumerate(mono):
        if e:
            i, j = var_pair(idx, q)
            contrib = field.mul(field.scalar_int(e), field.exp(j))
            word[i - 1] = field.add(word[i - 1], contrib)
    return tuple(word)


@dataclass(frozen=True)
class Binomial:
    lead: tuple
    trail: tuple

    def render(self, q: int) -> str:
        return f"{monomial_str(self.lead, q)} - {monomial_str(self.trail, q)}"


@dataclass(frozen=True)
class GBElementClass:
    tag: str                # "rx" | "codeword"
    codeword: tuple | None  # present iff tag == "codeword"


def associated_codeword(b: Binomial, field: FieldSpec, n: int) -> tuple:
    """The codeword evaluate(lead) - evaluate(trail); raises on zero."""
    lead_w = evaluate(b.lead, field, n)
    trail_w = evaluate(b.trail, field, n)
    cw = tuple(field.sub(x, y) for x, y in zip(lead_w, trail_w))
    if not any(cw):
        raise RxElement("element carries the zero codeword")
    return cw


def _classify_one(b: Binomial, field: FieldSpec, n: int) -> GBElementClass:
    lead_w = evaluate(b.lead, field, n)
    trail_w = evaluate(b.trail, field, n)
    cw = tuple(field.sub(x, y) for x, y in zip(lead_w, trail_w))
    if not any(cw):
        return GBElementClass("rx", None)
    # codeword-bearing elements must be block-wise square-free with
    # weight gap at most one; anything else falsifies the shape result
    for mono, w in ((b.lead, lead_w), (b.trail, trail_w)):
        if sum(mono) != weight(w):
            raise ShapeViolation(
                f"non-square-free codeword-bearing element {b.render(field.q)}"
            )
    wl, wt = weight(lead_w), weight(trail_w)
    if not (wt <= wl <= wt + 1):
        raise ShapeViolation(
            f"weight gap violation in {b.render(field.q)}: {wt} vs {wl}"
        )
    return GBElementClass("codeword", cw)


class GroebnerBasis:
    """The reduced basis plus the standard-monomial table it was built from."""

    def __init__(self, code: LinearCode, order: OrderSpec, elements,
                 standards: dict, var_syndromes):
        self.code = code
        self.field = code.field
        self.n = code.n
        self.order = order
        self.elements: list[Binomial] = elements
        self._standards = standards            # syndrome bytes -> monomial bytes
        self._var_syndromes = var_syndromes    # per-variable syndrome contribution
        self.standard_count = len(standards)
        self._classes: list[GBElementClass] | None = None

    def __len__(self):
        return len(self.elements)

    @property
    def leads(self) -> list[tuple]:
        return [b.lead for b in self.elements]

    def classify(self) -> list[GBElementClass]:
        if self._classes is None:
            self._classes = [
                _classify_one(b, self.field, self.n) for b in self.elements
            ]
        return self._classes

    def rx_count(self) -> int:
        return sum(1 for c in self.classify() if c.tag == "rx")

    def codewords(self) -> list[tuple]:
        """Distinct nonzero codewords carried by basis elements, sorted."""
        seen = {c.codeword for c in self.classify() if c.tag == "codeword"}
        return sorted(seen, key=lambda w: (weight(w), w))

    def _syndrome_bytes(self, mono) -> bytes:
        ADD = self.field._add
        syn = [0] * self.code.H.shape[0]
        for idx, e in enumerate(mono):
            for _ in range(e):
                contrib = self._var_syndromes[idx]
                syn = [ADD[a][b] for a, b in zip(syn, contrib)]
        return bytes(syn)

    def canonical_form(self, mono) -> tuple:
        """The unique standard monomial with the same syndrome class."""
        st = self._standards[self._syndrome_bytes(mono)]
        return tuple(st)

    def is_standard(self, mono) -> bool:
        return bytes(mono) in set(self._standards.values())

    def stats(self) -> dict:
        return {
            "count": len(self.elements),
            "rx_count": self.rx_count(),
            "standard_count": self.standard_count,
        }

    def to_json(self) -> dict:
        q = self.field.q
        elems = []
        for b, cls in zip(self.elements, self.classify()):
            entry = {
                "lead": _sparse(b.lead, q),
                "trail": _sparse(b.trail, q),
                "class": cls.tag,
            }
            if cls.tag == "codeword":
                entry["codeword"] = list(cls.codeword)
            elems.append(entry)
        return {"stats": self.stats(), "elements": elems}


def _sparse(mono, q):
    return [[*var_pair(idx, q), e] for idx, e in enumerate(mono) if e]


def _traversal_tables(code: LinearCode):
    """Per-variable syndrome contributions as plain int tuples."""
    field = code.field
    q = field.q
    H = code.H
    var_syn = []
    for i in range(code.n):
        for j in range(1, q):
            aj = field.exp(j)
            var_syn.append(tuple(int(field.mul(aj, int(h))) for h in H[:, i]))
    return var_syn


def _guard_cosets(code: LinearCode, caps: Caps) -> int:
    cosets = code.field.q ** (code.n - code.k)
    if cosets > caps.cosets:
        raise TooLarge(f"q^(n-k) = {cosets} exceeds coset cap {caps.cosets}")
    return cosets


class _Leads:
    """Growing lead set with vectorized divisibility tests."""

    def __init__(self, nvars):
        self.buf = np.zeros((64, nvars), dtype=np.uint8)
        self.count = 0

    def add(self, mono_bytes):
        if self.count == self.buf.shape[0]:
            self.buf = np.vstack([self.buf, np.zeros_like(self.buf)])
        self.buf[self.count] = np.frombuffer(mono_bytes, dtype=np.uint8)
        self.count += 1

    def divides_any(self, mono_bytes) -> bool:
        if self.count == 0:
            return False
        cand = np.frombuffer(mono_bytes, dtype=np.uint8)
        return bool((self.buf[: self.count] <= cand).all(axis=1).any())


def reduced_gb(code: LinearCode, order: OrderSpec, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """Frontier-heap traversal; see the module docstring."""
    field = code.field
    q = field.q
    n = code.n
    nv = n * (q - 1)
    cosets = _guard_cosets(code, caps)
    var_syn = _traversal_tables(code)
    ADD = field._add
    ns = code.H.shape[0]
    # standard monomials are class minima, so under a degree compatible
    # order their degree is at most n; candidates reach n+1
    max_deg = n + 1

    one = bytes(nv)
    zero_syn = bytes(ns)
    heap = [(order.key_bytes(one, 0), one, zero_syn)]
    seen = {one}
    standards: dict[bytes, bytes] = {}
    leads = _Leads(nv)
    elements: list[Binomial] = []

    while heap:
        key, mono, syn = heapq.heappop(heap)
        if leads.divides_any(mono):
            continue
        if key[0] > max_deg:
            raise RuntimeError(
                "traversal passed the maximum possible standard degree; "
                "this indicates a bug, not an input property"
            )
        st = standards.get(syn)
        if st is not None:
            elements.append(Binomial(_tup(mono), _tup(st)))
            leads.add(mono)
            continue
        standards[syn] = mono
        deg = key[0] + 1
        for v in range(nv):
            child = bytearray(mono)
            child[v] += 1
            child = bytes(child)
            if child in seen:
                continue
            seen.add(child)
            child_syn = bytes(
                ADD[a][b] for a, b in zip(syn, var_syn[v])
            )
            heapq.heappush(heap, (order.key_bytes(child, deg), child, child_syn))
            if len(heap) > caps.frontier:
                raise FrontierOverflow(
                    f"frontier exceeded {caps.frontier} entries"
                )

    if len(standards) != cosets:
        raise RuntimeError(
            f"traversal ended with {len(standards)} standard monomials, "
            f"expected {cosets}"
        )
    return GroebnerBasis(code, order, elements, standards, var_syn)


def reduced_gb_by_degree(code: LinearCode, order: OrderSpec, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """Independent degree-by-degree traversal used as a cross-check.

    Processes the candidates of each total degree in ascending order;
    degree compatibility makes this the same global order as the heap,
    with none of its machinery shared.
    """
    field = code.field
    q = field.q
    n = code.n
    nv = n * (q - 1)
    cosets = _guard_cosets(code, caps)
    var_syn = _traversal_tables(code)
    ADD = field._add
    ns = code.H.shape[0]

    one = bytes(nv)
    standards: dict[bytes, bytes] = {bytes(ns): one}
    level = {one: bytes(ns)}   # monomial -> syndrome at current degree
    lead_list: list[bytes] = []
    elements: list[Binomial] = []
    deg = 0
    while level:
        if deg > n + 1:
            raise RuntimeError("degree-by-degree traversal ran past degree n+1")
        nxt: dict[bytes, bytes] = {}
        for mono in sorted(level, key=lambda mb: order.key_bytes(mb, deg + 1)):
            # level holds only candidates already known not divisible by
            # previous-degree leads; same-degree leads never divide peers
            syn = level[mono]
            st = standards.get(syn)
            if st is not None and st != mono:
                elements.append(Binomial(_tup(mono), _tup(st)))
                lead_list.append(mono)
                continue
            standards.setdefault(syn, mono)
            for v in range(nv):
                child = bytearray(mono)
                child[v] += 1
                child = bytes(child)
                if child in nxt:
                    continue
                nxt[child] = bytes(ADD[a][b] for a, b in zip(syn, var_syn[v]))
        # prune next level against all leads found so far
        if lead_list:
            arr = np.frombuffer(b"".join(lead_list), dtype=np.uint8).reshape(-1, nv)
            pruned = {}
            for mono, syn in nxt.items():
                cand = np.frombuffer(mono, dtype=np.uint8)
                if not (arr <= cand).all(axis=1).any():
                    pruned[mono] = syn
            nxt = pruned
        level = nxt
        deg += 1

    if len(standards) != cosets:
        raise RuntimeError(
            f"traversal ended with {len(standards)} standard monomials, "
            f"expected {cosets}"
        )
    return GroebnerBasis(code, order, elements, standards, var_syn)


def _tup(mb: bytes) -> tuple:
    return tuple(mb)


# -- M_G -------------------------------------------------------------------------

def compute_mg(code: LinearCode, order: OrderSpec, caps: Caps = DEFAULT_CAPS,
               gb: GroebnerBasis | None = None):
    """Minimal-support codewords carried by the reduced basis.

    Guaranteed to contain a codeword of minimum weight; a violation is
    a falsification and aborts.  Returns (sorted words, basis).
    """
    from .codes import min_weight, minimal_support_codewords

    if gb is None:
        gb = reduced_gb(code, order, caps)
    carried = set(gb.codewords())
    minimal = set(minimal_support_codewords(code, caps))
    mg = sorted(carried & minimal, key=lambda w: (weight(w), w))
    d1 = min_weight(code, caps)
    if not any(weight(c) == d1 for c in mg):
        raise Falsification(
            "M_G lacks a codeword of minimum weight",
            witness={"d1": d1, "mg": [list(c) for c in mg]},
        )
    return mg, gb


# -- verification helpers -----------------------------------------------------------

def verify_soundness(gb: GroebnerBasis) -> list:
    """Each element's two sides must evaluate to syndrome-equal words."""
    bad = []
    code = gb.code
    for b in gb.elements:
        lw = evaluate(b.lead, gb.field, gb.n)
        tw = evaluate(b.trail, gb.field, gb.n)
        cw = tuple(gb.field.sub(x, y) for x, y in zip(lw, tw))
        if not code.contains(cw):
            bad.append(b)
    return bad


def verify_reduced(gb: GroebnerBasis) -> list:
    """Lead antichain + no trail divisible by any lead."""
    bad = []
    leads = gb.leads
    for i, b in enumerate(gb.elements):
        for j, L in enumerate(leads):
            if i != j and monomial_divides(L, b.lead):
                bad.append(("lead", b, L))
            if monomial_divides(L, b.trail):
                bad.append(("trail", b, L))
    return bad


def verify_completeness(gb: GroebnerBasis, caps: Caps = DEFAULT_CAPS) -> list:
    """Small-scale initial-ideal membership oracle.

    For every word pair (a, b) with a - b in the code and delta(b)
    below delta(a), delta(a) must be divisible by some lead.
    """
    from itertools import product as iproduct

    code = gb.code
    field = gb.field
    q = field.q
    total = q ** code.n * q ** code.k
    if total > caps.pairs:
        raise TooLarge(f"{total} pairs exceed cap {caps.pairs}")
    leads = gb.leads
    violations = []
    words = list(iproduct(range(q), repeat=code.n))
    from .codes import iter_codewords

    codewords = list(iter_codewords(code, caps))
    for a in words:
        da = delta(a, field)
        ka = gb.order.key(da)
        for c in codewords:
            if not any(c):
                continue
            b = tuple(field.sub(x, y) for x, y in zip(a, c))
            db = delta(b, field)
            if gb.order.key(db) < ka:
                if not any(monomial_divides(L, da) for L in leads):
                    violations.append((a, b))
    return violations


def verify_support_identity(gb: GroebnerBasis) -> list:
    """Codeword-bearing elements: supp(c) = supp(lead word) U supp(trail word)."""
    bad = []
    for b, cls in zip(gb.elements, gb.classify()):
        if cls.tag != "codeword":
            continue
        lw = evaluate(b.lead, gb.field, gb.n)
        tw = evaluate(b.trail, gb.field, gb.n)
        if support_mask(cls.codeword) != (support_mask(lw) | support_mask(tw)):
            bad.append(b)
    return bad

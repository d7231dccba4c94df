"""Linear codes over GF(q): construction, enumeration, supports and
generalized Hamming weights by brute force.

Words are tuples of integer element codes.  Linear algebra runs on
numpy uint8 matrices through the field's lookup tables, so everything
works uniformly for prime and extension fields.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb, prod

import numpy as np

from .config import DEFAULT_CAPS, Caps
from .errors import BadIndex, DependentRows, EmptyCode, TooLarge, ZeroInput
from .gf import FieldSpec


# -- word helpers ----------------------------------------------------------------

def weight(word) -> int:
    return sum(1 for a in word if a)


def support(word) -> tuple:
    """1-based indices of the nonzero coordinates."""
    return tuple(i for i, a in enumerate(word, start=1) if a)


def support_mask(word) -> int:
    mask = 0
    for i, a in enumerate(word):
        if a:
            mask |= 1 << i
    return mask


def mask_to_support(mask: int) -> tuple:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


# -- matrix helpers (uint8 arrays of element codes) ---------------------------------

def rref(field: FieldSpec, rows) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    A = np.array(rows, dtype=np.uint8)
    if A.ndim != 2:
        A = A.reshape(len(rows), -1)
    ADD, MUL, NEG, INV = field.ADD, field.MUL, field.NEG, field.INV
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r >= m:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = MUL[INV[A[r, c]], A[r]]
        col = A[:, c].copy()
        col[r] = 0
        other = np.nonzero(col)[0]
        if other.size:
            A[other] = ADD[A[other], MUL[NEG[col[other]][:, None], A[r][None, :]]]
        pivots.append(c)
        r += 1
    return A, pivots


def rank(field: FieldSpec, rows) -> int:
    return len(rref(field, rows)[1])


def mat_mul(field: FieldSpec, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    ADD, MUL = field.ADD, field.MUL
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for t in range(A.shape[1]):
        out = ADD[out, MUL[A[:, t][:, None], B[t][None, :]]]
    return out


def mat_vec(field: FieldSpec, A: np.ndarray, v) -> tuple:
    out = mat_mul(field, A, np.array(v, dtype=np.uint8).reshape(-1, 1))
    return tuple(int(x) for x in out[:, 0])


def parity_check(field: FieldSpec, G: np.ndarray) -> np.ndarray:
    """Standard-form complement of the row space: H with null(H) = rowspace(G)."""
    R, pivots = rref(field, G)
    k, n = R.shape[0], R.shape[1]
    free = [c for c in range(n) if c not in pivots]
    H = np.zeros((len(free), n), dtype=np.uint8)
    for row, f in enumerate(free):
        H[row, f] = 1
        for idx, p in enumerate(pivots):
            H[row, p] = field.NEG[R[idx, f]]
    return H


# -- the code object ------------------------------------------------------------------

class LinearCode:
    """A k-dimensional code of length n with generator and parity-check
    matrices; immutable after construction."""

    def __init__(self, field: FieldSpec, G: np.ndarray, H: np.ndarray):
        self.field = field
        self.G = G
        self.H = H
        self.n = G.shape[1]
        self.k = G.shape[0]
        self.rows = tuple(tuple(int(x) for x in row) for row in G)

    def __repr__(self):
        return f"LinearCode(n={self.n}, k={self.k}, q={self.field.q})"

    def syndrome(self, word) -> tuple:
        if self.H.shape[0] == 0:
            return ()
        return mat_vec(self.field, self.H, word)

    def contains(self, word) -> bool:
        return all(x == 0 for x in self.syndrome(word))

    def encode(self, message) -> tuple:
        out = np.zeros(self.n, dtype=np.uint8)
        ADD, MUL = self.field.ADD, self.field.MUL
        for c, row in zip(message, self.G):
            out = ADD[out, MUL[c, row]]
        return tuple(int(x) for x in out)

    def describe(self) -> dict:
        return {"n": self.n, "k": self.k, "q": self.field.q}


def code_from_matrix(field: FieldSpec, rows, allow_dependent: bool = False) -> LinearCode:
    """Build a code from generator rows; H is verified against G.

    Dependent rows raise :class:`DependentRows` carrying the reduced
    rank, unless ``allow_dependent`` accepts the reduced code (its G is
    then the nonzero RREF rows).
    """
    G = np.array(rows, dtype=np.uint8)
    if G.ndim != 2 or G.size == 0:
        raise EmptyCode("generator matrix is empty")
    if int(G.max(initial=0)) >= field.q:
        raise ValueError("matrix entry out of range for the field")
    R, pivots = rref(field, G)
    r = len(pivots)
    if r == 0:
        raise EmptyCode("generator matrix has rank 0")
    if r < G.shape[0]:
        if not allow_dependent:
            raise DependentRows(
                f"rows are dependent: rank {r} < {G.shape[0]}", rank=r
            )
        G = R[:r].copy()
    H = parity_check(field, G)
    if H.shape[0]:
        Z = mat_mul(field, G, H.T.copy())
        if Z.any():
            raise AssertionError("internal error: G*H^T != 0")
    return LinearCode(field, G, H)


# -- enumeration ------------------------------------------------------------------------

def codeword_matrix(code: LinearCode, caps: Caps = DEFAULT_CAPS) -> np.ndarray:
    """All q^k codewords, row index = information vector read base q with
    the first generator row as the most significant digit."""
    q = code.field.q
    total = q ** code.k
    if total > caps.enumeration:
        raise TooLarge(f"q^k = {total} exceeds enumeration cap {caps.enumeration}")
    ADD, MUL = code.field.ADD, code.field.MUL
    M = np.zeros((1, code.n), dtype=np.uint8)
    for row in code.G:
        M = np.concatenate([ADD[M, MUL[c, row][None, :]] for c in range(q)], axis=0)
    return M


def iter_codewords(code: LinearCode, caps: Caps = DEFAULT_CAPS):
    for row in codeword_matrix(code, caps):
        yield tuple(int(x) for x in row)


def min_weight(code: LinearCode, caps: Caps = DEFAULT_CAPS) -> int:
    M = codeword_matrix(code, caps)
    w = (M != 0).sum(axis=1)
    return int(w[w > 0].min())


# -- subspace scans ------------------------------------------------------------------------

def gaussian_binomial(k: int, i: int, q: int) -> int:
    num = prod(q ** k - q ** t for t in range(i))
    den = prod(q ** i - q ** t for t in range(i))
    return num // den


def _iter_rref_bases(q: int, k: int, i: int):
    """Canonical RREF bases of the i-dimensional subspaces of F_q^k,
    yielded per pivot choice as a batched (N, i, k) array."""
    for pivots in combinations(range(k), i):
        pset = set(pivots)
        free = [
            (r, c)
            for r in range(i)
            for c in range(pivots[r] + 1, k)
            if c not in pset
        ]
        nfree = len(free)
        N = q ** nfree
        B = np.zeros((N, i, k), dtype=np.uint8)
        for r, p in enumerate(pivots):
            B[:, r, p] = 1
        if nfree:
            idx = np.arange(N)
            for t, (r, c) in enumerate(free):
                B[:, r, c] = (idx // q ** (nfree - 1 - t)) % q
        yield B


def _subspace_weights(code: LinearCode, B: np.ndarray):
    # words of each basis row, then union of supports
    ADD, MUL = code.field.ADD, code.field.MUL
    N, i, k = B.shape
    W = np.zeros((N, i, code.n), dtype=np.uint8)
    for c in range(k):
        W = ADD[W, MUL[B[:, :, c][:, :, None], code.G[c][None, None, :]]]
    occupied = (W != 0).any(axis=1)
    return occupied.sum(axis=1), W


def ghw(code: LinearCode, i: int, caps: Caps = DEFAULT_CAPS) -> int:
    """i-th generalized Hamming weight by exhaustive subspace scan."""
    return ghw_witnesses(code, i, caps, limit=0)[0]


def ghw_witnesses(
    code: LinearCode, i: int, caps: Caps = DEFAULT_CAPS, limit: int = 100
):
    """(d_i, witnesses); each witness is a Subspace2-style basis record."""
    if not 1 <= i <= code.k:
        raise BadIndex(f"i = {i} outside 1..{code.k}")
    count = gaussian_binomial(code.k, i, code.field.q)
    if count > caps.subspaces:
        raise TooLarge(f"{count} subspaces exceed cap {caps.subspaces}")
    best = None
    witnesses: list = []
    for B in _iter_rref_bases(code.field.q, code.k, i):
        wts, W = _subspace_weights(code, B)
        m = int(wts.min())
        if best is None or m < best:
            best = m
            witnesses = []
        if limit and m == best:
            for t in np.nonzero(wts == best)[0][: limit - len(witnesses)]:
                witnesses.append(
                    tuple(tuple(int(x) for x in W[t, r]) for r in range(i))
                )
    return best, witnesses[:limit]


@dataclass(frozen=True)
class Subspace2:
    """A plane in the code, recorded by a basis pair."""

    basis: tuple
    support: tuple
    wt: int


def span2_weight(field: FieldSpec, c1, c2) -> tuple[int, int]:
    """(dim, weight) of the span of two nonzero codewords."""
    if not any(c1) or not any(c2):
        raise ZeroInput("span2_weight needs nonzero words")
    j0 = next(i for i, a in enumerate(c1) if a)
    lam = field.mul(c2[j0], field.inv(c1[j0]))
    dependent = all(field.mul(lam, a) == b for a, b in zip(c1, c2))
    mask = support_mask(c1) | support_mask(c2)
    return (1 if dependent else 2), mask.bit_count()


def span2(field: FieldSpec, c1, c2) -> Subspace2:
    dim, wt = span2_weight(field, c1, c2)
    mask = support_mask(c1) | support_mask(c2)
    return Subspace2(basis=(tuple(c1), tuple(c2)), support=mask_to_support(mask), wt=wt)


# -- projective ids, pair oracle, minimal supports ---------------------------------------

def projective_ids(code: LinearCode, M: np.ndarray) -> np.ndarray:
    """Group words by the line they span: equal id iff scalar multiples.
    The zero word gets id -1."""
    INV, MUL = code.field.INV, code.field.MUL
    N = M.shape[0]
    ids = np.full(N, -1, dtype=np.int64)
    canon: dict[bytes, int] = {}
    nxt = 0
    nz = M != 0
    for t in range(N):
        row = M[t]
        idxs = np.nonzero(nz[t])[0]
        if idxs.size == 0:
            continue
        rep = MUL[INV[row[idxs[0]]], row].tobytes()
        if rep not in canon:
            canon[rep] = nxt
            nxt += 1
        ids[t] = canon[rep]
    return ids


def _support_masks(M: np.ndarray) -> list[int]:
    out = []
    nz = M != 0
    for t in range(M.shape[0]):
        mask = 0
        for i in np.nonzero(nz[t])[0]:
            mask |= 1 << int(i)
        out.append(mask)
    return out


def d2_pair_oracle(code: LinearCode, caps: Caps = DEFAULT_CAPS):
    """Second generalized Hamming weight as a min over dim-2 codeword
    pairs; the oracle for everything downstream.  Returns (d2, witness)."""
    if code.k < 2:
        raise BadIndex("d2 needs k >= 2")
    M = codeword_matrix(code, caps)
    N = M.shape[0]
    if N * (N - 1) // 2 > caps.pairs:
        raise TooLarge(f"{N*(N-1)//2} pairs exceed cap {caps.pairs}")
    ids = projective_ids(code, M)
    masks = _support_masks(M)
    best = None
    witness = None
    for a in range(N):
        if ids[a] < 0:
            continue
        ma = masks[a]
        ia = ids[a]
        for b in range(a + 1, N):
            if ids[b] < 0 or ids[b] == ia:
                continue
            w = (ma | masks[b]).bit_count()
            if best is None or w < best:
                best = w
                witness = (
                    tuple(int(x) for x in M[a]),
                    tuple(int(x) for x in M[b]),
                )
    if best is None:
        raise BadIndex("no independent pair found")
    return best, witness


def minimal_support_codewords(code: LinearCode, caps: Caps = DEFAULT_CAPS) -> list:
    """All codewords whose support properly contains no other nonzero
    codeword's support; sorted by (weight, word) for determinism."""
    M = codeword_matrix(code, caps)
    masks = _support_masks(M)
    distinct = sorted(set(m for m in masks if m), key=lambda m: (m.bit_count(), m))
    minimal: set[int] = set()
    accepted: list[int] = []
    for m in distinct:
        if not any((a & m) == a for a in accepted if a != m):
            minimal.add(m)
        accepted.append(m)
    out = [
        tuple(int(x) for x in M[t])
        for t in range(M.shape[0])
        if masks[t] in minimal
    ]
    out.sort(key=lambda w: (weight(w), w))
    return out

"""N-graded Betti numbers of square-free monomial ideals via Hochster's
formula, and the recovery checks tying them to code invariants.

Hochster's formula for the quotient R/I of a square-free monomial
ideal: beta_{i,j} is the sum over vertex subsets W of size j of the
dimension of the reduced homology H~_{j-i-1} of the Stanley-Reisner
complex restricted to W.  Restrictions that are cones or full
simplices contribute nothing, so the scan visits only subsets that are
unions of the generators they contain.  Homology ranks come from
boundary-matrix Gaussian elimination over GF(ell); over GF(2) rows are
bit-packed integers.

Conventions: vertices are 1..n; the empty restriction contributes
beta_{0,0} = 1 through H~_{-1} of the complex {empty set}.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .codes import LinearCode, d2_pair_oracle, min_weight, support_mask, weight
from .config import DEFAULT_CAPS, Caps
from .errors import Falsification, TooFewGenerators, TooLarge


@dataclass(frozen=True)
class SquarefreeIdeal:
    """Monomial ideal given by its generator supports (an antichain)."""

    n: int
    generators: tuple  # sorted tuple of bitmasks over 0..n-1

    @staticmethod
    def from_supports(n: int, supports) -> "SquarefreeIdeal":
        masks = set()
        for s in supports:
            mask = 0
            for v in s:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} outside 1..{n}")
                mask |= 1 << (v - 1)
            if mask == 0:
                raise ValueError("empty generator support")
            masks.add(mask)
        if not masks:
            raise ValueError("an ideal needs at least one generator")
        for a in masks:
            for b in masks:
                if a != b and (a & b) == a:
                    raise ValueError("generators must form an antichain")
        return SquarefreeIdeal(n, tuple(sorted(masks)))

    @staticmethod
    def from_codewords(n: int, words) -> "SquarefreeIdeal":
        supp = {support_mask(w) for w in words}
        return SquarefreeIdeal.from_supports(
            n, [[i + 1 for i in range(n) if m >> i & 1] for m in supp]
        )

    def generator_supports(self) -> list[tuple]:
        return [
            tuple(i + 1 for i in range(self.n) if g >> i & 1) for g in self.generators
        ]

    def to_json(self) -> dict:
        return {"n": self.n, "generators": [list(s) for s in self.generator_supports()]}


@dataclass
class BettiTable:
    entries: dict          # (i, j) -> beta
    char: int

    @property
    def pd(self) -> int:
        return max((i for (i, _), v in self.entries.items() if v), default=0)

    def min_j(self, i: int):
        js = [j for (ii, j), v in self.entries.items() if ii == i and v]
        return min(js) if js else None

    def to_json(self) -> dict:
        return {
            "betti": sorted([i, j, v] for (i, j), v in self.entries.items() if v),
            "pd": self.pd,
            "char": self.char,
        }


# -- complexes and homology ------------------------------------------------------

def restricted_faces(ideal: SquarefreeIdeal, W: int) -> list[list[int]]:
    """Faces of the Stanley-Reisner complex restricted to the vertex set
    W (bitmask), grouped by cardinality; faces are bitmasks."""
    gens = [g for g in ideal.generators if (g & W) == g]
    verts = [v for v in range(ideal.n) if W >> v & 1]
    by_card: list[list[int]] = [[0]]  # the empty face
    frontier = [0]
    while frontier:
        nxt = []
        for face in frontier:
            top = face.bit_length()
            for v in verts:
                if v < top or face >> v & 1:
                    continue
                cand = face | (1 << v)
                if any((g & cand) == g for g in gens):
                    continue
                nxt.append(cand)
        if nxt:
            by_card.append(nxt)
        frontier = nxt
    return by_card


def stanley_reisner_complex(ideal: SquarefreeIdeal, caps: Caps = DEFAULT_CAPS):
    """All faces of the full complex, as sorted vertex tuples."""
    if ideal.n > caps.homology_vars:
        raise TooLarge(f"n = {ideal.n} exceeds homology cap {caps.homology_vars}")
    full = (1 << ideal.n) - 1
    faces = []
    for level in restricted_faces(ideal, full):
        for mask in level:
            faces.append(tuple(i + 1 for i in range(ideal.n) if mask >> i & 1))
    faces.sort(key=lambda f: (len(f), f))
    return faces


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            low = p & -p
            if row & low:
                row ^= p
        if row:
            pivots.append(row)
            rank += 1
    return rank


def _rank_mod_ell(mat: np.ndarray, ell: int) -> int:
    A = mat % ell
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = (A[r] * pow(int(A[r, c]), ell - 2, ell)) % ell
        col = A[:, c].copy()
        col[r] = 0
        other = np.nonzero(col)[0]
        if other.size:
            A[other] = (A[other] - col[other][:, None] * A[r][None, :]) % ell
        r += 1
    return r


def reduced_homology_dims(by_card: list[list[int]], ell: int = 2) -> dict[int, int]:
    """dim H~_{c-1} keyed by face cardinality c, over GF(ell).

    Cardinality 0 is the empty face: H~_{-1} = 1 exactly when the
    complex has no vertices.
    """
    index = [dict((f, t) for t, f in enumerate(level)) for level in by_card]
    ranks = [0] * (len(by_card) + 1)  # ranks[c] = rank of boundary C_c -> C_{c-1}
    for c in range(1, len(by_card)):
        faces = by_card[c]
        lower = index[c - 1]
        if ell == 2:
            rows = []
            for f in faces:
                row = 0
                m = f
                while m:
                    v = m & -m
                    row |= 1 << lower[f ^ v]
                    m ^= v
                rows.append(row)
            ranks[c] = _rank_gf2(rows)
        else:
            mat = np.zeros((len(faces), len(lower)), dtype=np.int64)
            for t, f in enumerate(faces):
                sign = 1
                m = f
                pos = 0
                while m:
                    v = m & -m
                    mat[t, lower[f ^ v]] = sign
                    sign = -sign
                    m ^= v
                    pos += 1
            ranks[c] = _rank_mod_ell(mat, ell)
    dims = {}
    for c in range(len(by_card)):
        dims[c] = len(by_card[c]) - ranks[c] - ranks[c + 1]
    return dims


# -- Hochster scans -----------------------------------------------------------------

def _contributing(ideal: SquarefreeIdeal, W: int) -> bool:
    """A restriction contributes only when W is exactly the union of the
    generators it contains (otherwise it is a cone or a full simplex)."""
    u = 0
    for g in ideal.generators:
        if (g & W) == g:
            u |= g
    return u == W


def _accumulate(ideal, W, ell, entries):
    dims = reduced_homology_dims(restricted_faces(ideal, W), ell)
    j = W.bit_count()
    for c, dim in dims.items():
        if dim:
            i = j - c
            entries[(i, j)] = entries.get((i, j), 0) + dim


def _scan_subsets(args):
    ideal, lo, hi, ell = args
    entries: dict = {}
    for W in range(lo, hi):
        if _contributing(ideal, W):
            _accumulate(ideal, W, ell, entries)
    return entries


def betti_numbers(
    ideal: SquarefreeIdeal,
    ell: int = 2,
    caps: Caps = DEFAULT_CAPS,
    workers: int = 1,
) -> BettiTable:
    """Full Betti table of R/I over GF(ell)."""
    if ideal.n > caps.homology_vars:
        raise TooLarge(f"n = {ideal.n} exceeds homology cap {caps.homology_vars}")
    total = 1 << ideal.n
    if workers > 1 and total >= 1 << 12:
        from concurrent.futures import ProcessPoolExecutor

        chunks = []
        step = (total + workers - 1) // workers
        for lo in range(0, total, step):
            chunks.append((ideal, lo, min(lo + step, total), ell))
        entries: dict = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_subsets, chunks):
                for key, v in part.items():
                    entries[key] = entries.get(key, 0) + v
    else:
        entries = _scan_subsets((ideal, 0, total, ell))
    return BettiTable(entries=entries, char=ell)


def betti_min(ideal: SquarefreeIdeal, i: int, ell: int = 2,
              caps: Caps = DEFAULT_CAPS):
    """min { j : beta_{i,j} != 0 }, scanning j upward with early exit."""
    if ideal.n > caps.homology_vars:
        raise TooLarge(f"n = {ideal.n} exceeds homology cap {caps.homology_vars}")
    verts = list(range(ideal.n))
    for j in range(i, ideal.n + 1):
        total = 0
        for sel in combinations(verts, j):
            W = 0
            for v in sel:
                W |= 1 << v
            if not _contributing(ideal, W):
                continue
            dims = reduced_homology_dims(restricted_faces(ideal, W), ell)
            total += dims.get(j - i, 0)
        if total:
            return j
    return None


def direct_mins(ideal: SquarefreeIdeal):
    """(min generator size, min pairwise union size) straight from the
    generator supports; the combinatorial side of the recovery results."""
    gens = ideal.generators
    gen_min = min(g.bit_count() for g in gens)
    if len(gens) < 2:
        raise TooFewGenerators("pair minimum needs at least two generators")
    pair_min = min(
        (a | b).bit_count() for t, a in enumerate(gens) for b in gens[t + 1:]
    )
    return gen_min, pair_min


# -- Hilbert series cross-check -------------------------------------------------------

def hilbert_numerator_from_generators(ideal: SquarefreeIdeal) -> list[int]:
    """K-polynomial coefficients by inclusion-exclusion over generator
    subsets: sum over S of (-1)^|S| t^|union S|."""
    if len(ideal.generators) > 22:
        raise TooLarge("inclusion-exclusion over generator subsets is capped at 22")
    coeffs = [0] * (ideal.n + 1)
    gens = ideal.generators

    def rec(idx, union, sign):
        if idx == len(gens):
            coeffs[union.bit_count()] += sign
            return
        rec(idx + 1, union, sign)
        rec(idx + 1, union | gens[idx], -sign)

    rec(0, 0, 1)
    return coeffs


def hilbert_numerator_from_betti(table: BettiTable, n: int) -> list[int]:
    """Alternating sum of the Betti table as a polynomial in t."""
    coeffs = [0] * (n + 1)
    for (i, j), v in table.entries.items():
        if v:
            coeffs[j] += v if i % 2 == 0 else -v
    return coeffs


# -- recovery checks against code invariants ---------------------------------------------

def check_betti_min_equivalences(code: LinearCode, M_words, ell: int = 2,
                                 caps: Caps = DEFAULT_CAPS) -> dict:
    """Both equivalences tying Betti minima to code invariants.

    For M inside the minimal-support set with at least two distinct
    supports: the first Betti minimum equals d1 iff M holds a
    minimum-weight codeword, and the second equals d2 iff M is a
    d2-test set.  Violations raise Falsification.
    """
    from .d2 import is_d2_test_set

    ideal = SquarefreeIdeal.from_codewords(code.n, M_words)
    if len(ideal.generators) < 2:
        raise TooFewGenerators("need |S_M| >= 2")
    b1 = betti_min(ideal, 1, ell, caps)
    b2 = betti_min(ideal, 2, ell, caps)
    gen_min, pair_min = direct_mins(ideal)
    if b1 != gen_min or b2 != pair_min:
        raise Falsification(
            "Betti minima disagree with the combinatorial minima",
            witness={"b1": b1, "gen_min": gen_min, "b2": b2, "pair_min": pair_min},
        )
    d1 = min_weight(code, caps)
    d2v, _ = d2_pair_oracle(code, caps)
    has_min_weight = any(weight(w) == d1 for w in M_words)
    is_test, _ = is_d2_test_set(code, M_words, caps, d2v)
    result = {
        "beta1_min": b1,
        "beta2_min": b2,
        "d1": d1,
        "d2": d2v,
        "has_min_weight_word": has_min_weight,
        "is_d2_test_set": is_test,
        "equiv_d1": (b1 == d1) == has_min_weight,
        "equiv_d2": (b2 == d2v) == is_test,
    }
    if not (result["equiv_d1"] and result["equiv_d2"]):
        raise Falsification("Betti-min equivalence failed", witness=result)
    return result

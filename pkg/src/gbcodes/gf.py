"""GF(q) arithmetic for q = p^s <= 16 with a fixed primitive element.

Elements are integer codes 0..q-1.  For a prime field the code of an
element is its residue mod p.  For an extension field the code packs
the coefficient vector c0 + c1*x + ... base p, constant digit lowest,
so e.g. in GF(4) with modulus x^2+x+1 the class of x has code 2 and
x+1 has code 3.

Every nonzero element is a power of the primitive element alpha, with
exponents running over 1..q-1 and alpha^(q-1) = 1.  The discrete log
of the identity is therefore q-1, never 0.  Default moduli are the
irreducible monic polynomials with the smallest packed integer code:

    GF(4)  : x^2 + x + 1          (code 7)
    GF(8)  : x^3 + x + 1          (code 11)
    GF(9)  : x^2 + 1              (code 10)
    GF(16) : x^4 + x + 1          (code 19)

alpha is the first generator of the multiplicative group in ascending
integer code.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DivisionByZero,
    FieldTooLarge,
    MixedFields,
    NoPrimitiveElement,
    NotPrime,
    ReducibleModulus,
    ZeroHasNoLog,
)

MAX_Q = 16


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


# -- polynomial helpers over GF(p), coefficients ascending, as tuples ---------

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and a:
        if a[-1] == 0:
            a.pop()
            continue
        coef = (a[-1] * inv_lead) % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        a.pop()
    return _poly_trim(a)


def _poly_divides(d, a, p):
    return _poly_mod(a, d, p) == ()


def _pack(coeffs, p) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + c
    return code


def _unpack(code, p, s):
    digits = []
    for _ in range(s):
        digits.append(code % p)
        code //= p
    return tuple(digits)


def _irreducible(m, p) -> bool:
    """Exhaustive check: no monic divisor of degree 1..deg/2."""
    deg = len(m) - 1
    for d in range(1, deg // 2 + 1):
        for low in range(p ** d):
            g = _unpack(low, p, d) + (1,)
            if _poly_divides(g, m, p):
                return False
    return True


def _default_modulus(p, s):
    for low in range(p ** s):
        m = _unpack(low, p, s) + (1,)
        if _irreducible(m, p):
            return m
    raise NoPrimitiveElement(f"no irreducible degree-{s} polynomial over GF({p})")


class FieldSpec:
    """Immutable description of GF(q) with precomputed tables.

    Do not call directly; use :func:`field_new`.  All operations are
    pure, so a spec can be shared freely across workers.
    """

    def __init__(self, p, s, modulus):
        self.p = p
        self.s = s
        self.q = p ** s
        self.modulus = modulus  # () for prime fields, ascending coeffs otherwise
        q = self.q

        if s == 1:
            mul = [[(a * b) % p for b in range(q)] for a in range(q)]
            add = [[(a + b) % p for b in range(q)] for a in range(q)]
        else:
            def emul(a, b):
                pa = _poly_trim(_unpack(a, p, s))
                pb = _poly_trim(_unpack(b, p, s))
                prod = _poly_mod(_poly_mul(pa, pb, p), modulus, p)
                return _pack(prod + (0,) * (s - len(prod)), p)

            mul = [[emul(a, b) for b in range(q)] for a in range(q)]
            add = [
                [
                    _pack(
                        tuple(
                            (x + y) % p
                            for x, y in zip(_unpack(a, p, s), _unpack(b, p, s))
                        ),
                        p,
                    )
                    for b in range(q)
                ]
                for a in range(q)
            ]

        self._add = add
        self._mul = mul
        self._neg = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]

        # alpha = first multiplicative generator in ascending code
        alpha = None
        for cand in range(1, q):
            seen = set()
            x = cand
            for _ in range(q - 1):
                seen.add(x)
                x = mul[x][cand]
            if len(seen) == q - 1:
                alpha = cand
                break
        if alpha is None:
            raise NoPrimitiveElement(f"no generator found for GF({q})")
        self.alpha = alpha

        # exponent tables, j in 1..q-1, alpha^(q-1) = 1
        exp = [0] * q
        log = [0] * q
        x = 1
        for j in range(1, q):
            x = mul[x][alpha] if j > 1 else alpha
            exp[j] = x
            log[x] = j
        self._exp = exp
        self._log = log

        self._inv = [0] * q
        for a in range(1, q):
            self._inv[a] = exp[q - 1] if log[a] == q - 1 else exp[q - 1 - log[a]]

        # numpy views for vectorized linear algebra
        self.ADD = np.array(add, dtype=np.uint8)
        self.MUL = np.array(mul, dtype=np.uint8)
        self.NEG = np.array(self._neg, dtype=np.uint8)
        self.INV = np.array(self._inv, dtype=np.uint8)

    # -- scalar operations -------------------------------------------------

    def _check(self, *elts):
        for a in elts:
            if not 0 <= a < self.q:
                raise ValueError(f"element code {a} out of range for GF({self.q})")

    def add(self, a, b):
        self._check(a, b)
        return self._add[a][b]

    def sub(self, a, b):
        self._check(a, b)
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        self._check(a, b)
        return self._mul[a][b]

    def neg(self, a):
        self._check(a)
        return self._neg[a]

    def inv(self, a):
        self._check(a)
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return self._inv[a]

    def dlog(self, a) -> int:
        """Exponent j in 1..q-1 with alpha^j = a; dlog(1) = q-1."""
        self._check(a)
        if a == 0:
            raise ZeroHasNoLog("0 has no discrete log")
        return self._log[a]

    def exp(self, j) -> int:
        """alpha^j for j in 1..q-1."""
        if not 1 <= j <= self.q - 1:
            raise ValueError(f"exponent {j} outside 1..{self.q - 1}")
        return self._exp[j]

    def scalar_int(self, e: int) -> int:
        """Code of the prime-subfield element e mod p."""
        return e % self.p

    def exp_add(self, u, v):
        """Exponent w with alpha^u + alpha^v = alpha^w, or None if the sum is 0."""
        c = self._add[self.exp(u)][self.exp(v)]
        return None if c == 0 else self._log[c]

    # -- identity ------------------------------------------------------------

    def _key(self):
        return (self.p, self.s, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.s == 1:
            return f"GF({self.q})"
        return f"GF({self.q}; modulus={list(self.modulus)})"

    def element_repr(self, a) -> str:
        if a == 0:
            return "0"
        j = self._log[a]
        if j == self.q - 1:
            return "1"
        return "a" if j == 1 else f"a^{j}"

    def describe(self) -> dict:
        return {
            "p": self.p,
            "s": self.s,
            "q": self.q,
            "modulus": list(self.modulus),
            "alpha": self.alpha,
        }


def field_new(p: int, s: int = 1, modulus=None) -> FieldSpec:
    """Construct GF(p^s), p^s <= 16.

    ``modulus`` is an ascending coefficient list of a monic degree-s
    polynomial irreducible over GF(p); required shape [c0,...,c_{s-1},1].
    When omitted for s > 1, the default modulus for q is used.
    """
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1:
        raise ValueError("s must be a positive integer")
    if p ** s > MAX_Q:
        raise FieldTooLarge(f"q = {p}^{s} exceeds the supported maximum {MAX_Q}")
    if s == 1:
        if modulus:
            raise ValueError("prime fields take no modulus")
        return FieldSpec(p, 1, ())
    if modulus is None:
        mod = _default_modulus(p, s)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != s + 1 or mod[-1] != 1:
            raise ValueError(
                f"modulus must be monic of degree {s} (got {list(modulus)})"
            )
        if not _irreducible(mod, p):
            raise ReducibleModulus(f"{list(modulus)} is reducible over GF({p})")
    return FieldSpec(p, s, mod)


def field_for_q(q: int) -> FieldSpec:
    """GF(q) with default modulus, factoring q = p^s."""
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            s = 0
            m = q
            while m % p == 0:
                m //= p
                s += 1
            if p ** s != q:
                break
            return field_new(p, s)
    raise ValueError(f"{q} is not a prime power")


def parse_element(field: FieldSpec, token) -> int:
    """Read one matrix entry from an input file.

    Prime fields take integers, reduced mod p.  Extension fields take
    "0"/"1"/"a"/"a^j" strings, ascending coefficient lists, or integer
    codes already in 0..q-1.
    """
    if field.s == 1:
        if not isinstance(token, int):
            raise ValueError(f"prime-field entries must be integers, got {token!r}")
        return token % field.p
    if isinstance(token, int):
        if not 0 <= token < field.q:
            raise ValueError(f"code {token} out of range for GF({field.q})")
        return token
    if isinstance(token, str):
        t = token.strip()
        if t == "0":
            return 0
        if t == "1":
            return field.exp(field.q - 1)
        if t == "a":
            return field.alpha
        if t.startswith("a^"):
            return field.exp(int(t[2:]))
        raise ValueError(f"cannot parse field element {token!r}")
    coeffs = tuple(int(c) % field.p for c in token)
    if len(coeffs) > field.s:
        raise ValueError(f"coefficient vector {token!r} too long for GF({field.q})")
    coeffs = coeffs + (0,) * (field.s - len(coeffs))
    return _pack(coeffs, field.p)


@dataclass(frozen=True)
class FieldElement:
    """Element-level convenience wrapper carrying its field."""

    spec: FieldSpec
    code: int

    def __post_init__(self):
        if not 0 <= self.code < self.spec.q:
            raise ValueError(f"code {self.code} out of range for {self.spec!r}")

    def _same(self, other: "FieldElement") -> None:
        if self.spec != other.spec:
            raise MixedFields(f"{self.spec!r} vs {other.spec!r}")

    def __add__(self, other):
        self._same(other)
        return FieldElement(self.spec, self.spec.add(self.code, other.code))

    def __sub__(self, other):
        self._same(other)
        return FieldElement(self.spec, self.spec.sub(self.code, other.code))

    def __mul__(self, other):
        self._same(other)
        return FieldElement(self.spec, self.spec.mul(self.code, other.code))

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.code))

    def inverse(self):
        return FieldElement(self.spec, self.spec.inv(self.code))

    def dlog(self) -> int:
        return self.spec.dlog(self.code)

    def __str__(self):
        return self.spec.element_repr(self.code)

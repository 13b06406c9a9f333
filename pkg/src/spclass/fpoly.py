"""Polynomial arithmetic over GF(p), p an odd prime.

A polynomial is stored as a tuple of integer coefficients in [0, p),
lowest degree first, with no trailing zeros; the zero polynomial is the
empty tuple.  All arithmetic is exact.

Monic irreducible polynomials of a fixed degree are enumerated by a
sieve in lexicographic order of the coefficient tuple, and that order is
reused everywhere a deterministic polynomial ordering is needed.  The
reciprocal operator reverses the coefficient tuple and rescales to a
monic result; it is only defined for monic inputs with nonzero constant
term.
"""

from __future__ import annotations

import functools
import itertools

from .errors import ModulusMismatch, NotMonic, NotOddPrime, ZeroConstantTerm


def is_odd_prime(n) -> bool:
    if not isinstance(n, int) or n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@functools.lru_cache(maxsize=None)
def _odd_prime_ok(p: int) -> bool:
    return is_odd_prime(p)


def ensure_odd_prime(p: int) -> int:
    if not _odd_prime_ok(p):
        raise NotOddPrime(f"modulus must be an odd prime, got {p!r}")
    return p


class Poly:
    """Immutable polynomial over GF(p)."""

    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int):
        ensure_odd_prime(p)
        c = [int(v) % p for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self.p = p

    # -- constructors --------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Poly":
        return cls((), p)

    @classmethod
    def one(cls, p: int) -> "Poly":
        return cls((1,), p)

    @classmethod
    def t(cls, p: int) -> "Poly":
        return cls((0, 1), p)

    @classmethod
    def constant(cls, c: int, p: int) -> "Poly":
        return cls((c,), p)

    # -- basic structure -----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self.coeffs[i] if i < len(self.coeffs) else 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i] if i < len(self.coeffs) else 0
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "t" if i == 1 else f"t^{i}"
                terms.append(var if c == 1 else f"{c}{var}")
        return "+".join(terms)

    def __repr__(self) -> str:
        return f"Poly({self}, p={self.p})"

    def _pair(self, other) -> "Poly":
        if not isinstance(other, Poly):
            raise TypeError(f"expected Poly, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
        return other

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._pair(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly((self[i] + other[i] for i in range(n)), self.p)

    def __sub__(self, other) -> "Poly":
        other = self._pair(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly((self[i] - other[i] for i in range(n)), self.p)

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.p)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly((c * other for c in self.coeffs), self.p)
        other = self._pair(other)
        if self.is_zero() or other.is_zero():
            return Poly.zero(self.p)
        p = self.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = (out[i + j] + a * b) % p
        return Poly(out, p)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._pair(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        db = other.degree
        r = list(self.coeffs)
        if len(r) <= db and db > 0:
            return Poly.zero(p), Poly(r, p)
        q = [0] * max(len(r) - db, 1)
        lead_inv = pow(other.lc, p - 2, p)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * lead_inv % p
            if c:
                q[i - db] = c
                for j, bc in enumerate(other.coeffs):
                    r[i - db + j] = (r[i - db + j] - c * bc) % p
        return Poly(q, p), Poly(r[:db], p)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        p = self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    # -- calculus and normalizations ------------------------------------

    def derivative(self) -> "Poly":
        return Poly((i * c for i, c in enumerate(self.coeffs) if i), self.p)

    def monic(self) -> "Poly":
        if self.is_zero() or self.is_monic():
            return self
        return self * pow(self.lc, self.p - 2, self.p)

    def reciprocal(self) -> "Poly":
        """Monic polynomial whose roots are the inverses of this one's."""
        if not self.is_monic():
            raise NotMonic(f"reciprocal requires a monic input, got {self!r}")
        if self.coeffs[0] == 0:
            raise ZeroConstantTerm(f"t divides {self!r}")
        inv0 = pow(self.coeffs[0], self.p - 2, self.p)
        return Poly((c * inv0 for c in reversed(self.coeffs)), self.p)

    def is_self_reciprocal(self) -> bool:
        if not self.is_monic():
            raise NotMonic(f"self-reciprocal test requires monic input, got {self!r}")
        if self.coeffs[0] == 0:
            return False
        return self.reciprocal() == self


# -- gcd family ---------------------------------------------------------


def _same_field(a: Poly, b: Poly) -> None:
    if a.p != b.p:
        raise ModulusMismatch(f"GF({a.p}) vs GF({b.p})")


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    _same_field(a, b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def xgcd(a: Poly, b: Poly):
    """Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic."""
    _same_field(a, b)
    p = a.p
    r0, r1 = a, b
    u0, u1 = Poly.one(p), Poly.zero(p)
    v0, v1 = Poly.zero(p), Poly.one(p)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    scale = pow(r0.lc, p - 2, p)
    return r0 * scale, u0 * scale, v0 * scale


def lcm(a: Poly, b: Poly) -> Poly:
    _same_field(a, b)
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.p)
    return ((a * b) // gcd(a, b)).monic()


def is_separable(f: Poly) -> bool:
    """True iff f has no repeated roots, i.e. gcd(f, f') = 1."""
    if f.is_zero():
        raise ValueError("separability of the zero polynomial is undefined")
    return gcd(f, f.derivative()).degree == 0


# -- irreducibles: enumeration, testing, factorization -------------------


@functools.lru_cache(maxsize=None)
def _irreducibles(p: int, d: int):
    ensure_odd_prime(p)
    if d < 1:
        raise ValueError(f"degree must be >= 1, got {d}")
    if d == 1:
        return tuple(Poly((c, 1), p) for c in range(p))
    out = []
    for tail in itertools.product(range(p), repeat=d):
        g = Poly(tail + (1,), p)
        if _trial_irreducible(g):
            out.append(g)
    return tuple(out)


def _trial_irreducible(g: Poly) -> bool:
    # No monic irreducible factor of degree <= deg(g)/2 means irreducible.
    for e in range(1, g.degree // 2 + 1):
        for q in _irreducibles(g.p, e):
            if (g % q).is_zero():
                return False
    return True


def irreducibles(p: int, d: int):
    """All monic irreducibles of degree d over GF(p), lexicographic."""
    return _irreducibles(p, d)


def is_irreducible(g: Poly) -> bool:
    if not g.is_monic():
        raise NotMonic(f"irreducibility test requires monic input, got {g!r}")
    if g.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    return _trial_irreducible(g)


def factorize(f: Poly):
    """Monic irreducible factors with multiplicities, sorted by
    (degree, coefficient tuple).  The product of the factors times the
    leading coefficient of f reproduces f exactly."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    return list(_factorize_cached(f.coeffs, f.p))


@functools.lru_cache(maxsize=None)
def _factorize_cached(coeffs, p):
    work = Poly(coeffs, p).monic()
    out = []
    d = 1
    while work.degree >= 2 * d:
        for g in _irreducibles(p, d):
            if work.degree < d:
                break
            mult = 0
            q, r = divmod(work, g)
            while r.is_zero():
                mult += 1
                work = q
                q, r = divmod(work, g)
            if mult:
                out.append((g, mult))
        d += 1
    if work.degree >= 1:
        out.append((work, 1))
    out.sort(key=lambda gm: (gm[0].degree, gm[0].coeffs))
    return tuple(out)


def radical(f: Poly) -> Poly:
    """Product of the distinct monic irreducible factors of f."""
    out = Poly.one(f.p)
    for g, _ in factorize(f):
        out = out * g
    return out


@functools.lru_cache(maxsize=None)
def _self_reciprocal_irreducibles(p: int, d: int):
    # Irreducible self-reciprocal polynomials of degree >= 2 are exactly the
    # irreducible palindromes, and their degree is even, so only the first
    # half of the coefficients is free.
    if d < 2 or d % 2:
        raise ValueError(f"self-reciprocal irreducibles need even degree >= 2, got {d}")
    k = d // 2
    out = []
    for mid in itertools.product(range(p), repeat=k):
        coeffs = (1,) + mid + tuple(reversed(mid[:-1])) + (1,)
        g = Poly(coeffs, p)
        if _trial_irreducible(g):
            assert g.is_self_reciprocal()
            out.append(g)
    return tuple(out)


def self_reciprocal_irreducibles(p: int, d: int):
    """All monic irreducible g of even degree d >= 2 with g equal to its
    reciprocal, lexicographic."""
    return _self_reciprocal_irreducibles(p, d)


@functools.lru_cache(maxsize=None)
def _reciprocal_pair_keys(p: int, d: int):
    out = []
    for g in _irreducibles(p, d):
        if g.coeffs[0] == 0:
            continue  # g = t has no reciprocal partner
        r = g.reciprocal()
        if g.coeffs < r.coeffs:
            out.append(g)
    return tuple(out)


def reciprocal_pair_keys(p: int, d: int):
    """Canonical labels of the unordered pairs {g, reciprocal(g)} with
    g irreducible of degree d and g not self-reciprocal: the member with
    the lexicographically smaller coefficient tuple."""
    return _reciprocal_pair_keys(p, d)


# -- closed-form counts ---------------------------------------------------


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    out = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1
    if n > 1:
        out = -out
    return out


def count_irreducibles(p: int, d: int) -> int:
    """Number of monic irreducibles of degree d over GF(p)."""
    ensure_odd_prime(p)
    total = 0
    for e in range(1, d + 1):
        if d % e == 0:
            total += _mobius(e) * p ** (d // e)
    return total // d


def count_self_reciprocal_irreducibles(p: int, d: int) -> int:
    """Number of monic irreducibles of degree d equal to their reciprocal.

    Degree 1 contributes the two unit-eigenvalue polynomials; degree >= 2
    forces an even degree 2k, counted by Moebius inversion of the norm-one
    subgroup sizes of GF(p^{2k}) over GF(p^k)."""
    ensure_odd_prime(p)
    if d == 1:
        return 2
    if d % 2:
        return 0
    k = d // 2
    total = 0
    for e in range(1, k + 1, 2):
        if k % e == 0:
            total += _mobius(e) * (p ** (k // e) - 1)
    return total // (2 * k)


def count_reciprocal_pairs(p: int, d: int) -> int:
    """Number of unordered pairs {g, reciprocal(g)}, g irreducible of
    degree d, g not self-reciprocal and g != t."""
    ensure_odd_prime(p)
    if d == 1:
        return (p - 3) // 2
    return (count_irreducibles(p, d) - count_self_reciprocal_irreducibles(p, d)) // 2

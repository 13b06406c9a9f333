"""Prime fields GF(p) and quotient fields K = GF(p)[t]/(g).

GF is a thin handle: elements are plain ints in [0, p) and the handle
owns the modulus.  ExtField represents K for a monic irreducible g;
elements are fixed-length coefficient tuples of length deg(g).

When g equals its reciprocal and deg(g) >= 2, the map sending the class
of t to its inverse extends to a field automorphism of K of order 2
(``bar``).  Its fixed elements form the subfield of index 2, the norm of
x is x*bar(x), and solve_norm inverts the norm map by a deterministic
sweep (the norm is onto the fixed subfield because K is finite).
"""

from __future__ import annotations

import itertools
import random

from .errors import DegreeOne, ModulusMismatch, NoSolution, NotIrreducible, NotSelfReciprocal
from .fpoly import Poly, ensure_odd_prime, is_irreducible, xgcd

# Exhaustive norm search is used up to this field size; beyond it a seeded
# random search runs first, with the sweep as fallback.
NORM_SEARCH_CAP = 10 ** 6


class GF:
    """Arithmetic handle for GF(p), p an odd prime."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        ensure_odd_prime(p)
        self.p = p

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def element(self, a: int) -> int:
        return int(a) % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return a * self.inv(b) % self.p


class ExtField:
    """K = GF(p)[t]/(g) for monic irreducible g; elements are tuples."""

    __slots__ = ("p", "modulus", "degree", "size", "_tinv")

    def __init__(self, p: int, modulus: Poly):
        ensure_odd_prime(p)
        if modulus.p != p:
            raise ModulusMismatch(f"modulus over GF({modulus.p}), field over GF({p})")
        if not modulus.is_monic() or modulus.degree < 1:
            raise NotIrreducible(f"modulus must be monic of degree >= 1, got {modulus!r}")
        if not is_irreducible(modulus):
            raise NotIrreducible(f"{modulus!r} is reducible")
        self.p = p
        self.modulus = modulus
        self.degree = modulus.degree
        self.size = p ** self.degree
        if self.degree >= 2 and modulus.is_self_reciprocal():
            self._tinv = self.inv(self.t())
        else:
            self._tinv = None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash(("ExtField", self.p, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"ExtField(GF({self.p})[t]/({self.modulus}))"

    # -- element construction -------------------------------------------

    def elem(self, coeffs) -> tuple:
        """Reduce an int or a coefficient sequence into K."""
        if isinstance(coeffs, int):
            coeffs = (coeffs,)
        f = Poly(coeffs, self.p) % self.modulus
        return self._pad(f)

    def _pad(self, f: Poly) -> tuple:
        return f.coeffs + (0,) * (self.degree - len(f.coeffs))

    def to_poly(self, x: tuple) -> Poly:
        return Poly(x, self.p)

    def zero(self) -> tuple:
        return (0,) * self.degree

    def one(self) -> tuple:
        return self.elem(1)

    def t(self) -> tuple:
        return self.elem((0, 1))

    def elements(self):
        """All of K in lexicographic coefficient order."""
        for coeffs in itertools.product(range(self.p), repeat=self.degree):
            yield coeffs

    # -- ring operations -------------------------------------------------

    def add(self, x: tuple, y: tuple) -> tuple:
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x: tuple, y: tuple) -> tuple:
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x: tuple) -> tuple:
        p = self.p
        return tuple((-a) % p for a in x)

    def mul(self, x: tuple, y: tuple) -> tuple:
        prod = self.to_poly(x) * self.to_poly(y)
        return self._pad(prod % self.modulus)

    def inv(self, x: tuple) -> tuple:
        f = self.to_poly(x)
        if f.is_zero():
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        g, u, _ = xgcd(f, self.modulus)
        if g.degree != 0:
            raise NotIrreducible(f"{self.modulus!r} is reducible")
        return self._pad(u % self.modulus)

    def div(self, x: tuple, y: tuple) -> tuple:
        return self.mul(x, self.inv(y))

    def is_zero(self, x: tuple) -> bool:
        return not any(x)

    # -- the involution ----------------------------------------------------

    def has_bar(self) -> bool:
        return self._tinv is not None

    def _require_bar(self) -> tuple:
        if self._tinv is None:
            if self.degree == 1:
                raise DegreeOne("the involution is undefined for a degree-1 modulus")
            raise NotSelfReciprocal(
                f"{self.modulus!r} is not self-reciprocal, no involution"
            )
        return self._tinv

    def bar(self, x: tuple) -> tuple:
        """Image of x under the order-2 automorphism sending t to 1/t."""
        tinv = self._require_bar()
        acc = self.zero()
        for c in reversed(x):
            acc = self.add(self.mul(acc, tinv), self.elem(c))
        return acc

    def is_fixed(self, x: tuple) -> bool:
        return self.bar(x) == tuple(x)

    def fixed_field_order(self) -> int:
        self._require_bar()
        return self.p ** (self.degree // 2)

    def norm(self, x: tuple) -> tuple:
        """x * bar(x); always lands in the fixed subfield."""
        return self.mul(x, self.bar(x))

    def solve_norm(self, a, seed: int = 0) -> tuple:
        """Some c with c*bar(c) = a, for nonzero a fixed by bar.

        Deterministic lexicographic sweep for |K| within NORM_SEARCH_CAP;
        beyond that a seeded random search runs first and the sweep is
        the fallback.  The result is postverified before returning."""
        a = self.elem(a)
        self._require_bar()
        if self.is_zero(a):
            raise NoSolution("norm equation needs a nonzero right-hand side")
        if not self.is_fixed(a):
            raise NoSolution(f"{a!r} is not fixed by the involution")
        if self.size > NORM_SEARCH_CAP:
            rng = random.Random(seed)
            for _ in range(64 * self.degree):
                c = tuple(rng.randrange(self.p) for _ in range(self.degree))
                if any(c) and self.norm(c) == a:
                    return c
        for c in self.elements():
            if any(c) and self.norm(c) == a:
                return c
        raise NoSolution(f"no norm preimage of {a!r} found")

"""Dense exact linear algebra over GF(p).

Mat wraps a read-only int64 numpy array together with its modulus; all
operations reduce mod p and are exact.  Mixing two moduli is a hard
error, never a coercion.  Dimensions are capped at MAX_DIM.

Conventions fixed here and relied on repo-wide:

* companion(g) has ones on the superdiagonal and the negated
  coefficients of g as its last row;
* nullspace returns one basis vector per free column of the reduced
  echelon form, free columns in increasing order;
* the characteristic polynomial comes from a similarity reduction to
  Hessenberg form followed by the leading-minor recurrence, which only
  needs field division and so stays exact in small characteristic;
* the minimal polynomial is the lcm of the per-basis-vector Krylov
  annihilators.

The matrix text format is: line 1 ``p <prime>``, line 2
``<rows> <cols>``, then one whitespace-separated row per line with
entries in [0, p).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fpoly
from .errors import (
    DimensionCap,
    DimensionMismatch,
    ModulusMismatch,
    NotMonic,
    NotSemisimple,
    SingularInput,
    SingularMatrix,
)
from .fpoly import Poly, ensure_odd_prime

MAX_DIM = 64
# int64 products n * (p-1)^2 must not overflow.
MAX_MODULUS_BITS = 28


def _check_modulus(p: int) -> int:
    ensure_odd_prime(p)
    if p.bit_length() > MAX_MODULUS_BITS:
        raise DimensionCap(f"modulus {p} too large for exact int64 arithmetic")
    return p


class Mat:
    """Immutable dense matrix over GF(p)."""

    __slots__ = ("a", "p")

    def __init__(self, entries, p: int):
        _check_modulus(p)
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise DimensionMismatch(f"matrix needs 2 dimensions, got {arr.ndim}")
        if arr.size and max(arr.shape) > MAX_DIM:
            raise DimensionCap(f"dimension {max(arr.shape)} exceeds cap {MAX_DIM}")
        arr = arr % p
        arr.setflags(write=False)
        self.a = arr
        self.p = p

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int, p: int) -> "Mat":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "Mat":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    # -- structure ----------------------------------------------------------

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self) -> int:
        if not self.is_square():
            raise DimensionMismatch(f"square matrix required, got {self.a.shape}")
        return self.rows

    def _pair(self, other) -> "Mat":
        if not isinstance(other, Mat):
            raise TypeError(f"expected Mat, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatch(f"GF({self.p}) vs GF({other.p})")
        return other

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and other.p == self.p
            and other.a.shape == self.a.shape
            and np.array_equal(other.a, self.a)
        )

    def __hash__(self):
        return hash(self.key())

    def key(self) -> tuple:
        """Canonical hashable encoding."""
        return (self.p, self.a.shape, self.a.tobytes())

    def __repr__(self) -> str:
        return f"Mat({self.a.tolist()}, p={self.p})"

    def tolist(self):
        return [[int(v) for v in row] for row in self.a]

    # -- arithmetic ----------------------------------------------------------

    def __matmul__(self, other) -> "Mat":
        other = self._pair(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.a.shape} @ {other.a.shape}")
        return Mat(self.a @ other.a, self.p)

    def __add__(self, other) -> "Mat":
        other = self._pair(other)
        if self.a.shape != other.a.shape:
            raise DimensionMismatch(f"{self.a.shape} + {other.a.shape}")
        return Mat(self.a + other.a, self.p)

    def __sub__(self, other) -> "Mat":
        other = self._pair(other)
        if self.a.shape != other.a.shape:
            raise DimensionMismatch(f"{self.a.shape} - {other.a.shape}")
        return Mat(self.a - other.a, self.p)

    def __neg__(self) -> "Mat":
        return Mat(-self.a, self.p)

    def __mul__(self, scalar: int) -> "Mat":
        if not isinstance(scalar, int):
            return NotImplemented
        return Mat(self.a * (scalar % self.p), self.p)

    __rmul__ = __mul__

    @property
    def T(self) -> "Mat":
        return Mat(self.a.T, self.p)

    def transpose(self) -> "Mat":
        return self.T

    def is_zero(self) -> bool:
        return not self.a.any()

    def is_skew(self) -> bool:
        self._require_square()
        return np.array_equal(self.a, (-self.a.T) % self.p)

    def is_symmetric(self) -> bool:
        self._require_square()
        return np.array_equal(self.a, self.a.T)

    def det(self) -> int:
        n = self._require_square()
        p = self.p
        A = self.a.copy()
        d = 1
        for c in range(n):
            piv = None
            for i in range(c, n):
                if A[i, c]:
                    piv = i
                    break
            if piv is None:
                return 0
            if piv != c:
                A[[c, piv]] = A[[piv, c]]
                d = -d
            d = d * int(A[c, c]) % p
            inv = pow(int(A[c, c]), p - 2, p)
            for i in range(c + 1, n):
                if A[i, c]:
                    A[i, c:] = (A[i, c:] - int(A[i, c]) * inv % p * A[c, c:]) % p
        return d % p

    def inv(self) -> "Mat":
        n = self._require_square()
        aug = np.hstack([self.a, np.eye(n, dtype=np.int64)])
        R, piv = _rref(aug, self.p)
        if piv != list(range(n)):
            raise SingularMatrix(f"{self!r} is singular")
        return Mat(R[:, n:], self.p)

    def rank(self) -> int:
        return len(_rref(self.a, self.p)[1])


# -- echelon machinery on raw arrays ---------------------------------------


def _rref(M: np.ndarray, p: int):
    """Reduced row echelon form over GF(p); returns (R, pivot_columns)."""
    A = np.array(M, dtype=np.int64) % p
    rows, cols = A.shape
    piv_cols = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            if A[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        col = A[:, c].copy()
        col[r] = 0
        A = (A - np.outer(col, A[r])) % p
        piv_cols.append(c)
        r += 1
    return A, piv_cols


def nullspace_array(M: np.ndarray, p: int):
    """Right-nullspace basis of M over GF(p), reduced echelon convention:
    one vector per free column, free columns ascending."""
    A = np.asarray(M, dtype=np.int64)
    rows, cols = A.shape
    R, piv_cols = _rref(A, p)
    piv_set = set(piv_cols)
    basis = []
    for f in range(cols):
        if f in piv_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for r, pc in enumerate(piv_cols):
            v[pc] = (-int(R[r, f])) % p
        basis.append(v)
    return basis


def nullspace(a: Mat):
    """Nullspace basis of a Mat, as 1-D int64 arrays."""
    return nullspace_array(a.a, a.p)


def solve(a: Mat, b: Mat) -> Mat:
    """One solution x of a @ x = b (free variables set to 0)."""
    b = a._pair(b)
    if a.rows != b.rows:
        raise DimensionMismatch(f"{a.a.shape} x = {b.a.shape}")
    p = a.p
    aug = np.hstack([a.a, b.a])
    R, piv = _rref(aug, p)
    n = a.cols
    if any(c >= n for c in piv):
        raise SingularMatrix("inconsistent linear system")
    x = np.zeros((n, b.cols), dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, n:]
    return Mat(x, p)


def block_diag(mats) -> Mat:
    mats = list(mats)
    if not mats:
        raise ValueError("block_diag of nothing")
    p = mats[0].p
    for m in mats[1:]:
        mats[0]._pair(m)
    rows = sum(m.rows for m in mats)
    cols = sum(m.cols for m in mats)
    out = np.zeros((rows, cols), dtype=np.int64)
    r = c = 0
    for m in mats:
        out[r : r + m.rows, c : c + m.cols] = m.a
        r += m.rows
        c += m.cols
    return Mat(out, p)


# -- polynomials of matrices -------------------------------------------------


def companion(g: Poly) -> Mat:
    """Companion matrix: superdiagonal ones, last row = -coefficients."""
    if not g.is_monic() or g.degree < 1:
        raise NotMonic(f"companion needs a monic polynomial of degree >= 1, got {g!r}")
    d = g.degree
    C = np.zeros((d, d), dtype=np.int64)
    for i in range(d - 1):
        C[i, i + 1] = 1
    for j in range(d):
        C[d - 1, j] = (-g.coeffs[j]) % g.p
    return Mat(C, g.p)


def poly_at(g: Poly, x: Mat) -> Mat:
    """Evaluate g at a square matrix by Horner's rule."""
    n = x._require_square()
    if g.p != x.p:
        raise ModulusMismatch(f"GF({g.p}) vs GF({x.p})")
    p = x.p
    acc = np.zeros((n, n), dtype=np.int64)
    eye = np.eye(n, dtype=np.int64)
    for c in reversed(g.coeffs):
        acc = (acc @ x.a + c * eye) % p
    return Mat(acc, p)


def charpoly(x: Mat) -> Poly:
    """Monic characteristic polynomial det(tI - x)."""
    n = x._require_square()
    p = x.p
    H = x.a.copy()
    # similarity reduction to upper Hessenberg with exact pivoting
    for j in range(n - 2):
        piv = None
        for i in range(j + 1, n):
            if H[i, j]:
                piv = i
                break
        if piv is None:
            continue
        if piv != j + 1:
            H[[j + 1, piv]] = H[[piv, j + 1]]
            H[:, [j + 1, piv]] = H[:, [piv, j + 1]]
        inv = pow(int(H[j + 1, j]), p - 2, p)
        for i in range(j + 2, n):
            if H[i, j]:
                f = int(H[i, j]) * inv % p
                H[i] = (H[i] - f * H[j + 1]) % p
                H[:, j + 1] = (H[:, j + 1] + f * H[:, i]) % p
    # leading-minor recurrence for det(tI - H)
    polys = [Poly.one(p)]
    for r in range(1, n + 1):
        t_minus = Poly(((-int(H[r - 1, r - 1])) % p, 1), p)
        acc = t_minus * polys[r - 1]
        sub = 1
        for i in range(1, r):
            sub = sub * int(H[r - i, r - i - 1]) % p
            if sub == 0:
                break
            coef = int(H[r - 1 - i, r - 1]) * sub % p
            if coef:
                acc = acc - coef * polys[r - 1 - i]
        polys.append(acc)
    return polys[n]


def _dependency(cols: np.ndarray, w: np.ndarray, p: int):
    """Coefficients c with cols @ c = w, or None if w is independent."""
    aug = np.hstack([cols, w.reshape(-1, 1)])
    R, piv = _rref(aug, p)
    k = cols.shape[1]
    if any(c == k for c in piv):
        return None
    x = np.zeros(k, dtype=np.int64)
    for r, pc in enumerate(piv):
        x[pc] = R[r, k]
    return x


def minpoly(x: Mat) -> Poly:
    """Monic minimal polynomial, via Krylov annihilators per basis vector."""
    n = x._require_square()
    p = x.p
    result = Poly.one(p)
    for i in range(n):
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        cols = v.reshape(-1, 1)
        while True:
            w = (x.a @ cols[:, -1]) % p
            dep = _dependency(cols, w, p)
            if dep is not None:
                k = cols.shape[1]
                ann = Poly(tuple((-int(dep[j])) % p for j in range(k)) + (1,), p)
                break
            cols = np.hstack([cols, w.reshape(-1, 1)])
        result = fpoly.lcm(result, ann)
        if result.degree == n:
            break
    return result


# -- semisimple canonical form -----------------------------------------------


@dataclass(frozen=True)
class CanonicalForm:
    """Block data (irreducible factor, multiplicity) in (degree, lex)
    order, and a transform P with P^-1 x P the block diagonal of
    companion matrices, each factor repeated per multiplicity."""

    blocks: tuple
    transform: Mat


class _SpanTracker:
    """Incremental reduced echelon basis for membership tests."""

    def __init__(self, p: int):
        self.p = p
        self.rows = []  # (pivot index, reduced row), mutually reduced

    def _reduce(self, v: np.ndarray) -> np.ndarray:
        v = v.copy() % self.p
        for piv, row in self.rows:
            if v[piv]:
                v = (v - int(v[piv]) * row) % self.p
        return v

    def contains(self, v: np.ndarray) -> bool:
        return not self._reduce(v).any()

    def add(self, v: np.ndarray) -> bool:
        r = self._reduce(v)
        nz = np.flatnonzero(r)
        if nz.size == 0:
            return False
        piv = int(nz[0])
        r = r * pow(int(r[piv]), self.p - 2, self.p) % self.p
        for i, (pv, row) in enumerate(self.rows):
            if row[piv]:
                self.rows[i] = (pv, (row - int(row[piv]) * r) % self.p)
        self.rows.append((piv, r))
        return True


def _cyclic_columns(g: Poly, x: Mat, v: np.ndarray):
    """Columns of the basis in which x acts on the cyclic space of v as
    companion(g): partial Horner evaluations of g at x applied to v."""
    p = x.p
    d = g.degree
    w = v % p
    outs = [w]
    for k in range(1, d):
        w = (x.a @ w + g.coeffs[d - k] * v) % p
        outs.append(w)
    outs.reverse()
    return outs


def semisimple_canonical(x: Mat) -> CanonicalForm:
    """Split an invertible matrix with separable minimal polynomial into
    companion blocks, with an explicit similarity transform."""
    n = x._require_square()
    p = x.p
    c = charpoly(x)
    if c[0] == 0:
        raise SingularInput("t divides the characteristic polynomial")
    mp = minpoly(x)
    if not fpoly.is_separable(mp):
        raise NotSemisimple(f"minimal polynomial {mp} is not separable")
    factors = fpoly.factorize(c)
    cols = []
    blocks = []
    comp = []
    for g, mult in factors:
        gx = poly_at(g, x)
        span = _SpanTracker(p)
        copies = 0
        for v in nullspace_array(gx.a, p):
            if span.contains(v):
                continue
            chunk = _cyclic_columns(g, x, v)
            for u in chunk:
                span.add(u)
            cols.extend(chunk)
            copies += 1
        assert copies == mult, (g, copies, mult)
        blocks.append((g, copies))
        comp.extend([companion(g)] * copies)
    P = Mat(np.stack(cols, axis=1), p)
    target = block_diag(comp)
    assert P.inv() @ x @ P == target, "canonical form round-trip failed"
    return CanonicalForm(tuple(blocks), P)


# -- text format ---------------------------------------------------------------


def format_matrix_text(x: Mat) -> str:
    lines = [f"p {x.p}", f"{x.rows} {x.cols}"]
    width = len(str(x.p - 1))
    for row in x.a:
        lines.append(" ".join(str(int(v)).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def read_matrix_text(text: str) -> Mat:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 2:
        raise ValueError("matrix text needs a modulus line and a shape line")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "p":
        raise ValueError(f"first line must be 'p <prime>', got {lines[0]!r}")
    p = int(head[1])
    shape = lines[1].split()
    if len(shape) != 2:
        raise ValueError(f"second line must be '<rows> <cols>', got {lines[1]!r}")
    rows, cols = int(shape[0]), int(shape[1])
    if len(lines) != 2 + rows:
        raise ValueError(f"expected {rows} rows, got {len(lines) - 2}")
    entries = []
    for ln in lines[2:]:
        vals = [int(v) for v in ln.split()]
        if len(vals) != cols:
            raise ValueError(f"expected {cols} entries per row, got {len(vals)}")
        if any(v < 0 or v >= p for v in vals):
            raise ValueError(f"entries must lie in [0, {p}), got {vals}")
        entries.append(vals)
    return Mat(entries, p)

"""Exact rational scalars and small dense matrices.

Every value here is immutable. Matrices hold ``Fraction`` entries in row-major
tuples, and all elimination is done with exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrix(ArithmeticError):
    """Raised when an inverse or a unique solve is requested for a singular matrix."""


def to_rational(value: object) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction.

    Floats are rejected on purpose: they would silently smuggle rounding in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational literal")
        return Fraction(text)
    raise TypeError(f"cannot read {type(value).__name__} as an exact rational")


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def vec(values: Iterable[object]) -> Vector:
    return tuple(to_rational(x) for x in values)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple((a + b if b else a) if a else b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple((a - b if b else a) if a else -b for a, b in zip(u, v))


def vec_scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    if not c:
        return (ZERO,) * len(u)
    return tuple(c * a if a else ZERO for a in u)


def is_zero_vec(u: Sequence[Fraction]) -> bool:
    return not any(u)


@dataclass(frozen=True)
class Matrix:
    """Dense rational matrix. ``rows[i][j]`` is the entry in row i, column j."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    def __init__(self, rows: Iterable[Iterable[object]], ncols: int | None = None):
        data = tuple(tuple(to_rational(x) for x in r) for r in rows)
        width = ncols if ncols is not None else (len(data[0]) if data else 0)
        if any(len(r) != width for r in data):
            raise ValueError("ragged matrix rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "ncols", width)

    @classmethod
    def _raw(cls, rows: tuple[tuple[Fraction, ...], ...], ncols: int) -> "Matrix":
        """Trusted constructor for rows already made of Fractions."""
        m = object.__new__(cls)
        object.__setattr__(m, "rows", rows)
        object.__setattr__(m, "ncols", ncols)
        return m

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(((ONE if i == j else ZERO) for j in range(n)) for i in range(n))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(((ZERO,) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], nrows: int) -> "Matrix":
        return cls(((columns[j][i] for j in range(len(columns))) for i in range(nrows)), len(columns))

    @classmethod
    def _raw_columns(cls, columns: Sequence[Vector], nrows: int) -> "Matrix":
        return cls._raw(tuple(tuple(c[i] for c in columns) for i in range(nrows)), len(columns))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        i, j = idx
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self.rows), self.nrows) if self.rows else Matrix.zeros(self.ncols, 0)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        nz = [(j, b) for j, b in enumerate(v) if b]
        out = []
        for r in self.rows:
            acc = ZERO
            for j, b in nz:
                a = r[j]
                if a:
                    acc += a * b
            out.append(acc)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        # row-by-row accumulation that skips zero entries; structure matrices are sparse
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        width = other.ncols
        orows = other.rows
        out = []
        for r in self.rows:
            acc = [ZERO] * width
            for k, a in enumerate(r):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
            out.append(tuple(acc))
        return Matrix._raw(tuple(out), width)

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix._raw(tuple(vec_sub(a, b) for a, b in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-x for x in r) for r in self.rows), self.ncols)

    def scale(self, c: object) -> "Matrix":
        q = to_rational(c)
        return Matrix._raw(tuple(vec_scale(q, r) for r in self.rows), self.ncols)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]


def _rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    rows, pivots = _rref(m.rows, m.ncols)
    return Matrix(rows, m.ncols), pivots


def mat_rank(m: Matrix) -> int:
    return len(_rref(m.rows, m.ncols)[1])


def mat_kernel(m: Matrix) -> list[Vector]:
    """Basis of {v : m v = 0}, one vector per free column, in column order."""
    rows, pivots = _rref(m.rows, m.ncols)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def mat_det(m: Matrix) -> Fraction:
    if m.nrows != m.ncols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.rows]
    n = len(a)
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            a[c], a[pivot] = a[pivot], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def mat_inverse(m: Matrix) -> Matrix:
    n = m.nrows
    if n != m.ncols:
        raise ValueError("inverse of a non-square matrix")
    aug = [list(r) + [ONE if i == j else ZERO for j in range(n)] for i, r in enumerate(m.rows)]
    rows, pivots = _rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix has zero determinant")
    return Matrix((r[n:] for r in rows), n)


def solve(m: Matrix, b: Sequence[Fraction]) -> Vector:
    """Unique solution of m x = b for square invertible m."""
    return mat_inverse(m).apply(b)


def span_basis(vectors: Iterable[Sequence[Fraction]], dim: int) -> list[Vector]:
    """Echelon basis of the span; the canonical representation of a subspace."""
    rows, _ = _rref([tuple(v) for v in vectors], dim)
    return [tuple(r) for r in rows]


def in_span(basis: Sequence[Vector], v: Sequence[Fraction], dim: int) -> bool:
    return len(span_basis(list(basis) + [tuple(v)], dim)) == len(span_basis(basis, dim))


def same_subspace(a: Sequence[Vector], b: Sequence[Vector], dim: int) -> bool:
    return span_basis(a, dim) == span_basis(b, dim)


def subspace_contains(big: Sequence[Vector], small: Sequence[Vector], dim: int) -> bool:
    return len(span_basis(list(big) + list(small), dim)) == len(span_basis(big, dim))


def intersect(a: Sequence[Vector], b: Sequence[Vector], dim: int) -> list[Vector]:
    """Echelon basis of span(a) ∩ span(b), via the kernel of [a | -b]."""
    a = span_basis(a, dim)
    b = span_basis(b, dim)
    if not a or not b:
        return []
    cols = list(a) + [vec_scale(-ONE, v) for v in b]
    ker = mat_kernel(Matrix.from_columns(cols, dim))
    out = []
    for k in ker:
        w = zero_vec(dim)
        for coeff, v in zip(k[: len(a)], a):
            if coeff:
                w = vec_add(w, vec_scale(coeff, v))
        out.append(w)
    return span_basis(out, dim)


def coordinates(basis: Sequence[Vector], v: Sequence[Fraction], dim: int) -> Vector:
    """Coordinates of v in a linearly independent list; raises if v is outside the span."""
    m = Matrix.from_columns(basis, dim)
    aug = [list(r) + [x] for r, x in zip(m.rows, v)]
    rows, pivots = _rref(aug, len(basis) + 1)
    if len(basis) in pivots:
        raise ValueError("vector is not in the span")
    out = [ZERO] * len(basis)
    for row, p in zip(rows, pivots):
        out[p] = row[-1]
    return tuple(out)


def char_poly(m: Matrix) -> list[Fraction]:
    """Coefficients c_0..c_n of det(xI - m) by the Faddeev-LeVerrier recursion."""
    n = m.nrows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    acc = Matrix.zeros(n, n)
    ident = Matrix.identity(n)
    for k in range(1, n + 1):
        acc = (m @ acc) + ident.scale(coeffs[n - k + 1])
        prod = m @ acc
        coeffs[n - k] = -sum((prod.rows[i][i] for i in range(n)), ZERO) / k
    return coeffs


def _divisors(k: int) -> list[int]:
    k = abs(k)
    small = [d for d in range(1, int(k**0.5) + 1) if k % d == 0]
    return sorted(set(small + [k // d for d in small]))


def rational_roots(coeffs: Sequence[Fraction]) -> list[Fraction]:
    """Distinct rational roots of sum c_i x^i, by the rational root theorem."""
    c = [to_rational(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) <= 1:
        return []
    roots = set()
    while c[0] == 0:
        roots.add(ZERO)
        c = c[1:]
        if len(c) == 1:
            return sorted(roots)
    scale = 1
    for x in c:
        scale = scale * x.denominator // gcd(scale, x.denominator)
    ints = [int(x * scale) for x in c]
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum((a * cand**i for i, a in enumerate(ints)), ZERO) == 0:
                    roots.add(cand)
    return sorted(roots)

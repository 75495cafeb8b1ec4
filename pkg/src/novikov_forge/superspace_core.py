"""Z2-graded spaces, homogeneous bilinear forms and homogeneous endomorphisms.

Gram matrices store the raw pairings ``gram[i][j] = <v_i, v_j>``. Every sign
rule is written out where it is used rather than folded into the matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact_core import (
    ONE,
    ZERO,
    Matrix,
    Vector,
    mat_det,
    mat_inverse,
    mat_kernel,
    span_basis,
    to_rational,
)


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


class NonHomogeneous(ValueError):
    """A sign rule was requested for a vector mixing both parities."""


class ParityMismatch(ValueError):
    """An object has the wrong parity for the operation."""


@dataclass(frozen=True)
class SuperSpace:
    parity: tuple[int, ...]

    def __init__(self, parity: Iterable[int]):
        p = tuple(int(x) for x in parity)
        if any(x not in (0, 1) for x in p):
            raise ValueError("parities must be 0 or 1")
        object.__setattr__(self, "parity", p)

    @property
    def dim(self) -> int:
        return len(self.parity)

    @property
    def sdim(self) -> tuple[int, int]:
        odd = sum(self.parity)
        return self.dim - odd, odd

    def vector_parity(self, v: Sequence[Fraction]) -> int | None:
        """Parity of a homogeneous vector; None for the zero vector."""
        seen = {self.parity[i] for i, x in enumerate(v) if x}
        if len(seen) > 1:
            raise NonHomogeneous("vector mixes even and odd components")
        return seen.pop() if seen else None

    def project(self, v: Sequence[Fraction], p: int) -> Vector:
        return tuple(x if self.parity[i] == p else ZERO for i, x in enumerate(v))

    def flipped(self) -> "SuperSpace":
        return SuperSpace(1 - p for p in self.parity)

    def __add__(self, other: "SuperSpace") -> "SuperSpace":
        return SuperSpace(self.parity + other.parity)


@dataclass(frozen=True)
class Endo:
    """Homogeneous endomorphism. ``matrix[k][i]`` is the v_k-coefficient of f(v_i)."""

    space: SuperSpace
    matrix: Matrix
    parity: int

    def __post_init__(self) -> None:
        n = self.space.dim
        if self.matrix.shape != (n, n):
            raise ValueError("endomorphism matrix has the wrong size")
        par = self.space.parity
        for k in range(n):
            for i in range(n):
                if self.matrix.rows[k][i] and par[k] != (par[i] + self.parity) % 2:
                    raise ParityMismatch(f"entry ({k},{i}) breaks parity {self.parity}")

    @classmethod
    def zero(cls, space: SuperSpace, parity: int = 0) -> "Endo":
        return cls(space, Matrix.zeros(space.dim, space.dim), parity)

    @classmethod
    def identity(cls, space: SuperSpace) -> "Endo":
        return cls(space, Matrix.identity(space.dim), 0)

    @classmethod
    def from_rows(cls, space: SuperSpace, rows: Iterable[Iterable[object]], parity: int) -> "Endo":
        return cls(space, Matrix(rows, space.dim), parity)

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        return self.matrix.apply(v)

    def __matmul__(self, other: "Endo") -> "Endo":
        return Endo(self.space, self.matrix @ other.matrix, (self.parity + other.parity) % 2)

    def __add__(self, other: "Endo") -> "Endo":
        return _sum_endo(self, other, ONE)

    def __sub__(self, other: "Endo") -> "Endo":
        return _sum_endo(self, other, -ONE)

    def __neg__(self) -> "Endo":
        return Endo(self.space, -self.matrix, self.parity)

    def scale(self, c: object) -> "Endo":
        return Endo(self.space, self.matrix.scale(c), self.parity)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def is_nilpotent(self) -> bool:
        power = self.matrix
        for _ in range(self.space.dim):
            if power.is_zero():
                return True
            power = power @ self.matrix
        return power.is_zero()


def _sum_endo(a: Endo, b: Endo, c: Fraction) -> Endo:
    if a.is_zero():
        return b.scale(c)
    if b.is_zero():
        return a
    if a.parity != b.parity:
        raise ParityMismatch("sum of endomorphisms of different parity")
    return Endo(a.space, a.matrix + b.matrix.scale(c), a.parity)


def supercommutator(f: Endo, g: Endo) -> Endo:
    """[f, g] = f g - (-1)^{|f||g|} g f."""
    prod = (f.matrix @ g.matrix) - (g.matrix @ f.matrix).scale(sign(f.parity * g.parity))
    return Endo(f.space, prod, (f.parity + g.parity) % 2)


def parity_word(p: int) -> str:
    return "odd" if p else "even"


def parse_parity(word: object) -> int:
    if word in ("even", 0, "0"):
        return 0
    if word in ("odd", 1, "1"):
        return 1
    raise ValueError(f"unknown parity {word!r}")


@dataclass(frozen=True)
class HomBilinearForm:
    space: SuperSpace
    gram: Matrix
    parity: int

    def __post_init__(self) -> None:
        if self.gram.shape != (self.space.dim, self.space.dim):
            raise ValueError("Gram matrix has the wrong size")
        if self.parity not in (0, 1):
            raise ValueError("form parity must be 0 or 1")

    @classmethod
    def from_rows(cls, space: SuperSpace, rows: Iterable[Iterable[object]], parity: int) -> "HomBilinearForm":
        return cls(space, Matrix(rows, space.dim), parity)

    def __call__(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        g = self.gram.rows
        total = ZERO
        for i, a in enumerate(u):
            if a:
                row = g[i]
                total += a * sum((row[j] * b for j, b in enumerate(v) if b), ZERO)
        return total

    def restrict(self, basis: Sequence[Vector]) -> "HomBilinearForm":
        """The form on the span of a homogeneous basis, in that basis."""
        space = SuperSpace(self.space.vector_parity(b) or 0 for b in basis)
        return HomBilinearForm(space, Matrix([[self(a, b) for b in basis] for a in basis], len(basis)), self.parity)


@dataclass
class FormReport:
    ok: bool
    violation: str | None = None
    indices: tuple[int, int] | None = None

    def __bool__(self) -> bool:
        return self.ok


def check_form(space: SuperSpace, gram: Matrix, form_parity: int) -> FormReport:
    """Grading, super-symmetry and non-degeneracy, in that order."""
    n = space.dim
    if gram.shape != (n, n):
        return FormReport(False, "shape", None)
    p = space.parity
    g = gram.rows
    for i in range(n):
        for j in range(n):
            if g[i][j] and (p[i] + p[j]) % 2 != form_parity:
                return FormReport(False, "grading", (i, j))
    for i in range(n):
        for j in range(n):
            if g[i][j] != sign(p[i] * p[j]) * g[j][i]:
                return FormReport(False, "super-symmetry", (i, j))
    if n and mat_det(gram) == 0:
        return FormReport(False, "non-degeneracy", None)
    return FormReport(True)


def check_parity_dimension(form: HomBilinearForm) -> bool:
    even, odd = form.space.sdim
    if form.parity == 0:
        return odd % 2 == 0
    return even == odd


def orthogonal_complement(form: HomBilinearForm, subspace: Sequence[Sequence[Fraction]]) -> list[Vector]:
    """Echelon basis of {x : <v, x> = 0 for every v in the subspace}."""
    n = form.space.dim
    basis = span_basis(subspace, n)
    if not basis:
        return span_basis([tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)], n)
    rows = [form.gram.transpose().apply(v) for v in basis]
    return span_basis(mat_kernel(Matrix(rows, n)), n)


def adjoint(form: HomBilinearForm, f: Endo) -> Endo:
    """f* with <f(u), v> = (-1)^{|f||u|} <u, f*(v)>, i.e. G f* = S f^T G."""
    p = form.space.parity
    g = form.gram
    s_ft = Matrix(
        (tuple(sign(f.parity * p[i]) * x for x in row) for i, row in enumerate(f.matrix.transpose().rows)),
        form.space.dim,
    )
    return Endo(form.space, mat_inverse(g) @ s_ft @ g, f.parity)


def is_antisymmetric(form: HomBilinearForm, f: Endo) -> bool:
    return adjoint(form, f).matrix == (-f).matrix


def is_symmetric(form: HomBilinearForm, f: Endo) -> bool:
    return adjoint(form, f).matrix == f.matrix


def gram_from_terms(space: SuperSpace, terms: Iterable[tuple[object, int, int]]) -> Matrix:
    """Raw Gram matrix of a sum of c * x*⊗x* (x == y) and c * x*⊙y* (x != y) terms.

    Uses x*⊙y* = x*⊗y* + (-1)^{|x||y|} y*⊗x* and <x*⊗y*, u⊗v> = (-1)^{|y||u|} x*(u) y*(v):
    a diagonal term adds (-1)^{|x|} c to <x, x>; a symmetrised term adds
    (-1)^{|x||y|} c to <x, y> and c to <y, x>.
    """
    n = space.dim
    p = space.parity
    g = [[ZERO] * n for _ in range(n)]
    for coeff, x, y in terms:
        c = to_rational(coeff)
        if x == y:
            g[x][x] += sign(p[x]) * c
        else:
            g[x][y] += sign(p[x] * p[y]) * c
            g[y][x] += c
    return Matrix(g, n)

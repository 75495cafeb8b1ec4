"""Superalgebras given by structure constants, and the graded identities they may satisfy.

All identity checkers run over basis tuples in lexicographic order; by
multilinearity that is a complete test. A failing report carries the first
offending tuple and the nonzero residual.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterable, Mapping, Sequence

from .exact_core import (
    ZERO,
    Matrix,
    Vector,
    is_zero_vec,
    mat_kernel,
    span_basis,
    subspace_contains,
    to_rational,
    unit_vec,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .superspace_core import Endo, ParityMismatch, SuperSpace, sign, supercommutator


class NotLie(ValueError):
    """The bracket fails graded antisymmetry or the super Jacobi identity."""


@dataclass
class IdentityReport:
    name: str
    passed: bool
    witness: tuple | None = None
    residual: object = None
    children: list["IdentityReport"] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.passed

    def first_failure(self) -> "IdentityReport | None":
        """Deepest failing report, which names the identity that actually broke."""
        if self.passed:
            return None
        for child in self.children:
            if not child.passed:
                return child.first_failure()
        return self

    def to_dict(self) -> dict:
        out: dict = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.residual is not None:
            out["residual"] = _jsonable(self.residual)
        if self.children:
            out["checks"] = [c.to_dict() for c in self.children]
        return out


def _jsonable(x: object) -> object:
    from .exact_core import format_rational

    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, Matrix):
        return x.to_strings()
    if isinstance(x, (tuple, list)):
        return [_jsonable(y) for y in x]
    return x


def combine(name: str, reports: Iterable[IdentityReport]) -> IdentityReport:
    children = list(reports)
    failed = next((c for c in children if not c.passed), None)
    if failed is None:
        return IdentityReport(name, True, children=children)
    return IdentityReport(name, False, failed.witness, failed.residual, children)


def passing(name: str) -> IdentityReport:
    return IdentityReport(name, True)


def _or_passing(report: IdentityReport | None, name: str) -> IdentityReport:
    # reports are falsy when they fail, so `report or passing(name)` would hide failures
    return passing(name) if report is None else report


@dataclass(frozen=True)
class SuperAlgebra:
    """``c[i][j]`` is the coordinate vector of v_i • v_j."""

    space: SuperSpace
    c: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        n = self.space.dim
        if len(self.c) != n or any(len(row) != n or any(len(v) != n for v in row) for row in self.c):
            raise ValueError("structure tensor has the wrong shape")
        p = self.space.parity
        for i, j, k in cartesian(range(n), repeat=3):
            if self.c[i][j][k] and (p[i] + p[j]) % 2 != p[k]:
                raise ParityMismatch(f"c[{i}][{j}][{k}] breaks the grading")

    @classmethod
    def zero(cls, space: SuperSpace) -> "SuperAlgebra":
        n = space.dim
        return cls(space, tuple(tuple(zero_vec(n) for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_table(cls, space: SuperSpace, table: Mapping[tuple[int, int], Mapping[int, object]]) -> "SuperAlgebra":
        """Build from {(i, j): {k: coeff}}; unlisted products vanish."""
        n = space.dim
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), out in table.items():
            for k, coeff in out.items():
                c[i][j][k] += to_rational(coeff)
        return cls(space, tuple(tuple(tuple(v) for v in row) for row in c))

    @classmethod
    def from_entries(cls, space: SuperSpace, entries: Iterable[tuple[int, int, int, object]]) -> "SuperAlgebra":
        table: dict[tuple[int, int], dict[int, object]] = {}
        for i, j, k, coeff in entries:
            slot = table.setdefault((i, j), {})
            slot[k] = to_rational(slot.get(k, 0)) + to_rational(coeff)
        return cls.from_table(space, table)

    @property
    def dim(self) -> int:
        return self.space.dim

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        n = self.dim
        return [(i, j, k, self.c[i][j][k]) for i, j, k in cartesian(range(n), repeat=3) if self.c[i][j][k]]

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.c[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, x in enumerate(row[j]):
                    if x:
                        out[k] += ab * x
        return tuple(out)

    def basis_mul(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def is_trivial(self) -> bool:
        return all(is_zero_vec(v) for row in self.c for v in row)


def product(A: SuperAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return A.mul(u, v)


def _homogeneous_parity(A: SuperAlgebra, u: Sequence[Fraction]) -> int:
    p = A.space.vector_parity(u)
    return 0 if p is None else p


def left_mul(A: SuperAlgebra, u: Sequence[Fraction]) -> Endo:
    """L_u(v) = u • v."""
    pu = _homogeneous_parity(A, u)
    n = A.dim
    cols = [A.mul(u, unit_vec(n, j)) for j in range(n)]
    return Endo(A.space, Matrix._raw_columns(cols, n), pu)


def right_mul(A: SuperAlgebra, u: Sequence[Fraction]) -> Endo:
    """R_u(v) = (-1)^{|u||v|} v • u."""
    pu = _homogeneous_parity(A, u)
    n = A.dim
    p = A.space.parity
    cols = [vec_scale(sign(pu * p[j]), A.mul(unit_vec(n, j), u)) for j in range(n)]
    return Endo(A.space, Matrix._raw_columns(cols, n), pu)


def ad(A: SuperAlgebra, u: Sequence[Fraction]) -> Endo:
    return left_mul(A, u) - right_mul(A, u)


def left_ops(A: SuperAlgebra) -> list[Endo]:
    return [left_mul(A, unit_vec(A.dim, i)) for i in range(A.dim)]


def right_ops(A: SuperAlgebra) -> list[Endo]:
    return [right_mul(A, unit_vec(A.dim, i)) for i in range(A.dim)]


def _graded_bracket(A: SuperAlgebra, s: int) -> SuperAlgebra:
    n = A.dim
    p = A.space.parity
    c = tuple(
        tuple(vec_add(A.c[i][j], vec_scale(s * sign(p[i] * p[j]), A.c[j][i])) for j in range(n)) for i in range(n)
    )
    return SuperAlgebra(A.space, c)


def commutator(A: SuperAlgebra) -> SuperAlgebra:
    """A⁻ with [u, v] = u•v - (-1)^{|u||v|} v•u."""
    return _graded_bracket(A, -1)


def anticommutator(A: SuperAlgebra) -> SuperAlgebra:
    """A⁺ with u•v + (-1)^{|u||v|} v•u."""
    return _graded_bracket(A, 1)


def _triple_check(
    A: SuperAlgebra, name: str, residual: Callable[[int, int, int], Vector]
) -> IdentityReport:
    n = A.dim
    for i, j, k in cartesian(range(n), repeat=3):
        r = residual(i, j, k)
        if not is_zero_vec(r):
            return IdentityReport(name, False, (i, j, k), r)
    return IdentityReport(name, True)


def _e(A: SuperAlgebra, i: int) -> Vector:
    return unit_vec(A.dim, i)


def associator(A: SuperAlgebra, i: int, j: int, k: int) -> Vector:
    m = A.mul
    c = A.c
    return vec_sub(m(c[i][j], _e(A, k)), m(_e(A, i), c[j][k]))


def check_left_symmetric(A: SuperAlgebra) -> IdentityReport:
    """(u, v, w) = (-1)^{|u||v|} (v, u, w)."""
    p = A.space.parity

    def res(i: int, j: int, k: int) -> Vector:
        return vec_sub(associator(A, i, j, k), vec_scale(sign(p[i] * p[j]), associator(A, j, i, k)))

    return _triple_check(A, "left-symmetric", res)


def check_novikov(A: SuperAlgebra) -> IdentityReport:
    """L_{[u,v]} = [L_u, L_v] and R_u R_v = (-1)^{|u||v|} R_v R_u on basis pairs."""
    n = A.dim
    p = A.space.parity
    lie = commutator(A)
    L = left_ops(A)
    R = right_ops(A)
    left_name, right_name = "novikov:left-symmetric", "novikov:right-commuting"
    left_fail = right_fail = None
    for i, j in cartesian(range(n), repeat=2):
        if left_fail is None:
            diff = left_mul(A, lie.c[i][j]).matrix - supercommutator(L[i], L[j]).matrix
            if not diff.is_zero():
                left_fail = IdentityReport(left_name, False, (i, j), diff)
        if right_fail is None:
            diff = (R[i].matrix @ R[j].matrix) - (R[j].matrix @ R[i].matrix).scale(sign(p[i] * p[j]))
            if not diff.is_zero():
                right_fail = IdentityReport(right_name, False, (i, j), diff)
    return combine("novikov", [_or_passing(left_fail, left_name), _or_passing(right_fail, right_name)])


def check_L(A: SuperAlgebra) -> IdentityReport:
    """u•(v•w) = (-1)^{|u||v|} v•(u•w)."""
    p = A.space.parity
    m = A.mul

    def res(i: int, j: int, k: int) -> Vector:
        return vec_sub(m(_e(A, i), A.c[j][k]), vec_scale(sign(p[i] * p[j]), m(_e(A, j), A.c[i][k])))

    return _triple_check(A, "L", res)


def check_R(A: SuperAlgebra) -> IdentityReport:
    """(w•u)•v = (-1)^{|u||v|} (w•v)•u, tuple order (u, v, w)."""
    p = A.space.parity
    m = A.mul

    def res(i: int, j: int, k: int) -> Vector:
        return vec_sub(m(A.c[k][i], _e(A, j)), vec_scale(sign(p[i] * p[j]), m(A.c[k][j], _e(A, i))))

    return _triple_check(A, "R", res)


def check_LR(A: SuperAlgebra) -> IdentityReport:
    return combine("LR", [check_L(A), check_R(A)])


def check_left_leibniz(A: SuperAlgebra) -> IdentityReport:
    """(u•v)•w = u•(v•w) - (-1)^{|u||v|} v•(u•w)."""
    p = A.space.parity
    m = A.mul

    def res(i: int, j: int, k: int) -> Vector:
        rhs = vec_sub(m(_e(A, i), A.c[j][k]), vec_scale(sign(p[i] * p[j]), m(_e(A, j), A.c[i][k])))
        return vec_sub(m(A.c[i][j], _e(A, k)), rhs)

    return _triple_check(A, "left-Leibniz", res)


def check_associative(A: SuperAlgebra) -> IdentityReport:
    return _triple_check(A, "associative", lambda i, j, k: associator(A, i, j, k))


def check_supercommutative(A: SuperAlgebra) -> IdentityReport:
    p = A.space.parity
    n = A.dim
    for i, j in cartesian(range(n), repeat=2):
        r = vec_sub(A.c[i][j], vec_scale(sign(p[i] * p[j]), A.c[j][i]))
        if not is_zero_vec(r):
            return IdentityReport("supercommutative", False, (i, j), r)
    return passing("supercommutative")


def check_super_jacobi(A: SuperAlgebra) -> IdentityReport:
    """Graded antisymmetry and [u,[v,w]] = [[u,v],w] + (-1)^{|u||v|} [v,[u,w]]."""
    p = A.space.parity
    n = A.dim
    for i, j in cartesian(range(n), repeat=2):
        r = vec_add(A.c[i][j], vec_scale(sign(p[i] * p[j]), A.c[j][i]))
        if not is_zero_vec(r):
            return combine("super-Jacobi", [IdentityReport("graded-antisymmetry", False, (i, j), r)])
    m = A.mul

    def res(i: int, j: int, k: int) -> Vector:
        lhs = m(_e(A, i), A.c[j][k])
        rhs = vec_add(m(A.c[i][j], _e(A, k)), vec_scale(sign(p[i] * p[j]), m(_e(A, j), A.c[i][k])))
        return vec_sub(lhs, rhs)

    return combine("super-Jacobi", [passing("graded-antisymmetry"), _triple_check(A, "jacobi", res)])


def span_product(A: SuperAlgebra) -> list[Vector]:
    return span_basis([v for row in A.c for v in row], A.dim)


def span_derived(A: SuperAlgebra) -> list[Vector]:
    return span_product(commutator(A))


def product_of_subspaces(A: SuperAlgebra, X: Sequence[Vector], Y: Sequence[Vector]) -> list[Vector]:
    return span_basis([A.mul(x, y) for x in X for y in Y], A.dim)


def check_two_step_solvable(A_lie: SuperAlgebra) -> bool:
    if not check_super_jacobi(A_lie):
        raise NotLie("bracket is not a Lie superbracket")
    derived = span_product(A_lie)
    return not product_of_subspaces(A_lie, derived, derived)


def _operator_kernel(A: SuperAlgebra, ops: list[Endo]) -> list[Vector]:
    """Kernel of u -> op_u as a linear map into matrix space."""
    n = A.dim
    rows = [[ops[i].matrix.rows[a][b] for i in range(n)] for a in range(n) for b in range(n)]
    if not rows:
        return []
    return span_basis(mat_kernel(Matrix(rows, n)), n)


def normalizers(A: SuperAlgebra) -> tuple[list[Vector], list[Vector], list[Vector]]:
    """(N_l, N_r, N) = (ker u ↦ L_u, ker u ↦ R_u, their intersection)."""
    from .exact_core import intersect

    nl = _operator_kernel(A, left_ops(A))
    nr = _operator_kernel(A, right_ops(A))
    return nl, nr, intersect(nl, nr, A.dim)


SERIES_KINDS = ("solvable", "left_nilpotent", "right_nilpotent", "nilpotent")


def series(A: SuperAlgebra, kind: str) -> list[list[Vector]]:
    """Descending chain starting at A, stopped at {0} or at the first repeat."""
    n = A.dim
    whole = span_basis([unit_vec(n, i) for i in range(n)], n)
    chain = [whole]
    if kind == "nilpotent":
        terms = {1: whole}
        while chain[-1]:
            m = len(chain) + 1
            nxt = span_basis(
                [v for i in range(1, m) for v in product_of_subspaces(A, terms[i], terms[m - i])], n
            )
            terms[m] = nxt
            if nxt == chain[-1]:
                break
            chain.append(nxt)
        return chain
    step = {
        "solvable": lambda X: product_of_subspaces(A, X, X),
        "left_nilpotent": lambda X: product_of_subspaces(A, whole, X),
        "right_nilpotent": lambda X: product_of_subspaces(A, X, whole),
    }.get(kind)
    if step is None:
        raise ValueError(f"unknown series kind {kind!r}")
    while chain[-1]:
        nxt = step(chain[-1])
        if nxt == chain[-1]:
            break
        chain.append(nxt)
    return chain


def is_nilpotent(A: SuperAlgebra) -> bool:
    return not series(A, "nilpotent")[-1]


def left_operators_nilpotent(A: SuperAlgebra) -> bool:
    return all(L.is_nilpotent() for L in left_ops(A))


def lie_is_nilpotent(lie: SuperAlgebra) -> bool:
    """Lower central series of a Lie superalgebra reaches zero."""
    n = lie.dim
    whole = span_basis([unit_vec(n, i) for i in range(n)], n)
    term = whole
    while term:
        nxt = product_of_subspaces(lie, whole, term)
        if nxt == term:
            return False
        term = nxt
    return True


def is_subalgebra(A: SuperAlgebra, X: Sequence[Vector]) -> bool:
    return subspace_contains(X, product_of_subspaces(A, X, X), A.dim)


def is_trivial_on(A: SuperAlgebra, X: Sequence[Vector]) -> bool:
    return not product_of_subspaces(A, X, X)


def is_ideal(A: SuperAlgebra, X: Sequence[Vector]) -> bool:
    n = A.dim
    whole = [unit_vec(n, i) for i in range(n)]
    both = product_of_subspaces(A, whole, X) + product_of_subspaces(A, X, whole)
    return subspace_contains(X, both, n)


__all__ = [
    "IdentityReport",
    "NotLie",
    "SuperAlgebra",
    "ad",
    "anticommutator",
    "associator",
    "check_L",
    "check_LR",
    "check_R",
    "check_associative",
    "check_left_leibniz",
    "check_left_symmetric",
    "check_novikov",
    "check_super_jacobi",
    "check_supercommutative",
    "check_two_step_solvable",
    "combine",
    "commutator",
    "is_nilpotent",
    "left_mul",
    "left_operators_nilpotent",
    "lie_is_nilpotent",
    "normalizers",
    "product",
    "right_mul",
    "series",
    "span_derived",
    "span_product",
]

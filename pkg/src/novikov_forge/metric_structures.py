"""Algebras carrying a homogeneous non-degenerate form.

Covers antisymmetry of left multiplications, the Levi-Civita product, curvature,
the metric dual product ⋆, Milnor splittings, isotropic reduction and the
bimodule checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from .algebra_kernel import (
    IdentityReport,
    SuperAlgebra,
    check_left_leibniz,
    check_L,
    check_novikov,
    check_super_jacobi,
    combine,
    commutator,
    left_mul,
    left_ops,
    _or_passing,
    passing,
    right_ops,
    span_derived,
    span_product,
)
from .exact_core import (
    ZERO,
    Matrix,
    Vector,
    coordinates,
    intersect,
    is_zero_vec,
    mat_inverse,
    mat_kernel,
    same_subspace,
    span_basis,
    unit_vec,
    vec_add,
    vec_scale,
    vec_sub,
    SingularMatrix,
)
from .superspace_core import (
    Endo,
    HomBilinearForm,
    SuperSpace,
    adjoint,
    check_form,
    orthogonal_complement,
    sign,
    supercommutator,
)


class SingularForm(ValueError):
    """The bilinear form is degenerate."""


class PreconditionUnverified(ValueError):
    """An operation's stated precondition does not hold on the input."""


class NotAdmissible(ValueError):
    """Input data fails the conditions an operation needs."""

    def __init__(self, message: str, report: IdentityReport | None = None):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class PseudoEuclideanAlgebra:
    algebra: SuperAlgebra
    form: HomBilinearForm

    def __post_init__(self) -> None:
        if self.algebra.space != self.form.space:
            raise ValueError("algebra and form live on different superspaces")

    @property
    def space(self) -> SuperSpace:
        return self.algebra.space

    @property
    def dim(self) -> int:
        return self.algebra.dim


def check_left_mul_antisymmetric(P: PseudoEuclideanAlgebra) -> IdentityReport:
    name = "left-multiplication-antisymmetric"
    try:
        ginv = mat_inverse(P.form.gram)
    except SingularMatrix:
        return IdentityReport(name, False, None, "degenerate form")
    for i, L in enumerate(left_ops(P.algebra)):
        adj = _adjoint_with_inverse(P.form, L, ginv)
        diff = adj + L.matrix
        if not diff.is_zero():
            return IdentityReport(name, False, (i,), diff)
    return passing(name)


def _adjoint_with_inverse(form: HomBilinearForm, f: Endo, ginv: Matrix) -> Matrix:
    p = form.space.parity
    s_ft = Matrix(
        (tuple(sign(f.parity * p[i]) * x for x in row) for i, row in enumerate(f.matrix.transpose().rows)),
        form.space.dim,
    )
    return ginv @ s_ft @ form.gram


def check_form_report(form: HomBilinearForm) -> IdentityReport:
    rep = check_form(form.space, form.gram, form.parity)
    return IdentityReport(f"form:{rep.violation}" if not rep.ok else "form", rep.ok, rep.indices)


def check_pseudo_euclidean_novikov(P: PseudoEuclideanAlgebra) -> IdentityReport:
    return combine(
        "pseudo-Euclidean Novikov",
        [check_form_report(P.form), check_novikov(P.algebra), check_left_mul_antisymmetric(P)],
    )


def check_vanishing_lemma(P: PseudoEuclideanAlgebra, verified: bool = False) -> IdentityReport:
    """(u•v)•w = 0 on basis triples, together with the operator form L_{u•v} = 0, R_u R_v = 0."""
    if not verified:
        pre = check_left_mul_antisymmetric(P)
        if not pre or not check_novikov(P.algebra).children[1]:
            raise PreconditionUnverified("vanishing lemma needs antisymmetric L and commuting R")
    A = P.algebra
    n = A.dim
    for i, j, k in cartesian(range(n), repeat=3):
        r = A.mul(A.c[i][j], unit_vec(n, k))
        if not is_zero_vec(r):
            return IdentityReport("vanishing-lemma", False, (i, j, k), r)
    R = right_ops(A)
    for i, j in cartesian(range(n), repeat=2):
        if not left_mul(A, A.c[i][j]).is_zero():
            return IdentityReport("vanishing-lemma:L_uv", False, (i, j))
        if not (R[i] @ R[j]).is_zero():
            return IdentityReport("vanishing-lemma:R_uR_v", False, (i, j))
    return passing("vanishing-lemma")


def _gram_inverse(form: HomBilinearForm) -> Matrix:
    try:
        return mat_inverse(form.gram)
    except SingularMatrix as exc:
        raise SingularForm("form is degenerate") from exc


def levi_civita(lie: SuperAlgebra, form: HomBilinearForm) -> SuperAlgebra:
    """Product from the super Koszul formula

    2<u•v, w> = <[u,v],w> - (-1)^{|u||v|+|u||w|} <[v,w],u> + (-1)^{|v||w|+|u||w|} <[w,u],v>.
    """
    if lie.space != form.space:
        raise ValueError("bracket and form live on different superspaces")
    jac = check_super_jacobi(lie)
    if not jac:
        raise PreconditionUnverified(f"bracket is not Lie: witness {jac.witness}")
    n = lie.dim
    p = lie.space.parity
    ginv_t = _gram_inverse(form).transpose()
    g = form.gram.rows
    half = Fraction(1, 2)
    c = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = []
            for k in range(n):
                t1 = sum((lie.c[i][j][m] * g[m][k] for m in range(n)), ZERO)
                t2 = sum((lie.c[j][k][m] * g[m][i] for m in range(n)), ZERO)
                t3 = sum((lie.c[k][i][m] * g[m][j] for m in range(n)), ZERO)
                val = t1 - sign(p[i] * p[j] + p[i] * p[k]) * t2 + sign(p[j] * p[k] + p[i] * p[k]) * t3
                rhs.append(half * val)
            row.append(ginv_t.apply(rhs))
        c.append(tuple(row))
    out = SuperAlgebra(lie.space, tuple(c))
    if commutator(out) != lie:
        raise AssertionError("Levi-Civita product is not torsion free")
    if not check_left_mul_antisymmetric(PseudoEuclideanAlgebra(out, form)):
        raise AssertionError("Levi-Civita product is not metric")
    return out


def curvature(P: PseudoEuclideanAlgebra, u: Sequence[Fraction], v: Sequence[Fraction]) -> Endo:
    """R(u, v) = L_{[u,v]} - [L_u, L_v]."""
    A = P.algebra
    bracket = commutator(A).mul(u, v)
    return left_mul(A, bracket) - supercommutator(left_mul(A, u), left_mul(A, v))


def is_flat(P: PseudoEuclideanAlgebra) -> bool:
    n = P.dim
    return all(
        curvature(P, unit_vec(n, i), unit_vec(n, j)).is_zero() for i, j in cartesian(range(n), repeat=2)
    )


def star_product(P: PseudoEuclideanAlgebra, check: bool = True) -> SuperAlgebra:
    """v⋆w defined by <u•v, w> = <u, v⋆w>, solved through the inverse Gram matrix."""
    A = P.algebra
    n = A.dim
    ginv = _gram_inverse(P.form)
    g = P.form.gram.rows
    c = []
    for j in range(n):
        row = []
        for k in range(n):
            rhs = [sum((A.c[i][j][m] * g[m][k] for m in range(n)), ZERO) for i in range(n)]
            row.append(ginv.apply(rhs))
        c.append(tuple(row))
    star = SuperAlgebra(A.space, tuple(c))
    if check:
        rep = _star_antisymmetry(star)
        if not rep:
            raise PreconditionUnverified(f"⋆ is not graded antisymmetric at {rep.witness}")
    return star


def _star_antisymmetry(star: SuperAlgebra) -> IdentityReport:
    n = star.dim
    p = star.space.parity
    for i, j in cartesian(range(n), repeat=2):
        r = vec_add(star.c[i][j], vec_scale(sign(p[i] * p[j]), star.c[j][i]))
        if not is_zero_vec(r):
            return IdentityReport("star:(a)", False, (i, j), r)
    return passing("star:(a)")


def _star_b(A: SuperAlgebra, star: SuperAlgebra) -> IdentityReport:
    """v⋆(w⋆z) + v•(w⋆z) = (v•w)⋆z + (-1)^{|v||w|} w⋆(v•z)."""
    n = A.dim
    p = A.space.parity
    for i, j, k in cartesian(range(n), repeat=3):
        e = lambda t: unit_vec(n, t)  # noqa: E731
        wz = star.c[j][k]
        lhs = vec_add(star.mul(e(i), wz), A.mul(e(i), wz))
        rhs = vec_add(star.mul(A.c[i][j], e(k)), vec_scale(sign(p[i] * p[j]), star.mul(e(j), A.c[i][k])))
        r = vec_sub(lhs, rhs)
        if not is_zero_vec(r):
            return IdentityReport("star:(b)", False, (i, j, k), r)
    return passing("star:(b)")


def check_star_properties(P: PseudoEuclideanAlgebra) -> IdentityReport:
    """Properties (a)-(e) of ⋆, its super-Jacobi identity and 2-step nilpotency."""
    A = P.algebra
    star = star_product(P, check=False)
    n = A.dim
    p = A.space.parity
    e = [unit_vec(n, t) for t in range(n)]
    reports = [_star_antisymmetry(star), _star_b(A, star)]

    def triple(name, fn):
        for i, j, k in cartesian(range(n), repeat=3):
            r = fn(i, j, k)
            if not is_zero_vec(r):
                return IdentityReport(name, False, (i, j, k), r)
        return passing(name)

    reports.append(triple("star:(c)", lambda i, j, k: star.mul(e[i], star.c[j][k])))
    reports.append(triple("star:(d)", lambda i, j, k: A.mul(e[i], star.c[j][k])))
    reports.append(
        triple(
            "star:(e)",
            lambda i, j, k: vec_add(
                star.mul(A.c[i][j], e[k]), vec_scale(sign(p[i] * p[j]), star.mul(e[j], A.c[i][k]))
            ),
        )
    )
    jac = check_super_jacobi(star)
    reports.append(IdentityReport("star:super-Jacobi", jac.passed, jac.witness, jac.residual))
    reports.append(triple("star:2-step-nilpotent", lambda i, j, k: star.mul(star.c[i][j], e[k])))
    return combine("star-properties", reports)


@dataclass(frozen=True)
class MilnorDecomposition:
    ideal_I: tuple[Vector, ...]
    complement: tuple[Vector, ...]


@dataclass(frozen=True)
class NotMilnor:
    witness: Vector
    reason: str = "A•A is degenerate"

    def __bool__(self) -> bool:
        return False


def milnor_decomposition(P: PseudoEuclideanAlgebra) -> MilnorDecomposition | NotMilnor:
    """Split A = I ⊕ I⊥ with I = A•A when the form is non-degenerate on A•A."""
    A = P.algebra
    n = A.dim
    ideal = span_product(A)
    perp = orthogonal_complement(P.form, ideal)
    radical = intersect(ideal, perp, n)
    if radical:
        return NotMilnor(radical[0])
    if not same_subspace(ideal, span_derived(A), n):
        raise AssertionError("A•A differs from [A,A]")
    if len(span_basis(ideal + perp, n)) != n:
        raise AssertionError("I and its complement do not span A")
    for X, label in ((ideal, "I"), (perp, "I⊥")):
        for x, y in cartesian(X, repeat=2):
            if not is_zero_vec(A.mul(x, y)):
                raise AssertionError(f"{label} is not a trivial subalgebra")
    for x in ideal:
        if not left_mul(A, x).is_zero():
            raise AssertionError("L_u does not vanish on I")
    lie = commutator(A)
    for x in perp:
        if left_mul(A, x).matrix != left_mul(lie, x).matrix:
            raise AssertionError("L_u differs from ad_u on I⊥")
    center = center_of_minus(P)
    both_zero = span_basis(
        mat_kernel(_stack_operator_maps(left_ops(A), right_ops(A), n)), n
    )
    if not same_subspace(center, both_zero, n):
        raise AssertionError("center of A⁻ differs from {L = R = 0}")
    return MilnorDecomposition(tuple(ideal), tuple(perp))


def _stack_operator_maps(first: list[Endo], second: list[Endo], n: int) -> Matrix:
    rows = []
    for ops in (first, second):
        rows.extend([ops[i].matrix.rows[a][b] for i in range(n)] for a in range(n) for b in range(n))
    return Matrix(rows, n) if rows else Matrix.zeros(0, n)


def center_of_minus(P: PseudoEuclideanAlgebra) -> list[Vector]:
    """{u : [u, v] = 0 for all v}."""
    lie = commutator(P.algebra)
    n = lie.dim
    if n == 0:
        return []
    rows = [[lie.c[i][j][k] for i in range(n)] for j in range(n) for k in range(n)]
    return span_basis(mat_kernel(Matrix(rows, n)), n)


def isotropic_reduction(P: PseudoEuclideanAlgebra, e: Sequence[Fraction]) -> PseudoEuclideanAlgebra:
    """The quotient I⊥/I for I = Ke, with inherited product and form."""
    A = P.algebra
    n = A.dim
    e = tuple(e)
    if is_zero_vec(e):
        raise NotAdmissible("e must be nonzero")
    P.space.vector_parity(e)
    if not left_mul(A, e).is_zero() or any(not is_zero_vec(A.mul(unit_vec(n, i), e)) for i in range(n)):
        raise NotAdmissible("e must satisfy L_e = R_e = 0")
    if P.form(e, e) != 0:
        raise NotAdmissible("e must be isotropic")
    ideal = span_basis([e], n)
    perp = orthogonal_complement(P.form, ideal)
    pivot = next(k for k, x in enumerate(ideal[0]) if x)
    reps = [v for v in perp if v[pivot] == 0]
    if len(reps) != len(perp) - 1:
        raise AssertionError("coset representatives are not a complement of e")
    chain = [ideal[0]] + reps

    def reduce(v: Vector) -> Vector:
        return coordinates(chain, v, n)[1:]

    m = len(reps)
    c = tuple(tuple(reduce(A.mul(x, y)) for y in reps) for x in reps)
    space = SuperSpace(P.space.vector_parity(v) or 0 for v in reps)
    algebra = SuperAlgebra(space, c)
    form = HomBilinearForm(space, Matrix([[P.form(x, y) for y in reps] for x in reps], m), P.form.parity)
    return PseudoEuclideanAlgebra(algebra, form)


@dataclass(frozen=True)
class Representation:
    """Maps r, l : A -> End(carrier), stored by their values on the basis of A."""

    carrier: SuperSpace
    r: tuple[Endo, ...]
    l: tuple[Endo, ...]


def adjoint_representation(A: SuperAlgebra) -> Representation:
    return Representation(A.space, tuple(right_ops(A)), tuple(left_ops(A)))


def dual_map(op: Endo) -> Endo:
    """φ*(u) on V* in the dual basis: φ*(u)(f)(x) = -(-1)^{|f|(|φ|+|u|)} f(φ(u)(x)).

    ``op`` is φ(u), whose parity is |φ|+|u|.
    """
    p = op.space.parity
    t = op.matrix.transpose().rows
    rows = [[-sign(p[k] * op.parity) * t[i][k] for k in range(len(p))] for i in range(len(p))]
    return Endo(op.space, Matrix(rows, len(p)), op.parity)


def _combine_linear(ops: Sequence[Endo], coeffs: Sequence[Fraction], space: SuperSpace) -> Endo:
    total = Endo.zero(space)
    for c, op in zip(coeffs, ops):
        if c:
            total = total + op.scale(c)
    return total


def check_representation(A: SuperAlgebra, rep: Representation) -> IdentityReport:
    """[l(u),l(v)] = 0, l(u)r(v) = r(u•v), l(u•v) = 0, r(u)r(v) = 0, r(u)l(v) = 0."""
    n = A.dim
    fails: dict[str, IdentityReport] = {}
    names = ["[l(u),l(v)]=0", "l(u)r(v)=r(u•v)", "l(u•v)=0", "r(u)r(v)=0", "r(u)l(v)=0"]
    for i, j in cartesian(range(n), repeat=2):
        uv = A.c[i][j]
        r_uv = _combine_linear(rep.r, uv, rep.carrier)
        l_uv = _combine_linear(rep.l, uv, rep.carrier)
        residuals = [
            supercommutator(rep.l[i], rep.l[j]).matrix,
            (rep.l[i] @ rep.r[j]).matrix - r_uv.matrix,
            l_uv.matrix,
            (rep.r[i] @ rep.r[j]).matrix,
            (rep.r[i] @ rep.l[j]).matrix,
        ]
        for name, res in zip(names, residuals):
            if name not in fails and not res.is_zero():
                fails[name] = IdentityReport(name, False, (i, j), res)
    return combine("representation", [_or_passing(fails.get(nm), nm) for nm in names])


def dual_representation(P: PseudoEuclideanAlgebra) -> Representation:
    """(-(L⋆)*, (L•)*) on A*, written in the dual basis."""
    A = P.algebra
    star = star_product(P)
    r = tuple(-dual_map(L) for L in left_ops(star))
    l = tuple(dual_map(L) for L in left_ops(A))
    return Representation(A.space, r, l)


def phi_matrix(P: PseudoEuclideanAlgebra) -> Matrix:
    """Φ(a) = <a, ·> in the dual basis: column i holds the row <v_i, v_k>."""
    return P.form.gram.transpose()


def check_phi_isomorphism(P: PseudoEuclideanAlgebra) -> IdentityReport:
    """Φ L_u = (-1)^{|Φ||u|} (L_u)* Φ and Φ R_u = -(-1)^{|Φ||u|} (L⋆_u)* Φ."""
    A = P.algebra
    n = A.dim
    phi = phi_matrix(P)
    if n and not check_form(P.space, P.form.gram, P.form.parity):
        return IdentityReport("phi", False, None, "form invalid")
    p = A.space.parity
    fp = P.form.parity
    star = star_product(P)
    L, R, Ls = left_ops(A), right_ops(A), left_ops(star)
    left_name, right_name = "phi:left", "phi:right"
    left_fail = right_fail = None
    for i in range(n):
        s = sign(fp * p[i])
        if left_fail is None:
            diff = phi @ L[i].matrix - (dual_map(L[i]).matrix @ phi).scale(s)
            if not diff.is_zero():
                left_fail = IdentityReport(left_name, False, (i,), diff)
        if right_fail is None:
            diff = phi @ R[i].matrix + (dual_map(Ls[i]).matrix @ phi).scale(s)
            if not diff.is_zero():
                right_fail = IdentityReport(right_name, False, (i,), diff)
    return combine("phi-isomorphism", [_or_passing(left_fail, left_name), _or_passing(right_fail, right_name)])


def check_orthogonal_is_right_normalizer(P: PseudoEuclideanAlgebra) -> bool:
    from .algebra_kernel import normalizers

    n = P.dim
    return same_subspace(orthogonal_complement(P.form, span_product(P.algebra)), normalizers(P.algebra)[1], n)


def is_verified_novikov(P: PseudoEuclideanAlgebra) -> bool:
    return bool(check_pseudo_euclidean_novikov(P))


def l_and_leibniz(A: SuperAlgebra) -> IdentityReport:
    return combine("left-Leibniz+L", [check_left_leibniz(A), check_L(A)])


def operator_form_of_novikov(A: SuperAlgebra) -> IdentityReport:
    """L_{u•v} = 0 and [L_u, L_v] = 0 for all basis pairs."""
    n = A.dim
    L = left_ops(A)
    for i, j in cartesian(range(n), repeat=2):
        if not left_mul(A, A.c[i][j]).is_zero():
            return IdentityReport("L_uv=0,[L_u,L_v]=0", False, (i, j))
        if not supercommutator(L[i], L[j]).is_zero():
            return IdentityReport("L_uv=0,[L_u,L_v]=0", False, (i, j))
    return passing("L_uv=0,[L_u,L_v]=0")


def standard_basis(n: int) -> list[Vector]:
    return [unit_vec(n, i) for i in range(n)]


__all__ = [
    "MilnorDecomposition",
    "NotAdmissible",
    "NotMilnor",
    "PreconditionUnverified",
    "PseudoEuclideanAlgebra",
    "Representation",
    "SingularForm",
    "adjoint",
    "adjoint_representation",
    "center_of_minus",
    "check_left_mul_antisymmetric",
    "check_phi_isomorphism",
    "check_pseudo_euclidean_novikov",
    "check_representation",
    "check_star_properties",
    "check_vanishing_lemma",
    "curvature",
    "dual_map",
    "dual_representation",
    "is_flat",
    "isotropic_reduction",
    "levi_civita",
    "milnor_decomposition",
    "star_product",
]

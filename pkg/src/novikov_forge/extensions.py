"""Constructions that produce new pseudo-Euclidean Novikov superalgebras.

Double extensions K d ⊕ B ⊕ K e in four flavours, the converse split, T* and
ΠT* extensions on A ⊕ A*, the dual representation and the tensor product
with a supercommutative associative algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as cartesian
from typing import Sequence

from .algebra_kernel import (
    IdentityReport,
    SuperAlgebra,
    check_associative,
    check_left_leibniz,
    check_L,
    check_supercommutative,
    combine,
    left_mul,
    left_ops,
    passing,
    right_mul,
    right_ops,
    span_product,
)
from .exact_core import (
    ONE,
    ZERO,
    Matrix,
    Vector,
    intersect,
    is_zero_vec,
    mat_inverse,
    unit_vec,
    vec_add,
    vec_scale,
    vec_sub,
    zero_vec,
)
from .metric_structures import (
    NotAdmissible,
    PreconditionUnverified,
    PseudoEuclideanAlgebra,
    Representation,
    dual_map,
    dual_representation,
    isotropic_reduction,
)
from .superspace_core import (
    Endo,
    HomBilinearForm,
    ParityMismatch,
    SuperSpace,
    adjoint,
    check_form,
    orthogonal_complement,
    sign,
)

EVEN_EVEN = "even_ext_even_form"
ODD_EVEN = "odd_ext_even_form"
EVEN_ODD = "even_ext_odd_form"
ODD_ODD = "odd_ext_odd_form"
KINDS = (EVEN_EVEN, ODD_EVEN, EVEN_ODD, ODD_ODD)

# (parity of d, parity of e, form parity, <e,d>, <d,e>) per kind
_LAYOUT = {
    EVEN_EVEN: (0, 0, 0, 1, 1),
    ODD_EVEN: (1, 1, 0, 1, -1),
    EVEN_ODD: (0, 1, 1, 1, 1),
    ODD_ODD: (1, 0, 1, 1, 1),
}


class NonDegenerateProduct(ValueError):
    """A•A meets its orthogonal only in zero, so no split exists."""


class OutsideExtensionTables(ValueError):
    """The split basis exposes a product term that no double-extension table has."""


class StarPropertiesFail(ValueError):
    pass


class HNotAssociative(ValueError):
    pass


class OmegaNotInvariant(ValueError):
    pass


def kind_for(ext_parity: int, form_parity: int) -> str:
    return {(0, 0): EVEN_EVEN, (1, 0): ODD_EVEN, (0, 1): EVEN_ODD, (1, 1): ODD_ODD}[(ext_parity, form_parity)]


@dataclass(frozen=True)
class ExtensionData:
    base: PseudoEuclideanAlgebra
    D: Endo
    xi: Endo
    b0: Vector
    c0: Vector | None
    kind: str

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown extension kind {self.kind!r}")
        d_par, _, form_par, _, _ = _LAYOUT[self.kind]
        if self.base.form.parity != form_par:
            raise ParityMismatch(f"{self.kind} needs a {'odd' if form_par else 'even'} base form")
        for name, f in (("D", self.D), ("xi", self.xi)):
            if not f.is_zero() and f.parity != d_par:
                raise ParityMismatch(f"{name} must have parity {d_par}")
        for name, v in (("b0", self.b0), ("c0", self.c0)):
            if v is not None and self.base.space.vector_parity(v) == 1:
                raise ParityMismatch(f"{name} must be even")

    @property
    def has_c0(self) -> bool:
        return self.kind in (ODD_EVEN, ODD_ODD)


def _basis(n: int) -> list[Vector]:
    return [unit_vec(n, i) for i in range(n)]


def _eq(name: str, residuals) -> IdentityReport:
    for witness, r in residuals:
        if isinstance(r, Matrix):
            bad = not r.is_zero()
        elif isinstance(r, Fraction):
            bad = r != 0
        else:
            bad = not is_zero_vec(r)
        if bad:
            return IdentityReport(name, False, witness, r)
    return passing(name)


def _admissibility(base: PseudoEuclideanAlgebra, D: Endo, xi: Endo, b0: Vector, c0: Vector | None, system: str) -> IdentityReport:
    B = base.algebra
    n = B.dim
    p = B.space.parity
    e = _basis(n)
    m = B.mul
    form = base.form
    odd_maps = system in ("claim4", "claim6")
    pairs = list(cartesian(range(n), repeat=2))
    zero = Endo.zero(B.space)
    c0 = c0 if c0 is not None else zero_vec(n)
    Lb0 = left_mul(B, b0)
    Rb0 = right_mul(B, b0)
    xi_star = adjoint(form, xi) if odd_maps else zero

    def d_sign(i: int) -> int:
        # an odd D acts as a graded derivation: D(u•v) = (-1)^{|u|} u•D(v)
        return sign(p[i]) if odd_maps else 1

    eqs = [
        _eq("D*=-D", [((), (adjoint(form, D) + D).matrix)]),
        _eq("ξ(u•v)=0", (((i, j), xi(B.c[i][j])) for i, j in pairs)),
        _eq("ξ(u)•v=0", (((i, j), m(xi(e[i]), e[j])) for i, j in pairs)),
        _eq("D(u)•v=0", (((i, j), m(D(e[i]), e[j])) for i, j in pairs)),
        _eq(
            "u•ξ(v)=(-1)^{|u||v|}v•ξ(u)",
            (((i, j), vec_sub(m(e[i], xi(e[j])), vec_scale(sign(p[i] * p[j]), m(e[j], xi(e[i]))))) for i, j in pairs),
        ),
        _eq(
            "D(u•v)=u•D(v)",
            (((i, j), vec_sub(D(B.c[i][j]), vec_scale(d_sign(i), m(e[i], D(e[j]))))) for i, j in pairs),
        ),
    ]
    if system == "claim2":
        eqs.append(_eq("D∘ξ=R_b0", [((), (D @ xi).matrix - Rb0.matrix)]))
    elif system == "claim4":
        eqs.append(
            _eq("D∘ξ(u)=(-1)^{|u|}R_b0(u)", (((i,), vec_sub(D(xi(e[i])), vec_scale(sign(p[i]), Rb0(e[i])))) for i in range(n)))
        )
    else:
        eqs.append(
            _eq("D∘ξ(u)=(-1)^{|u|}u•b0", (((i,), vec_sub(D(xi(e[i])), vec_scale(sign(p[i]), m(e[i], b0)))) for i in range(n)))
        )
    eqs += [
        _eq("ξ²=0", [((), (xi @ xi).matrix)]),
        _eq("ξ∘D=0", [((), (xi @ D).matrix)]),
        _eq("L_b0=0", [((), Lb0.matrix)]),
        _eq("ξ(b0)=0", [((), xi(b0))]),
    ]
    if odd_maps:
        Rc0 = right_mul(B, c0)
        eqs += [
            _eq("ξ*∘ξ=0", [((), (xi_star @ xi).matrix)]),
            _eq("D²=0", [((), (D @ D).matrix)]),
            _eq("R_c0=0", [((), Rc0.matrix)]),
            _eq("D(b0)=0", [((), D(b0))]),
            _eq("ξ*(c0)=0", [((), xi_star(c0))]),
            _eq("D(c0)=0", [((), D(c0))]),
        ]
    if system == "claim4":
        eqs += [
            _eq("<b0,c0>=0", [((), form(b0, c0))]),
            _eq("<b0,b0>=0", [((), form(b0, b0))]),
        ]
    if system == "claim6":
        eqs.append(_eq("ξ*(b0)=0", [((), xi_star(b0))]))
    return combine(f"admissible:{system}", eqs)


def _require_parity(f: Endo, want: int, name: str) -> None:
    if not f.is_zero() and f.parity != want:
        raise ParityMismatch(f"{name} must have parity {want}")


def _require_even_vector(base: PseudoEuclideanAlgebra, v: Sequence[Fraction] | None, name: str) -> None:
    if v is not None and base.space.vector_parity(v) == 1:
        raise ParityMismatch(f"{name} must be even")


def check_even_admissible(base: PseudoEuclideanAlgebra, D: Endo, xi: Endo, b0: Sequence[Fraction]) -> IdentityReport:
    _require_parity(D, 0, "D")
    _require_parity(xi, 0, "xi")
    _require_even_vector(base, b0, "b0")
    return _admissibility(base, D, xi, tuple(b0), None, "claim2")


def check_odd_admissible_even_form(
    base: PseudoEuclideanAlgebra, D: Endo, xi: Endo, b0: Sequence[Fraction], c0: Sequence[Fraction]
) -> IdentityReport:
    if base.form.parity != 0:
        raise ParityMismatch("base form must be even")
    _require_parity(D, 1, "D")
    _require_parity(xi, 1, "xi")
    _require_even_vector(base, b0, "b0")
    _require_even_vector(base, c0, "c0")
    return _admissibility(base, D, xi, tuple(b0), tuple(c0), "claim4")


def check_odd_admissible_odd_form(
    base: PseudoEuclideanAlgebra, D: Endo, xi: Endo, b0: Sequence[Fraction], c0: Sequence[Fraction]
) -> IdentityReport:
    if base.form.parity != 1:
        raise ParityMismatch("base form must be odd")
    _require_parity(D, 1, "D")
    _require_parity(xi, 1, "xi")
    _require_even_vector(base, b0, "b0")
    _require_even_vector(base, c0, "c0")
    return _admissibility(base, D, xi, tuple(b0), tuple(c0), "claim6")


def check_admissible(data: ExtensionData) -> IdentityReport:
    if data.kind in (EVEN_EVEN, EVEN_ODD):
        return check_even_admissible(data.base, data.D, data.xi, data.b0)
    if data.kind == ODD_EVEN:
        return check_odd_admissible_even_form(data.base, data.D, data.xi, data.b0, data.c0 or zero_vec(data.base.dim))
    return check_odd_admissible_odd_form(data.base, data.D, data.xi, data.b0, data.c0 or zero_vec(data.base.dim))


def double_extend(data: ExtensionData, check: bool = True) -> PseudoEuclideanAlgebra:
    """Algebra on K d ⊕ B ⊕ K e in the basis (d, B-basis, e)."""
    if check:
        rep = check_admissible(data)
        if not rep:
            failed = rep.first_failure()
            raise NotAdmissible(f"data fails {failed.name}", rep)
    base = data.base
    B = base.algebra
    nb = B.dim
    n = nb + 2
    d_par, e_par, form_par, ed, de = _LAYOUT[data.kind]
    space = SuperSpace((d_par,) + B.space.parity + (e_par,))
    c0 = data.c0 if data.c0 is not None else zero_vec(nb)
    b0 = tuple(data.b0)
    form = base.form
    e = _basis(nb)
    b_sign = 1 if data.kind == ODD_ODD else -1
    twisted = data.kind in (ODD_EVEN, ODD_ODD)

    def lift(v: Sequence[Fraction], e_coeff: Fraction = ZERO, d_coeff: Fraction = ZERO) -> Vector:
        return (d_coeff,) + tuple(v) + (e_coeff,)

    table: dict[tuple[int, int], Vector] = {}
    table[(0, 0)] = lift(b0)
    for i in range(nb):
        table[(0, i + 1)] = lift(data.D(e[i]), b_sign * form(b0, e[i]))
        table[(i + 1, 0)] = lift(data.xi(e[i]), form(c0, e[i]))
        xi_u = data.xi(e[i])
        for j in range(nb):
            s = -sign(B.space.parity[j]) if twisted else -1
            table[(i + 1, j + 1)] = lift(B.c[i][j], s * form(xi_u, e[j]))
    c = tuple(tuple(table.get((i, j), zero_vec(n)) for j in range(n)) for i in range(n))
    gram = [[ZERO] * n for _ in range(n)]
    for i in range(nb):
        for j in range(nb):
            gram[i + 1][j + 1] = form.gram.rows[i][j]
    gram[n - 1][0] = Fraction(ed)
    gram[0][n - 1] = Fraction(de)
    return PseudoEuclideanAlgebra(SuperAlgebra(space, c), HomBilinearForm(space, Matrix(gram, n), form_par))


@dataclass(frozen=True)
class SplitResult:
    e_vector: Vector
    d_vector: Vector
    base: PseudoEuclideanAlgebra
    data: ExtensionData
    basis: tuple[Vector, ...]
    in_split_basis: PseudoEuclideanAlgebra


def change_basis(P: PseudoEuclideanAlgebra, new_basis: Sequence[Vector]) -> PseudoEuclideanAlgebra:
    """Rewrite P in a homogeneous basis given by its columns' coordinates."""
    n = P.dim
    T = Matrix.from_columns(new_basis, n)
    Tinv = mat_inverse(T)
    A = P.algebra
    space = SuperSpace(P.space.vector_parity(v) or 0 for v in new_basis)
    c = tuple(tuple(Tinv.apply(A.mul(x, y)) for y in new_basis) for x in new_basis)
    gram = Matrix([[P.form(x, y) for y in new_basis] for x in new_basis], n)
    return PseudoEuclideanAlgebra(SuperAlgebra(space, c), HomBilinearForm(space, gram, P.form.parity))


def split_double_extension(P: PseudoEuclideanAlgebra) -> SplitResult:
    """Write P as a double extension of I⊥/I for an isotropic central e ∈ A•A ∩ (A•A)⊥.

    Candidates for e are the echelon basis vectors of that intersection, in order;
    the first one whose d•d has no e-component is used.
    """
    n = P.dim
    prod = span_product(P.algebra)
    radical = intersect(prod, orthogonal_complement(P.form, prod), n)
    if not radical:
        raise NonDegenerateProduct("A•A is non-degenerate")
    for e in radical:
        try:
            return _split_along(P, e)
        except OutsideExtensionTables:
            last = e
    raise OutsideExtensionTables(f"for every candidate e (last {last}) d•d has an e-component")


def _split_along(P: PseudoEuclideanAlgebra, e: Vector) -> SplitResult:
    n = P.dim
    form = P.form
    j = next(k for k in range(n) if form(e, unit_vec(n, k)) != 0)
    d = vec_scale(1 / form(e, unit_vec(n, j)), unit_vec(n, j))
    dd = form(d, d)
    if dd:
        d = vec_sub(d, vec_scale(dd / 2, e))
    d_par = P.space.vector_parity(d) or 0
    complement = orthogonal_complement(form, [e, d])
    new_basis = [d] + complement + [e]
    Q = change_basis(P, new_basis)
    if Q.algebra.c[0][0][-1]:
        raise OutsideExtensionTables("d•d has an e-component, which no double-extension product contains")
    nb = n - 2
    kind = kind_for(d_par, form.parity)
    base_space = SuperSpace(Q.space.parity[1:-1])
    inner = range(1, n - 1)
    base_alg = SuperAlgebra(base_space, tuple(tuple(Q.algebra.c[i][j][1:-1] for j in inner) for i in inner))
    base_form = HomBilinearForm(base_space, Matrix([[Q.form.gram.rows[i][j] for j in inner] for i in inner], nb), form.parity)
    base = PseudoEuclideanAlgebra(base_alg, base_form)
    D_cols = [Q.algebra.c[0][i][1:-1] for i in inner]
    xi_cols = [Q.algebra.c[i][0][1:-1] for i in inner]
    D = Endo(base_space, Matrix.from_columns(D_cols, nb), d_par) if nb else Endo.zero(base_space, d_par)
    xi = Endo(base_space, Matrix.from_columns(xi_cols, nb), d_par) if nb else Endo.zero(base_space, d_par)
    b0 = Q.algebra.c[0][0][1:-1]
    c0 = None
    if kind in (ODD_EVEN, ODD_ODD):
        # <c0, u> is the e-coefficient of u•d
        functional = [Q.algebra.c[i][0][-1] for i in inner]
        c0 = mat_inverse(base_form.gram).transpose().apply(functional) if nb else ()
    data = ExtensionData(base, D, xi, b0, c0, kind)
    if double_extend(data, check=False) != Q:
        raise PreconditionUnverified("split data does not rebuild the input; it is not a verified Novikov algebra")
    return SplitResult(e, d, base, data, tuple(new_basis), Q)


def reduction_chain(P: PseudoEuclideanAlgebra, max_steps: int | None = None) -> list[PseudoEuclideanAlgebra]:
    """Reduce by isotropic central elements of A•A ∩ (A•A)⊥ until the product is zero.

    Returns the algebras visited, starting with P. Raises NonDegenerateProduct
    when a nonzero product with non-degenerate A•A is reached.
    """
    chain = [P]
    while span_product(chain[-1].algebra):
        if max_steps is not None and len(chain) > max_steps:
            raise ValueError(f"no zero product within {max_steps} steps")
        Q = chain[-1]
        prod = span_product(Q.algebra)
        radical = intersect(prod, orthogonal_complement(Q.form, prod), Q.dim)
        if not radical:
            raise NonDegenerateProduct("A•A is non-degenerate; the chain cannot continue")
        chain.append(isotropic_reduction(Q, radical[0]))
    return chain


def dual_basis_parities(space: SuperSpace, shift: bool) -> tuple[int, ...]:
    return tuple((x + 1) % 2 for x in space.parity) if shift else space.parity


def _cotangent(A: SuperAlgebra, star: SuperAlgebra, shift: bool) -> PseudoEuclideanAlgebra:
    """A ⊕ A* (or A ⊕ Π(A*)) with the hyperbolic pairing.

    Π acts by relabelling parities: the operators keep their dual-basis matrices.
    """
    if not check_left_leibniz(A) or not check_L(A):
        raise PreconditionUnverified("A must be a left-Leibniz L-superalgebra")
    rep = _star_contract(A, star)
    if not rep:
        raise StarPropertiesFail(f"⋆ fails {rep.first_failure().name}")
    n = A.dim
    p = A.space.parity
    q = dual_basis_parities(A.space, shift)
    space = SuperSpace(p + q)
    N = 2 * n
    Ld = [dual_map(L) for L in left_ops(A)]
    Lsd = [dual_map(L) for L in left_ops(star)]

    def lift(a: Sequence[Fraction], f: Sequence[Fraction]) -> Vector:
        return tuple(a) + tuple(f)

    zero = zero_vec(n)
    c = [[zero_vec(N) for _ in range(N)] for _ in range(N)]
    for i in range(n):
        for j in range(n):
            # an odd Π passing an operator of parity |v| costs (-1)^{|v|}
            koszul_i = sign(p[i]) if shift else 1
            koszul_j = sign(p[j]) if shift else 1
            c[i][j] = lift(A.c[i][j], zero)
            # v_i * f_j = (L_{v_i})^*(f_j)
            c[i][n + j] = lift(zero, vec_scale(koszul_i, Ld[i].matrix.column(j)))
            # f_i * v_j = -(-1)^{|f_i||v_j|} (L⋆_{v_j})^*(f_i)
            c[n + i][j] = lift(zero, vec_scale(-sign(q[i] * p[j]) * koszul_j, Lsd[j].matrix.column(i)))
    gram = [[ZERO] * N for _ in range(N)]
    for i in range(n):
        gram[n + i][i] = ONE
        gram[i][n + i] = Fraction(sign(p[i] * q[i]))
    algebra = SuperAlgebra(space, tuple(tuple(row) for row in c))
    return PseudoEuclideanAlgebra(algebra, HomBilinearForm(space, Matrix(gram, N), 1 if shift else 0))


def _star_contract(A: SuperAlgebra, star: SuperAlgebra) -> IdentityReport:
    """Identities (a), (c), (d), (e) of ⋆ against •, without needing a form."""
    n = A.dim
    p = A.space.parity
    e = _basis(n)
    pairs = list(cartesian(range(n), repeat=2))
    triples = list(cartesian(range(n), repeat=3))
    return combine(
        "star-contract",
        [
            _eq("(a)", (((i, j), vec_add(star.c[i][j], vec_scale(sign(p[i] * p[j]), star.c[j][i]))) for i, j in pairs)),
            _eq("(c)", (((i, j, k), star.mul(e[i], star.c[j][k])) for i, j, k in triples)),
            _eq("(d)", (((i, j, k), A.mul(e[i], star.c[j][k])) for i, j, k in triples)),
            _eq(
                "(e)",
                (
                    ((i, j, k), vec_add(star.mul(A.c[i][j], e[k]), vec_scale(sign(p[i] * p[j]), star.mul(e[j], A.c[i][k]))))
                    for i, j, k in triples
                ),
            ),
        ],
    )


def tstar_extension(A: SuperAlgebra, star: SuperAlgebra) -> PseudoEuclideanAlgebra:
    return _cotangent(A, star, shift=False)


def pi_tstar_extension(A: SuperAlgebra, star: SuperAlgebra) -> PseudoEuclideanAlgebra:
    return _cotangent(A, star, shift=True)


def triangle_product(A: SuperAlgebra, star: SuperAlgebra, T: PseudoEuclideanAlgebra) -> SuperAlgebra:
    """(v+g)▷(w+h) = v⋆w - g∘R_w + (-1)^{|v||w|} h∘R_v on the cotangent basis."""
    n = A.dim
    N = 2 * n
    q = T.space.parity
    R = right_ops(A)
    zero = zero_vec(n)

    def compose(f_index: int, op: Endo) -> Vector:
        # the functional f_index ∘ op, in the dual basis: row f_index of op
        return tuple(op.matrix.rows[f_index])

    c = [[zero_vec(N) for _ in range(N)] for _ in range(N)]
    for a in range(n):
        for b in range(n):
            c[a][b] = tuple(star.c[a][b]) + zero
            c[n + a][b] = zero + vec_scale(-ONE, compose(a, R[b]))
            c[a][n + b] = zero + vec_scale(sign(q[a] * q[n + b]), compose(b, R[a]))
    return SuperAlgebra(T.space, tuple(tuple(r) for r in c))


def check_triangle_identity(A: SuperAlgebra, star: SuperAlgebra, T: PseudoEuclideanAlgebra) -> IdentityReport:
    """<X*Y, Z> = <X, Y▷Z> on basis triples of the cotangent algebra."""
    tri = triangle_product(A, star, T)
    N = T.dim
    e = _basis(N)
    form = T.form
    for x, y, z in cartesian(range(N), repeat=3):
        lhs = form(T.algebra.c[x][y], e[z])
        rhs = form(e[x], tri.c[y][z])
        if lhs != rhs:
            return IdentityReport("▷-pairing", False, (x, y, z), lhs - rhs)
    return passing("▷-pairing")


def build_dual_representation(P: PseudoEuclideanAlgebra) -> Representation:
    return dual_representation(P)


def tensor_construct(B: PseudoEuclideanAlgebra, H: SuperAlgebra, omega: HomBilinearForm) -> PseudoEuclideanAlgebra:
    """B ⊗ H with (u⊗a)•(v⊗b) = (-1)^{|a||v|} (u•v)⊗(ab), <u⊗a, v⊗b> = (-1)^{|a||v|} <u,v> Ω(a,b)."""
    if not check_associative(H):
        raise HNotAssociative("H is not associative")
    if not check_supercommutative(H):
        raise HNotAssociative("H is not supercommutative")
    if omega.parity != 0 or not check_form(omega.space, omega.gram, 0):
        raise OmegaNotInvariant("Ω must be an even non-degenerate super-symmetric form")
    h = H.dim
    eh = _basis(h)
    for a, b, cc in cartesian(range(h), repeat=3):
        if omega(H.c[a][b], eh[cc]) != omega(eh[a], H.c[b][cc]):
            raise OmegaNotInvariant(f"Ω(ab,c) != Ω(a,bc) at {(a, b, cc)}")
    nb = B.dim
    pb = B.space.parity
    ph = H.space.parity
    idx = [(i, s) for i in range(nb) for s in range(h)]
    N = len(idx)
    space = SuperSpace((pb[i] + ph[s]) % 2 for i, s in idx)
    pos = {key: k for k, key in enumerate(idx)}
    c = [[zero_vec(N) for _ in range(N)] for _ in range(N)]
    gram = [[ZERO] * N for _ in range(N)]
    for (i, a), (j, b) in cartesian(idx, repeat=2):
        sgn = sign(ph[a] * pb[j])
        uv = B.algebra.c[i][j]
        ab = H.c[a][b]
        out = [ZERO] * N
        for k, x in enumerate(uv):
            if x:
                for t, y in enumerate(ab):
                    if y:
                        out[pos[(k, t)]] += sgn * x * y
        c[pos[(i, a)]][pos[(j, b)]] = tuple(out)
        gram[pos[(i, a)]][pos[(j, b)]] = sgn * B.form.gram.rows[i][j] * omega.gram.rows[a][b]
    algebra = SuperAlgebra(space, tuple(tuple(r) for r in c))
    return PseudoEuclideanAlgebra(algebra, HomBilinearForm(space, Matrix(gram, N), B.form.parity))


__all__ = [
    "EVEN_EVEN",
    "EVEN_ODD",
    "ExtensionData",
    "HNotAssociative",
    "KINDS",
    "NonDegenerateProduct",
    "ODD_EVEN",
    "ODD_ODD",
    "OmegaNotInvariant",
    "OutsideExtensionTables",
    "SplitResult",
    "StarPropertiesFail",
    "build_dual_representation",
    "change_basis",
    "check_admissible",
    "check_even_admissible",
    "check_odd_admissible_even_form",
    "check_odd_admissible_odd_form",
    "check_triangle_identity",
    "double_extend",
    "kind_for",
    "pi_tstar_extension",
    "reduction_chain",
    "split_double_extension",
    "tensor_construct",
    "triangle_product",
    "tstar_extension",
]

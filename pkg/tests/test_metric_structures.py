from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov_forge.algebra_kernel import SuperAlgebra, commutator
from novikov_forge.catalog import instantiate
from novikov_forge.exact_core import Matrix, unit_vec
from novikov_forge.metric_structures import (
    MilnorDecomposition,
    NotAdmissible,
    NotMilnor,
    PreconditionUnverified,
    PseudoEuclideanAlgebra,
    Representation,
    SingularForm,
    adjoint_representation,
    center_of_minus,
    check_left_mul_antisymmetric,
    check_phi_isomorphism,
    check_pseudo_euclidean_novikov,
    check_representation,
    check_star_properties,
    check_vanishing_lemma,
    dual_representation,
    is_flat,
    isotropic_reduction,
    levi_civita,
    milnor_decomposition,
    star_product,
)
from novikov_forge.superspace_core import Endo, HomBilinearForm, SuperSpace

from helpers import trivial

E = lambda n, i: unit_vec(n, i)  # noqa: E731

A32 = instantiate("A3_2", {"lam": 1, "eps": 1})  # basis e1 e2 f1
A35 = instantiate("A3_5", {"lam": 1})  # basis e1 e2 e3
A22 = instantiate("A2_2", {"alpha": 1})  # basis e1 | f1
A48 = instantiate("A4_8", {"a": 1, "alpha": 2, "eps": 1, "rho": 1})
A414 = instantiate("A4_14", {"a": 1, "alpha": 1})


def with_form(P, rows):
    return PseudoEuclideanAlgebra(P.algebra, HomBilinearForm.from_rows(P.space, rows, P.form.parity))


def test_left_mul_antisymmetric_examples():
    assert check_left_mul_antisymmetric(trivial((0, 0), gram=[[1, 0], [0, 1]]))
    assert check_left_mul_antisymmetric(instantiate("A4_2:form1", {"lam": 1, "eps": 1}))
    assert not check_left_mul_antisymmetric(with_form(A32, [[1, 0, 0], [0, 2, 0], [0, 0, 1]]))


def test_suite_on_trivial_and_mutations_of_A48():
    assert check_pseudo_euclidean_novikov(trivial((1, 1), gram_terms=[(-1, 0, 1)]))
    space = A48.space
    n = A48.dim
    mutations = 0
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if (space.parity[i] + space.parity[j]) % 2 != space.parity[k]:
                    continue
                entries = [(a, b, c, x) for a, b, c, x in A48.algebra.entries()] + [(i, j, k, 1)]
                P = PseudoEuclideanAlgebra(SuperAlgebra.from_entries(space, entries), A48.form)
                rep = check_pseudo_euclidean_novikov(P)
                assert not rep
                assert rep.first_failure().name != rep.name
                mutations += 1
    assert mutations == 64


def test_vanishing_lemma_examples():
    assert check_vanishing_lemma(A48)
    assert check_vanishing_lemma(trivial((0,), gram=[[1]]))
    assert check_vanishing_lemma(A35)
    bad = with_form(A32, [[1, 0, 0], [0, 2, 0], [0, 0, 1]])
    with pytest.raises(PreconditionUnverified):
        check_vanishing_lemma(bad)


def test_levi_civita_examples():
    triv = trivial((0, 0), gram=[[0, 1], [1, 0]])
    assert levi_civita(triv.algebra, triv.form).is_trivial()
    product = levi_civita(commutator(A35.algebra), A35.form)
    assert product == A35.algebra
    assert product.c[0][0] == E(3, 1)


def test_levi_civita_refusals():
    with pytest.raises(SingularForm):
        levi_civita(commutator(A32.algebra), HomBilinearForm(A32.space, Matrix.zeros(3, 3), 0))
    not_lie = SuperAlgebra.from_table(SuperSpace((0, 0, 0)), {(0, 1): {0: 1}, (1, 0): {0: -1}, (1, 2): {1: 1}, (2, 1): {1: -1}})
    with pytest.raises(PreconditionUnverified, match="witness"):
        levi_civita(not_lie, A32.form)


def test_flatness_examples():
    assert is_flat(trivial((0,), gram=[[1]]))
    assert is_flat(A32)
    sl2 = SuperAlgebra.from_table(
        SuperSpace((0, 0, 0)), {(0, 1): {1: 2}, (1, 0): {1: -2}, (0, 2): {2: -2}, (2, 0): {2: 2}, (1, 2): {0: 1}, (2, 1): {0: -1}}
    )
    assert not is_flat(PseudoEuclideanAlgebra(sl2, A32.form))


def test_star_examples():
    assert star_product(trivial((0, 1), gram_terms=[(1, 0, 1)], form_parity=1)).is_trivial()
    star = star_product(A32)
    assert star.c[0][1] == E(3, 2) and star.c[1][0] == tuple(-x for x in E(3, 2))
    assert all(v == (F(0),) * 3 for v in star.c[2])
    s22 = star_product(A22)
    # <f1•f1, f1> = <e1, f1> = 1 = <f1, f1⋆f1> and <f1, e1> = 1, so f1⋆f1 = e1
    assert s22.c[1][1] == E(2, 0)


def test_star_properties_examples():
    assert check_star_properties(A32)
    assert check_star_properties(trivial((0, 0), gram=[[1, 0], [0, -1]]))
    mutated = PseudoEuclideanAlgebra(SuperAlgebra.from_entries(A32.space, A32.algebra.entries() + [(0, 0, 1, 1)]), A32.form)
    assert not check_star_properties(mutated)


def test_milnor_examples():
    m = milnor_decomposition(A32)
    assert isinstance(m, MilnorDecomposition)
    assert list(m.ideal_I) == [E(3, 0), E(3, 1)] and list(m.complement) == [E(3, 2)]
    t = milnor_decomposition(trivial((0, 0), gram=[[1, 0], [0, 1]]))
    assert t.ideal_I == () and len(t.complement) == 2
    nm = milnor_decomposition(A35)
    assert isinstance(nm, NotMilnor) and not nm and nm.witness == E(3, 2)


def test_center_examples():
    assert len(center_of_minus(trivial((0, 1), gram_terms=[(1, 0, 1)], form_parity=1))) == 2
    assert center_of_minus(A32) == []
    assert E(3, 2) in center_of_minus(A35)


def test_isotropic_reduction_examples():
    R = isotropic_reduction(A35, E(3, 2))
    assert R.dim == 1 and R.algebra.is_trivial() and R.form.gram == Matrix([[1]])
    A47 = instantiate("A4_7", {"a": 1, "alpha": 1, "beta": 0, "eps": 1})  # basis e e1 e2 d
    R = isotropic_reduction(A47, E(4, 0))
    assert R.dim == 2 and R.algebra.is_trivial() and R.form.gram == Matrix([[1, 0], [0, 1]])
    A49 = instantiate("A4_9", {"a": 1, "alpha": 0})
    step = isotropic_reduction(A49, E(4, 0))
    assert step.dim == 2
    if not step.algebra.is_trivial():
        step = isotropic_reduction(step, E(2, 0))
    assert step.algebra.is_trivial()
    with pytest.raises(NotAdmissible):
        isotropic_reduction(A32, E(3, 0))


def test_representation_examples():
    for P in (A32, A414, A22):
        assert check_representation(P.algebra, adjoint_representation(P.algebra))
        assert check_representation(P.algebra, dual_representation(P))
    zeros = tuple(Endo.zero(A32.space, 0) for _ in range(3))
    zero = Representation(A32.space, zeros, zeros)
    assert check_representation(A32.algebra, zero)


def test_phi_examples():
    assert check_phi_isomorphism(trivial((0, 0), gram=[[1, 0], [0, 1]]))
    assert check_phi_isomorphism(A32)
    assert check_phi_isomorphism(A414)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([1, 2, -3, F(1, 2)]), st.sampled_from([1, -1]))
def test_levi_civita_round_trip_in_lambda(lam, eps):
    P = instantiate("A3_2", {"lam": lam, "eps": eps})
    assert levi_civita(commutator(P.algebra), P.form) == P.algebra
    assert is_flat(P)

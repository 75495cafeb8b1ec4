from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from novikov_forge.exact_core import Matrix, unit_vec
from novikov_forge.superspace_core import (
    Endo,
    HomBilinearForm,
    NonHomogeneous,
    ParityMismatch,
    SuperSpace,
    adjoint,
    check_form,
    check_parity_dimension,
    gram_from_terms,
    is_antisymmetric,
    is_symmetric,
    orthogonal_complement,
    sign,
    supercommutator,
)


def form(parity, rows, fp):
    space = SuperSpace(parity)
    return HomBilinearForm.from_rows(space, rows, fp)


def test_space_basics():
    V = SuperSpace((0, 1, 1))
    assert V.sdim == (1, 2)
    assert V.vector_parity((F(0), F(1), F(2))) == 1
    assert V.vector_parity((F(0), F(0), F(0))) is None
    with pytest.raises(NonHomogeneous):
        V.vector_parity((F(1), F(1), F(0)))


def test_check_form_examples():
    assert check_form(SuperSpace((0, 0, 0)), Matrix.identity(3), 0)
    assert check_form(SuperSpace((1, 1)), Matrix([[0, 1], [-1, 0]]), 0)
    assert check_form(SuperSpace((0, 1)), Matrix([[0, 1], [1, 0]]), 1)


@pytest.mark.parametrize(
    "parity, rows, fp, violation",
    [
        ((0, 1), [[0, 1], [1, 0]], 0, "grading"),
        ((1, 1), [[0, 1], [1, 0]], 0, "super-symmetry"),
        ((0, 0), [[1, 1], [1, 1]], 0, "non-degeneracy"),
    ],
)
def test_check_form_violations(parity, rows, fp, violation):
    rep = check_form(SuperSpace(parity), Matrix(rows, len(parity)), fp)
    assert not rep and rep.violation == violation


def test_parity_dimension():
    assert check_parity_dimension(HomBilinearForm(SuperSpace((0, 0, 0, 1, 1)), Matrix.identity(5), 0))
    assert check_parity_dimension(form((0, 1), [[0, 1], [1, 0]], 1))
    assert not check_parity_dimension(HomBilinearForm(SuperSpace((0, 0, 1)), Matrix.identity(3), 0))


def test_orthogonal_complement_examples():
    space = SuperSpace((0, 0, 0))
    B = HomBilinearForm(space, gram_from_terms(space, [(1, 0, 2), (1, 1, 1)]), 0)
    whole = [unit_vec(3, i) for i in range(3)]
    assert orthogonal_complement(B, whole) == []
    assert len(orthogonal_complement(B, [])) == 3
    assert orthogonal_complement(B, [unit_vec(3, 1), unit_vec(3, 2)]) == [unit_vec(3, 2)]


def test_gram_from_terms_signs():
    space = SuperSpace((1, 1))
    g = gram_from_terms(space, [(-1, 0, 1)])
    assert g == Matrix([[0, 1], [-1, 0]])
    mixed = SuperSpace((0, 1))
    assert gram_from_terms(mixed, [(1, 0, 1)]) == Matrix([[0, 1], [1, 0]])


def test_adjoint_examples():
    B = form((0, 0), [[1, 0], [0, 1]], 0)
    assert adjoint(B, Endo.identity(B.space)).matrix == Matrix.identity(2)
    f = Endo.from_rows(B.space, [[0, 1], [-1, 0]], 0)
    assert adjoint(B, f).matrix == (-f).matrix
    assert is_antisymmetric(B, f)


def test_adjoint_of_odd_map_on_hyperbolic_11():
    B = form((0, 1), [[0, 1], [1, 0]], 1)
    xi = Endo.from_rows(B.space, [[0, 2], [3, 0]], 1)
    xs = adjoint(B, xi)
    p = B.space.parity
    for i in range(2):
        for j in range(2):
            u, v = unit_vec(2, i), unit_vec(2, j)
            assert B(xi(u), v) == sign(p[i]) * B(u, xs(v))


def test_symmetry_examples():
    B = form((0, 0), [[1, 0], [0, 1]], 0)
    zero = Endo.zero(B.space)
    assert is_antisymmetric(B, zero) and is_symmetric(B, zero)
    odd = form((1, 1), [[0, -1], [1, 0]], 0)
    assert is_antisymmetric(odd, Endo.from_rows(odd.space, [[3, 0], [0, -3]], 0))


def test_endo_rejects_wrong_parity_entries():
    with pytest.raises(ParityMismatch):
        Endo.from_rows(SuperSpace((0, 1)), [[1, 1], [0, 0]], 0)


@st.composite
def odd_hyperbolic_pair(draw):
    """An odd form on (1|1) and a homogeneous endomorphism of random parity."""
    a = draw(st.integers(-3, 3).filter(bool))
    par = draw(st.integers(0, 1))
    vals = draw(st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    rows = [[vals[0], 0], [0, vals[1]]] if par == 0 else [[0, vals[0]], [vals[1], 0]]
    return form((0, 1), [[0, a], [a, 0]], 1), Endo.from_rows(SuperSpace((0, 1)), rows, par)


@settings(max_examples=60, deadline=None)
@given(odd_hyperbolic_pair())
def test_adjoint_is_an_involution(pair):
    B, f = pair
    assert adjoint(B, adjoint(B, f)).matrix == f.matrix


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-2, 2), min_size=4, max_size=4), st.lists(st.integers(-2, 2), min_size=4, max_size=4))
def test_supercommutator_is_graded_antisymmetric(a, b):
    V = SuperSpace((0, 1))
    f = Endo.from_rows(V, [[0, a[0]], [a[1], 0]], 1)
    g = Endo.from_rows(V, [[b[0], 0], [0, b[1]]], 0)
    h = Endo.from_rows(V, [[0, a[2]], [a[3], 0]], 1)
    for x, y in ((f, g), (f, h), (g, g)):
        assert supercommutator(x, y).matrix == -supercommutator(y, x).matrix.scale(sign(x.parity * y.parity))

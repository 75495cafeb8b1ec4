"""Small bases, a seeded extension-data sampler and report helpers."""

from __future__ import annotations

import random
from fractions import Fraction

from novikov_forge.algebra_kernel import SuperAlgebra
from novikov_forge.catalog import instantiate
from novikov_forge.exact_core import Matrix, zero_vec
from novikov_forge.extensions import ExtensionData, kind_for
from novikov_forge.metric_structures import PseudoEuclideanAlgebra
from novikov_forge.superspace_core import Endo, HomBilinearForm, SuperSpace, adjoint, gram_from_terms

F = Fraction


def trivial(parity, gram_terms=None, gram=None, form_parity=0) -> PseudoEuclideanAlgebra:
    space = SuperSpace(parity)
    g = Matrix(gram, space.dim) if gram is not None else gram_from_terms(space, gram_terms)
    return PseudoEuclideanAlgebra(SuperAlgebra.zero(space), HomBilinearForm(space, g, form_parity))


def extension_bases() -> list[tuple[str, PseudoEuclideanAlgebra]]:
    """Trivial bases of every small shape plus a few catalog algebras."""
    return [
        ("trivial(1|0)", trivial((0,), gram=[[1]])),
        ("trivial(2|0)", trivial((0, 0), gram=[[1, 0], [0, 1]])),
        ("trivial(2|0)h", trivial((0, 0), gram=[[0, 1], [1, 0]])),
        ("trivial(0|2)", trivial((1, 1), gram_terms=[(-1, 0, 1)])),
        ("trivial(1|1)", trivial((0, 1), gram_terms=[(1, 0, 1)], form_parity=1)),
        ("A2_2", instantiate("A2_2", {"alpha": 1})),
        ("A3_3", instantiate("A3_3", {"lam": 1})),
        ("A3_2", instantiate("A3_2", {"lam": 1, "eps": 1})),
        ("A3_5", instantiate("A3_5", {"lam": 2})),
    ]


def _rand_endo(space: SuperSpace, parity: int, rng: random.Random, density: float) -> Endo:
    n = space.dim
    p = space.parity
    rows = [
        [
            rng.choice([-1, 1, 2]) if p[k] == (p[i] + parity) % 2 and rng.random() < density else 0
            for i in range(n)
        ]
        for k in range(n)
    ]
    return Endo.from_rows(space, rows, parity)


def _rand_even_vec(space: SuperSpace, rng: random.Random):
    return tuple(F(rng.choice([-1, 0, 0, 1])) if q == 0 else F(0) for q in space.parity)


def sample_data(base: PseudoEuclideanAlgebra, ext_parity: int, rng: random.Random) -> ExtensionData:
    """Random candidate data; D is antisymmetrised, so only the other equations can fail."""
    space = base.space
    kind = kind_for(ext_parity, base.form.parity)
    if rng.random() < 0.7:
        M = _rand_endo(space, ext_parity, rng, 0.4)
        D = (M - adjoint(base.form, M)).scale(F(1, 2))
    else:
        D = Endo.zero(space, ext_parity)
    xi = _rand_endo(space, ext_parity, rng, 0.3) if rng.random() < 0.5 else Endo.zero(space, ext_parity)
    b0 = _rand_even_vec(space, rng) if rng.random() < 0.6 else zero_vec(base.dim)
    c0 = _rand_even_vec(space, rng) if ext_parity else None
    return ExtensionData(base, D, xi, b0, c0, kind)


def mutate(data: ExtensionData, rng: random.Random) -> ExtensionData:
    """Perturb one ingredient of the data while keeping parities legal."""
    space = data.base.space
    par = data.D.parity if not data.D.is_zero() else (1 if data.c0 is not None else 0)
    choice = rng.choice(["xi", "b0", "c0"] if data.c0 is not None else ["xi", "b0"])
    if choice == "xi":
        bump = _rand_endo(space, par, rng, 0.6)
        xi = data.xi + bump if not data.xi.is_zero() else bump
        return ExtensionData(data.base, data.D, xi, data.b0, data.c0, data.kind)
    bump = _rand_even_vec(space, rng)
    if choice == "b0":
        b0 = tuple(x + y for x, y in zip(data.b0, bump))
        return ExtensionData(data.base, data.D, data.xi, b0, data.c0, data.kind)
    c0 = tuple(x + y for x, y in zip(data.c0, bump))
    return ExtensionData(data.base, data.D, data.xi, data.b0, c0, data.kind)


def report_names(report) -> list[str]:
    out = [report.name]
    for child in report.children:
        out.extend(report_names(child))
    return out


def failed_names(report) -> list[str]:
    out = [] if report.passed or report.children else [report.name]
    for child in report.children:
        out.extend(failed_names(child))
    return out

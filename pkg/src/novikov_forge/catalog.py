"""Every pseudo-Euclidean Novikov superalgebra of dimension at most four.

Each family is a product table and a form written in the basis order of its
classification statement. Forms are given as symmetric-power terms and turned
into raw Gram matrices by ``gram_from_terms``, so the sign translation happens
in exactly one place.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from typing import Callable, Iterable, Mapping, Sequence

from .algebra_kernel import (
    IdentityReport,
    SuperAlgebra,
    combine,
    is_nilpotent,
    left_mul,
    normalizers,
    span_product,
)
from .exact_core import (
    ZERO,
    Matrix,
    Vector,
    char_poly,
    coordinates,
    intersect,
    mat_det,
    mat_kernel,
    rational_roots,
    to_rational,
    unit_vec,
)
from .metric_structures import (
    PseudoEuclideanAlgebra,
    center_of_minus,
    check_pseudo_euclidean_novikov,
    check_vanishing_lemma,
)
from .superspace_core import HomBilinearForm, SuperSpace, gram_from_terms, orthogonal_complement


class BadParams(ValueError):
    pass


class UnknownFamily(KeyError):
    pass


class GridTooLarge(ValueError):
    pass


NONZERO = "nonzero"
FREE = "free"
SIGN = "sign"

SCALAR_GRID = {
    "lam": (1, 2, -3),
    "a": (1, 2, -3),
    "b": (1, 2, -3),
    "alpha": (0, 1, -2),
    "beta": (0, 1, -2),
    "gamma": (0, 1, -2),
}
SIGN_GRID = (1, -1)

Table = dict[tuple[int, int], dict[int, Fraction]]
Terms = list[tuple[Fraction, int, int]]


@dataclass(frozen=True)
class FamilySpec:
    family_id: str
    parity: tuple[int, ...]
    form_parity: int
    params: tuple[tuple[str, str], ...]
    product_degenerate: bool
    nilpotent: bool | None
    nilpotent_iff_zero: str | None
    basis: tuple[str, ...]
    build: Callable[[Mapping[str, Fraction]], tuple[Table, Terms]] = field(repr=False, compare=False)
    # some families of the degenerate section leave it at special parameters
    degenerate_rule: tuple[str, Callable[[Mapping[str, Fraction]], bool]] | None = field(
        default=None, repr=False, compare=False
    )

    @property
    def sdim(self) -> tuple[int, int]:
        odd = sum(self.parity)
        return len(self.parity) - odd, odd

    @property
    def base_id(self) -> str:
        return self.family_id.split(":")[0]

    def declared_degenerate(self, params: Mapping[str, Fraction]) -> bool:
        if self.degenerate_rule is not None:
            return self.degenerate_rule[1](params)
        return self.product_degenerate

    def declared_nilpotent(self, params: Mapping[str, Fraction]) -> bool:
        if self.nilpotent_iff_zero is not None:
            return params[self.nilpotent_iff_zero] == 0
        return bool(self.nilpotent)

    def describe(self) -> dict:
        if self.nilpotent_iff_zero is not None:
            nil: object = f"iff {self.nilpotent_iff_zero} = 0"
        else:
            nil = self.nilpotent
        return {
            "family": self.family_id,
            "sdim": f"{self.sdim[0]}|{self.sdim[1]}",
            "form": "odd" if self.form_parity else "even",
            "basis": list(self.basis),
            "params": {name: dom for name, dom in self.params},
            "section": "degenerate" if self.product_degenerate else "non-degenerate",
            "product_degenerate": self.degenerate_rule[0] if self.degenerate_rule else self.product_degenerate,
            "nilpotent": nil,
        }


def _family(
    family_id: str,
    basis: str,
    form_parity: int,
    params: str,
    degenerate: bool,
    build: Callable,
    nilpotent: bool | None = None,
    nilpotent_iff_zero: str | None = None,
    degenerate_rule: tuple[str, Callable] | None = None,
) -> FamilySpec:
    """``basis`` reads like the tables: "e1 e2 | f1" puts f1 in the odd part."""
    even, _, odd = basis.partition("|")
    names = tuple(even.split()) + tuple(odd.split())
    parity = (0,) * len(even.split()) + (1,) * len(odd.split())
    plist = []
    for token in params.split():
        name, _, dom = token.partition(":")
        plist.append((name, dom or FREE))
    return FamilySpec(
        family_id, parity, form_parity, tuple(plist), degenerate, nilpotent, nilpotent_iff_zero, names, build, degenerate_rule
    )


def _not_both_zero(x: str, y: str) -> tuple[str, Callable]:
    return (f"unless {x} = {y} = 0", lambda p: p[x] != 0 or p[y] != 0)


def _diag_terms(n: int, coeffs: Sequence[object]) -> Terms:
    return [(c, i, i) for i, c in enumerate(coeffs)]


def _build_catalog() -> list[FamilySpec]:
    fams: list[FamilySpec] = []
    add = fams.append

    # trivial algebras carry the simplest form of their parity class
    add(_family("A2_1", "e1 e2", 0, "eps:sign", False, lambda p: ({}, [(1, 0, 0), (p["eps"], 1, 1)]), nilpotent=True))
    # basis (e1 | f1): f1•f1 = αe1, form e1*⊙f1*
    add(_family("A2_2", "e1 | f1", 1, "alpha:nonzero", True, lambda p: ({(1, 1): {0: p["alpha"]}}, [(1, 0, 1)]), nilpotent=True))
    add(_family("A3_1", "e1 e2 e3", 0, "", False, lambda p: ({}, _diag_terms(3, (1, 1, 1))), nilpotent=True))
    # basis (e1, e2, f1): f1•e1 = λe2, f1•e2 = -ελe1
    add(
        _family(
            "A3_2",
            "e1 e2 f1",
            0,
            "lam:nonzero eps:sign",
            False,
            lambda p: (
                {(2, 0): {1: p["lam"]}, (2, 1): {0: -p["eps"] * p["lam"]}},
                _diag_terms(3, (1, p["eps"], 1)),
            ),
            nilpotent=False,
        )
    )
    # basis (f1 | e1, e2): -e1*⊙e2* + f1*⊗f1*
    odd_pair_form = [(-1, 1, 2), (1, 0, 0)]
    add(
        _family(
            "A3_3",
            "f1 | e1 e2",
            0,
            "lam:nonzero",
            False,
            lambda p: ({(0, 1): {1: p["lam"]}, (0, 2): {2: -p["lam"]}}, odd_pair_form),
            nilpotent=False,
        )
    )
    add(
        _family(
            "A3_4",
            "f1 | e1 e2",
            0,
            "lam:nonzero",
            False,
            lambda p: ({(0, 1): {2: p["lam"]}, (0, 2): {1: 1}}, odd_pair_form),
            nilpotent=False,
        )
    )
    # basis (e1, e2, e3): e1•e1 = λe2, e1•e2 = -λe3, form e1⊙e3 + e2⊗e2
    add(
        _family(
            "A3_5",
            "e1 e2 e3",
            0,
            "lam:nonzero",
            True,
            lambda p: ({(0, 0): {1: p["lam"]}, (0, 1): {2: -p["lam"]}}, [(1, 0, 2), (1, 1, 1)]),
            nilpotent=True,
        )
    )
    # basis (e1 | e2, e3): e1•e2 = λe3, form e1⊗e1 + e2⊙e3
    add(
        _family(
            "A3_6",
            "e1 | e2 e3",
            0,
            "lam:nonzero",
            True,
            lambda p: ({(0, 1): {2: p["lam"]}}, [(1, 0, 0), (1, 1, 2)]),
            nilpotent=True,
        )
    )
    add(_family("A4_1", "e1 e2 e3 e4", 0, "", False, lambda p: ({}, _diag_terms(4, (1, 1, 1, 1))), nilpotent=True))

    def a42(p):
        return {(2, 0): {1: p["lam"]}, (2, 1): {0: -p["eps"] * p["lam"]}}

    # basis (e1, e2, f1, f2)
    add(
        _family(
            "A4_2:form1", "e1 e2 f1 f2", 0, "lam:nonzero eps:sign", False,
            lambda p: (a42(p), _diag_terms(4, (1, p["eps"], 1, 1))), nilpotent=False,
        )
    )
    add(
        _family(
            "A4_2:form2", "e1 e2 f1 f2", 0, "lam:nonzero eps:sign alpha", False,
            lambda p: (
                a42(p),
                [(1, 0, 0), (p["eps"], 1, 1), (1, 2, 2), (-p["alpha"], 2, 3), (p["alpha"] ** 2 - 1, 3, 3)],
            ),
            nilpotent=False,
        )
    )
    add(
        _family(
            "A4_2:form3", "e1 e2 f1 f2", 0, "lam:nonzero eps:sign", False,
            lambda p: (a42(p), _diag_terms(4, (1, p["eps"], -1, 1))), nilpotent=False,
        )
    )

    # basis (f1, f2 | e1, e2): products on indices 0,1 | 2,3
    def a43(p):
        return {(0, 2): {3: p["lam"]}, (0, 3): {2: -p["eps"] * p["lam"]}}

    add(
        _family(
            "A4_3:form1", "f1 f2 | e1 e2", 0, "lam:nonzero eps:sign", False,
            lambda p: (a43(p), [(-1, 2, 3), (1, 0, 0), (1, 1, 1)]), nilpotent=False,
        )
    )
    add(
        _family(
            "A4_3:form2", "f1 f2 | e1 e2", 0, "lam:nonzero eps:sign alpha", False,
            lambda p: (a43(p), [(1, 2, 3), (1, 0, 0), (-p["alpha"], 0, 1), (p["alpha"] ** 2 - 1, 1, 1)]),
            nilpotent=False,
        )
    )

    def a44(p):
        return {(0, 2): {2: p["lam"]}, (0, 3): {3: -p["lam"]}}

    def a45(p):
        return {(0, 2): {3: p["lam"]}, (0, 3): {2: 1}}

    for fid, prod in (("A4_4", a44), ("A4_5", a45)):
        add(
            _family(
                f"{fid}:form1", "f1 f2 | e1 e2", 0, "lam:nonzero eps:sign", False,
                lambda p, prod=prod: (prod(p), [(-1, 2, 3), (p["eps"], 0, 0), (1, 1, 1)]), nilpotent=False,
            )
        )
        add(
            _family(
                f"{fid}:form2", "f1 f2 | e1 e2", 0, "lam:nonzero eps:sign", False,
                lambda p, prod=prod: (prod(p), [(-1, 2, 3), (1, 0, 0), (p["eps"], 1, 1)]), nilpotent=False,
            )
        )
    add(
        _family(
            "A4_5:formgamma", "f1 f2 | e1 e2", 0, "lam:nonzero gamma", False,
            lambda p: (
                a45(p),
                [(-1, 2, 3), (1, 0, 0), (-p["gamma"], 0, 1), (p["gamma"] ** 2 + 1, 1, 1)],
            ),
            nilpotent=False,
        )
    )
    # basis (e1, f1 | e2, f2): f1•e1 = λe1, f1•e2 = -λe2, form e1⊙e2 + f1⊙f2
    add(
        _family(
            "A4_6", "e1 f1 | e2 f2", 1, "lam:nonzero", False,
            lambda p: ({(1, 0): {0: p["lam"]}, (1, 2): {2: -p["lam"]}}, [(1, 0, 2), (1, 1, 3)]),
            nilpotent=False,
        )
    )
    # basis (e, e1, e2, d)
    add(
        _family(
            "A4_7", "e e1 e2 d", 0, "a alpha beta eps:sign", True,
            lambda p: (
                {
                    (3, 1): {2: -p["a"] * p["eps"], 0: -p["alpha"]},
                    (3, 2): {1: p["a"], 0: -p["beta"] * p["eps"]},
                    (3, 3): {1: p["alpha"], 2: p["beta"]},
                },
                [(1, 0, 3), (1, 1, 1), (p["eps"], 2, 2)],
            ),
            nilpotent_iff_zero="a",
            # for a != 0, A•A has Gram diag(a²ε, a²) in the basis d•e1, d•e2
            degenerate_rule=(
                "iff a = 0 and (alpha, beta) != (0, 0)",
                lambda p: p["a"] == 0 and (p["alpha"] != 0 or p["beta"] != 0),
            ),
        )
    )
    add(
        _family(
            "A4_8", "e e1 e2 d", 0, "a:nonzero alpha eps:sign rho:sign", True,
            lambda p: (
                {
                    (2, 1): {0: -p["a"] * p["eps"]},
                    (2, 3): {1: p["a"]},
                    (3, 1): {0: -p["alpha"] * p["eps"]},
                    (3, 3): {1: p["alpha"]},
                },
                [(1, 0, 3), (p["eps"], 1, 1), (p["rho"], 2, 2)],
            ),
            nilpotent=True,
        )
    )
    add(
        _family(
            "A4_9", "e e1 e2 d", 0, "a:nonzero alpha", True,
            lambda p: (
                {
                    (2, 2): {0: -p["a"]},
                    (2, 3): {1: p["a"]},
                    (3, 2): {0: -p["alpha"]},
                    (3, 3): {1: p["alpha"]},
                },
                [(1, 0, 3), (1, 1, 2)],
            ),
            nilpotent=True,
        )
    )
    # basis (e, d | e1, e2)
    add(
        _family(
            "A4_10", "e d | e1 e2", 0, "a", True,
            lambda p: ({(1, 2): {2: p["a"]}, (1, 3): {3: -p["a"]}}, [(1, 0, 1), (-1, 2, 3)]),
            nilpotent_iff_zero="a",
            # A•A = span(e1, e2) is a hyperbolic plane whenever a != 0
            degenerate_rule=("never", lambda p: False),
        )
    )
    add(
        _family(
            "A4_11", "e d | e1 e2", 0, "a:nonzero", True,
            lambda p: ({(3, 3): {0: -p["a"]}, (3, 1): {2: p["a"]}}, [(1, 0, 1), (-1, 2, 3)]),
            nilpotent=True,
        )
    )
    # basis (e1, e2 | e, d)
    add(
        _family(
            "A4_12", "e1 e2 | e d", 0, "alpha beta eps:sign", True,
            lambda p: (
                {(0, 3): {2: p["alpha"]}, (1, 3): {2: p["eps"] * p["beta"]}},
                [(1, 0, 0), (p["eps"], 1, 1), (-1, 2, 3)],
            ),
            nilpotent=True,
            degenerate_rule=_not_both_zero("alpha", "beta"),
        )
    )
    add(
        _family(
            "A4_13", "e1 e2 | e d", 0, "lam:nonzero alpha", True,
            lambda p: (
                {(1, 3): {2: p["alpha"]}, (3, 3): {0: p["lam"]}, (3, 1): {2: -p["lam"]}},
                [(1, 0, 1), (-1, 2, 3)],
            ),
            nilpotent=True,
        )
    )
    # basis (d, e1 | f1, e)
    add(
        _family(
            "A4_14", "d e1 | f1 e", 1, "a alpha", True,
            lambda p: (
                {(0, 1): {1: p["a"]}, (0, 2): {2: -p["a"], 3: -p["alpha"]}, (0, 0): {1: p["alpha"]}},
                [(1, 3, 0), (1, 1, 2)],
            ),
            nilpotent_iff_zero="a",
            # for a != 0, A•A = span(e1, a f1 + α e) pairs e1 with f1
            degenerate_rule=("iff a = 0 and alpha != 0", lambda p: p["a"] == 0 and p["alpha"] != 0),
        )
    )
    # basis (e, e1 | f1, d)
    odd_ext_form = [(1, 0, 3), (1, 1, 2)]
    add(
        _family(
            "A4_15", "e e1 | f1 d", 1, "alpha beta", True,
            lambda p: ({(3, 2): {0: p["alpha"]}, (2, 3): {0: p["beta"]}, (3, 3): {1: p["alpha"]}}, odd_ext_form),
            nilpotent=True,
            degenerate_rule=_not_both_zero("alpha", "beta"),
        )
    )
    add(
        _family(
            "A4_16", "e e1 | f1 d", 1, "a:nonzero", True,
            lambda p: ({(1, 3): {2: p["a"]}, (1, 1): {0: -p["a"]}}, odd_ext_form),
            nilpotent=True,
        )
    )
    add(
        _family(
            "A4_17", "e e1 | f1 d", 1, "a:nonzero alpha beta", True,
            lambda p: (
                {
                    (3, 2): {0: p["alpha"]},
                    (2, 3): {1: p["a"], 0: p["beta"]},
                    (2, 2): {0: p["a"]},
                    (3, 3): {1: p["alpha"]},
                },
                odd_ext_form,
            ),
            nilpotent=True,
        )
    )
    # basis (d, e1 | f1, e)
    add(
        _family(
            "A4_18", "d e1 | f1 e", 1, "alpha:nonzero beta:nonzero", True,
            lambda p: (
                {(0, 2): {3: -p["beta"]}, (2, 2): {1: p["alpha"]}, (0, 0): {1: p["beta"]}},
                [(1, 0, 3), (1, 1, 2)],
            ),
            nilpotent=True,
        )
    )
    add(
        _family(
            "A4_19", "e e1 | f1 d", 1, "alpha:nonzero lam:nonzero beta:nonzero a:nonzero b:nonzero", True,
            lambda p: (
                {
                    (3, 2): {1: p["b"], 0: p["beta"]},
                    (2, 3): {1: p["a"], 0: p["lam"]},
                    (2, 2): {1: p["alpha"], 0: p["a"]},
                    (3, 3): {1: p["beta"]},
                },
                odd_ext_form,
            ),
            nilpotent=True,
        )
    )
    return fams


_CATALOG = _build_catalog()
_BY_ID = {f.family_id: f for f in _CATALOG}


def catalog_families() -> list[FamilySpec]:
    return list(_CATALOG)


def lookup(family_id: str) -> FamilySpec:
    try:
        return _BY_ID[family_id]
    except KeyError:
        raise UnknownFamily(family_id) from None


def expand_family(family_id: str) -> list[FamilySpec]:
    """A bare id such as "A4_2" stands for all of its form variants."""
    if family_id in _BY_ID:
        return [_BY_ID[family_id]]
    variants = [f for f in _CATALOG if f.base_id == family_id]
    if not variants:
        raise UnknownFamily(family_id)
    return variants


def _check_params(spec: FamilySpec, params: Mapping[str, object]) -> dict[str, Fraction]:
    names = {n for n, _ in spec.params}
    extra = set(params) - names
    if extra:
        raise BadParams(f"{spec.family_id} does not take {sorted(extra)}")
    out = {}
    for name, dom in spec.params:
        if name not in params:
            raise BadParams(f"{spec.family_id} needs parameter {name}")
        try:
            value = to_rational(params[name])
        except (TypeError, ValueError) as exc:
            raise BadParams(f"{name}: {exc}") from None
        if dom == NONZERO and value == 0:
            raise BadParams(f"{spec.family_id} requires {name} != 0")
        if dom == SIGN and value not in (1, -1):
            raise BadParams(f"{name} must be +1 or -1")
        out[name] = value
    return out


def instantiate(family_id: str, params: Mapping[str, object] | None = None) -> PseudoEuclideanAlgebra:
    spec = lookup(family_id)
    p = _check_params(spec, params or {})
    table, terms = spec.build(p)
    space = SuperSpace(spec.parity)
    algebra = SuperAlgebra.from_table(space, table)
    gram = gram_from_terms(space, terms)
    return PseudoEuclideanAlgebra(algebra, HomBilinearForm(space, gram, spec.form_parity))


def default_grid(spec: FamilySpec) -> list[dict[str, Fraction]]:
    axes = []
    for name, dom in spec.params:
        values = SIGN_GRID if dom == SIGN else SCALAR_GRID[name]
        if dom == NONZERO:
            values = tuple(v for v in values if v != 0)
        elif dom == FREE and 0 not in values:
            # an unconstrained parameter also gets its degenerate value
            values = (0,) + tuple(values)
        axes.append([(name, Fraction(v)) for v in values])
    return [dict(point) for point in cartesian(*axes)]


def boundary_grid(spec: FamilySpec) -> list[dict[str, Fraction]]:
    """Points where exactly one nonzero-constrained parameter is set to zero.

    Only used for reporting on the ambiguous all-nonzero constraints.
    """
    out = []
    nonzero = [n for n, d in spec.params if d == NONZERO]
    for point in default_grid(spec)[:1]:
        for name in nonzero:
            q = dict(point)
            q[name] = Fraction(0)
            out.append(q)
    return out


def product_is_degenerate(P: PseudoEuclideanAlgebra) -> bool:
    prod = span_product(P.algebra)
    return bool(intersect(prod, orthogonal_complement(P.form, prod), P.dim))


@dataclass
class PointResult:
    family_id: str
    params: dict[str, Fraction]
    report: IdentityReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict:
        from .exact_core import format_rational

        return {
            "family": self.family_id,
            "params": {k: format_rational(v) for k, v in self.params.items()},
            "pass": self.passed,
            "report": self.report.to_dict(),
        }


@dataclass
class FamilyReport:
    family_id: str
    points: list[PointResult]
    exploratory: list[PointResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(p.passed for p in self.points)

    def to_dict(self) -> dict:
        return {
            "family": self.family_id,
            "pass": self.passed,
            "instances": len(self.points),
            "failures": [p.to_dict() for p in self.points if not p.passed],
            "exploratory": [{"params": p.to_dict()["params"], "pass": p.passed} for p in self.exploratory],
        }


def verify_point(family_id: str, params: Mapping[str, Fraction]) -> PointResult:
    spec = lookup(family_id)
    P = instantiate(family_id, params)
    suite = check_pseudo_euclidean_novikov(P)
    reports = [suite]
    if suite:
        reports.append(check_vanishing_lemma(P, verified=True))
        degenerate = product_is_degenerate(P)
        declared = spec.declared_degenerate(params)
        reports.append(IdentityReport("flag:product_degenerate", degenerate == declared, None, degenerate))
        nil = is_nilpotent(P.algebra)
        declared = spec.declared_nilpotent(params)
        reports.append(IdentityReport("flag:nilpotent", nil == declared, None, nil))
    return PointResult(family_id, dict(params), combine(family_id, reports))


def _verify_task(task: tuple[str, dict]) -> PointResult:
    return verify_point(*task)


def _run(tasks: list[tuple[str, dict]], jobs: int | None, seed: int | None = None) -> list[PointResult]:
    """Run tasks, optionally in a seeded submission order; results come back in task order."""
    order = list(range(len(tasks)))
    if seed is not None:
        random.Random(seed).shuffle(order)
    todo = [tasks[i] for i in order]
    if jobs is None or jobs <= 1 or len(todo) < 2:
        done = [_verify_task(t) for t in todo]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_verify_task, todo, chunksize=max(1, len(todo) // (4 * jobs))))
    out: list[PointResult] = [None] * len(tasks)  # type: ignore[list-item]
    for i, r in zip(order, done):
        out[i] = r
    return out


def verify_family(
    family_id: str,
    grid: Iterable[Mapping[str, object]] | None = None,
    jobs: int | None = 1,
    seed: int | None = None,
) -> list[FamilyReport]:
    """Verify one family (all form variants for a bare id) over a parameter grid."""
    specs = expand_family(family_id)
    grid = list(grid) if grid is not None else None
    reports = []
    for spec in specs:
        points = [_check_params(spec, g) for g in grid] if grid is not None else default_grid(spec)
        tasks = [(spec.family_id, p) for p in points]
        explore = _explore(spec) if grid is None and spec.base_id == "A4_19" else []
        reports.append(FamilyReport(spec.family_id, _run(tasks, jobs, seed), explore))
    return reports


def _explore(spec: FamilySpec) -> list[PointResult]:
    """Check zero boundary points without enforcing the nonzero constraints."""
    out = []
    for q in boundary_grid(spec):
        table, terms = spec.build(q)
        space = SuperSpace(spec.parity)
        P = PseudoEuclideanAlgebra(
            SuperAlgebra.from_table(space, table), HomBilinearForm(space, gram_from_terms(space, terms), spec.form_parity)
        )
        out.append(PointResult(spec.family_id, q, check_pseudo_euclidean_novikov(P)))
    return out


def verify_all(jobs: int | None = 1, seed: int | None = None) -> list[FamilyReport]:
    tasks = [(spec.family_id, p) for spec in _CATALOG for p in default_grid(spec)]
    results = _run(tasks, jobs, seed)
    grouped: dict[str, list[PointResult]] = {spec.family_id: [] for spec in _CATALOG}
    for r in results:
        grouped[r.family_id].append(r)
    return [
        FamilyReport(fid, pts, _explore(lookup(fid)) if lookup(fid).base_id == "A4_19" else [])
        for fid, pts in grouped.items()
    ]


def all_instances() -> list[tuple[str, dict[str, Fraction], PseudoEuclideanAlgebra]]:
    return [(spec.family_id, p, instantiate(spec.family_id, p)) for spec in _CATALOG for p in default_grid(spec)]


def default_jobs() -> int:
    return os.cpu_count() or 1


@dataclass(frozen=True)
class Fingerprint:
    sdim: tuple[int, int]
    form_parity: int
    dim_product: int
    product_degenerate: bool | None
    nilpotent: bool
    dim_center_minus: int
    dim_right_normalizer: int
    dim_rational_weights: int

    def to_dict(self) -> dict:
        return {
            "sdim": f"{self.sdim[0]}|{self.sdim[1]}",
            "form_parity": "odd" if self.form_parity else "even",
            "dim_product": self.dim_product,
            "product_degenerate": self.product_degenerate,
            "nilpotent": self.nilpotent,
            "dim_center_minus": self.dim_center_minus,
            "dim_right_normalizer": self.dim_right_normalizer,
            "dim_rational_weights": self.dim_rational_weights,
        }


def fingerprint(P: PseudoEuclideanAlgebra) -> Fingerprint:
    prod = span_product(P.algebra)
    degenerate = product_is_degenerate(P) if prod else None
    _, nr, _ = normalizers(P.algebra)
    return Fingerprint(
        P.space.sdim,
        P.form.parity,
        len(prod),
        degenerate,
        is_nilpotent(P.algebra),
        len(center_of_minus(P)),
        len(nr),
        rational_weight_dim(P.algebra),
    )


def rational_weight_dim(A: SuperAlgebra) -> int:
    """Dimension of the span of common rational eigenvectors of the even L_u inside A•A.

    Even left multiplications of a Novikov superalgebra commute and preserve A•A,
    so A•A is split into joint eigenspaces one operator at a time.
    """
    n = A.dim
    pieces = [span_product(A)]
    for u in range(n):
        if A.space.parity[u]:
            continue
        L = left_mul(A, unit_vec(n, u)).matrix
        if L.is_zero():
            continue
        refined: list[list[Vector]] = []
        for S in pieces:
            if not S:
                continue
            k = len(S)
            M = Matrix.from_columns([coordinates(S, L.apply(s), n) for s in S], k)
            for mu in rational_roots(char_poly(M)):
                shifted = M - Matrix.identity(k).scale(mu)
                eig = [
                    tuple(sum((c * s[t] for c, s in zip(vec, S)), ZERO) for t in range(n))
                    for vec in mat_kernel(shifted)
                ]
                refined.append(eig)
        pieces = refined
    return sum(len(S) for S in pieces)


@dataclass
class ScanReport:
    sdim: tuple[int, int]
    form_parity: int
    grid: tuple[Fraction, ...]
    tensors: int
    forms: int
    novikov: int
    hits: list[tuple[PseudoEuclideanAlgebra, tuple]] = field(default_factory=list)

    def to_dict(self) -> dict:
        from .exact_core import format_rational

        return {
            "sdim": f"{self.sdim[0]}|{self.sdim[1]}",
            "form_parity": "odd" if self.form_parity else "even",
            "grid": [format_rational(g) for g in self.grid],
            "tensors": self.tensors,
            "forms": self.forms,
            "pseudo_euclidean_novikov": self.novikov,
            "degenerate_hits": len(self.hits),
            "hit_entries": [
                {"product": [[i, j, k, format_rational(x)] for i, j, k, x in P.algebra.entries()], "gram": P.form.gram.to_strings()}
                for P, _ in self.hits
            ],
        }


SCAN_BUDGET = 2_000_000


def _grid_forms(space: SuperSpace, form_parity: int, grid: Sequence[Fraction]) -> list[Matrix]:
    n = space.dim
    p = space.parity
    slots = [(i, j) for i in range(n) for j in range(i, n) if (p[i] + p[j]) % 2 == form_parity]
    # odd-odd diagonal entries vanish by super-symmetry
    slots = [(i, j) for i, j in slots if not (i == j and p[i] == 1)]
    out = []
    for values in cartesian(grid, repeat=len(slots)):
        g = [[ZERO] * n for _ in range(n)]
        for (i, j), v in zip(slots, values):
            g[i][j] = v
            g[j][i] = v if not (p[i] and p[j]) else -v
        m = Matrix(g, n)
        if mat_det(m) != 0:
            out.append(m)
    return out


def nonexistence_scan(
    sdim: tuple[int, int],
    form_parity: int,
    grid: Sequence[object] = (-1, 0, 1),
    budget: int = SCAN_BUDGET,
) -> ScanReport:
    """Every grading-compatible tensor over the grid, filtered by the full checker.

    A hit is a nontrivial pseudo-Euclidean Novikov superalgebra whose A•A is degenerate.
    """
    even, odd = sdim
    space = SuperSpace((0,) * even + (1,) * odd)
    n = space.dim
    p = space.parity
    values = tuple(to_rational(g) for g in grid)
    slots = [(i, j, k) for i, j, k in cartesian(range(n), repeat=3) if p[k] == (p[i] + p[j]) % 2]
    forms = _grid_forms(space, form_parity, values)
    total = len(values) ** len(slots)
    if total * max(1, len(forms)) > budget:
        raise GridTooLarge(f"{total} tensors x {len(forms)} forms exceeds the budget {budget}")
    report = ScanReport(sdim, form_parity, values, total, len(forms), 0)
    for coeffs in cartesian(values, repeat=len(slots)):
        c = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j, k), x in zip(slots, coeffs):
            c[i][j][k] = x
        algebra = SuperAlgebra(space, tuple(tuple(tuple(v) for v in row) for row in c))
        trivial = algebra.is_trivial()
        for gram in forms:
            P = PseudoEuclideanAlgebra(algebra, HomBilinearForm(space, gram, form_parity))
            if not trivial and not _left_antisymmetric_fast(P):
                continue
            if not check_pseudo_euclidean_novikov(P):
                continue
            report.novikov += 1
            if not trivial and product_is_degenerate(P):
                report.hits.append((P, coeffs))
    return report


def _left_antisymmetric_fast(P: PseudoEuclideanAlgebra) -> bool:
    """<u•v, w> = -(-1)^{|u||v|} <v, u•w> on basis triples, without building operators."""
    n = P.dim
    p = P.space.parity
    g = P.form.gram.rows
    c = P.algebra.c
    for u in range(n):
        for v in range(n):
            uv = c[u][v]
            for w in range(n):
                lhs = sum((uv[k] * g[k][w] for k in range(n) if uv[k]), ZERO)
                uw = c[u][w]
                rhs = sum((g[v][k] * uw[k] for k in range(n) if uw[k]), ZERO)
                if lhs != (-rhs if not (p[u] * p[v]) else rhs):
                    return False
    return True


__all__ = [
    "BadParams",
    "FamilyReport",
    "FamilySpec",
    "Fingerprint",
    "GridTooLarge",
    "PointResult",
    "ScanReport",
    "UnknownFamily",
    "all_instances",
    "catalog_families",
    "default_grid",
    "expand_family",
    "fingerprint",
    "instantiate",
    "lookup",
    "nonexistence_scan",
    "product_is_degenerate",
    "verify_all",
    "verify_family",
    "verify_point",
]

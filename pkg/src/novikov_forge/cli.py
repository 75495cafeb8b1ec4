"""Command-line interface and JSON documents.

Algebra documents look like::

    {"schema_version": 1, "space": ["even", "odd"], "product": [[0, 1, 1, "1/2"]],
     "gram": [["0", "1"], ["1", "0"]], "form_parity": "odd", "metadata": {}}

``product`` lists nonzero structure constants ``[i, j, k, q]`` meaning that the
v_k-coefficient of v_i•v_j is q. Rationals are strings. Emission sorts keys and
uses a fixed layout, so identical inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from itertools import product as cartesian
from typing import Any, Callable, Sequence

from .algebra_kernel import (
    IdentityReport,
    SuperAlgebra,
    check_L,
    check_left_leibniz,
    check_left_symmetric,
    check_LR,
    check_novikov,
    check_R,
    span_product,
)
from .catalog import (
    BadParams,
    GridTooLarge,
    UnknownFamily,
    catalog_families,
    default_jobs,
    expand_family,
    fingerprint,
    instantiate,
    nonexistence_scan,
    verify_all,
    verify_family,
)
from .exact_core import Matrix, Vector, format_rational, intersect, to_rational
from .extensions import (
    KINDS,
    ODD_EVEN,
    ODD_ODD,
    ExtensionData,
    HNotAssociative,
    NonDegenerateProduct,
    OmegaNotInvariant,
    OutsideExtensionTables,
    StarPropertiesFail,
    check_triangle_identity,
    double_extend,
    pi_tstar_extension,
    reduction_chain,
    split_double_extension,
    tensor_construct,
    tstar_extension,
)
from .metric_structures import (
    NotAdmissible,
    NotMilnor,
    PreconditionUnverified,
    PseudoEuclideanAlgebra,
    SingularForm,
    adjoint_representation,
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
from .superspace_core import (
    Endo,
    HomBilinearForm,
    ParityMismatch,
    SuperSpace,
    check_form,
    orthogonal_complement,
    parity_word,
    parse_parity,
)

SCHEMA_VERSION = 1
EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_ENV = "NOVIKOV_FORGE_SEED"


class ParseError(ValueError):
    """A document could not be read; ``where`` names the offending field."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


class MathFailure(Exception):
    """A mathematical precondition or identity failed; carries a JSON payload."""

    def __init__(self, message: str, payload: dict | None = None):
        super().__init__(message)
        self.payload = payload or {}


# ---------------------------------------------------------------- serialization


def emit(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def vec_to_json(v: Sequence[Fraction]) -> list[str]:
    return [format_rational(x) for x in v]


def algebra_to_doc(
    A: SuperAlgebra, form: HomBilinearForm | None = None, metadata: dict | None = None
) -> dict:
    doc: dict = {
        "schema_version": SCHEMA_VERSION,
        "space": [parity_word(p) for p in A.space.parity],
        "product": [[i, j, k, format_rational(q)] for i, j, k, q in A.entries()],
    }
    if form is not None:
        doc["gram"] = form.gram.to_strings()
        doc["form_parity"] = parity_word(form.parity)
    if metadata:
        doc["metadata"] = metadata
    return doc


def pseudo_to_doc(P: PseudoEuclideanAlgebra, metadata: dict | None = None) -> dict:
    return algebra_to_doc(P.algebra, P.form, metadata)


def data_to_doc(data: ExtensionData) -> dict:
    """D and xi are plain matrices; their parity is fixed by the kind."""
    return {
        "kind": data.kind,
        "D": data.D.matrix.to_strings(),
        "xi": data.xi.matrix.to_strings(),
        "b0": vec_to_json(data.b0),
        "c0": vec_to_json(data.c0) if data.c0 is not None else None,
    }


def _rational(x: object, where: str) -> Fraction:
    if isinstance(x, float):
        raise ParseError("floats are not exact; write the rational as a string", where)
    try:
        return to_rational(x)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), where) from exc


def _require(doc: dict, key: str, where: str) -> Any:
    if key not in doc:
        raise ParseError("missing field", f"{where}.{key}" if where else key)
    return doc[key]


def _vector(x: object, n: int, where: str) -> Vector:
    if not isinstance(x, list) or len(x) != n:
        raise ParseError(f"expected a list of {n} rationals", where)
    return tuple(_rational(v, f"{where}[{i}]") for i, v in enumerate(x))


def _matrix(x: object, n: int, where: str) -> Matrix:
    if not isinstance(x, list) or len(x) != n:
        raise ParseError(f"expected {n} rows", where)
    return Matrix([_vector(r, n, f"{where}[{i}]") for i, r in enumerate(x)], n)


def parse_space(x: object, where: str = "space") -> SuperSpace:
    if not isinstance(x, list):
        raise ParseError("expected a list of parities", where)
    try:
        return SuperSpace(parse_parity(p) for p in x)
    except ValueError as exc:
        raise ParseError(str(exc), where) from exc


def doc_to_objects(doc: object, where: str = "") -> tuple[SuperAlgebra, HomBilinearForm | None]:
    """Algebra and optional form of a document."""
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", where or "document")
    version = _require(doc, "schema_version", where)
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema version {version!r}", f"{where}.schema_version")
    space = parse_space(_require(doc, "space", where), f"{where}.space".lstrip("."))
    n = space.dim
    entries = []
    raw = _require(doc, "product", where)
    if not isinstance(raw, list):
        raise ParseError("expected a list of [i, j, k, q]", f"{where}.product".lstrip("."))
    for t, e in enumerate(raw):
        at = f"{where}.product[{t}]".lstrip(".")
        if not isinstance(e, list) or len(e) != 4:
            raise ParseError("expected [i, j, k, q]", at)
        i, j, k = e[:3]
        if not all(isinstance(x, int) and not isinstance(x, bool) and 0 <= x < n for x in (i, j, k)):
            raise ParseError(f"indices must be integers in [0, {n})", at)
        entries.append((i, j, k, _rational(e[3], at)))
    try:
        A = SuperAlgebra.from_entries(space, entries)
    except ParityMismatch as exc:
        raise ParseError(str(exc), f"{where}.product".lstrip(".")) from exc
    form = None
    if "gram" in doc:
        gram = _matrix(doc["gram"], n, f"{where}.gram".lstrip("."))
        try:
            fp = parse_parity(_require(doc, "form_parity", where))
        except ValueError as exc:
            raise ParseError(str(exc), f"{where}.form_parity".lstrip(".")) from exc
        form = HomBilinearForm(space, gram, fp)
    return A, form


def doc_to_pseudo(doc: object, where: str = "") -> PseudoEuclideanAlgebra:
    A, form = doc_to_objects(doc, where)
    if form is None:
        raise ParseError("a Gram matrix is required", f"{where}.gram".lstrip("."))
    return PseudoEuclideanAlgebra(A, form)


def _endo(x: object, space: SuperSpace, parity: int, where: str) -> Endo:
    matrix = _matrix(x, space.dim, where)
    try:
        return Endo(space, matrix, parity)
    except ParityMismatch as exc:
        raise ParseError(str(exc), where) from exc


def doc_to_data(doc: object, base: PseudoEuclideanAlgebra) -> ExtensionData:
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "data")
    kind = _require(doc, "kind", "data")
    if kind not in KINDS:
        raise ParseError(f"kind must be one of {', '.join(KINDS)}", "data.kind")
    n = base.dim
    parity = 1 if kind in (ODD_EVEN, ODD_ODD) else 0
    D = _endo(_require(doc, "D", "data"), base.space, parity, "data.D")
    xi = _endo(_require(doc, "xi", "data"), base.space, parity, "data.xi")
    b0 = _vector(_require(doc, "b0", "data"), n, "data.b0")
    c0_raw = doc.get("c0")
    c0 = None if c0_raw is None else _vector(c0_raw, n, "data.c0")
    try:
        return ExtensionData(base, D, xi, b0, c0, kind)
    except (ParityMismatch, ValueError) as exc:
        raise ParseError(str(exc), "data") from exc


def read_json(path: str) -> tuple[object, bytes]:
    try:
        raw = sys.stdin.buffer.read() if path == "-" else open(path, "rb").read()
    except OSError as exc:
        raise ParseError(exc.strerror or str(exc), path) from exc
    try:
        return json.loads(raw.decode("utf-8")), raw
    except UnicodeDecodeError as exc:
        raise ParseError("input is not UTF-8", path) from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}", path) from exc


def digest(*blobs: bytes) -> str:
    h = hashlib.sha256()
    for b in blobs:
        h.update(hashlib.sha256(b).digest())
    return h.hexdigest()


def parse_vector_arg(text: str, n: int) -> Vector:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != n:
        raise ParseError(f"expected {n} comma-separated rationals", "--e")
    return tuple(_rational(p, "--e") for p in parts)


# ---------------------------------------------------------------- checks


def _flat_report(P: PseudoEuclideanAlgebra) -> IdentityReport:
    return IdentityReport("flat", is_flat(P))


def _vanishing(P: PseudoEuclideanAlgebra) -> IdentityReport:
    try:
        return check_vanishing_lemma(P)
    except PreconditionUnverified as exc:
        return IdentityReport("vanishing-lemma", False, None, str(exc))


def _form(P: PseudoEuclideanAlgebra) -> IdentityReport:
    rep = check_form(P.space, P.form.gram, P.form.parity)
    return IdentityReport("form", rep.ok, rep.indices, rep.violation)


CHECKS: dict[str, Callable[[PseudoEuclideanAlgebra], IdentityReport]] = {
    "suite": check_pseudo_euclidean_novikov,
    "vanishing": _vanishing,
    "star": check_star_properties,
    "flat": _flat_report,
    "form": _form,
    "novikov": lambda P: check_novikov(P.algebra),
    "left-symmetric": lambda P: check_left_symmetric(P.algebra),
    "LR": lambda P: check_LR(P.algebra),
    "L": lambda P: check_L(P.algebra),
    "R": lambda P: check_R(P.algebra),
    "left-leibniz": lambda P: check_left_leibniz(P.algebra),
    "antisymmetric": check_left_mul_antisymmetric,
    "adjoint-rep": lambda P: check_representation(P.algebra, adjoint_representation(P.algebra)),
    "dual-rep": lambda P: check_representation(P.algebra, dual_representation(P)),
    "phi": check_phi_isomorphism,
}
DEFAULT_CHECKS = ("suite", "vanishing", "star", "flat")
# checks that need a non-degenerate form to run at all
_NEEDS_FORM = {"suite", "vanishing", "star", "flat", "antisymmetric", "dual-rep", "phi"}


def parse_checks(text: str | None) -> list[str]:
    if not text:
        return list(DEFAULT_CHECKS)
    names = [t.strip() for t in text.split(",") if t.strip()]
    unknown = [t for t in names if t not in CHECKS]
    if unknown:
        raise ParseError(f"unknown check(s) {', '.join(unknown)}; known: {', '.join(CHECKS)}", "--checks")
    return names


def run_checks(P: PseudoEuclideanAlgebra, names: Sequence[str], timings: bool) -> tuple[list[dict], bool]:
    out = []
    ok = True
    form_ok = check_form(P.space, P.form.gram, P.form.parity).ok
    for name in names:
        start = time.perf_counter()
        if name in _NEEDS_FORM and not form_ok and name != "suite":
            rep = IdentityReport(name, False, None, "skipped: the form is not a valid non-degenerate form")
        else:
            try:
                rep = CHECKS[name](P)
            except (SingularForm, PreconditionUnverified, ArithmeticError) as exc:
                rep = IdentityReport(name, False, None, str(exc))
        entry = {"check": name, **rep.to_dict()}
        failure = rep.first_failure()
        if failure is not None and failure is not rep:
            entry["failed_identity"] = failure.name
        if timings:
            entry["seconds"] = round(time.perf_counter() - start, 6)
        ok = ok and rep.passed
        out.append(entry)
    return out, ok


# ---------------------------------------------------------------- commands


def _report(command: str, payload: dict, raw: Sequence[bytes]) -> dict:
    return {"command": command, "input_digest": digest(*raw), **payload}


def cmd_check(args) -> tuple[dict, int]:
    doc, raw = read_json(args.input)
    P = doc_to_pseudo(doc)
    checks, ok = run_checks(P, parse_checks(args.checks), args.timings)
    return _report("check", {"pass": ok, "checks": checks}, [raw]), EXIT_PASS if ok else EXIT_FAIL


def cmd_levi_civita(args) -> tuple[dict, int]:
    doc, _ = read_json(args.input)
    lie, form = doc_to_objects(doc)
    if form is None:
        raise ParseError("a Gram matrix is required", "gram")
    try:
        product = levi_civita(lie, form)
    except SingularForm as exc:
        raise MathFailure(str(exc), {"error": "SingularForm"}) from exc
    except PreconditionUnverified as exc:
        raise MathFailure(str(exc), {"error": "NotLie", "message": str(exc)}) from exc
    return algebra_to_doc(product, form), EXIT_PASS


def cmd_star(args) -> tuple[dict, int]:
    doc, _ = read_json(args.input)
    P = doc_to_pseudo(doc)
    try:
        star = star_product(P)
    except (SingularForm, PreconditionUnverified) as exc:
        raise MathFailure(str(exc), {"error": type(exc).__name__}) from exc
    return algebra_to_doc(star, P.form), EXIT_PASS


def cmd_milnor(args) -> tuple[dict, int]:
    doc, raw = read_json(args.input)
    P = doc_to_pseudo(doc)
    _require_verified(P)
    result = milnor_decomposition(P)
    if isinstance(result, NotMilnor):
        payload = {"milnor": False, "witness": vec_to_json(result.witness), "reason": result.reason}
        return _report("milnor", payload, [raw]), EXIT_FAIL
    payload = {
        "milnor": True,
        "ideal": [vec_to_json(v) for v in result.ideal_I],
        "complement": [vec_to_json(v) for v in result.complement],
    }
    return _report("milnor", payload, [raw]), EXIT_PASS


def _require_verified(P: PseudoEuclideanAlgebra) -> None:
    rep = check_pseudo_euclidean_novikov(P)
    if not rep:
        failure = rep.first_failure() or rep
        raise MathFailure(
            f"input is not a pseudo-Euclidean Novikov superalgebra ({failure.name})",
            {"error": "NotNovikov", "report": rep.to_dict()},
        )


def cmd_reduce(args) -> tuple[dict, int]:
    doc, _ = read_json(args.input)
    P = doc_to_pseudo(doc)
    _require_verified(P)
    if args.chain:
        try:
            chain = reduction_chain(P)
        except NonDegenerateProduct as exc:
            raise MathFailure(str(exc), {"error": "NonDegenerateProduct"}) from exc
        return {"steps": [pseudo_to_doc(Q) for Q in chain]}, EXIT_PASS
    if args.e is not None:
        e = parse_vector_arg(args.e, P.dim)
    else:
        prod = span_product(P.algebra)
        radical = intersect(prod, orthogonal_complement(P.form, prod), P.dim)
        if not radical:
            raise MathFailure("A•A has no isotropic radical to reduce by", {"error": "NonDegenerateProduct"})
        e = radical[0]
    try:
        return pseudo_to_doc(isotropic_reduction(P, e)), EXIT_PASS
    except NotAdmissible as exc:
        raise MathFailure(str(exc), {"error": "NotAdmissible"}) from exc


def cmd_extend(args) -> tuple[dict, int]:
    base_doc, _ = read_json(args.base)
    data_doc, _ = read_json(args.data)
    base = doc_to_pseudo(base_doc, "base")
    data = doc_to_data(data_doc, base)
    try:
        return pseudo_to_doc(double_extend(data)), EXIT_PASS
    except NotAdmissible as exc:
        payload = {"error": "NotAdmissible", "message": str(exc)}
        if getattr(exc, "report", None) is not None:
            payload["report"] = exc.report.to_dict()
        raise MathFailure(str(exc), payload) from exc


def cmd_split(args) -> tuple[dict, int]:
    doc, _ = read_json(args.input)
    P = doc_to_pseudo(doc)
    try:
        result = split_double_extension(P)
    except (NonDegenerateProduct, OutsideExtensionTables, PreconditionUnverified) as exc:
        raise MathFailure(str(exc), {"error": type(exc).__name__}) from exc
    base_doc = pseudo_to_doc(result.base)
    data_doc = data_to_doc(result.data)
    for path, content in ((args.base_out, base_doc), (args.data_out, data_doc)):
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(emit(content))
    out = {
        "e": vec_to_json(result.e_vector),
        "d": vec_to_json(result.d_vector),
        "basis": [vec_to_json(v) for v in result.basis],
        "base": base_doc,
        "data": data_doc,
        "algebra": pseudo_to_doc(result.in_split_basis),
    }
    return out, EXIT_PASS


def _tstar(args, shift: bool) -> tuple[dict, int]:
    doc, _ = read_json(args.input)
    if args.star:
        A, _form = doc_to_objects(doc)
        star_doc, _ = read_json(args.star)
        star, _ = doc_to_objects(star_doc, "star")
        if star.space != A.space:
            raise ParseError("⋆ lives on a different superspace", "star.space")
    else:
        P = doc_to_pseudo(doc)
        try:
            star = star_product(P)
        except (SingularForm, PreconditionUnverified) as exc:
            raise MathFailure(str(exc), {"error": type(exc).__name__}) from exc
        A = P.algebra
    build = pi_tstar_extension if shift else tstar_extension
    try:
        T = build(A, star)
    except (StarPropertiesFail, PreconditionUnverified) as exc:
        raise MathFailure(str(exc), {"error": type(exc).__name__}) from exc
    tri = check_triangle_identity(A, star, T)
    if not tri:
        raise MathFailure("▷ pairing identity fails", {"error": "TriangleIdentity", "report": tri.to_dict()})
    return pseudo_to_doc(T), EXIT_PASS


def cmd_tstar(args) -> tuple[dict, int]:
    return _tstar(args, shift=False)


def cmd_pi_tstar(args) -> tuple[dict, int]:
    return _tstar(args, shift=True)


def cmd_tensor(args) -> tuple[dict, int]:
    b_doc, _ = read_json(args.base)
    h_doc, _ = read_json(args.h)
    B = doc_to_pseudo(b_doc, "base")
    H, omega = doc_to_objects(h_doc, "h")
    if omega is None:
        raise ParseError("H needs a Gram matrix for Ω", "h.gram")
    try:
        return pseudo_to_doc(tensor_construct(B, H, omega)), EXIT_PASS
    except (HNotAssociative, OmegaNotInvariant) as exc:
        raise MathFailure(str(exc), {"error": type(exc).__name__}) from exc


def cmd_fingerprint(args) -> tuple[dict, int]:
    doc, raw = read_json(args.input)
    P = doc_to_pseudo(doc)
    _require_verified(P)
    return _report("fingerprint", {"fingerprint": fingerprint(P).to_dict()}, [raw]), EXIT_PASS


# ---------------------------------------------------------------- catalog


def parse_param_grid(text: str) -> list[dict[str, Fraction]]:
    """``"lam=1,2;eps=1,-1"`` as a Cartesian grid, or a JSON list of parameter objects."""
    text = text.strip()
    if text.startswith("["):
        try:
            points = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, "--grid") from exc
        if not isinstance(points, list) or not all(isinstance(p, dict) for p in points):
            raise ParseError("expected a list of parameter objects", "--grid")
        return [{k: _rational(v, f"--grid.{k}") for k, v in p.items()} for p in points]
    axes = []
    for part in filter(None, (p.strip() for p in text.split(";"))):
        if "=" not in part:
            raise ParseError(f"expected name=v1,v2 in {part!r}", "--grid")
        name, values = part.split("=", 1)
        axes.append((name.strip(), [_rational(v, f"--grid.{name.strip()}") for v in values.split(",") if v.strip()]))
    if not axes:
        return [{}]
    return [dict(zip([a for a, _ in axes], combo)) for combo in cartesian(*[v for _, v in axes])]


def parse_params(items: Sequence[str] | None) -> dict[str, Fraction]:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise ParseError(f"expected name=value, got {item!r}", "--param")
        name, value = item.split("=", 1)
        out[name.strip()] = _rational(value, f"--param.{name.strip()}")
    return out


def parse_sdim(text: str) -> tuple[int, int]:
    for sep in ("|", ","):
        if sep in text:
            a, b = text.split(sep, 1)
            try:
                return int(a), int(b)
            except ValueError:
                break
    raise ParseError("expected EVEN|ODD, for example 2|0", "sdim")


def _seed() -> int | None:
    value = os.environ.get(SEED_ENV)
    if value is None or value == "":
        return None
    try:
        return int(value)
    except ValueError as exc:
        raise ParseError("must be an integer", SEED_ENV) from exc


def _family_summary(reports) -> dict:
    total = sum(len(r.points) for r in reports)
    failed = sum(1 for r in reports for p in r.points if not p.passed)
    return {
        "pass": failed == 0,
        "families": len(reports),
        "instances": total,
        "failed_instances": failed,
        "reports": [r.to_dict() for r in reports],
    }


def cmd_catalog(args) -> tuple[dict, int]:
    jobs = args.jobs if args.jobs is not None else default_jobs()
    sub = args.catalog_command
    if sub == "list":
        return {"families": [spec.describe() for spec in catalog_families()]}, EXIT_PASS
    if sub == "show":
        try:
            P = instantiate(args.family, parse_params(args.param))
        except UnknownFamily as exc:
            raise ParseError(f"unknown family {args.family!r}", "family") from exc
        except BadParams as exc:
            raise ParseError(str(exc), "--param") from exc
        meta = {"family": args.family, "params": {k: format_rational(v) for k, v in parse_params(args.param).items()}}
        return pseudo_to_doc(P, meta), EXIT_PASS
    if sub == "verify":
        grid = parse_param_grid(args.grid) if args.grid else None
        try:
            expand_family(args.family)
            reports = verify_family(args.family, grid, jobs=jobs, seed=_seed())
        except UnknownFamily as exc:
            raise ParseError(f"unknown family {args.family!r}", "family") from exc
        except BadParams as exc:
            raise ParseError(str(exc), "--grid") from exc
        summary = _family_summary(reports)
        return {"command": "catalog verify", **summary}, EXIT_PASS if summary["pass"] else EXIT_FAIL
    if sub == "verify-all":
        summary = _family_summary(verify_all(jobs=jobs, seed=_seed()))
        return {"command": "catalog verify-all", **summary}, EXIT_PASS if summary["pass"] else EXIT_FAIL
    if sub == "scan":
        sdim = parse_sdim(args.sdim)
        grid = [_rational(v, "--grid") for v in args.grid.split(",")] if args.grid else [-1, 0, 1]
        try:
            report = nonexistence_scan(sdim, 1 if args.odd else 0, grid)
        except GridTooLarge as exc:
            raise ParseError(str(exc), "--grid") from exc
        out = {"command": "catalog scan", **report.to_dict()}
        return out, EXIT_PASS
    raise ParseError("missing catalog subcommand", "catalog")


# ---------------------------------------------------------------- entry point


def _render_text(command: str, out: dict, code: int) -> str:
    """Short human-readable rendering of reports; documents are always JSON."""
    if command == "check":
        lines = []
        for c in out["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            extra = ""
            if not c["pass"]:
                bits = [c.get("failed_identity", "")]
                if "witness" in c:
                    bits.append(f"witness {c['witness']}")
                if "residual" in c:
                    bits.append(f"residual {c['residual']}")
                extra = "  " + " ".join(b for b in bits if b)
            lines.append(f"{status} {c['check']}{extra}")
        lines.append("all checks pass" if out["pass"] else "some checks fail")
        return "\n".join(lines) + "\n"
    if command == "catalog" and "instances" in out:
        lines = [
            f"{'PASS' if r['pass'] else 'FAIL'} {r['family']} ({r['instances']} instances)" for r in out["reports"]
        ]
        lines.append(f"{out['instances'] - out['failed_instances']}/{out['instances']} instances pass")
        return "\n".join(lines) + "\n"
    if command == "catalog" and "families" in out:
        rows = [
            f"{f['family']:<16} {f['sdim']:<5} {f['form']:<5} {f['section']:<15} params: "
            + (" ".join(f"{k}:{v}" for k, v in f["params"].items()) or "-")
            for f in out["families"]
        ]
        return "\n".join(rows) + "\n"
    return emit(out)


_DOCUMENT_COMMANDS = {"levi-civita", "star", "reduce", "extend", "split", "tstar", "pi-tstar", "tensor"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit machine-readable JSON reports")
    common.add_argument("--timings", action="store_true", help="include per-check timings in reports")

    parser = argparse.ArgumentParser(
        prog="novikov-forge",
        description="Exact verification toolkit for pseudo-Euclidean Novikov superalgebras.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def single(name: str, fn, help_text: str):
        p = subs.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="algebra document (JSON), or - for stdin")
        p.set_defaults(func=fn)
        return p

    p = single("check", cmd_check, "run identity checks on an algebra document")
    p.add_argument("--checks", help=f"comma list from: {', '.join(CHECKS)} (default: {','.join(DEFAULT_CHECKS)})")
    single("levi-civita", cmd_levi_civita, "Levi-Civita product of a Lie bracket document with its form")
    single("star", cmd_star, "the metric-dual product ⋆")
    single("milnor", cmd_milnor, "Milnor decomposition or a degeneracy witness")
    p = single("reduce", cmd_reduce, "isotropic reduction by a central isotropic element")
    p.add_argument("--e", help="comma-separated coordinates of e (default: first radical vector of A•A)")
    p.add_argument("--chain", action="store_true", help="reduce repeatedly until the product vanishes")
    p = subs.add_parser("extend", parents=[common], help="double extension of a base by admissible data")
    p.add_argument("base")
    p.add_argument("data")
    p.set_defaults(func=cmd_extend)
    p = single("split", cmd_split, "write a degenerate-product algebra as a double extension")
    p.add_argument("--base-out", help="also write the base document here")
    p.add_argument("--data-out", help="also write the data document here")
    for name, fn in (("tstar", cmd_tstar), ("pi-tstar", cmd_pi_tstar)):
        p = single(name, fn, f"{'odd' if name == 'pi-tstar' else 'even'} extension on A ⊕ A*")
        p.add_argument("--star", help="⋆ document (default: computed from the form)")
    p = subs.add_parser("tensor", parents=[common], help="B ⊗ H for associative supercommutative H with form Ω")
    p.add_argument("base")
    p.add_argument("h", help="document for H whose Gram matrix is Ω")
    p.set_defaults(func=cmd_tensor)
    single("fingerprint", cmd_fingerprint, "computable invariants of an algebra")

    cat = subs.add_parser("catalog", help="the classified algebras of dimension at most four")
    cat.set_defaults(func=cmd_catalog)
    cat_subs = cat.add_subparsers(dest="catalog_command", required=True)
    jobs_parent = argparse.ArgumentParser(add_help=False)
    jobs_parent.add_argument("--jobs", type=int, help="worker processes (default: available cores)")
    cat_subs.add_parser("list", parents=[common, jobs_parent], help="family table")
    p = cat_subs.add_parser("show", parents=[common, jobs_parent], help="emit one instance as a document")
    p.add_argument("family")
    p.add_argument("--param", action="append", help="name=value, repeatable")
    p = cat_subs.add_parser("verify", parents=[common, jobs_parent], help="verify one family over a grid")
    p.add_argument("family")
    p.add_argument("--grid", help='"lam=1,2;eps=1,-1" or a JSON list of parameter objects')
    cat_subs.add_parser("verify-all", parents=[common, jobs_parent], help="verify every family at default grids")
    p = cat_subs.add_parser("scan", parents=[common, jobs_parent], help="exhaustive grid scan at tiny dimension")
    p.add_argument("sdim", help="EVEN|ODD, for example 2|0")
    parity = p.add_mutually_exclusive_group()
    parity.add_argument("--even", action="store_true", help="even form (default)")
    parity.add_argument("--odd", action="store_true", help="odd form")
    p.add_argument("--grid", help="comma list of coefficients (default -1,0,1); write --grid=-1,0,1")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    as_json = getattr(args, "json", False)
    try:
        out, code = args.func(args)
    except ParseError as exc:
        _error("ParseError", str(exc), as_json, {"where": exc.where})
        return EXIT_USAGE
    except MathFailure as exc:
        _error(exc.payload.get("error", "MathFailure"), str(exc), as_json, exc.payload)
        return EXIT_FAIL
    if args.command in _DOCUMENT_COMMANDS or as_json:
        sys.stdout.write(emit(out))
    else:
        sys.stdout.write(_render_text(args.command, out, code))
    return code


def _error(kind: str, message: str, as_json: bool, extra: dict) -> None:
    if as_json:
        payload = {"error": kind, "message": message, **{k: v for k, v in extra.items() if k != "error"}}
        sys.stdout.write(emit(payload))
    print(f"error: {kind}: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())

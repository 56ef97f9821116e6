"""JSON documents for categories, functors, transformations, reflexive graphs and magmas."""

from __future__ import annotations

import json
from collections.abc import Mapping
from pathlib import Path
from types import MappingProxyType

from .fincat import (
    CategoryError,
    FinCategory,
    Functor,
    NatTransf,
    validate_category,
    validate_functor,
    validate_nat_transf,
)
from .ratlinalg import Matrix, Vector, format_rational, vector
from .twovect import MagmaPair, ReflexiveVectGraph


class SchemaError(ValueError):
    """A document is unreadable or does not have the expected shape."""


def load_json(path: str | Path) -> Mapping[str, object]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{path}: top-level JSON value must be an object")
    return data


def save_json(doc: object, path: str | Path) -> None:
    out = Path(path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, ensure_ascii=False, indent=2) + "\n", encoding="utf-8")


def _field(doc: Mapping[str, object], key: str, kind: type | tuple[type, ...], what: str) -> object:
    if key not in doc:
        raise SchemaError(f"{what}: missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SchemaError(f"{what}: field {key!r} has the wrong type")
    return value


def _shape_problems(exc: CategoryError) -> list[str]:
    return [str(v) for v in exc.violations if v.kind == "schema"]


def load_category(path: str | Path) -> FinCategory:
    """Load and validate; shape problems raise SchemaError, axiom failures CategoryError."""
    try:
        return validate_category(load_json(path))
    except CategoryError as exc:
        if problems := _shape_problems(exc):
            raise SchemaError(f"{path}: " + "; ".join(problems)) from exc
        raise


def load_functor(path: str | Path, source: FinCategory, target: FinCategory) -> Functor:
    try:
        return validate_functor(load_json(path), source, target)
    except CategoryError as exc:
        if problems := _shape_problems(exc):
            raise SchemaError(f"{path}: " + "; ".join(problems)) from exc
        raise


def load_nat_transf(path: str | Path, source: Functor, target: Functor) -> NatTransf:
    try:
        return validate_nat_transf(load_json(path), source, target)
    except CategoryError as exc:
        if problems := _shape_problems(exc):
            raise SchemaError(f"{path}: " + "; ".join(problems)) from exc
        raise


def parse_matrix(raw: object, rows: int, cols: int, what: str) -> Matrix:
    """Row-list of rational strings (``"3/2"``) or integers."""
    if not isinstance(raw, list) or len(raw) != rows or any(not isinstance(r, list) or len(r) != cols for r in raw):
        raise SchemaError(f"{what} must be a {rows}x{cols} list of rows")
    try:
        return Matrix.from_rows(raw, cols=cols)
    except ValueError as exc:
        raise SchemaError(f"{what}: {exc}") from exc


def format_matrix(m: Matrix) -> list[list[str]]:
    return [[format_rational(v) for v in row] for row in m.to_rows()]


def parse_graph(doc: Mapping[str, object]) -> ReflexiveVectGraph:
    """``{dim0, dim1, s, t, i}``; raises GraphError when ``s i`` or ``t i`` is not the identity."""
    dim0 = _field(doc, "dim0", int, "graph")
    dim1 = _field(doc, "dim1", int, "graph")
    if dim0 < 0 or dim1 < 0:  # type: ignore[operator]
        raise SchemaError("graph: dimensions must be non-negative")
    s = parse_matrix(doc.get("s"), dim0, dim1, "graph.s")  # type: ignore[arg-type]
    t = parse_matrix(doc.get("t"), dim0, dim1, "graph.t")  # type: ignore[arg-type]
    i = parse_matrix(doc.get("i"), dim1, dim0, "graph.i")  # type: ignore[arg-type]
    return ReflexiveVectGraph(dim0, dim1, s, t, i)  # type: ignore[arg-type]


def graph_to_document(g: ReflexiveVectGraph) -> dict[str, object]:
    return {"dim0": g.dim0, "dim1": g.dim1, "s": format_matrix(g.s), "t": format_matrix(g.t), "i": format_matrix(g.i)}


def load_graph(path: str | Path) -> ReflexiveVectGraph:
    return parse_graph(load_json(path))


def _table(raw: object, carrier: tuple[str, ...], what: str) -> Mapping[tuple[str, str], str]:
    """Cayley table as a list of rows in carrier order: ``table[r][c] = carrier[r] . carrier[c]``."""
    n = len(carrier)
    if not isinstance(raw, list) or len(raw) != n or any(not isinstance(r, list) or len(r) != n for r in raw):
        raise SchemaError(f"{what} must be a {n}x{n} list of rows")
    return MappingProxyType(
        {(a, b): str(raw[r][c]) for r, a in enumerate(carrier) for c, b in enumerate(carrier)}
    )


def parse_magma(doc: Mapping[str, object]) -> MagmaPair:
    raw_carrier = _field(doc, "carrier", list, "magma")
    carrier = tuple(str(x) for x in raw_carrier)  # type: ignore[union-attr]
    return MagmaPair(
        carrier,
        _table(doc.get("op1"), carrier, "magma.op1"),
        _table(doc.get("op2"), carrier, "magma.op2"),
        str(_field(doc, "unit1", (str, int), "magma")),
        str(_field(doc, "unit2", (str, int), "magma")),
    )


def magma_to_document(p: MagmaPair) -> dict[str, object]:
    return {
        "carrier": list(p.carrier),
        "op1": [[p.op1[(a, b)] for b in p.carrier] for a in p.carrier],
        "op2": [[p.op2[(a, b)] for b in p.carrier] for a in p.carrier],
        "unit1": p.unit1,
        "unit2": p.unit2,
    }


def load_magma(path: str | Path) -> MagmaPair:
    return parse_magma(load_json(path))


def parse_vector(text: str) -> Vector:
    """``"(1, 2, 3/4)"`` or ``"1,2,3/4"``."""
    body = text.strip().removeprefix("(").removesuffix(")").strip()
    if not body:
        return ()
    try:
        return vector(part for part in body.split(","))
    except ValueError as exc:
        raise SchemaError(f"invalid vector {text!r}: {exc}") from exc

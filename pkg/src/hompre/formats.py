"""JSON file format for algebras, representations, operators and bilinear maps.

Every file is a JSON object with a ``kind`` field:

* ``hom-pre-lie`` / ``hom-lie``: ``dimension``, ``product`` (or ``bracket``)
  with ``product[i][j]`` the coefficient vector of ``e_{i+1} . e_{j+1}``,
  and ``alpha`` as a list of rows.
* ``representation``: ``carrier_dim``, ``beta``, ``rho`` (one matrix per
  algebra basis element) and optionally ``mu``; without ``mu`` the file
  describes a Hom-Lie representation.
* ``operator``: ``matrix``.
* ``bilinear``: ``dimension`` and ``tensor`` laid out like ``product``.

Scalars are integers or strings ``"p/q"``. Emitters always write strings so
that files survive any JSON reader unchanged. An optional ``name`` is kept.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .algebra import BilinearMap, HomLieAlgebra, HomPreLieAlgebra
from .linalg import DimensionError, Matrix, SingularMatrixError, format_scalar, parse_scalar
from .representations import HomLieRepresentation, Representation

ALGEBRA_KINDS = ("hom-pre-lie", "hom-lie")
KINDS = ALGEBRA_KINDS + ("representation", "operator", "bilinear")


class ParseError(ValueError):
    """Malformed input; ``where`` names the file and field that failed."""

    def __init__(self, message: str, where: str = ""):
        super().__init__(f"{where}: {message}" if where else message)
        self.where = where


# -- scalars and arrays -------------------------------------------------------

def _scalar(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError("expected a scalar, got a boolean", where)
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return parse_scalar(value)
        except ValueError as exc:
            raise ParseError(str(exc), where) from None
    if isinstance(value, float):
        raise ParseError(f"floating point scalar {value!r}; write it as an exact \"p/q\" string", where)
    raise ParseError(f"expected a scalar, got {type(value).__name__}", where)


def _list(value: Any, length: int | None, where: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"expected an array, got {type(value).__name__}", where)
    if length is not None and len(value) != length:
        raise ParseError(f"expected {length} entries, got {len(value)}", where)
    return value


def _vector(value: Any, length: int, where: str) -> tuple:
    return tuple(_scalar(x, f"{where}[{k}]") for k, x in enumerate(_list(value, length, where)))


def _matrix(value: Any, rows: int | None, cols: int | None, where: str) -> Matrix:
    rows_in = _list(value, rows, where)
    if not rows_in:
        raise ParseError("empty matrix", where)
    if cols is None:
        cols = len(_list(rows_in[0], None, f"{where}[0]"))
    return Matrix([_vector(row, cols, f"{where}[{r}]") for r, row in enumerate(rows_in)])


def _tensor(value: Any, dim: int, out_dim: int, where: str) -> BilinearMap:
    rows = _list(value, dim, where)
    table = []
    for i, row in enumerate(rows):
        cells = _list(row, dim, f"{where}[{i}]")
        table.append([_vector(cell, out_dim, f"{where}[{i}][{j}]") for j, cell in enumerate(cells)])
    return BilinearMap(table, dim, out_dim)


def _field(data: dict, key: str, where: str) -> Any:
    if key not in data:
        raise ParseError(f"missing field {key!r}", where)
    return data[key]


def _dimension(data: dict, key: str, where: str) -> int:
    n = _field(data, key, where)
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParseError(f"{key} must be a positive integer", f"{where}.{key}" if where else key)
    return n


def _kind(data: Any, expected: tuple[str, ...], where: str) -> str:
    if not isinstance(data, dict):
        raise ParseError("top level must be a JSON object", where)
    kind = _field(data, "kind", where)
    if kind not in expected:
        raise ParseError(f"kind {kind!r} is not one of {', '.join(expected)}", where)
    return kind


def _at(where: str, key: str) -> str:
    return f"{where}.{key}" if where else key


# -- parsers (unverified objects) ----------------------------------------------

def parse_algebra(data: dict, where: str = "") -> HomPreLieAlgebra | HomLieAlgebra:
    kind = _kind(data, ALGEBRA_KINDS, where)
    n = _dimension(data, "dimension", where)
    key = "product" if kind == "hom-pre-lie" else "bracket"
    table = _tensor(_field(data, key, where), n, n, _at(where, key))
    alpha = _matrix(_field(data, "alpha", where), n, n, _at(where, "alpha"))
    name = data.get("name")
    try:
        if kind == "hom-pre-lie":
            return HomPreLieAlgebra(table, alpha, name)
        return HomLieAlgebra(table, alpha, name)
    except SingularMatrixError as exc:
        raise ParseError(str(exc), _at(where, "alpha")) from None


def parse_representation(data: dict, algebra_dim: int | None = None,
                         where: str = "") -> Representation | HomLieRepresentation:
    _kind(data, ("representation",), where)
    m = _dimension(data, "carrier_dim", where)
    beta = _matrix(_field(data, "beta", where), m, m, _at(where, "beta"))
    rho_in = _list(_field(data, "rho", where), algebra_dim, _at(where, "rho"))
    rho = [_matrix(x, m, m, f"{_at(where, 'rho')}[{i}]") for i, x in enumerate(rho_in)]
    try:
        if "mu" not in data:
            return HomLieRepresentation(beta, tuple(rho))
        mu_in = _list(data["mu"], len(rho), _at(where, "mu"))
        mu = [_matrix(x, m, m, f"{_at(where, 'mu')}[{i}]") for i, x in enumerate(mu_in)]
        return Representation(beta, tuple(rho), tuple(mu))
    except SingularMatrixError as exc:
        raise ParseError(str(exc), _at(where, "beta")) from None


def parse_operator(data: dict, rows: int | None = None, cols: int | None = None,
                   where: str = "") -> Matrix:
    _kind(data, ("operator",), where)
    return _matrix(_field(data, "matrix", where), rows, cols, _at(where, "matrix"))


def parse_bilinear(data: dict, dim: int | None = None, where: str = "") -> BilinearMap:
    _kind(data, ("bilinear",), where)
    n = _dimension(data, "dimension", where)
    if dim is not None and n != dim:
        raise ParseError(f"dimension {n} does not match the algebra dimension {dim}", _at(where, "dimension"))
    return _tensor(_field(data, "tensor", where), n, n, _at(where, "tensor"))


def parse(data: dict, where: str = ""):
    """Dispatch on ``kind``."""
    kind = _kind(data, KINDS, where)
    if kind in ALGEBRA_KINDS:
        return parse_algebra(data, where)
    if kind == "representation":
        return parse_representation(data, where=where)
    if kind == "operator":
        return parse_operator(data, where=where)
    return parse_bilinear(data, where=where)


# -- emitters ------------------------------------------------------------------

def emit_matrix(m: Matrix) -> list:
    return [[format_scalar(x) for x in row] for row in m.tolist()]


def emit_tensor(b: BilinearMap) -> list:
    return [[[format_scalar(x) for x in cell] for cell in row] for row in b.table]


def emit_algebra(A: HomPreLieAlgebra | HomLieAlgebra) -> dict:
    if isinstance(A, HomPreLieAlgebra):
        out = {"kind": "hom-pre-lie", "dimension": A.dim, "product": emit_tensor(A.product)}
    else:
        out = {"kind": "hom-lie", "dimension": A.dim, "bracket": emit_tensor(A.bracket)}
    out["alpha"] = emit_matrix(A.alpha)
    if A.name is not None:
        out["name"] = A.name
    return out


def emit_representation(R: Representation | HomLieRepresentation) -> dict:
    out = {
        "kind": "representation",
        "carrier_dim": R.carrier_dim,
        "beta": emit_matrix(R.beta),
        "rho": [emit_matrix(x) for x in R.rho],
    }
    if isinstance(R, Representation):
        out["mu"] = [emit_matrix(x) for x in R.mu]
    return out


def emit_operator(m: Matrix) -> dict:
    return {"kind": "operator", "matrix": emit_matrix(m)}


def emit_bilinear(b: BilinearMap) -> dict:
    if b.out_dim != b.dim:
        raise DimensionError("only bilinear maps with values in the same space are serializable")
    return {"kind": "bilinear", "dimension": b.dim, "tensor": emit_tensor(b)}


def emit(obj) -> dict:
    if isinstance(obj, (HomPreLieAlgebra, HomLieAlgebra)):
        return emit_algebra(obj)
    if isinstance(obj, (Representation, HomLieRepresentation)):
        return emit_representation(obj)
    if isinstance(obj, Matrix):
        return emit_operator(obj)
    if isinstance(obj, BilinearMap):
        return emit_bilinear(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _scalar_row(value) -> bool:
    return isinstance(value, list) and all(not isinstance(x, (list, dict)) for x in value)


def format_json(value, indent: int = 0) -> str:
    """``json.dumps`` with every flat array kept on one line."""
    pad = "  " * (indent + 1)
    if isinstance(value, dict) and value:
        items = [f"{pad}{json.dumps(k)}: {format_json(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and value and not _scalar_row(value):
        items = [pad + format_json(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value)


def dumps(obj) -> str:
    return format_json(emit(obj)) + "\n"


# -- files and fixtures -----------------------------------------------------------

def fixture_names() -> list[str]:
    root = resources.files("hompre") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def _read_text(source: str) -> tuple[str, str]:
    path = Path(source)
    if path.is_file():
        return path.read_text(), str(path)
    name = source[:-5] if source.endswith(".json") else source
    if name in fixture_names():
        return (resources.files("hompre") / "fixtures" / f"{name}.json").read_text(), name
    raise ParseError(f"no such file or bundled fixture: {source!r}")


def loads(text: str, where: str = "<string>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}", where) from None


def load_data(source: str) -> tuple[Any, str]:
    """Raw JSON from a file path or a fixture name, with a label for errors."""
    text, label = _read_text(source)
    return loads(text, label), label


def load(source: str):
    data, label = load_data(source)
    return parse(data, label)


def load_algebra(source: str) -> HomPreLieAlgebra | HomLieAlgebra:
    data, label = load_data(source)
    return parse_algebra(data, label)


def load_representation(source: str, algebra_dim: int | None = None):
    data, label = load_data(source)
    return parse_representation(data, algebra_dim, label)


def load_operator(source: str, rows: int | None = None, cols: int | None = None) -> Matrix:
    data, label = load_data(source)
    return parse_operator(data, rows, cols, label)


def load_bilinear(source: str, dim: int | None = None) -> BilinearMap:
    data, label = load_data(source)
    return parse_bilinear(data, dim, label)

"""Scalar grammar and the JSON algebra/map file formats.

Scalar grammar (no whitespace)::

    scalar   := real | imag | real sign imag
    real     := rational
    imag     := rational "i" | "i" | "-i"
    rational := ["-"] digits ["/" digits]

An algebra file is one JSON object with the fields ``name``, ``dim``,
``basis`` and ``table``, in that order; ``table[i][j]`` is the coefficient
vector of ``e_i * e_j``.  A map file has ``domain``, ``codomain`` and
``matrix`` (one row per codomain basis vector).  Serialization is canonical:
fixed field order, reduced scalars, compact separators, trailing newline.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .algebra_core import Algebra, is_associative
from .errors import FormatError, ParseError
from .morphisms import LinearMap
from .scalar import Scalar

__all__ = [
    "parse_scalar",
    "format_scalar",
    "algebra_to_json",
    "algebra_from_json",
    "parse_algebra_file",
    "write_algebra_file",
    "map_to_json",
    "map_from_json",
    "parse_map_file",
    "write_map_file",
]

E_JSON = "E_JSON"
E_FIELD = "E_FIELD"
E_DIM = "E_DIM"
E_SCALAR = "E_SCALAR"
E_NONASSOC = "E_NONASSOC"
E_MISMATCH = "E_MISMATCH"


class _ScalarParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, msg: str, pos: int | None = None):
        raise ParseError(msg, self.pos if pos is None else pos)

    def digits(self) -> str:
        start = self.pos
        while self.peek().isdigit() and self.peek().isascii():
            self.pos += 1
        if start == self.pos:
            ch = self.peek()
            self.fail(f"expected digit, found {ch!r}" if ch else "unexpected end of input")
        return self.text[start:self.pos]

    def rational(self) -> Fraction:
        neg = False
        if self.peek() == "-":
            neg = True
            self.pos += 1
        num = int(self.digits())
        den = 1
        if self.peek() == "/":
            self.pos += 1
            start = self.pos
            den = int(self.digits())
            if den == 0:
                self.fail("zero denominator", start)
        value = Fraction(num, den)
        return -value if neg else value

    def imag_tail(self) -> Fraction:
        """imag := rational "i" | "i" | "-i" (the part after an optional real)."""
        if self.peek() == "i":
            self.pos += 1
            return Fraction(1)
        if self.text.startswith("-i", self.pos):
            self.pos += 2
            return Fraction(-1)
        value = self.rational()
        if self.peek() != "i":
            self.fail("expected 'i'" if self.peek() else "unexpected end of input")
        self.pos += 1
        return value

    def parse(self) -> Scalar:
        if not self.text:
            self.fail("empty scalar")
        if self.text.startswith(("i", "-i")):
            im = self.imag_tail()
            self.end()
            return Scalar(0, im)
        first = self.rational()
        if self.peek() == "i":
            self.pos += 1
            self.end()
            return Scalar(0, first)
        if not self.peek():
            return Scalar(first)
        sign = self.peek()
        if sign not in "+-":
            self.fail(f"unexpected character {sign!r}")
        self.pos += 1
        im = self.imag_tail()
        self.end()
        return Scalar(first, im if sign == "+" else -im)

    def end(self):
        if self.pos != len(self.text):
            self.fail(f"unexpected character {self.peek()!r}")


def parse_scalar(text: str) -> Scalar:
    return _ScalarParser(text).parse()


def format_scalar(s: Scalar) -> str:
    return str(s)


def _dump(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":")) + "\n"


def algebra_to_json(A: Algebra) -> str:
    obj = {
        "name": A.name,
        "dim": A.dim,
        "basis": list(A.basis),
        "table": [[[format_scalar(c) for c in vec] for vec in row] for row in A.tensor],
    }
    return _dump(obj)


def _scalar_field(text, where: str) -> Scalar:
    if not isinstance(text, str):
        raise FormatError(E_SCALAR, f"{where}: coefficient must be a string, got {text!r}")
    try:
        return parse_scalar(text)
    except ParseError as exc:
        raise FormatError(E_SCALAR, f"{where}: bad scalar {text!r}: {exc}") from exc


def _load(text: str, fields: tuple[str, ...]) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(E_JSON, f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise FormatError(E_FIELD, "top level must be a JSON object")
    missing = [f for f in fields if f not in obj]
    extra = [f for f in obj if f not in fields]
    if missing or extra:
        raise FormatError(E_FIELD, f"expected fields {list(fields)}; missing {missing}, unexpected {extra}")
    return obj


def algebra_from_json(text: str, *, unchecked: bool = False) -> Algebra:
    obj = _load(text, ("name", "dim", "basis", "table"))
    name, dim, basis, table = obj["name"], obj["dim"], obj["basis"], obj["table"]
    if not isinstance(name, str):
        raise FormatError(E_FIELD, "name must be a string")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(E_DIM, f"dim must be a positive integer, got {dim!r}")
    if not isinstance(basis, list) or not all(isinstance(b, str) for b in basis):
        raise FormatError(E_FIELD, "basis must be a list of strings")
    if len(basis) != dim:
        raise FormatError(E_DIM, f"basis has {len(basis)} labels but dim is {dim}")
    if len(set(basis)) != dim:
        raise FormatError(E_FIELD, "basis labels must be distinct")
    if not isinstance(table, list) or len(table) != dim:
        raise FormatError(E_DIM, f"table must have {dim} rows")
    tensor = []
    for i, row in enumerate(table):
        if not isinstance(row, list) or len(row) != dim:
            raise FormatError(E_DIM, f"table row {i} must have {dim} entries")
        r = []
        for j, vec in enumerate(row):
            if not isinstance(vec, list) or len(vec) != dim:
                raise FormatError(E_DIM, f"table[{i}][{j}] must be a vector of length {dim}")
            r.append([_scalar_field(c, f"table[{i}][{j}][{k}]") for k, c in enumerate(vec)])
        tensor.append(r)
    A = Algebra.unchecked(name, basis, tensor)
    if not unchecked:
        report = is_associative(A)
        if not report:
            raise FormatError(E_NONASSOC, f"table is not associative: {report.describe()}",
                              witness=report.witness)
    return A


def parse_algebra_file(path, *, unchecked: bool = False) -> Algebra:
    return algebra_from_json(Path(path).read_text(encoding="utf-8"), unchecked=unchecked)


def write_algebra_file(A: Algebra, path) -> None:
    Path(path).write_text(algebra_to_json(A), encoding="utf-8")


def map_to_json(f: LinearMap) -> str:
    obj = {
        "domain": f.domain.name,
        "codomain": f.codomain.name,
        "matrix": [[format_scalar(c) for c in row] for row in f.matrix],
    }
    return _dump(obj)


def map_from_json(text: str, domain: Algebra, codomain: Algebra) -> LinearMap:
    """Read a map between two already-loaded algebras; names and shape must agree."""
    obj = _load(text, ("domain", "codomain", "matrix"))
    if obj["domain"] != domain.name or obj["codomain"] != codomain.name:
        raise FormatError(
            E_MISMATCH,
            f"map file is {obj['domain']} -> {obj['codomain']}, "
            f"expected {domain.name} -> {codomain.name}",
        )
    matrix = obj["matrix"]
    if not isinstance(matrix, list) or len(matrix) != codomain.dim:
        raise FormatError(E_DIM, f"matrix must have {codomain.dim} rows")
    rows = []
    for i, row in enumerate(matrix):
        if not isinstance(row, list) or len(row) != domain.dim:
            raise FormatError(E_DIM, f"matrix row {i} must have {domain.dim} entries")
        rows.append([_scalar_field(c, f"matrix[{i}][{j}]") for j, c in enumerate(row)])
    return LinearMap(domain, codomain, rows)


def parse_map_file(path, domain: Algebra, codomain: Algebra) -> LinearMap:
    return map_from_json(Path(path).read_text(encoding="utf-8"), domain, codomain)


def write_map_file(f: LinearMap, path) -> None:
    Path(path).write_text(map_to_json(f), encoding="utf-8")

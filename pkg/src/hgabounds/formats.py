"""Readers for the sample, matrix and polynomial input formats."""

from __future__ import annotations

import csv
import io
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from .applications import PolynomialCoeffs, SymmetricMatrix
from .errors import FormatError
from .means import WeightedSample

SYMMETRY_SILENT = 1e-12
SYMMETRY_MAX = 1e-8


def read_text(source: str | Path) -> str:
    """Contents of a path, or of stdin when ``source`` is ``-``."""
    if str(source) == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {source}: {exc.strerror}") from exc


def _number(text: str, where: str) -> float:
    try:
        value = float(text)
    except (TypeError, ValueError):
        raise FormatError(f"{where}: not a number: {text!r}") from None
    if not math.isfinite(value):
        raise FormatError(f"{where}: not finite: {text!r}")
    return value


def parse_sample(text: str) -> WeightedSample:
    """Parse a sample from JSON ``{"values": [...], "weights": [...]}`` or CSV.

    CSV needs a header row naming ``value`` and optionally ``weight``.
    Without weights every value gets ``1/n``.
    """
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty sample input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
        if "values" not in doc:
            raise FormatError('field "values": missing')
        values = [_number(v, f'field "values"[{i}]') for i, v in enumerate(doc["values"])]
        if doc.get("weights") is None:
            weights = None
        else:
            weights = [_number(w, f'field "weights"[{i}]') for i, w in enumerate(doc["weights"])]
    else:
        reader = csv.reader(io.StringIO(stripped))
        header = [h.strip().lower() for h in next(reader)]
        if "value" not in header:
            raise FormatError(f"line 1: header must name a 'value' column, got {header}")
        vi = header.index("value")
        wi = header.index("weight") if "weight" in header else None
        values: list[float] = []
        weights = [] if wi is not None else None
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(header):
                raise FormatError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
            values.append(_number(row[vi], f"line {lineno}, field 'value'"))
            if wi is not None:
                weights.append(_number(row[wi], f"line {lineno}, field 'weight'"))
    if weights is None:
        return WeightedSample.equal(values)
    return WeightedSample(tuple(values), tuple(weights))


def load_sample(source: str | Path) -> WeightedSample:
    return parse_sample(read_text(source))


def parse_matrix(text: str) -> SymmetricMatrix:
    """First line ``n``, then ``n`` rows of ``n`` numbers.

    Small asymmetries are averaged away; anything above ``1e-8`` relative to
    the largest entry is rejected.
    """
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty matrix file")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise FormatError(f"line 1: expected the matrix order, got {lines[0].strip()!r}") from None
    if n < 1:
        raise FormatError(f"line 1: matrix order must be positive, got {n}")
    if len(lines) - 1 != n:
        raise FormatError(f"expected {n} matrix rows after line 1, got {len(lines) - 1}")
    rows = []
    for i, line in enumerate(lines[1:], start=2):
        fields = line.split()
        if len(fields) != n:
            raise FormatError(f"line {i}: expected {n} entries, got {len(fields)}")
        rows.append([_number(f, f"line {i}, entry {j + 1}") for j, f in enumerate(fields)])
    arr = np.array(rows)
    scale = max(float(np.max(np.abs(arr))), np.finfo(float).tiny)
    deviation = float(np.max(np.abs(arr - arr.T))) / scale
    if deviation > SYMMETRY_MAX:
        raise FormatError(f"matrix is not symmetric (relative deviation {deviation:.3g})")
    if deviation > SYMMETRY_SILENT:
        warnings.warn(f"matrix symmetrized (relative deviation {deviation:.3g})", RuntimeWarning, stacklevel=2)
    return SymmetricMatrix(0.5 * (arr + arr.T))


def load_matrix(source: str | Path) -> SymmetricMatrix:
    return parse_matrix(read_text(source))


def parse_number_list(text: str) -> list[float]:
    """A JSON list of numbers."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}: invalid JSON: {exc.msg}") from None
    if not isinstance(doc, list):
        raise FormatError("expected a JSON list of numbers")
    return [_number(v, f"item {i}") for i, v in enumerate(doc)]


def parse_polynomial(text: str) -> PolynomialCoeffs:
    return PolynomialCoeffs(tuple(parse_number_list(text)))

"""Gate tables: every basis pair under one binary operation.

Rows list all ordered pairs of basis elements (blades, subsets, or qubit
basis states) in (step, index) order with the operation result in the last
column, the same tall layout the reference tables use.  Partial set
operations leave an empty cell where they are undefined.
"""

from __future__ import annotations

import csv
import io
import json

from .boolean_gates import UNIT_COEFF_TOL, all_subsets, pseudo_vee, pseudo_wedge
from .errors import DimensionError
from .multivector import Multivector, all_blades, check_dim, vee, wedge
from .qubits import QubitState, format_basis_state, mask_to_bits, q_vee, q_wedge
from .textform import blade_to_text

TABLE_MAX_DIM = 6

TABLE_OPS = ("wedge", "vee", "pseudo-wedge", "pseudo-vee", "q-wedge", "q-vee")


def _blade_rows(d: int, op) -> list[tuple[str, str, str]]:
    blades = all_blades(d)
    rows = []
    for a in blades:
        for b in blades:
            result = op(Multivector(d, {a: 1.0}), Multivector(d, {b: 1.0}))
            rows.append((blade_to_text(d, a), blade_to_text(d, b), result.to_text()))
    return rows


def _subset_rows(d: int, op, tol: float) -> list[tuple[str, str, str]]:
    states = all_subsets(d)
    rows = []
    for a in states:
        for b in states:
            result = op(a, b, tol)
            rows.append((a.to_text(), b.to_text(), "" if result is None else result.to_text()))
    return rows


def _qubit_rows(d: int, op) -> list[tuple[str, str, str]]:
    rows = []
    masks = all_blades(d)
    for a in masks:
        for b in masks:
            result = op(QubitState(d, {a: 1.0}), QubitState(d, {b: 1.0}))
            rows.append(
                (
                    format_basis_state(mask_to_bits(d, a)),
                    format_basis_state(mask_to_bits(d, b)),
                    result.to_text(),
                )
            )
    return rows


def table_rows(op: str, d: int, tol: float = UNIT_COEFF_TOL) -> list[tuple[str, str, str]]:
    check_dim(d)
    if d > TABLE_MAX_DIM:
        raise DimensionError(f"full tables limited to d <= {TABLE_MAX_DIM}")
    if op == "wedge":
        return _blade_rows(d, wedge)
    if op == "vee":
        return _blade_rows(d, vee)
    if op == "pseudo-wedge":
        return _subset_rows(d, pseudo_wedge, tol)
    if op == "pseudo-vee":
        return _subset_rows(d, pseudo_vee, tol)
    if op == "q-wedge":
        return _qubit_rows(d, q_wedge)
    if op == "q-vee":
        return _qubit_rows(d, q_vee)
    raise ValueError(f"unknown table op {op!r}")


def table_command(op: str, d: int, fmt: str = "text", tol: float = UNIT_COEFF_TOL) -> str:
    """Render the full pair table for one operation as text, json, or csv."""
    rows = table_rows(op, d, tol)
    header = ("a", "b", op)
    if fmt == "json":
        return json.dumps(
            {
                "op": op,
                "dim": d,
                "entries": [{"a": a, "b": b, "result": r} for a, b, r in rows],
            },
            indent=2,
        )
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "text":
        widths = [
            max(len(header[i]), max(len(row[i]) for row in rows)) for i in range(3)
        ]
        lines = ["  ".join(header[i].ljust(widths[i]) for i in range(3))]
        lines.append("  ".join("-" * w for w in widths))
        for row in rows:
            lines.append("  ".join(row[i].ljust(widths[i]) for i in range(3)).rstrip())
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")

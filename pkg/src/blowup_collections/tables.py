"""Pairwise-compatibility tables for the candidate families.

For an ordered pair of candidate classes ``(D_row, D_col)`` the adjacency
requirement inside an exceptional collection is a ``ZERO`` verdict on the
difference ``D_row - D_col``.  Quantifying over family parameters, each
(row family, column family) cell collapses to one of six shapes:

* ``never`` -- no member pair satisfies the requirement;
* ``always`` -- every member pair does;
* ``row_in`` / ``col_in`` -- exactly the listed values of the row (resp.
  column) parameter do, uniformly in the other side;
* ``diff_in`` -- exactly the listed values of ``column parameter - row
  parameter`` do;
* ``unknown`` -- undecided: no member pair is refuted or confirmed.  This
  happens only on the cubic model, precisely in the four cells pairing the
  two conic-supported families ``B9``/``B10`` with each other.

The table contents are *pre-encoded* below and then certified by
:func:`pair_table`, which exhaustively scans all member pairs over a
parameter window and raises :class:`TableVerificationError` on any
mismatch.  :func:`fit_cell_from_scan` performs the reverse derivation
(condition from scan data) and is used by the test-suite to cross-check
the encoding cell by cell.

EXAMPLES::

    >>> table = pair_table(variety_model("line"), 12)
    >>> table.cell("B2", "B1").kind
    'always'
    >>> table.cell("B0", "B0")
    CellCondition(kind='diff_in', values=(1,))
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Mapping

from .geometry import DivisorClass, VarietyModel, variety_model
from .vanishing import VanishingVerdict, classified_case, coh_zero
from .families import FAMILIES, LineBundleFamily, family_labels

__all__ = [
    "CellCondition",
    "PairTable",
    "TableVerificationError",
    "pair_table",
    "fit_cell_from_scan",
    "family_members",
]


class TableVerificationError(RuntimeError):
    """A pre-encoded table cell disagrees with the vanishing oracle."""


@dataclass(frozen=True)
class CellCondition:
    """One table cell: condition under which a member pair is compatible."""

    kind: str
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in ("never", "always", "row_in", "col_in", "diff_in", "unknown"):
            raise ValueError(f"unknown cell kind {self.kind!r}")
        if self.kind in ("never", "always", "unknown") and self.values:
            raise ValueError(f"cell kind {self.kind!r} carries no values")
        if self.kind in ("row_in", "col_in", "diff_in") and not self.values:
            raise ValueError(f"cell kind {self.kind!r} needs admissible values")

    def holds(self, row_param: int, col_param: int) -> bool:
        """Predicate on member parameters; meaningful for decided kinds only."""
        if self.kind == "never":
            return False
        if self.kind == "always":
            return True
        if self.kind == "row_in":
            return row_param in self.values
        if self.kind == "col_in":
            return col_param in self.values
        if self.kind == "diff_in":
            return (col_param - row_param) in self.values
        raise ValueError("an undecided cell has no membership predicate")

    def to_json_dict(self) -> dict:
        return {"kind": self.kind, "values": list(self.values)}


def _c(kind: str, *values: int) -> CellCondition:
    return CellCondition(kind, tuple(values))


_NEVER = _c("never")
_ALWAYS = _c("always")
_UNKNOWN = _c("unknown")


# Golden cell data.  Cells omitted from these mappings are ``never``.
_POINT_CELLS: Mapping[tuple[str, str], CellCondition] = {
    ("B0", "B0"): _c("diff_in", 1, 2),
    ("B0", "B1"): _c("row_in", 0),
    ("B0", "B3"): _ALWAYS,
    ("B0", "B4"): _c("row_in", 1),
    ("B0", "B5"): _c("row_in", 0, 1),
    ("B0", "B6"): _ALWAYS,
    ("B1", "B0"): _ALWAYS,
    ("B1", "B4"): _ALWAYS,
    ("B1", "B6"): _ALWAYS,
    ("B2", "B0"): _c("col_in", 3, 4),
    ("B2", "B1"): _ALWAYS,
    ("B2", "B4"): _ALWAYS,
    ("B3", "B0"): _c("col_in", 3),
    ("B3", "B5"): _ALWAYS,
    ("B3", "B6"): _ALWAYS,
    ("B4", "B0"): _ALWAYS,
    ("B6", "B0"): _c("col_in", 4),
    ("B6", "B5"): _ALWAYS,
}

_LINE_CELLS: Mapping[tuple[str, str], CellCondition] = {
    ("B0", "B0"): _c("diff_in", 1),
    ("B0", "B1"): _ALWAYS,
    ("B0", "B3"): _ALWAYS,
    ("B1", "B1"): _c("diff_in", 1),
    ("B1", "B3"): _ALWAYS,
    ("B2", "B0"): _ALWAYS,
    ("B2", "B1"): _ALWAYS,
}

_CUBIC_CELLS: Mapping[tuple[str, str], CellCondition] = {
    ("B0", "B0"): _c("diff_in", 1, 2),
    ("B0", "B2"): _ALWAYS,
    ("B0", "B3"): _c("row_in", -3, 0),
    ("B0", "B4"): _c("row_in", 0, 1),
    ("B0", "B5"): _c("row_in", -2, 1),
    ("B0", "B7"): _ALWAYS,
    ("B0", "B8"): _c("row_in", -3, -2),
    ("B1", "B0"): _c("col_in", 0, 1),
    ("B1", "B3"): _ALWAYS,
    ("B1", "B5"): _ALWAYS,
    ("B2", "B0"): _c("col_in", 1, 4),
    ("B2", "B4"): _ALWAYS,
    ("B2", "B8"): _ALWAYS,
    ("B3", "B0"): _ALWAYS,
    ("B3", "B2"): _ALWAYS,
    ("B3", "B5"): _ALWAYS,
    ("B5", "B0"): _ALWAYS,
    ("B6", "B0"): _c("col_in", 3, 4),
    ("B6", "B3"): _ALWAYS,
    ("B6", "B5"): _ALWAYS,
    ("B7", "B0"): _c("col_in", 0, 3),
    ("B7", "B2"): _ALWAYS,
    ("B7", "B4"): _ALWAYS,
    ("B7", "B8"): _ALWAYS,
    ("B9", "B9"): _UNKNOWN,
    ("B9", "B10"): _UNKNOWN,
    ("B10", "B9"): _UNKNOWN,
    ("B10", "B10"): _UNKNOWN,
}

_GOLDEN_CELLS: dict[str, Mapping[tuple[str, str], CellCondition]] = {
    "point": _POINT_CELLS,
    "line": _LINE_CELLS,
    "cubic": _CUBIC_CELLS,
}


@dataclass(frozen=True)
class PairTable:
    """Verified compatibility table for one variety."""

    variety: str
    labels: tuple[str, ...]
    cells: tuple[tuple[CellCondition, ...], ...]

    def cell(self, row_label: str, col_label: str) -> CellCondition:
        return self.cells[self.labels.index(row_label)][self.labels.index(col_label)]

    def _letters(self) -> dict[str, str]:
        out = {}
        for fam in FAMILIES[self.variety]:
            if fam.kind == "parameterized":
                out[fam.label] = "a" if fam.param_name == "a" else "b"
        return out

    def _render_cell(self, row_label: str, col_label: str, cond: CellCondition) -> str:
        letters = self._letters()
        if cond.kind == "never":
            return ""
        if cond.kind == "always":
            return "√"
        if cond.kind == "unknown":
            return "?"
        values = ", ".join(str(v) for v in cond.values)
        if cond.kind == "row_in":
            return f"{letters[row_label]}={values}"
        if cond.kind == "col_in":
            return f"{letters[col_label]}'={values}"
        row_letter, col_letter = letters[row_label], letters[col_label]
        offsets = ", ".join(
            f"{row_letter}{v:+d}" if v else row_letter for v in cond.values
        )
        return f"{col_letter}'={offsets}"

    def _header(self) -> list[str]:
        letters = self._letters()
        return [lab + "'" if lab in letters else lab for lab in self.labels]

    def to_markdown(self) -> str:
        header = self._header()
        lines = ["| | " + " | ".join(header) + " |"]
        lines.append("|" + "---|" * (len(header) + 1))
        for row_label, row in zip(self.labels, self.cells):
            rendered = [
                self._render_cell(row_label, col_label, cond)
                for col_label, cond in zip(self.labels, row)
            ]
            lines.append("| " + row_label + " | " + " | ".join(rendered) + " |")
        return "\n".join(lines)

    def to_csv(self) -> str:
        import csv
        import io

        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow([""] + self._header())
        for row_label, row in zip(self.labels, self.cells):
            writer.writerow(
                [row_label]
                + [
                    self._render_cell(row_label, col_label, cond)
                    for col_label, cond in zip(self.labels, row)
                ]
            )
        return buf.getvalue()

    def to_json_dict(self) -> dict:
        return {
            "variety": self.variety,
            "labels": list(self.labels),
            "cells": [[cond.to_json_dict() for cond in row] for row in self.cells],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def family_members(
    fam: LineBundleFamily, variety: str, window: int
) -> list[tuple[int, DivisorClass]]:
    """Member classes of one family with a usable scan parameter.

    Parameterized families yield ``(t, base + t*direction)`` for ``t`` in
    ``[-window, window]``; sporadic families their single class; undecided
    families every class in the coordinate window whose dual falls in the
    matching undecided region (the parameter slot is then a dummy 0).
    """
    if fam.kind == "parameterized":
        return [(t, fam.member(t)) for t in range(-window, window + 1)]
    if fam.kind == "sporadic":
        return [(0, fam.base)]
    model = variety_model(variety)
    wanted_case = 10 if fam.label == "B9" else 11
    found = []
    for a in range(-window, window + 1):
        for b in range(-window, window + 1):
            d = DivisorClass(a, b)
            if classified_case(model, -d) == wanted_case:
                found.append((0, d))
    return found


def _scan_cell(
    model: VarietyModel,
    row_members: list[tuple[int, DivisorClass]],
    col_members: list[tuple[int, DivisorClass]],
) -> dict[tuple[int, int], VanishingVerdict]:
    return {
        (p, q): coh_zero(model, d_row - d_col)
        for p, d_row in row_members
        for q, d_col in col_members
    }


def _verify_cell(
    row_fam: LineBundleFamily,
    col_fam: LineBundleFamily,
    cond: CellCondition,
    scan: dict[tuple[int, int], VanishingVerdict],
) -> None:
    where = f"cell ({row_fam.label}, {col_fam.label})"
    if cond.kind == "unknown":
        if not (row_fam.kind == "undecided" and col_fam.kind == "undecided"):
            raise TableVerificationError(
                f"{where}: undecided cells may pair only the conic-supported families"
            )
        for key, verdict in scan.items():
            if verdict is VanishingVerdict.ZERO:
                raise TableVerificationError(
                    f"{where}: confirmed pair {key} inside an undecided cell"
                )
        return
    for (p, q), verdict in scan.items():
        if verdict is VanishingVerdict.UNKNOWN:
            raise TableVerificationError(
                f"{where}: undecided verdict at {p, q} inside a decided cell"
            )
        expected = cond.holds(p, q)
        actual = verdict is VanishingVerdict.ZERO
        if expected != actual:
            raise TableVerificationError(
                f"{where}: at parameters {p, q} the oracle says "
                f"{'compatible' if actual else 'incompatible'} but the table says "
                f"{'compatible' if expected else 'incompatible'}"
            )


def pair_table(model: VarietyModel, param_window: int = 15) -> PairTable:
    """Build and certify the compatibility table for one variety.

    INPUT:

    - ``model`` -- the variety model;
    - ``param_window`` -- half-width of the exhaustive verification scan,
      at least 10 (the pre-encoded parameter values all lie well inside).

    Every cell of the pre-encoded table is checked against the vanishing
    oracle over all member pairs in the window; any discrepancy raises
    :class:`TableVerificationError`.
    """
    if param_window < 10:
        raise ValueError("table verification windows below 10 prove too little")
    labels = family_labels(model.tag)
    golden = _GOLDEN_CELLS[model.tag]
    members = {
        fam.label: family_members(fam, model.tag, param_window)
        for fam in FAMILIES[model.tag]
    }
    fam_by_label = {fam.label: fam for fam in FAMILIES[model.tag]}
    rows = []
    for row_label in labels:
        row = []
        for col_label in labels:
            cond = golden.get((row_label, col_label), _NEVER)
            scan = _scan_cell(model, members[row_label], members[col_label])
            _verify_cell(fam_by_label[row_label], fam_by_label[col_label], cond, scan)
            row.append(cond)
        rows.append(tuple(row))
    return PairTable(variety=model.tag, labels=labels, cells=tuple(rows))


def fit_cell_from_scan(
    scan: dict[tuple[int, int], VanishingVerdict],
    row_parameterized: bool,
    col_parameterized: bool,
    window: int,
) -> CellCondition:
    """Rederive a decided cell condition from raw scan data.

    The inverse of verification, used as a cross-check: given the verdicts
    of every member pair over the window, reconstruct the unique condition
    shape.  Raises ``ValueError`` when the data does not fit any shape or
    touches the window boundary (where finiteness cannot be judged).
    """
    if any(v is VanishingVerdict.UNKNOWN for v in scan.values()):
        raise ValueError("scan contains undecided verdicts; cell is not decided")
    zeros = {key for key, v in scan.items() if v is VanishingVerdict.ZERO}
    if not zeros:
        return _NEVER
    if len(zeros) == len(scan):
        return _ALWAYS
    if row_parameterized and col_parameterized:
        offsets = sorted({q - p for p, q in zeros})
        if any(abs(off) > window - 2 for off in offsets):
            raise ValueError("difference pattern touches the scan boundary")
        predicted = {
            (p, q) for (p, q) in scan if q - p in offsets
        }
        if predicted != zeros:
            raise ValueError("compatible pairs do not follow a difference pattern")
        return _c("diff_in", *offsets)
    if row_parameterized:
        values = sorted({p for p, _ in zeros})
        kind = "row_in"
    elif col_parameterized:
        values = sorted({q for _, q in zeros})
        kind = "col_in"
    else:
        raise ValueError("a pair of sporadic families admits only never/always")
    if any(abs(v) > window - 2 for v in values):
        raise ValueError("value pattern touches the scan boundary")
    predicted = {
        (p, q)
        for (p, q) in scan
        if (p in values if kind == "row_in" else q in values)
    }
    if predicted != zeros:
        raise ValueError("compatible pairs are not uniform in the other parameter")
    return _c(kind, *values)

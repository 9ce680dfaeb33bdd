"""The ladder-graph data model: 2xn labelings, adjacency, and verification.

The ladder of order 2n is the 2xn grid graph: cell (i, j) with row i in {1, 2}
and column j in {1..n} is adjacent to (i, j-1), (i, j+1) and (3-i, j). A prime
labeling assigns 1..2n bijectively to the cells so that every adjacent pair of
labels is coprime.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from pathlib import Path

import numpy as np

__all__ = [
    "MalformedLabelingError",
    "Labeling",
    "Violation",
    "verify_labeling",
    "neighbor_labels",
    "swap_labels",
    "position_of",
    "parse_labeling_csv",
    "format_labeling_csv",
    "load_labeling_csv",
]


class MalformedLabelingError(ValueError):
    """Input is not a 2xn grid bijectively labeled with 1..2n.

    Distinct from a well-formed labeling that merely fails the coprimality
    test: that case is reported through Violation lists, not exceptions.
    """


class Labeling:
    """Immutable 2xn grid of positive integer labels.

    Rows are 1-indexed {1, 2} and columns 1-indexed {1..n} so that closed-form
    label assignments transcribe without off-by-one shifts. The underlying
    array is read-only; operations that change labels return new values.
    """

    __slots__ = ("_cells",)

    def __init__(self, rows) -> None:
        cells = np.array(rows, dtype=np.int64)
        if cells.ndim != 2 or cells.shape[0] != 2 or cells.shape[1] < 1:
            raise MalformedLabelingError(
                f"expected a 2-row grid with at least one column, got shape {cells.shape}"
            )
        if (cells < 1).any():
            raise MalformedLabelingError("labels must be positive integers")
        cells.flags.writeable = False
        self._cells = cells

    @property
    def n(self) -> int:
        """Number of columns."""
        return self._cells.shape[1]

    @property
    def cells(self) -> np.ndarray:
        """Read-only (2, n) array; array row 0 is grid row 1."""
        return self._cells

    def label_at(self, row: int, col: int) -> int:
        if not (1 <= row <= 2 and 1 <= col <= self.n):
            raise ValueError(f"position ({row}, {col}) outside 2x{self.n} grid")
        return int(self._cells[row - 1, col - 1])

    def to_rows(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return tuple(tuple(int(v) for v in row) for row in self._cells)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self._cells.shape == other._cells.shape and bool(
            np.array_equal(self._cells, other._cells)
        )

    def __hash__(self) -> int:
        return hash(self._cells.tobytes())

    def __repr__(self) -> str:
        if self.n <= 12:
            return f"Labeling({self.to_rows()!r})"
        return f"<Labeling n={self.n}>"


@dataclass(frozen=True)
class Violation:
    """An adjacent pair of labels sharing a factor > 1."""

    position_a: tuple[int, int]
    position_b: tuple[int, int]
    label_a: int
    label_b: int
    common_divisor: int


def _check_bijection(labeling: Labeling) -> None:
    n = labeling.n
    flat = np.sort(labeling.cells.ravel())
    if not np.array_equal(flat, np.arange(1, 2 * n + 1)):
        raise MalformedLabelingError(
            f"labels are not a bijection onto 1..{2 * n}"
        )


def verify_labeling(labeling: Labeling) -> list[Violation]:
    """Every adjacent pair with a common factor, ordered by column.

    An empty result means the labeling is prime. Within one column the
    vertical edge is reported before the horizontal edges leaving it.
    Raises MalformedLabelingError when the grid is not a bijection onto
    1..2n, which is a different failure than a non-prime labeling.
    """
    _check_bijection(labeling)
    cells = labeling.cells
    n = labeling.n
    vert = np.gcd(cells[0], cells[1])
    events = [(int(j), 0) for j in np.flatnonzero(vert > 1)]
    if n > 1:
        horiz = np.gcd(cells[:, :-1], cells[:, 1:])
        events += [(int(j), 1) for j in np.flatnonzero(horiz[0] > 1)]
        events += [(int(j), 2) for j in np.flatnonzero(horiz[1] > 1)]
    out = []
    for j, kind in sorted(events):
        if kind == 0:
            a, b = (1, j + 1), (2, j + 1)
        elif kind == 1:
            a, b = (1, j + 1), (1, j + 2)
        else:
            a, b = (2, j + 1), (2, j + 2)
        la = labeling.label_at(*a)
        lb = labeling.label_at(*b)
        out.append(Violation(a, b, la, lb, gcd(la, lb)))
    return out


def position_of(labeling: Labeling, label: int) -> tuple[int, int]:
    """The (row, column) holding `label`; ValueError if absent."""
    hits = np.argwhere(labeling.cells == label)
    if hits.shape[0] == 0:
        raise ValueError(f"label {label} not present in 2x{labeling.n} labeling")
    r, c = hits[0]
    return (int(r) + 1, int(c) + 1)


def neighbor_labels(labeling: Labeling, label: int) -> set[int]:
    """Labels on cells adjacent to the cell holding `label`."""
    row, col = position_of(labeling, label)
    out = {labeling.label_at(3 - row, col)}
    if col > 1:
        out.add(labeling.label_at(row, col - 1))
    if col < labeling.n:
        out.add(labeling.label_at(row, col + 1))
    return out


def swap_labels(labeling: Labeling, a: int, b: int) -> Labeling:
    """New labeling with the positions of labels a and b exchanged."""
    pa = position_of(labeling, a)
    pb = position_of(labeling, b)
    if a == b:
        return labeling
    cells = labeling.cells.copy()
    cells[pa[0] - 1, pa[1] - 1] = b
    cells[pb[0] - 1, pb[1] - 1] = a
    return Labeling(cells)


# ---------------------------------------------------------------------------
# CSV file format: exactly two lines, row i as comma-separated labels, no
# header. Used by the CLI construct/verify commands.
# ---------------------------------------------------------------------------


def parse_labeling_csv(text: str) -> Labeling:
    """Parse the two-line CSV labeling format, with positional diagnostics."""
    lines = text.splitlines()
    while lines and lines[-1].strip() == "":
        lines.pop()
    if len(lines) != 2:
        raise MalformedLabelingError(
            f"expected exactly 2 rows, got {len(lines)}"
        )
    rows = []
    for lineno, line in enumerate(lines, start=1):
        row = []
        for colno, field in enumerate(line.split(","), start=1):
            try:
                row.append(int(field.strip()))
            except ValueError:
                raise MalformedLabelingError(
                    f"row {lineno}, column {colno}: {field.strip()!r} is not an integer"
                ) from None
        rows.append(row)
    if len(rows[0]) != len(rows[1]):
        raise MalformedLabelingError(
            f"row lengths differ: {len(rows[0])} vs {len(rows[1])}"
        )
    return Labeling(rows)


def format_labeling_csv(labeling: Labeling) -> str:
    top, bottom = labeling.to_rows()
    return (
        ",".join(str(v) for v in top)
        + "\n"
        + ",".join(str(v) for v in bottom)
        + "\n"
    )


def load_labeling_csv(path: str | Path) -> Labeling:
    return parse_labeling_csv(Path(path).read_text(encoding="utf-8"))

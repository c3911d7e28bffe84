"""Deterministic text/CSV/JSON renderings of sequences, trees and reports."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np

from .encoding import Hierarchy, block_range, d2b
from .errors import ConfigurationError, RangeError

REPORT_SCHEMA = "report_v1"

# counterclockwise, first step to the right (row index grows downward)
_DIRECTIONS = ((0, 1), (-1, 0), (0, -1), (1, 0))


def spiral_positions(side: int) -> list[tuple[int, int]]:
    """Grid cell ``(row, col)`` of each sequence index, index 0 at the centre."""
    if side < 1 or side % 2 == 0:
        raise ConfigurationError(f"spiral side must be a positive odd integer, got {side}")
    row = col = side // 2
    cells = [(row, col)]
    step, d = 1, 0
    while len(cells) < side * side:
        for _ in range(2):
            dr, dc = _DIRECTIONS[d % 4]
            for _ in range(step):
                row, col = row + dr, col + dc
                if len(cells) < side * side:
                    cells.append((row, col))
            d += 1
        step += 1
    return cells


@dataclass(frozen=True, eq=False)
class SpiralGrid:
    side: int
    cells: np.ndarray
    # sequence index held by each cell
    order: np.ndarray

    @property
    def center(self) -> int:
        c = self.side // 2
        return int(self.cells[c, c])

    def index_at(self, row: int, col: int) -> int:
        return int(self.order[row, col])


def spiral(values, side: int) -> SpiralGrid:
    values = np.asarray(getattr(values, "values", values))
    positions = spiral_positions(side)
    if values.size < side * side:
        raise RangeError(f"spiral of side {side} needs {side * side} values, got {values.size}")
    cells = np.zeros((side, side), dtype=np.int64)
    order = np.zeros((side, side), dtype=np.int64)
    for i, (r, c) in enumerate(positions):
        cells[r, c] = values[i]
        order[r, c] = i
    return SpiralGrid(side, cells, order)


def render_spiral(grid: SpiralGrid) -> str:
    """Right-aligned text grid with the centre value in brackets."""
    width = len(str(int(grid.cells.max()))) + 2
    c = grid.side // 2
    lines = []
    for r in range(grid.side):
        row = []
        for col in range(grid.side):
            text = str(int(grid.cells[r, col]))
            row.append((f"[{text}]" if (r, col) == (c, c) else text).rjust(width))
        lines.append(" ".join(row).rstrip())
    return "\n".join(lines) + "\n"


def spiral_csv(grid: SpiralGrid) -> str:
    return "\n".join(",".join(str(int(v)) for v in row) for row in grid.cells) + "\n"


def _node(hier: Hierarchy, k: int, n: int, depth: int) -> str:
    width = hier.params.block_size
    value = int(hier[k][n])
    lo, hi = block_range(k, n, hier.params)
    return f"{'  ' * depth}L{k} n={n} [{lo}, {hi}] {value} ({value:0{width}b})"


def tree(hier: Hierarchy, n3: int) -> str:
    """Level-3 block ``n3``, its level-2 children and, under flagged children, level-1 blocks."""
    if hier.depth < 3:
        raise ConfigurationError("tree needs a 3-level hierarchy")
    if not 0 <= n3 < hier[3].size:
        raise RangeError(f"level-3 index {n3} outside 0..{hier[3].size - 1}")
    t = hier.params.t
    width = hier.params.block_size
    root = int(hier[3][n3])
    flagged = set(d2b(root, t))
    lines = [_node(hier, 3, n3, 0)]
    for j in range(width):
        m = width * n3 + j
        lines.append(_node(hier, 2, m, 1))
        if j in flagged:
            lines.extend(_node(hier, 1, width * m + i, 2) for i in range(width))
    return "\n".join(lines) + "\n"


def histogram_csv(hist, include_zero: bool = False) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["pattern", "count"])
    for c, count in enumerate(hist.counts):
        if count or include_zero:
            writer.writerow([c, int(count)])
    return out.getvalue()


def mersenne_csv(blocks) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["k", "pattern", "prime_offsets"])
    for b in blocks:
        writer.writerow([b.exponent, b.pattern, ";".join(str(o) for o in sorted(b.prime_offsets))])
    return out.getvalue()


def reconstruction_csv(result) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["n3", "n2", "n1", "integer"])
    writer.writerows(result.ancestry)
    return out.getvalue()


def _plain(obj):
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_plain(v) for v in items]
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return obj


def report_json(kind: str, payload: dict) -> str:
    """Versioned JSON document ``{"schema": "report_v1", "kind": ..., ...}``."""
    doc = {"schema": REPORT_SCHEMA, "kind": kind}
    doc.update(_plain(payload))
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def report_text(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        lines.append(f"{key}: {_plain(value)}")
    return "\n".join(lines) + "\n"

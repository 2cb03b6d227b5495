"""Plain text tables for terminal output"""
from typing import Any, Sequence, TextIO

from .base import ReportWriter


def columnize(rows: Sequence[Sequence[Any]], divider: str = " | ", header: bool = True) -> str:
    """
    Left-justify cells into aligned columns.

    Args:
        rows: Table rows; short rows are padded with empty cells
        divider: Text between columns
        header: Underline the first row

    Returns:
        Rendered table, one line per row, trailing spaces stripped
    """
    if not rows:
        return ""
    width_count = max(map(len, rows))
    cells = [[str(x) for x in row] + [""] * (width_count - len(row)) for row in rows]
    widths = [max(len(cell) for cell in column) for column in zip(*cells)]
    lines = []
    for i, row in enumerate(cells):
        lines.append(divider.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if header and i == 0:
            lines.append(divider.replace(" ", "-").join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


class TableWriter(ReportWriter):
    """Buffers rows and renders them with columnize on close"""

    def __init__(self, stream: TextIO, divider: str = " | "):
        super().__init__(stream)
        self.divider = divider
        self.rows: list[dict[str, Any]] = []

    def write_row(self, row: dict[str, Any]) -> None:
        self.rows.append(row)

    def close(self) -> None:
        if not self.rows:
            return
        header = list(self.rows[0])
        body = [[row.get(key, "") for key in header] for row in self.rows]
        self.stream.write(columnize([header, *body], divider=self.divider))
        self.stream.flush()

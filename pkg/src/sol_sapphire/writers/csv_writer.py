"""CSV writer for flat records"""
import csv
from typing import Any, TextIO

from .base import ReportWriter


class CsvWriter(ReportWriter):
    """Writes a header from the first row's keys, then one line per row"""

    def __init__(self, stream: TextIO):
        super().__init__(stream)
        self._writer: csv.DictWriter | None = None

    def write_row(self, row: dict[str, Any]) -> None:
        if self._writer is None:
            self._writer = csv.DictWriter(self.stream, fieldnames=list(row), lineterminator="\n")
            self._writer.writeheader()
        self._writer.writerow(row)

    def close(self) -> None:
        self.stream.flush()

"""JSON array writer"""
import json
from typing import Any, TextIO

from .base import ReportWriter


class JsonWriter(ReportWriter):
    """Buffers rows and writes them as one indented JSON array on close"""

    def __init__(self, stream: TextIO, indent: int = 2):
        super().__init__(stream)
        self.indent = indent
        self.rows: list[dict[str, Any]] = []

    def write_row(self, row: dict[str, Any]) -> None:
        self.rows.append(row)

    def close(self) -> None:
        self.stream.write(json.dumps(self.rows, indent=self.indent) + "\n")
        self.stream.flush()

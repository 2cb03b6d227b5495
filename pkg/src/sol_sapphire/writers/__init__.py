"""Report writers"""
from .base import ReportWriter
from .csv_writer import CsvWriter
from .json_writer import JsonWriter
from .table import TableWriter, columnize

__all__ = ["ReportWriter", "CsvWriter", "JsonWriter", "TableWriter", "columnize"]

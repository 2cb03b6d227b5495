"""Base class for report writers"""
from abc import ABC, abstractmethod
from typing import Any, TextIO


class ReportWriter(ABC):
    """Abstract base class for writers emitting one record per row"""

    def __init__(self, stream: TextIO):
        """
        Initialize writer.

        Args:
            stream: Open text stream; the writer does not close it
        """
        self.stream = stream

    @abstractmethod
    def write_row(self, row: dict[str, Any]) -> None:
        """
        Write one record.

        Args:
            row: Flat or nested record as produced by a pydantic model_dump
        """
        pass

    @abstractmethod
    def close(self) -> None:
        """Flush anything buffered"""
        pass

    def __enter__(self):
        """Context manager entry"""
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        """Context manager exit"""
        self.close()

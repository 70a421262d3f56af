# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Results reporting: CSV tables, versioned JSON documents and plain text."""

import csv
import io
import json
import logging
import pathlib
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional

import numpy as np

from cavitycool import const


logger = logging.getLogger(__name__)


def format_value(value: Any) -> Any:
    """Render floats with a fixed significant-digit format for stable output."""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (float, np.floating)):
        return format(float(value), const.FLOAT_FORMAT)
    if isinstance(value, Enum):
        return value.value
    if value is None:
        return ""
    return value


class CSVBuilder:
    """Build a CSV table with a fixed header from row dicts."""

    def __init__(self, fieldnames: Iterable[str]) -> None:
        """Initialize."""
        self._fieldnames: List[str] = list(fieldnames)
        self._rows: List[Dict[str, Any]] = []

    @property
    def fieldnames(self) -> List[str]:
        return list(self._fieldnames)

    @property
    def row_count(self) -> int:
        """Return the number of rows."""
        return len(self._rows)

    def add_row(self, row: Mapping[str, Any]) -> None:
        """Add a row to the CSV."""
        self.validate_row(row)
        self._rows.append({key: format_value(value) for key, value in row.items()})

    def add_rows(self, rows: Iterable[Mapping[str, Any]]) -> None:
        for row in rows:
            self.add_row(row)

    def validate_row(self, row: Mapping[str, Any]) -> None:
        """Validate a row."""
        for key in self._fieldnames:
            if key not in row:
                raise RuntimeError(f"Row missing key: {key}")
        for key in row.keys():
            if key not in self._fieldnames:
                raise RuntimeError(f"Row has extra key: {key}")

    def _write(self, stream: Any) -> None:
        writer = csv.DictWriter(
            stream, fieldnames=self._fieldnames, lineterminator=const.CSV_LINE_TERMINATOR
        )
        writer.writeheader()
        for row in self._rows:
            writer.writerow(row)

    def to_string(self) -> str:
        buffer = io.StringIO(newline="")
        self._write(buffer)
        return buffer.getvalue()

    def write_to_file(self, filepath: pathlib.Path) -> None:
        """Write the CSV to file."""
        logger.debug(f"Writing CSV to {filepath}")
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, mode="w", newline="", encoding="utf-8") as csv_file:
            self._write(csv_file)

    @classmethod
    def from_rows(cls, rows: List[Dict[str, Any]]) -> "CSVBuilder":
        """Builder whose header is the key order of the first row."""
        if not rows:
            raise RuntimeError("Cannot infer CSV columns from an empty table")
        builder = cls(rows[0].keys())
        builder.add_rows(rows)
        return builder


def _json_default(value: Any) -> Any:
    if isinstance(value, complex):
        return {"re": value.real, "im": value.imag}
    if isinstance(value, np.complexfloating):
        return {"re": float(value.real), "im": float(value.imag)}
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, pathlib.Path):
        return str(value)
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def json_document(data: Any, warnings: Optional[List[str]] = None) -> str:
    """
    Wrap a payload with schema version, unit conventions and constants
    provenance. Keys are sorted so identical inputs give identical bytes.
    """
    document: Dict[str, Any] = {
        "schema_version": const.SCHEMA_VERSION,
        "units": const.UNIT_CONVENTIONS,
        "provenance": const.CONSTANTS_PROVENANCE,
        "data": data,
    }
    if warnings:
        document["warnings"] = warnings
    return json.dumps(document, sort_keys=True, indent=2, default=_json_default) + "\n"


class ResultsReporter:
    """Send rendered results to stdout or a file."""

    def __init__(self, output: Optional[pathlib.Path] = None) -> None:
        self.output = output

    def emit(self, text: str) -> None:
        if self.output is None:
            print(text, end="")  # noqa: T201
            return
        logger.debug(f"Writing results to {self.output}")
        self.output.parent.mkdir(parents=True, exist_ok=True)
        with open(self.output, mode="w", newline="", encoding="utf-8") as out_file:
            out_file.write(text)

    def report_csv(self, builder: CSVBuilder) -> None:
        if self.output is None:
            self.emit(builder.to_string())
        else:
            builder.write_to_file(self.output)

    def report_json(self, data: Any, warnings: Optional[List[str]] = None) -> None:
        self.emit(json_document(data, warnings))

    def report_text(self, sections: Mapping[str, Mapping[str, Any]]) -> None:
        """Aligned `key: value` blocks under a heading per section."""
        self.emit(ResultsReporter.get_text(sections))

    @staticmethod
    def get_text(sections: Mapping[str, Mapping[str, Any]]) -> str:
        lines: List[str] = []
        for title, values in sections.items():
            lines.append(f"[{title}]")
            width = max((len(key) for key in values), default=0)
            for key, value in values.items():
                lines.append(f"  {key.ljust(width)}  {format_value(value)}")
            lines.append("")
        return "\n".join(lines)

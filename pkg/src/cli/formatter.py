"""Render command results as CSV or JSON"""

import csv
import io
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, TextIO

from pydantic import BaseModel

from src.cli.config import OutputFormat


@dataclass
class CommandOutput:
    """Tabular rows for CSV plus the JSON document of one command"""
    columns: List[str]
    rows: List[Dict[str, Any]]
    document: BaseModel
    exit_code: int = 0


class ResultFormatter:
    """Formats command results for stdout or a file"""

    @staticmethod
    def format_value(value: Any) -> str:
        """
        Render one CSV field

        Floats use repr, the shortest string that round-trips, so output does
        not depend on locale; NaN is written as nan.
        """
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return "nan" if math.isnan(value) else repr(value)
        if value is None:
            return ""
        return str(value)

    @staticmethod
    def format_csv(columns: List[str], rows: List[Dict[str, Any]]) -> str:
        """Header row followed by one line per row, in the given column order"""
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([ResultFormatter.format_value(row[column]) for column in columns])
        return buffer.getvalue()

    @staticmethod
    def format_json(document: BaseModel) -> str:
        return document.model_dump_json(indent=2) + "\n"

    @staticmethod
    def render(output: CommandOutput, fmt: OutputFormat) -> str:
        if fmt is OutputFormat.JSON:
            return ResultFormatter.format_json(output.document)
        return ResultFormatter.format_csv(output.columns, output.rows)

    @staticmethod
    @contextmanager
    def open_target(path: Optional[Path]) -> Iterator[TextIO]:
        """stdout when path is None, otherwise the file (OSError propagates)"""
        if path is None:
            yield sys.stdout
            return
        with open(path, "w", encoding="utf-8", newline="") as handle:
            yield handle

    @staticmethod
    def emit(output: CommandOutput, fmt: OutputFormat, path: Optional[Path] = None) -> None:
        text = ResultFormatter.render(output, fmt)
        with ResultFormatter.open_target(path) as target:
            target.write(text)

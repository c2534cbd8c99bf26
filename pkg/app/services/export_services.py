"""Serializers for command documents: JSON via pydantic, CSV via the csv module."""
import csv
import io
from typing import Iterable, List

from pydantic import BaseModel

from app.models.enums import OutputFormat


def _cell(value) -> str:
    if isinstance(value, list):
        return ",".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join(f"{k}={_cell(v)}" for k, v in value.items())
    if value is None:
        return ""
    return str(value)


def to_csv(rows: Iterable[BaseModel]) -> str:
    records: List[dict] = [row.model_dump(mode="json") for row in rows]
    buffer = io.StringIO()
    writer = csv.writer(buffer, quoting=csv.QUOTE_ALL, lineterminator="\n")
    if records:
        header = list(records[0])
        writer.writerow(header)
        for record in records:
            writer.writerow([_cell(record.get(column)) for column in header])
    return buffer.getvalue()


def render(document: BaseModel, rows: Iterable[BaseModel], fmt: OutputFormat) -> str:
    if fmt == OutputFormat.CSV:
        return to_csv(rows)
    return document.model_dump_json(indent=2) + "\n"

"""
Report Formatter.
Turns command results into the JSON, CSV or fixed-width table written to stdout.
"""

import csv
import io
from decimal import Decimal
from fractions import Fraction
from typing import Any

import numpy as np
import orjson
from pydantic import BaseModel

from btlab.models import CommandOutput, ExperimentReport
from btlab.utils.rationals import rational_str

JSON_OPTIONS = orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS | orjson.OPT_NON_STR_KEYS | orjson.OPT_SERIALIZE_NUMPY


def _default(value: Any) -> Any:
    """orjson fallback for the exact and numeric types the services return"""
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, Decimal):
        return str(value)
    if isinstance(value, complex):
        return {'re': value.real, 'im': value.imag}
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, BaseModel):
        return value.model_dump()
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    raise TypeError(f'cannot serialize {type(value).__name__}')


def render_json(output: CommandOutput) -> str:
    return orjson.dumps(output.model_dump(), default=_default, option=JSON_OPTIONS).decode() + '\n'


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, Fraction):
        return rational_str(value)
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (dict, list, tuple)):
        return orjson.dumps(value, default=_default, option=orjson.OPT_NON_STR_KEYS | orjson.OPT_SORT_KEYS).decode()
    return str(value)


def _plain(rows: list[BaseModel | dict]) -> list[dict[str, Any]]:
    return [row.model_dump() if isinstance(row, BaseModel) else row for row in rows]


def _columns(rows: list[dict[str, Any]]) -> list[str]:
    columns: list[str] = []
    for row in rows:
        columns.extend(key for key in row if key not in columns)
    return columns


def render_csv(rows: list[BaseModel | dict]) -> str:
    """Header plus one line per row, `\\n` terminated; columns in first-seen order"""
    rows = _plain(rows)
    if not rows:
        return ''
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    columns = _columns(rows)
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in columns])
    return buffer.getvalue()


def render_table(rows: list[BaseModel | dict], title: str | None = None) -> str:
    """Fixed-width text table: left-aligned columns sized to their widest cell"""
    rows = _plain(rows)
    lines = [title] if title else []
    if not rows:
        lines.append('(no rows)')
        return '\n'.join(lines) + '\n'
    columns = _columns(rows)
    cells = [[_cell(row.get(column)) for column in columns] for row in rows]
    widths = [max(len(column), *(len(line[i]) for line in cells)) for i, column in enumerate(columns)]
    lines.append('  '.join(column.ljust(width) for column, width in zip(columns, widths)).rstrip())
    lines.append('  '.join('-' * width for width in widths))
    lines.extend('  '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells)
    return '\n'.join(lines) + '\n'


def report_rows(reports: list[ExperimentReport]) -> list[dict[str, Any]]:
    """One summary row per experiment for the csv and table views"""
    return [
        {
            'name': report.name,
            'status': report.status,
            'values': report.values,
            'error': report.error,
        }
        for report in reports
    ]

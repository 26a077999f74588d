"""
Rendering of result records as rich tables, JSON, or CSV.

CSV and JSON carry 10 significant digits; tables show 4 decimals.
"""

import io
import json
import math
from typing import Any, Dict, List, Optional, Union

import pandas as pd
import typer
from rich.console import Console
from rich.table import Table

from omega_entropy.cli.themes import ThemeManager

SIGNIFICANT_DIGITS = 10
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"
TABLE_DECIMALS = 4

Record = Dict[str, Any]


def round_significant(value: Any) -> Any:
    """Round floats to 10 significant digits; other values pass through."""
    if isinstance(value, float) and not isinstance(value, bool) and math.isfinite(value):
        return float(FLOAT_FORMAT % value)
    return value


def to_json(data: Union[Record, List[Record]]) -> str:
    if isinstance(data, list):
        payload: Any = [{k: round_significant(v) for k, v in row.items()} for row in data]
    else:
        payload = {k: round_significant(v) for k, v in data.items()}
    return json.dumps(payload, indent=2) + "\n"


def to_csv(data: Union[Record, List[Record]]) -> str:
    rows = data if isinstance(data, list) else [data]
    frame = pd.DataFrame(rows)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def _cell(value: Any, theme: ThemeManager) -> str:
    if isinstance(value, bool):
        style = theme.style('flag_on' if value else 'flag_off')
        text = "yes" if value else "no"
        return f"[{style}]{text}[/]" if style else text
    if value is None:
        return "-"
    if isinstance(value, float):
        if value != 0.0 and abs(value) < 10 ** -TABLE_DECIMALS:
            return f"{value:.4e}"
        return f"{value:.{TABLE_DECIMALS}f}"
    return str(value)


def record_table(record: Record, title: Optional[str] = None, theme: Optional[ThemeManager] = None) -> Table:
    """Two-column field/value table for a single record."""
    theme = theme or ThemeManager()
    table = Table(title=title, title_style=theme.style('title'),
                  header_style=theme.style('header'), border_style=theme.style('border'))
    table.add_column("Field", style=theme.style('label'))
    table.add_column("Value", justify="right", style=theme.style('number'))
    for key, value in record.items():
        table.add_row(key, _cell(value, theme))
    return table


def rows_table(rows: List[Record], title: Optional[str] = None, theme: Optional[ThemeManager] = None) -> Table:
    """One row per record, one column per field."""
    theme = theme or ThemeManager()
    table = Table(title=title, title_style=theme.style('title'),
                  header_style=theme.style('header'), border_style=theme.style('border'))
    if not rows:
        return table
    for key in rows[0]:
        table.add_column(key, justify="right")
    for row in rows:
        table.add_row(*(_cell(v, theme) for v in row.values()))
    return table


def emit(
    data: Union[Record, List[Record]],
    fmt: str,
    title: Optional[str] = None,
    theme_name: str = "dark",
    tabular: bool = False,
) -> None:
    """Write records to stdout in the requested format.

    ``tabular`` renders a list as one table; otherwise each record gets its
    own field/value table.
    """
    if fmt == "json":
        typer.echo(to_json(data), nl=False)
        return
    if fmt == "csv":
        typer.echo(to_csv(data), nl=False)
        return

    console = Console()
    theme = ThemeManager(theme_name)
    if isinstance(data, list) and tabular:
        console.print(rows_table(data, title=title, theme=theme))
        return
    for record in data if isinstance(data, list) else [data]:
        console.print(record_table(record, title=title or record.get("source"), theme=theme))

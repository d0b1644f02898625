"""CSV and JSON table rendering with stable, machine-diffable layouts."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable

from . import __version__


def ratio_text(count: int, length: int, places: int = 6) -> str:
    """count/length as a decimal string, rounded half-up at the last place.

    Integer arithmetic throughout, so renderings never drift.
    """
    scale = 10**places
    scaled = (2 * count * scale + length) // (2 * length)
    return f"{scaled // scale}.{scaled % scale:0{places}d}"


def cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def render_csv(header: list[str], rows: Iterable[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([cell(v) for v in row])
    return buf.getvalue()


def render_json(
    command: str,
    eps,
    range_text: str | None,
    header: list[str],
    rows: Iterable[list],
) -> str:
    payload = {
        "meta": {
            "command": command,
            "eps": None if eps is None else str(eps),
            "range": range_text,
            "version": __version__,
        },
        "rows": [dict(zip(header, row)) for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"

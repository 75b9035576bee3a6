"""CSV and JSON serialization of census records."""

from __future__ import annotations

import csv
import io
import json

from .census import CensusConfig, CountRecord

CSV_COLUMNS = ("variant", "n", "H", "total", "degenerate", "irr_degenerate", "red_degenerate", "wall_ms")
TOOL = "degenpoly"


def _cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, float):
        return f"{v:.1f}"
    return str(v)


def records_to_csv(records: list[CountRecord], timing: bool = True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        row = r.as_dict()
        if not timing:
            row["wall_ms"] = None
        w.writerow([_cell(row[c]) for c in CSV_COLUMNS])
    return buf.getvalue()


def records_to_json(records: list[CountRecord], cfg: CensusConfig, version: str, timing: bool = True) -> str:
    rows = []
    for r in records:
        row = r.as_dict()
        if not timing:
            row["wall_ms"] = None
        rows.append(row)
    meta = {
        "tool": TOOL,
        "version": version,
        "config": {**cfg.echo(), "prefilter": cfg.prefilter, "threads": cfg.threads},
        "order_mode": cfg.order_mode,
    }
    return json.dumps({"meta": meta, "records": rows}, indent=2) + "\n"

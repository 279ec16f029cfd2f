"""Deterministic record output: CSV or JSON lines, plus an aggregate sibling.

Floats print with 9 significant digits; rows are sorted before writing, so
identical runs produce byte-identical files.  The aggregate file is always
CSV, named like the main output with its extension replaced by ``.agg.csv``.
"""

from __future__ import annotations

import json
import os
from typing import Iterable

from .sweep import SweepRecord, aggregate_records

__all__ = ["RECORD_HEADER", "AGGREGATE_HEADER", "emit", "format_records", "format_aggregates"]

RECORD_HEADER = (
    "topology,rows,cols,mode,lambda_mean,sigma,network_sample,source,target,distance,"
    "final_lambda,entanglement,destroyed,integrity,connectivity,failed,seed"
)
AGGREGATE_HEADER = (
    "lambda_mean,sigma,distance,mean_entanglement,mean_integrity,mean_connectivity,count"
)


def _fmt(x: float) -> str:
    return f"{x:.9g}"


def _record_fields(r: SweepRecord) -> list:
    return [
        r.topology,
        r.rows,
        r.cols,
        r.mode,
        _fmt(r.lambda_mean),
        _fmt(r.sigma),
        r.network_sample,
        r.source,
        r.target,
        r.distance,
        _fmt(r.final_lambda),
        _fmt(r.entanglement),
        r.destroyed,
        _fmt(r.integrity),
        _fmt(r.connectivity),
        int(r.failed),
        r.seed,
    ]


def _sorted(records: Iterable[SweepRecord]) -> list[SweepRecord]:
    return sorted(
        records, key=lambda r: (r.lambda_mean, r.network_sample, r.distance, r.source, r.target)
    )


def format_records(records: Iterable[SweepRecord], fmt: str) -> str:
    rows = _sorted(records)
    if fmt == "csv":
        lines = [RECORD_HEADER]
        lines.extend(",".join(str(f) for f in _record_fields(r)) for r in rows)
        return "\n".join(lines) + "\n"
    if fmt == "json-lines":
        keys = RECORD_HEADER.split(",")
        lines = []
        for r in rows:
            obj = {}
            for key, value in zip(keys, _record_fields(r)):
                if isinstance(value, str) and key not in ("topology", "mode"):
                    value = float(value)
                obj[key] = value
            lines.append(json.dumps(obj, separators=(",", ":")))
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def format_aggregates(records: Iterable[SweepRecord]) -> str:
    lines = [AGGREGATE_HEADER]
    for lam, sigma, d, me, mi, mk, n in aggregate_records(list(records)):
        lines.append(f"{_fmt(lam)},{_fmt(sigma)},{d},{_fmt(me)},{_fmt(mi)},{_fmt(mk)},{n}")
    return "\n".join(lines) + "\n"


def aggregate_path(path: str) -> str:
    stem, ext = os.path.splitext(path)
    return stem + ".agg.csv" if ext else path + ".agg.csv"


def emit(records: Iterable[SweepRecord], fmt: str, path: str) -> tuple[str, str]:
    """Write the record file and its aggregate sibling; returns both paths."""
    records = list(records)
    main_text = format_records(records, fmt)
    agg_text = format_aggregates(records)
    agg = aggregate_path(path)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(main_text)
    with open(agg, "w", encoding="utf-8", newline="") as fh:
        fh.write(agg_text)
    return path, agg

"""Experiment configuration: line-oriented ``key = value`` files with
section headers (INI syntax), parsed into a frozen config record.

See the README for the full grammar.  ``serialize`` emits the canonical
form: fixed section and key order, floats via repr, grids as explicit comma
lists; parsing the canonical form reproduces the config exactly.
"""

from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, field
from typing import Optional

from .disorder import DISORDER_MODES
from .engine import DISTANCE_MODES, HeuristicParams
from .topology import TOPOLOGY_KINDS, TopologySpec

__all__ = ["ConfigError", "PairSelection", "ExperimentConfig", "parse_config", "serialize_config"]

FORMATS = ("csv", "json-lines")
SELECTION_KINDS = ("all-pairs", "per-distance-cap", "explicit")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PairSelection:
    kind: str
    cap: Optional[int] = None
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        if self.kind not in SELECTION_KINDS:
            raise ConfigError(f"unknown pair selection {self.kind!r}")
        if self.kind == "per-distance-cap" and (self.cap is None or self.cap < 1):
            raise ConfigError("per-distance-cap needs a positive cap")
        if self.kind == "explicit" and not self.pairs:
            raise ConfigError("explicit pair selection needs at least one pair")


@dataclass(frozen=True)
class ExperimentConfig:
    topology: TopologySpec
    disorder_mode: str
    sigma: float
    grid: tuple[float, ...]
    network_samples: int
    pair_selection: PairSelection
    heuristics: HeuristicParams
    master_seed: int
    output: str
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.disorder_mode not in DISORDER_MODES:
            raise ConfigError(f"unknown disorder mode {self.disorder_mode!r}")
        if self.sigma < 0:
            raise ConfigError("sigma must be non-negative")
        if not self.grid:
            raise ConfigError("grid must be non-empty")
        if any(not (0.5 <= x <= 1.0) for x in self.grid):
            raise ConfigError("grid values must lie in [1/2, 1]")
        if any(self.grid[i] >= self.grid[i + 1] for i in range(len(self.grid) - 1)):
            raise ConfigError("grid must be strictly increasing")
        if self.network_samples < 1:
            raise ConfigError("network_samples must be positive")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown output format {self.format!r}")


def _parse_grid(text: str, where: str) -> tuple[float, ...]:
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{where}: range grids are start:stop:step")
        try:
            start, stop, step = (float(p) for p in parts)
        except ValueError:
            raise ConfigError(f"{where}: bad number in grid range {text!r}") from None
        if step <= 0 or stop < start:
            raise ConfigError(f"{where}: bad grid range {text!r}")
        count = int(round((stop - start) / step)) + 1
        return tuple(round(start + i * step, 10) for i in range(count))
    try:
        return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ConfigError(f"{where}: bad number in grid list {text!r}") from None


def _parse_schedule(text: str, where: str, value_parser):
    entries = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if ":" not in chunk:
            raise ConfigError(f"{where}: schedule entries are start:value, got {chunk!r}")
        start_s, value_s = chunk.split(":", 1)
        try:
            start = int(start_s)
        except ValueError:
            raise ConfigError(f"{where}: bad sample index {start_s!r}") from None
        entries.append((start, value_parser(value_s.strip(), where)))
    if not entries:
        raise ConfigError(f"{where}: empty schedule")
    return tuple(entries)


def _slack_value(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"{where}: bad slack {text!r}") from None


def _mode_value(text: str, where: str) -> str:
    if text not in DISTANCE_MODES:
        raise ConfigError(f"{where}: unknown distance mode {text!r}")
    return text


def _parse_pairs(text: str, where: str) -> tuple[tuple[int, int], ...]:
    pairs = []
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "-" not in chunk:
            raise ConfigError(f"{where}: pairs are written u-v, got {chunk!r}")
        a, b = chunk.split("-", 1)
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise ConfigError(f"{where}: bad pair {chunk!r}") from None
    return tuple(pairs)


def parse_config(text: str) -> ExperimentConfig:
    parser = configparser.ConfigParser(interpolation=None)
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config syntax error: {exc}") from None

    def need(section: str, key: str) -> str:
        if not parser.has_option(section, key):
            raise ConfigError(f"missing [{section}] {key}")
        return parser.get(section, key)

    def get(section: str, key: str, default: str) -> str:
        if parser.has_option(section, key):
            return parser.get(section, key)
        return default

    for section in ("topology", "grid", "run"):
        if not parser.has_section(section):
            raise ConfigError(f"missing [{section}] section")

    kind = need("topology", "kind")
    if kind not in TOPOLOGY_KINDS:
        raise ConfigError(f"[topology] kind: unknown kind {kind!r}")
    try:
        topo = TopologySpec(kind, int(need("topology", "rows")), int(need("topology", "cols")))
    except ValueError as exc:
        raise ConfigError(f"[topology]: {exc}") from None

    mode = get("disorder", "mode", "uniform")
    if mode not in DISORDER_MODES:
        raise ConfigError(f"[disorder] mode: unknown mode {mode!r}")
    try:
        sigma = float(get("disorder", "sigma", "0"))
    except ValueError:
        raise ConfigError("[disorder] sigma: not a number") from None

    grid = _parse_grid(need("grid", "lambda"), "[grid] lambda")
    try:
        network_samples = int(get("grid", "network_samples", "1"))
    except ValueError:
        raise ConfigError("[grid] network_samples: not an integer") from None

    sel_kind = get("pairs", "selection", "all-pairs")
    cap = None
    pairs: tuple[tuple[int, int], ...] = ()
    if sel_kind == "per-distance-cap":
        try:
            cap = int(need("pairs", "cap"))
        except ValueError:
            raise ConfigError("[pairs] cap: not an integer") from None
    elif sel_kind == "explicit":
        pairs = _parse_pairs(need("pairs", "pairs"), "[pairs] pairs")
    selection = PairSelection(sel_kind, cap, pairs)

    try:
        samples = int(get("heuristics", "samples", "600"))
        max_improve = int(get("heuristics", "max_improve_iterations", "10"))
    except ValueError:
        raise ConfigError("[heuristics]: samples and max_improve_iterations are integers") from None
    slack_schedule = None
    if parser.has_option("heuristics", "slack_schedule"):
        slack_schedule = _parse_schedule(
            parser.get("heuristics", "slack_schedule"), "[heuristics] slack_schedule", _slack_value
        )
    distance_schedule = None
    if parser.has_option("heuristics", "distance_schedule"):
        distance_schedule = _parse_schedule(
            parser.get("heuristics", "distance_schedule"),
            "[heuristics] distance_schedule",
            _mode_value,
        )
    try:
        heuristics = HeuristicParams(samples, max_improve, slack_schedule, distance_schedule)
    except ValueError as exc:
        raise ConfigError(f"[heuristics]: {exc}") from None

    try:
        master_seed = int(need("run", "master_seed"))
    except ValueError:
        raise ConfigError("[run] master_seed: not an integer") from None
    output = need("run", "output")
    fmt = get("run", "format", "csv")
    if fmt not in FORMATS:
        raise ConfigError(f"[run] format: unknown format {fmt!r}")

    try:
        return ExperimentConfig(
            topo, mode, sigma, grid, network_samples, selection, heuristics, master_seed, output, fmt
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def serialize_config(cfg: ExperimentConfig) -> str:
    """Canonical text form of a config; parsing it reproduces ``cfg``."""
    out = io.StringIO()
    out.write("[topology]\n")
    out.write(f"kind = {cfg.topology.kind}\n")
    out.write(f"rows = {cfg.topology.rows}\n")
    out.write(f"cols = {cfg.topology.cols}\n\n")
    out.write("[disorder]\n")
    out.write(f"mode = {cfg.disorder_mode}\n")
    out.write(f"sigma = {cfg.sigma!r}\n\n")
    out.write("[grid]\n")
    out.write(f"lambda = {', '.join(repr(x) for x in cfg.grid)}\n")
    out.write(f"network_samples = {cfg.network_samples}\n\n")
    out.write("[pairs]\n")
    out.write(f"selection = {cfg.pair_selection.kind}\n")
    if cfg.pair_selection.kind == "per-distance-cap":
        out.write(f"cap = {cfg.pair_selection.cap}\n")
    elif cfg.pair_selection.kind == "explicit":
        out.write(f"pairs = {', '.join(f'{u}-{v}' for u, v in cfg.pair_selection.pairs)}\n")
    out.write("\n[heuristics]\n")
    out.write(f"samples = {cfg.heuristics.samples}\n")
    out.write(f"max_improve_iterations = {cfg.heuristics.max_improve_iterations}\n")
    if cfg.heuristics.slack_schedule is not None:
        entries = ", ".join(f"{s}:{d!r}" for s, d in cfg.heuristics.slack_schedule)
        out.write(f"slack_schedule = {entries}\n")
    if cfg.heuristics.distance_schedule is not None:
        entries = ", ".join(f"{s}:{m}" for s, m in cfg.heuristics.distance_schedule)
        out.write(f"distance_schedule = {entries}\n")
    out.write("\n[run]\n")
    out.write(f"master_seed = {cfg.master_seed}\n")
    out.write(f"output = {cfg.output}\n")
    out.write(f"format = {cfg.format}\n")
    return out.getvalue()

"""Query workloads: parameter resolution, seeded range placement, the query
pipeline shared by the CLI and the benchmarks, and run reports."""

from __future__ import annotations

import random
import resource
import time
from dataclasses import dataclass

from .coretime import build_core_times
from .graph import TemporalGraph, stats
from .oracle import brute_enumerate
from .sweep import (CoreResult, enumerate_cores, enumerate_cores_baseline,
                    make_sink)
from .windows import build_core_windows

ALGORITHMS = ("enum", "enumbase", "brute")
MODES = ("count", "sizes", "delta", "full")


class WorkloadError(RuntimeError):
    """A workload could not be generated as requested."""


def resolve_k(pct: int, k_max: int) -> int:
    """k = max(1, floor(pct * k_max / 100)); pct must lie in (0, 100]."""
    if not 0 < pct <= 100:
        raise ValueError(f"k percentage {pct} outside (0, 100]")
    return max(1, (pct * k_max) // 100)


def resolve_width(pct: int, t_max: int) -> int:
    """Range width = max(1, floor(pct * t_max / 100)); pct in (0, 100]."""
    if not 0 < pct <= 100:
        raise ValueError(f"range percentage {pct} outside (0, 100]")
    return max(1, (pct * t_max) // 100)


@dataclass(frozen=True)
class QuerySpec:
    k: int
    ts: int
    te: int
    algo: str = "enum"
    mode: str = "count"
    k_pct: int | None = None
    t_pct: int | None = None


def place_span(g: TemporalGraph, k: int, width: int, rng: random.Random,
               max_attempts: int = 200) -> tuple[tuple[int, int], int]:
    """Uniformly place a width-wide range that contains at least one k-core.

    A draw is rejected unless a throwaway core-time index for it holds a
    finite entry. Returns the span and the number of rejected draws; raises
    WorkloadError when max_attempts draws all fail.
    """
    if not 1 <= width <= g.t_count:
        raise ValueError(f"width {width} outside 1..{g.t_count}")
    rejections = 0
    for _ in range(max_attempts):
        ts0 = rng.randint(1, g.t_count - width + 1)
        span = (ts0, ts0 + width - 1)
        if build_core_times(g, k, span).has_any_core():
            return span, rejections
        rejections += 1
    raise WorkloadError(f"no width-{width} range with a {k}-core found "
                        f"after {max_attempts} attempts")


def gen_queries(g: TemporalGraph, k_pcts, t_pcts, count: int, seed: int,
                max_attempts: int = 200) -> tuple[list[QuerySpec], int]:
    """Seeded workload generation with rejection sampling.

    Returns the specs plus the number of rejected draws; raises
    WorkloadError, naming the cell, when a cell cannot be satisfied within
    max_attempts draws per query.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    k_max = stats(g).k_max
    rng = random.Random(seed)
    specs: list[QuerySpec] = []
    rejections = 0
    for k_pct in k_pcts:
        k = resolve_k(k_pct, k_max)
        for t_pct in t_pcts:
            width = resolve_width(t_pct, g.t_count)
            for _ in range(count):
                try:
                    span, rejected = place_span(g, k, width, rng, max_attempts)
                except WorkloadError as exc:
                    raise WorkloadError(
                        f"cell k_pct={k_pct} (k={k}), t_pct={t_pct}: {exc}") from None
                rejections += rejected
                specs.append(QuerySpec(k=k, ts=span[0], te=span[1],
                                       k_pct=k_pct, t_pct=t_pct))
    return specs, rejections


@dataclass
class RunReport:
    algo: str
    k: int
    ts: int
    te: int
    cores: int
    result_size: int
    core_times_size: int
    windows_size: int
    node_ops: int
    windows_scanned: int
    t_core_times: float
    t_windows: float
    t_enumerate: float
    peak_rss_kb: int

    @property
    def t_total(self) -> float:
        return self.t_core_times + self.t_windows + self.t_enumerate

    def line(self) -> str:
        return (f"report algo={self.algo} k={self.k} span=[{self.ts},{self.te}] "
                f"cores={self.cores} result_size={self.result_size} "
                f"core_times_size={self.core_times_size} "
                f"windows_size={self.windows_size} "
                f"node_ops={self.node_ops} windows_scanned={self.windows_scanned} "
                f"core_times_s={self.t_core_times:.4f} "
                f"windows_s={self.t_windows:.4f} "
                f"enum_s={self.t_enumerate:.4f} peak_rss_kb~{self.peak_rss_kb}")


def _peak_rss_kb() -> int:
    # process-wide high water mark, an approximation by design
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss


def run_query(g: TemporalGraph, k: int, span: tuple[int, int], algo: str = "enum",
              mode: str = "count",
              deadline: float | None = None) -> tuple[list[CoreResult], RunReport]:
    """Run one query end to end and report per-phase timings.

    In count mode the record list is empty; counts live in the report.
    """
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if k < 1:
        raise ValueError("k must be at least 1")
    ts_lo, ts_hi = span
    if not 1 <= ts_lo <= ts_hi <= g.t_count:
        raise ValueError(f"span [{ts_lo},{ts_hi}] outside 1..{g.t_count}")

    if algo == "brute":
        t0 = time.perf_counter()
        result = brute_enumerate(g, k, span, deadline=deadline)
        t1 = time.perf_counter()
        records: list[CoreResult] = []
        total = 0
        prev_by_ts: dict[int, frozenset] = {}
        for core in result.cores:
            total += core.size
            if mode == "sizes":
                records.append(CoreResult(core.tti[0], core.tti[1], core.size, None))
            elif mode == "full":
                records.append(CoreResult(core.tti[0], core.tti[1], core.size, core.edges))
            elif mode == "delta":
                prev = prev_by_ts.get(core.tti[0], frozenset())
                added = tuple(e for e in core.edges if e not in prev)
                prev_by_ts[core.tti[0]] = frozenset(core.edges)
                records.append(CoreResult(core.tti[0], core.tti[1], core.size, added))
        report = RunReport(algo, k, ts_lo, ts_hi, len(result.cores), total, 0, 0,
                           0, result.windows_scanned, 0.0, 0.0, t1 - t0,
                           _peak_rss_kb())
        return records, report

    t0 = time.perf_counter()
    core_times = build_core_times(g, k, span)
    t1 = time.perf_counter()
    core_windows = build_core_windows(g, k, span, core_times)
    t2 = time.perf_counter()
    sink = make_sink(mode)
    if algo == "enum":
        st = enumerate_cores(core_windows, span, sink)
        node_ops, scanned = st.node_ops, 0
    else:
        st = enumerate_cores_baseline(core_windows, span, sink, deadline=deadline)
        node_ops, scanned = 0, st.windows_scanned
    t3 = time.perf_counter()
    report = RunReport(algo, k, ts_lo, ts_hi, st.cores, st.result_size,
                       core_times.size, core_windows.size, node_ops, scanned,
                       t1 - t0, t2 - t1, t3 - t2, _peak_rss_kb())
    return list(sink.records or ()), report


def format_record(rec: CoreResult, g: TemporalGraph) -> str:
    """One result line: tti fields, size, and optionally the edge triples.

    Vertex ids and timestamps are reported in their original input values;
    edge triples are printed sorted by (t, u, v) of those values with the
    smaller endpoint first, so equal streams diff clean.
    """
    raw = g.time_domain.raw
    parts = [f"tti_ts={raw(rec.ts)}", f"tti_te={raw(rec.te)}", f"size={rec.size}"]
    if rec.edges is not None:
        labels = g.labels
        triples = sorted((raw(t), *sorted((labels[u], labels[v])))
                         for u, v, t in rec.edges)
        parts.append("edges=" + "".join(f"[{u},{v},{t}]" for t, u, v in triples))
    return " ".join(parts)

"""Per-edge minimal core windows (the edge's core-window skyline).

A window [s, e] is minimal for an edge when the edge lies in the k-core of
that window's projection but of no strict sub-window. Per edge the minimal
windows strictly increase in both endpoints, so none contains another. Each
window also carries an active time: the earliest query start time for which
it is the edge's first window starting no earlier than that start. An edge
has at most one "live" window per start time because the active-to-start
intervals of its windows tile the time axis.

Derivation from core times: for an edge (u, v, t) the earliest core end
from start ts is f(ts) = max(ct(u, ts), ct(v, ts), t), defined while
ts <= t and both core times are finite; f is nondecreasing, and the minimal
windows are exactly [last ts of each constant run of f, f]. Earlier starts
of a run yield the same end and are therefore dominated. The run ending at
ts = t covers the edge's expiry from the window, and the run reaching the
span end is flushed as well.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterator

from .coretime import CoreTimeIndex, Runs
from .graph import TemporalEdge, TemporalGraph


@dataclass(slots=True)
class MinimalCoreWindow:
    edge: TemporalEdge
    start: int
    end: int
    active: int | None = None


@dataclass
class CoreWindowIndex:
    k: int
    span: tuple[int, int]
    by_edge: dict[TemporalEdge, list[MinimalCoreWindow]]
    size: int

    def for_edge(self, e: TemporalEdge) -> list[MinimalCoreWindow]:
        return self.by_edge.get(e, [])

    def all_windows(self) -> Iterator[MinimalCoreWindow]:
        for wins in self.by_edge.values():
            yield from wins

    def to_text(self, labels=None) -> str:
        """One line per edge holding at least one window: '(u,v,t): [s,e], ...'."""
        lines = []
        for e, wins in self.by_edge.items():
            if not wins:
                continue
            lu = labels[e.u] if labels is not None else e.u
            lv = labels[e.v] if labels is not None else e.v
            if lu > lv:
                lu, lv = lv, lu
            body = ", ".join(f"[{w.start},{w.end}]" for w in wins)
            lines.append(f"(v{lu},v{lv},{e.t}): {body}")
        return "\n".join(lines)


def build_core_windows(g: TemporalGraph, k: int, span: tuple[int, int],
                       core_times: CoreTimeIndex) -> CoreWindowIndex:
    """Minimal core windows of every edge, derived from the core-time index.

    The index must have been built for the same (k, span); active times are
    filled in before returning. Edges outside the span keep an empty list.
    """
    if core_times.k != k or core_times.span != tuple(span):
        raise ValueError("core-time index was built for a different query")
    ts_lo, ts_hi = core_times.span
    by_edge: dict[TemporalEdge, list[MinimalCoreWindow]] = {}
    total = 0
    runs = core_times.runs
    # g.edges is (t, u, v)-sorted, so the span is one contiguous slice;
    # edges outside it hold no windows and stay absent (for_edge gives [])
    lo = bisect_left(g.edges, ts_lo, key=lambda e: e[2])
    hi = bisect_left(g.edges, ts_hi + 1, key=lambda e: e[2])
    for i in range(lo, hi):
        e = g.edges[i]
        wins = _edge_windows(runs[e.u], runs[e.v], e, ts_lo)
        by_edge[e] = wins
        total += len(wins)
    return compute_active_times(CoreWindowIndex(k, (ts_lo, ts_hi), by_edge, total))


def _edge_windows(runs_u: Runs, runs_v: Runs, e: TemporalEdge,
                  ts_lo: int) -> list[MinimalCoreWindow]:
    """Walk the merged constant segments of f(ts) over [ts_lo, e.t]."""
    if not runs_u or not runs_v:
        return []
    last = e.t
    wins: list[MinimalCoreWindow] = []
    iu = iv = 0
    pos = ts_lo
    cur_f: int | None = None
    while pos <= last:
        while iu + 1 < len(runs_u) and runs_u[iu + 1][0] <= pos:
            iu += 1
        while iv + 1 < len(runs_v) and runs_v[iv + 1][0] <= pos:
            iv += 1
        a = runs_u[iu][1]
        b = runs_v[iv][1]
        nxt = last + 1
        if iu + 1 < len(runs_u) and runs_u[iu + 1][0] < nxt:
            nxt = runs_u[iu + 1][0]
        if iv + 1 < len(runs_v) and runs_v[iv + 1][0] < nxt:
            nxt = runs_v[iv + 1][0]
        if a is None or b is None:
            f = None
        else:
            f = a if a >= b else b
            if f < e.t:
                f = e.t
        if f != cur_f:
            if cur_f is not None:
                wins.append(MinimalCoreWindow(e, pos - 1, cur_f))
            cur_f = f
        pos = nxt
    if cur_f is not None:
        wins.append(MinimalCoreWindow(e, last, cur_f))
    return wins


def compute_active_times(index: CoreWindowIndex) -> CoreWindowIndex:
    """Annotate each window with its activation time, in place.

    An edge's first window activates at the span start; each later window
    activates right after the previous window's start has passed.
    """
    ts_lo = index.span[0]
    for wins in index.by_edge.values():
        prev = None
        for w in wins:
            w.active = ts_lo if prev is None else prev.start + 1
            prev = w
    return index

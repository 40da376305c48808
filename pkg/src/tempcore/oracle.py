"""Reference implementations used as ground truth.

Everything here works straight from the definitions by window peeling,
independently of the indexed pipeline in coretime/windows/sweep, so the two
routes can check each other. temporal_kcore peels a single window from
scratch and is the bedrock; window_cores applies it to every window of a
span; brute_core_times and brute_core_windows read those per-window results
back into the index types. brute_enumerate also visits every window but
maintains the core decrementally per start time (for a fixed start,
membership is monotone in the end time), which keeps exhaustive scans
feasible on larger inputs; a dedicated test pins its per-window behaviour
to temporal_kcore.
"""

from __future__ import annotations

import time
from bisect import bisect_left
from dataclasses import dataclass

from .coretime import CoreTimeIndex
from .graph import BudgetExceeded, TemporalEdge, TemporalGraph, canonical_edges
from .windows import CoreWindowIndex, MinimalCoreWindow, compute_active_times


@dataclass(frozen=True)
class CoreSubgraph:
    vertices: frozenset[int]
    edges: tuple[TemporalEdge, ...]
    tti: tuple[int, int]

    @property
    def size(self) -> int:
        return len(self.edges)


def temporal_kcore(g: TemporalGraph, k: int, window: tuple[int, int]) -> CoreSubgraph | None:
    """k-core of the window projection, or None when every vertex peels out.

    The tightest time interval is taken over the surviving edges, so it may
    be narrower than the window itself.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    lo, hi = window
    if not 1 <= lo <= hi <= g.t_count:
        raise ValueError(f"window [{lo},{hi}] outside 1..{g.t_count}")
    nbrs: dict[int, set[int]] = {}
    for t in range(lo, hi + 1):
        for u, v, _ in g.edges_at[t]:
            nbrs.setdefault(u, set()).add(v)
            nbrs.setdefault(v, set()).add(u)
    queue = [v for v, s in nbrs.items() if len(s) < k]
    while queue:
        v = queue.pop()
        s = nbrs.pop(v, None)
        if s is None:
            continue
        for u in s:
            su = nbrs.get(u)
            if su is None:
                continue
            su.discard(v)
            if len(su) == k - 1:
                queue.append(u)
    if not nbrs:
        return None
    core_edges = []
    for t in range(lo, hi + 1):
        for e in g.edges_at[t]:
            if e.u in nbrs and e.v in nbrs:
                core_edges.append(e)
    edges = tuple(core_edges)
    return CoreSubgraph(frozenset(nbrs), edges, (edges[0].t, edges[-1].t))


def window_cores(g: TemporalGraph, k: int,
                 span: tuple[int, int]) -> dict[tuple[int, int], CoreSubgraph | None]:
    """Peel every window inside the span from scratch. Desk scale only."""
    ts_lo, ts_hi = span
    return {(a, b): temporal_kcore(g, k, (a, b))
            for a in range(ts_lo, ts_hi + 1) for b in range(a, ts_hi + 1)}


@dataclass(frozen=True)
class BruteEnumeration:
    cores: tuple[CoreSubgraph, ...]
    windows_scanned: int


def brute_enumerate(g: TemporalGraph, k: int, span: tuple[int, int],
                    deadline: float | None = None) -> BruteEnumeration:
    """Every distinct k-core over every window of the span, by scanning.

    Cores are identified by their edge sets; each is returned once, sorted
    by tightest interval. Raises BudgetExceeded past the given deadline.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ts_lo, ts_hi = span
    if not 1 <= ts_lo <= ts_hi <= g.t_count:
        raise ValueError(f"span [{ts_lo},{ts_hi}] outside 1..{g.t_count}")
    seen: set[frozenset] = set()
    out: list[CoreSubgraph] = []
    scanned = 0
    edges_at = g.edges_at
    adj = g.adj
    for ts in range(ts_lo, ts_hi + 1):
        scanned += ts_hi - ts + 1
        if deadline is not None and time.perf_counter() > deadline:
            raise BudgetExceeded(f"brute scan exceeded its deadline at start {ts}")
        nbr: dict[int, dict[int, int]] = {}
        for t in range(ts, ts_hi + 1):
            for u, v, _ in edges_at[t]:
                du = nbr.setdefault(u, {})
                du[v] = du.get(v, 0) + 1
                dv = nbr.setdefault(v, {})
                dv[u] = dv.get(u, 0) + 1
        queue = [v for v, d in nbr.items() if len(d) < k]
        while queue:
            v = queue.pop()
            d = nbr.pop(v, None)
            if d is None:
                continue
            for u in d:
                du = nbr.get(u)
                if du is None:
                    continue
                del du[v]
                if len(du) == k - 1:
                    queue.append(u)
        if not nbr:
            continue
        live_edges: set[TemporalEdge] = set()
        for t in range(ts, ts_hi + 1):
            for e in edges_at[t]:
                if e.u in nbr and e.v in nbr:
                    live_edges.add(e)
        changed = True
        for te in range(ts_hi, ts - 1, -1):
            # structures now describe the core of [ts, te]
            if changed and live_edges:
                key = frozenset(live_edges)
                if key not in seen:
                    seen.add(key)
                    edges = canonical_edges(live_edges)
                    out.append(CoreSubgraph(frozenset(nbr), edges,
                                            (edges[0].t, edges[-1].t)))
            if not nbr:
                break
            changed = False
            queue = []
            for e in edges_at[te]:
                u, v = e.u, e.v
                du = nbr.get(u)
                if du is None:
                    continue
                c = du.get(v)
                if c is None:
                    continue
                live_edges.discard(e)
                changed = True
                if c > 1:
                    du[v] = c - 1
                    nbr[v][u] = c - 1
                    continue
                del du[v]
                dv = nbr[v]
                del dv[u]
                if len(du) == k - 1:
                    queue.append(u)
                if len(dv) == k - 1:
                    queue.append(v)
            while queue:
                w = queue.pop()
                d = nbr.pop(w, None)
                if d is None:
                    continue
                for x in d:
                    dx = nbr.get(x)
                    if dx is None:
                        continue
                    del dx[w]
                    if len(dx) == k - 1:
                        queue.append(x)
                aw = adj[w]
                i = bisect_left(aw, (ts, -1))
                j = bisect_left(aw, (te, -1))
                for t2, x in aw[i:j]:
                    live_edges.discard(
                        TemporalEdge(w, x, t2) if w < x else TemporalEdge(x, w, t2))
    out.sort(key=lambda c: c.tti)
    return BruteEnumeration(tuple(out), scanned)


def brute_core_times(g: TemporalGraph, k: int, span: tuple[int, int]) -> CoreTimeIndex:
    """Core-time runs read off a from-scratch peel of every window."""
    ts_lo, ts_hi = span
    wc = window_cores(g, k, span)
    runs: list[tuple] = []
    for v in range(g.n):
        entries: list[tuple[int, int | None]] = []
        prev: object = None
        for ts in range(ts_lo, ts_hi + 1):
            val = None
            for te in range(ts, ts_hi + 1):
                core = wc[(ts, te)]
                if core is not None and v in core.vertices:
                    val = te
                    break
            if val is None and not entries:
                prev = None
                continue
            if not entries or val != prev:
                entries.append((ts, val))
            prev = val
        runs.append(tuple(entries))
    runs_t = tuple(runs)
    return CoreTimeIndex(k, (ts_lo, ts_hi), runs_t, sum(map(len, runs_t)))


def brute_core_windows(g: TemporalGraph, k: int, span: tuple[int, int]) -> CoreWindowIndex:
    """Minimal core windows by testing every window containing each edge.

    Membership is monotone under window growth, so a window is minimal
    exactly when the edge is a member there but in neither one-step shrink.
    """
    ts_lo, ts_hi = span
    wc = window_cores(g, k, span)
    member_sets = {w: (frozenset(c.edges) if c is not None else frozenset())
                   for w, c in wc.items()}
    by_edge: dict[TemporalEdge, list[MinimalCoreWindow]] = {}
    total = 0
    for e in g.edges:
        wins: list[MinimalCoreWindow] = []
        if ts_lo <= e.t <= ts_hi:
            for a in range(ts_lo, e.t + 1):
                for b in range(e.t, ts_hi + 1):
                    if e not in member_sets[(a, b)]:
                        continue
                    if a + 1 <= b and e in member_sets[(a + 1, b)]:
                        continue
                    if b - 1 >= a and e in member_sets[(a, b - 1)]:
                        continue
                    wins.append(MinimalCoreWindow(e, a, b))
        by_edge[e] = wins
        total += len(wins)
    return compute_active_times(CoreWindowIndex(k, (ts_lo, ts_hi), by_edge, total))

"""The per-vertex core-time index.

For every start time ts, a vertex's core time is the earliest end time te
putting it inside the 2-core of the window [ts, te]. The function is
nondecreasing in ts, so each vertex stores a handful of runs; "inf" marks
start times from which the vertex never reaches a core again.
"""

from pathlib import Path

from tempcore import build_core_times, core_time_at, parse_edge_list

DATA = Path(__file__).resolve().parents[1] / "data" / "g14.txt"

with DATA.open() as fh:
    g = parse_edge_list(fh)

index = build_core_times(g, 2, (1, 7))
print(f"index holds {index.size} runs over {g.n} vertices:\n")
print(index.to_text(g.labels))

v1 = g.labels.index(1)
print("\nvertex 1, start by start:")
for ts in range(1, 8):
    ct = core_time_at(index, v1, ts)
    print(f"  from ts={ts}: earliest core end = {ct if ct is not None else 'never'}")

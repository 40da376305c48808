"""Load a temporal edge list and look around.

The bundled toy graph has 9 vertices and 14 edges spread over timestamps
1..7. Edges are "u v t" lines; ids are remapped densely and timestamps
compressed, with the original values kept for reporting.
"""

from pathlib import Path

from tempcore import parse_edge_list, static_coreness, stats

DATA = Path(__file__).resolve().parents[1] / "data" / "g14.txt"

with DATA.open() as fh:
    g = parse_edge_list(fh)

st = stats(g)
print(f"vertices={st.n} edges={st.m} distinct timestamps={st.t_max}")
print(f"average degree={float(st.deg_avg):.3f} maximum coreness={st.k_max}")

# windowed adjacency: who does vertex 1 touch from time 3 on?
v1 = g.labels.index(1)
print("\nneighbours of v1 in [3,7]:")
for v, t in g.neighbors_in(v1, 3, 7):
    print(f"  v{g.labels[v]} at t={t}")

# coreness of a narrow window: only the triangle around v1, v2, v4 survives
core = static_coreness(g, (2, 3))
print("\ncoreness in window [2,3]:")
for v in range(g.n):
    if core[v]:
        print(f"  v{g.labels[v]}: {core[v]}")

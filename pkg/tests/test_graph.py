"""Parsing, timestamp compression, windowed adjacency and static coreness."""

from __future__ import annotations

import io
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tempcore import (EmptyGraphError, ParseError, TemporalGraph,
                      compress_timestamps, parse_edge_list, static_coreness,
                      stats)


def graph_of(text: str, **kw) -> TemporalGraph:
    return parse_edge_list(io.StringIO(text), **kw)


class TestParse:
    def test_duplicate_collapse_and_compression(self):
        g = graph_of("1 2 100\n2 3 105\n1 2 100\n")
        assert g.n == 3
        assert g.m == 2
        assert g.t_count == 2
        assert [e.t for e in g.edges] == [1, 2]

    def test_self_loops_only_is_empty(self):
        with pytest.raises(EmptyGraphError):
            graph_of("5 5 7\n")

    def test_empty_input(self):
        with pytest.raises(EmptyGraphError):
            graph_of("")
        with pytest.raises(EmptyGraphError):
            graph_of("# only a comment\n")

    def test_fixture_shape(self, g14):
        assert (g14.n, g14.m, g14.t_count) == (9, 14, 7)

    def test_malformed_lines_carry_line_numbers(self):
        with pytest.raises(ParseError, match="line 2"):
            graph_of("1 2 3\n1 2\n")
        with pytest.raises(ParseError, match="line 3"):
            graph_of("1 2 3\n\n1 x 3\n")
        with pytest.raises(ParseError, match="line 1"):
            graph_of("-1 2 3\n")

    def test_comments_blanks_and_extra_fields(self):
        g = graph_of("% header\n# another\n\n1 2 5 0.25 junk\n")
        assert g.m == 1

    def test_directed_and_duplicate_diagnostics(self):
        g = graph_of("1 2 5\n2 1 5\n1 2 5\n", directed_input=True,
                     dedupe_exact=False)
        assert g.m == 1
        assert g.normalized_merges == 1
        assert list(g.duplicate_counts.values()) == [3]

    def test_original_labels_survive(self):
        g = graph_of("700 41 9\n41 900 10\n")
        assert g.labels == [700, 41, 900]


class TestCompress:
    def test_order_preserving_ranks(self):
        dom = compress_timestamps([100, 105, 105, 230])
        assert dom.rank_of_raw == {100: 1, 105: 2, 230: 3}

    def test_identity_on_dense_input(self):
        dom = compress_timestamps(range(1, 8))
        assert all(dom.rank(t) == t for t in range(1, 8))

    def test_constant_input(self):
        dom = compress_timestamps([7, 7, 7])
        assert dom.t_count == 1
        assert dom.rank(7) == 1

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            compress_timestamps([])

    def test_round_trip_on_graph(self, g14):
        dom = g14.time_domain
        for e in g14.edges:
            assert dom.rank(dom.raw(e.t)) == e.t


class TestNeighborsIn:
    def test_fixture_window(self, g14, g14_dense):
        got = g14.neighbors_in(g14_dense[1], 3, 7)
        labelled = [(g14.labels[v], t) for v, t in got]
        assert labelled == [(2, 3), (6, 5), (7, 5), (3, 6), (5, 7)]

    def test_empty_window_content(self, g14, g14_dense):
        assert g14.neighbors_in(g14_dense[9], 2, 3) == []

    def test_single_instant_without_edges(self, g14, g14_dense):
        assert g14.neighbors_in(g14_dense[5], 1, 1) == []

    def test_unknown_vertex(self, g14):
        with pytest.raises(ValueError):
            g14.neighbors_in(99, 1, 7)

    def test_full_range_matches_degree(self, g14):
        for v in range(g14.n):
            got = g14.neighbors_in(v, 1, g14.t_count)
            assert len(got) == len(g14.adj[v])


class TestCoreness:
    def test_fixture_full_range(self, g14):
        assert static_coreness(g14, (1, 7)) == [2] * 9

    def test_single_edge_window(self, g14, g14_dense):
        core = static_coreness(g14, (1, 1))
        expect = {g14_dense[2]: 1, g14_dense[9]: 1}
        assert all(core[v] == expect.get(v, 0) for v in range(g14.n))

    def test_four_edge_window(self, g14, g14_dense):
        core = static_coreness(g14, (2, 3))
        by_label = {lab: core[g14_dense[lab]] for lab in range(1, 10)}
        assert by_label == {1: 2, 2: 2, 3: 1, 4: 2, 5: 0, 6: 0, 7: 0, 8: 0, 9: 0}

    def test_stats_fixture(self, g14):
        st = stats(g14)
        assert (st.n, st.m, st.t_max, st.k_max) == (9, 14, 7, 2)
        assert st.deg_avg * 9 == 28

    def test_stats_single_edge(self):
        st = stats(graph_of("0 1 10\n"))
        assert (st.n, st.m, st.t_max, st.k_max) == (2, 1, 1, 1)


triples_strategy = st.lists(
    st.tuples(st.integers(0, 9), st.integers(0, 9), st.integers(1, 8)),
    min_size=1, max_size=40)


def build(triples):
    try:
        return TemporalGraph.from_triples(triples)
    except EmptyGraphError:
        return None


@settings(max_examples=60, deadline=None)
@given(triples_strategy)
def test_adjacency_is_symmetric(triples):
    g = build(triples)
    if g is None:
        return
    for u in range(g.n):
        for t, v in g.adj[u]:
            assert (t, u) in g.adj[v]


@settings(max_examples=60, deadline=None)
@given(triples_strategy)
def test_timestamp_round_trip(triples):
    g = build(triples)
    if g is None:
        return
    dom = g.time_domain
    assert list(dom.raw_values) == sorted(dom.raw_values)
    for e in g.edges:
        assert dom.rank(dom.raw(e.t)) == e.t


@settings(max_examples=60, deadline=None)
@given(triples_strategy, triples_strategy)
def test_coreness_monotone_under_edge_additions(triples, extra):
    g1 = build(triples)
    g2 = build(triples + extra)
    if g1 is None or g2 is None:
        return
    core1 = static_coreness(g1, (1, g1.t_count))
    core2 = static_coreness(g2, (1, g2.t_count))
    for label, v1 in zip(g1.labels, range(g1.n)):
        v2 = g2.labels.index(label)
        assert core2[v2] >= core1[v1]


def test_canonical_edge_invariants_random():
    rng = random.Random(42)
    for _ in range(30):
        triples = [(rng.randrange(12), rng.randrange(12), rng.randint(1, 9))
                   for _ in range(rng.randint(1, 50))]
        g = build(triples)
        if g is None:
            continue
        seen = set()
        for e in g.edges:
            assert e.u < e.v
            assert e not in seen
            seen.add(e)
        assert [e for t in range(1, g.t_count + 1) for e in g.edges_at[t]] \
            == sorted(g.edges, key=lambda e: (e.t, e.u, e.v))

"""Graphs shared by the property tests."""

from __future__ import annotations

import itertools

import numpy as np

from eccenergy.graph_core import (
    CoalescenceSpec,
    EdgeCase,
    FamilySpec,
    Graph,
    build_coalescence,
    build_complete,
    build_family,
    build_friendship,
    delete_edge,
    is_connected,
    path_graph,
    representative_edge,
)


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def random_connected(n: int, extra: int, seed: int) -> Graph:
    rng = np.random.default_rng(seed)
    edges = {(int(rng.integers(0, i)), i) for i in range(1, n)}
    pairs = list(itertools.combinations(range(n), 2))
    for idx in rng.permutation(len(pairs))[:extra]:
        edges.add(pairs[idx])
    return Graph.from_edges(n, sorted(edges))


def corpus() -> list[tuple[str, Graph]]:
    out: list[tuple[str, Graph]] = []
    out += [(f"K{n}", build_complete(n)) for n in range(1, 8)]
    out += [(f"P{n}", path_graph(n)) for n in range(2, 9)]
    out += [(f"C{n}", cycle(n)) for n in range(3, 10)]
    out += [(f"S{n}", star(n)) for n in range(3, 8)]
    out += [(f"F{m}", build_friendship(m)) for m in range(1, 6)]
    for k, parts in [(1, (3, 3)), (2, (4, 5)), (3, (6, 6)), (2, (3, 4, 5)), (3, (5, 6, 7))]:
        out.append((f"coal k={k} {parts}", build_coalescence(CoalescenceSpec(k, parts))))
    for n, l in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3)]:
        fam = FamilySpec(n, l)
        g = build_family(fam)
        out.append((f"family {n},{l}", g))
        if n >= 3:
            for case in EdgeCase:
                out.append((f"family {n},{l} -{case.name}",
                            delete_edge(g, representative_edge(fam.coalescence(), case))))
    for seed in range(12):
        g = random_connected(4 + seed % 7, seed % 5, seed)
        assert is_connected(g)
        out.append((f"random {seed}", g))
    return out

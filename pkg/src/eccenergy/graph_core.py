"""Simple undirected graphs, the complete-graph coalescence builders, and BFS distances.

Vertex labeling for coalescences is fixed: vertices ``0..k-1`` form the shared
clique, then each part contributes its ``a_i - k`` private vertices in order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable

import numpy as np

from . import kernels


class GraphError(ValueError):
    """Invalid graph construction or an operation undefined on the input."""


class DisconnectedGraphError(GraphError):
    """Distances (and everything derived from them) need a connected graph."""


@dataclass(frozen=True, eq=False)
class Graph:
    """Simple graph on ``{0..order-1}`` stored as a read-only dense boolean adjacency."""

    adjacency: np.ndarray

    def __post_init__(self) -> None:
        adj = np.array(self.adjacency, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1] or adj.shape[0] == 0:
            raise GraphError("adjacency must be a non-empty square matrix")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency must be symmetric")
        if adj.diagonal().any():
            raise GraphError("self-loops are not allowed")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if order < 1:
            raise GraphError("order must be positive")
        adj = np.zeros((order, order), dtype=bool)
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order) or u == v:
                raise GraphError(f"bad edge ({u}, {v}) for order {order}")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def order(self) -> int:
        return self.adjacency.shape[0]

    @property
    def edge_count(self) -> int:
        return int(np.count_nonzero(np.triu(self.adjacency)))

    def edges(self) -> list["EdgeRef"]:
        """Edges in lexicographic order."""
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [EdgeRef(int(u), int(v)) for u, v in zip(us, vs)]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and 0 <= v < self.order and bool(self.adjacency[u, v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self.adjacency, other.adjacency)

    def __hash__(self) -> int:
        return hash((self.order, np.packbits(self.adjacency).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edge_count={self.edge_count})"


@dataclass(frozen=True, order=True)
class EdgeRef:
    u: int
    v: int

    def __post_init__(self) -> None:
        if not 0 <= self.u < self.v:
            raise GraphError(f"edge must satisfy 0 <= u < v, got ({self.u}, {self.v})")

    @classmethod
    def of(cls, a: int, b: int) -> "EdgeRef":
        return cls(min(a, b), max(a, b))


@dataclass(frozen=True)
class CoalescenceSpec:
    """``K_{a_1} o_k K_{a_2} o_k ... o_k K_{a_l}``."""

    k: int
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(a) for a in self.parts))
        if len(self.parts) < 2:
            raise GraphError("a coalescence needs at least two parts")
        if self.k < 1:
            raise GraphError("clique size k must be positive")
        if min(self.parts) < 3:
            raise GraphError("every part must have order at least 3")
        if self.k >= min(self.parts):
            raise GraphError("k must be smaller than every part order")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.parts)

    @property
    def order(self) -> int:
        return self.k + sum(a - self.k for a in self.parts)

    @property
    def size(self) -> int:
        return sum(comb(a, 2) for a in self.parts) - (self.l - 1) * comb(self.k, 2)

    def blocks(self) -> list[range]:
        """Vertex ranges: the clique, then one private block per part."""
        out = [range(0, self.k)]
        start = self.k
        for a in self.parts:
            out.append(range(start, start + a - self.k))
            start += a - self.k
        return out


@dataclass(frozen=True)
class FamilySpec:
    """``l`` copies of ``K_{2n}`` glued along a common ``K_n``."""

    n: int
    l: int  # noqa: E741

    def __post_init__(self) -> None:
        if self.n < 2 or self.l < 2:
            raise GraphError("family needs n >= 2 and l >= 2")

    def coalescence(self) -> CoalescenceSpec:
        return CoalescenceSpec(self.n, (2 * self.n,) * self.l)

    @property
    def order(self) -> int:
        return self.n * (self.l + 1)


class EdgeCase(enum.Enum):
    CLIQUE_INTERNAL = 1
    CLIQUE_INCIDENT = 2
    CLIQUE_EXTERNAL = 3


def build_complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    adj = ~np.eye(n, dtype=bool)
    return Graph(adj)


def build_coalescence(spec: CoalescenceSpec) -> Graph:
    adj = np.zeros((spec.order, spec.order), dtype=bool)
    blocks = spec.blocks()
    clique = np.arange(spec.k)
    for private in blocks[1:]:
        members = np.concatenate([clique, np.asarray(private)])
        adj[np.ix_(members, members)] = True
    np.fill_diagonal(adj, False)
    return Graph(adj)


def build_family(spec: FamilySpec) -> Graph:
    return build_coalescence(spec.coalescence())


def build_friendship(m: int) -> Graph:
    """Friendship graph F_m: hub 0, outer pairs ``(2i-1, 2i)`` for ``i = 1..m``."""
    if m < 1:
        raise GraphError("friendship graph needs m >= 1")
    edges = [(0, v) for v in range(1, 2 * m + 1)]
    edges += [(2 * i - 1, 2 * i) for i in range(1, m + 1)]
    return Graph.from_edges(2 * m + 1, edges)


def delete_edge(g: Graph, e: EdgeRef, require_connected: bool = False) -> Graph:
    """Copy of ``g`` without ``e``.

    With ``require_connected=True`` a disconnecting deletion raises
    :class:`DisconnectedGraphError` instead of returning the split graph.
    """
    if not g.has_edge(e.u, e.v):
        raise GraphError(f"({e.u}, {e.v}) is not an edge")
    adj = g.adjacency.copy()
    adj[e.u, e.v] = adj[e.v, e.u] = False
    out = Graph(adj)
    if require_connected and not is_connected(out):
        raise DisconnectedGraphError(f"deleting ({e.u}, {e.v}) disconnects the graph")
    return out


def add_edge(g: Graph, e: EdgeRef) -> Graph:
    if e.v >= g.order:
        raise GraphError("edge endpoint out of range")
    if g.has_edge(e.u, e.v):
        raise GraphError(f"({e.u}, {e.v}) is already an edge")
    adj = g.adjacency.copy()
    adj[e.u, e.v] = adj[e.v, e.u] = True
    return Graph(adj)


def is_connected(g: Graph) -> bool:
    seen = np.zeros(g.order, dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = g.adjacency[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return bool(seen.all())


@dataclass(frozen=True, eq=False)
class DistanceInfo:
    dist: np.ndarray
    ecc: np.ndarray
    diameter: int

    @classmethod
    def from_matrix(cls, dist: np.ndarray) -> "DistanceInfo":
        dist = np.array(dist, dtype=np.int32, copy=True)
        ecc = dist.max(axis=1)
        dist.setflags(write=False)
        ecc.setflags(write=False)
        return cls(dist, ecc, int(ecc.max()))


def distances(g: Graph) -> DistanceInfo:
    dist = kernels.apsp_bfs(g.adjacency)
    if (dist < 0).any():
        raise DisconnectedGraphError("distances are undefined on a disconnected graph")
    return DistanceInfo.from_matrix(dist)


def classify_edge(spec: CoalescenceSpec, e: EdgeRef) -> EdgeCase:
    if e.v >= spec.order or not _is_coalescence_edge(spec, e):
        raise GraphError(f"({e.u}, {e.v}) is not an edge of the coalescence")
    inside = (e.u < spec.k) + (e.v < spec.k)
    return {2: EdgeCase.CLIQUE_INTERNAL, 1: EdgeCase.CLIQUE_INCIDENT, 0: EdgeCase.CLIQUE_EXTERNAL}[inside]


def _is_coalescence_edge(spec: CoalescenceSpec, e: EdgeRef) -> bool:
    if e.u < spec.k:
        return True
    for block in spec.blocks()[1:]:
        if e.u in block:
            return e.v in block
    return False


def representative_edge(spec: CoalescenceSpec, case: EdgeCase) -> EdgeRef:
    """Canonical edge per case: (0,1), (0,k), (k,k+1)."""
    k = spec.k
    if case is EdgeCase.CLIQUE_INTERNAL:
        if k < 2:
            raise GraphError("no clique-internal edge when k < 2")
        return EdgeRef(0, 1)
    if case is EdgeCase.CLIQUE_INCIDENT:
        return EdgeRef(0, k)
    if spec.parts[0] - k < 2:
        raise GraphError("first part has fewer than two private vertices")
    return EdgeRef(k, k + 1)


# --- text format: "N M" then M lines "u v" --------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"{g.order} {g.edge_count}"]
    lines += [f"{e.u} {e.v}" for e in g.edges()]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("header must be 'N M'")
    try:
        order, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"malformed graph file: {exc}") from None
    if len(pairs) != m:
        raise GraphError(f"header promises {m} edges, found {len(pairs)}")
    if order < 1:
        raise GraphError("order must be positive")
    seen: set[tuple[int, int]] = set()
    for u, v in pairs:
        if not 0 <= u < v < order:
            raise GraphError(f"edge line '{u} {v}' violates 0 <= u < v < N")
        if (u, v) in seen:
            raise GraphError(f"duplicate edge '{u} {v}'")
        seen.add((u, v))
    return Graph.from_edges(order, pairs)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def write_graph(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(g), encoding="utf-8", newline="\n")


def edge_case_counts(spec: FamilySpec) -> dict[EdgeCase, int]:
    """Expected number of edges per case for the K_{2n} family."""
    n, l = spec.n, spec.l
    return {
        EdgeCase.CLIQUE_INTERNAL: comb(n, 2),
        EdgeCase.CLIQUE_INCIDENT: l * n * n,
        EdgeCase.CLIQUE_EXTERNAL: l * comb(n, 2),
    }


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


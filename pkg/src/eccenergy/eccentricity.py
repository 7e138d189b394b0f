"""Eccentricity matrix, eccentric graph, and irreducibility tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .graph_core import DistanceInfo, Graph, distances, is_connected


@dataclass(frozen=True, eq=False)
class EccMatrix:
    """Integer eccentricity matrix. ``entries[i, j]`` is ``d(i, j)`` when that
    distance equals ``min(e(i), e(j))`` and 0 otherwise."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def as_float(self) -> np.ndarray:
        return self.entries.astype(np.float64)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EccMatrix):
            return NotImplemented
        return np.array_equal(self.entries, other.entries)

    __hash__ = None  # type: ignore[assignment]


def ecc_matrix_from_distances(info: DistanceInfo) -> EccMatrix:
    entries = kernels.ecc_mask(info.dist, info.ecc)
    entries.setflags(write=False)
    return EccMatrix(entries)


def ecc_matrix(g: Graph) -> EccMatrix:
    return ecc_matrix_from_distances(distances(g))


def eccentric_graph(g: Graph) -> Graph:
    return Graph(ecc_matrix(g).entries != 0)


def _reachable_from_zero(support: np.ndarray) -> np.ndarray:
    seen = np.zeros(support.shape[0], dtype=bool)
    seen[0] = True
    frontier = seen.copy()
    while frontier.any():
        nxt = support[frontier].any(axis=0) & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_ecc_irreducible(g: Graph) -> bool:
    """Irreducibility of the eccentricity matrix, via connectivity of the eccentric graph."""
    return is_connected(eccentric_graph(g))


def is_irreducible_matrix(m: np.ndarray) -> bool:
    """Direct test: the support digraph of ``m`` is strongly connected.

    Checks forward and backward reachability from vertex 0, so it does not
    assume symmetry. A 1x1 matrix counts as irreducible.
    """
    support = np.asarray(m) != 0
    np.fill_diagonal(support, False)
    return bool(_reachable_from_zero(support).all() and _reachable_from_zero(support.T).all())


def format_matrix(m: np.ndarray) -> str:
    """N lines of N space-separated integers."""
    return "".join(" ".join(str(int(x)) for x in row) + "\n" for row in np.asarray(m))

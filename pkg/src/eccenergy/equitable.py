"""Equitable partitions, quotient matrices, and runtime checks of the quotient theorems.

A partition is equitable for ``M`` when every block ``M[X_i, X_j]`` has constant
row sums. The quotient ``B`` then has ``spec(B) subset spec(M)``, and when ``B`` is
nonnegative and irreducible both share the spectral radius.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .eccentricity import is_irreducible_matrix
from .graph_core import EdgeCase, FamilySpec
from .spectral import Spectrum, eig_sym, multiset_contains, spectral_radius

FLOAT_TOL = 1e-9


class PartitionError(ValueError):
    pass


class NotEquitableError(ValueError):
    pass


@dataclass(frozen=True)
class Partition:
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(int(v) for v in c) for c in self.cells)
        if not cells or any(len(c) == 0 for c in cells):
            raise PartitionError("cells must be non-empty")
        flat = [v for c in cells for v in c]
        if len(set(flat)) != len(flat):
            raise PartitionError("cells overlap")
        if sorted(flat) != list(range(len(flat))):
            raise PartitionError("cells must cover 0..N-1 exactly")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> "Partition":
        return cls(tuple(tuple(c) for c in cells))

    @classmethod
    def discrete(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cells)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.cells)

    def indicator(self) -> np.ndarray:
        """N x m characteristic matrix."""
        out = np.zeros((self.n, len(self.cells)), dtype=np.int64)
        for j, c in enumerate(self.cells):
            out[list(c), j] = 1
        return out


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    entries: np.ndarray
    source_sizes: tuple[int, ...]

    @property
    def m(self) -> int:
        return self.entries.shape[0]


def _matrix(m) -> np.ndarray:
    return np.asarray(getattr(m, "entries", m))


def _block_row_sums(a: np.ndarray, p: Partition) -> np.ndarray:
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise PartitionError("matrix must be square")
    if p.n != a.shape[0]:
        raise PartitionError(f"partition covers {p.n} indices, matrix has {a.shape[0]}")
    return a @ p.indicator()


def _is_integral(a: np.ndarray) -> bool:
    if np.issubdtype(a.dtype, np.integer) or a.dtype == bool:
        return True
    return bool(np.all(np.isfinite(a)) and np.array_equal(a, np.round(a)))


def is_equitable(m, p: Partition) -> bool:
    """Constant row sums in every block; exact for integral matrices."""
    a = _matrix(m)
    if _is_integral(a):
        a = np.rint(a).astype(np.int64)
        sums = _block_row_sums(a, p)
        return all(bool(np.all(sums[list(c)] == sums[c[0]])) for c in p.cells)
    sums = _block_row_sums(a.astype(np.float64), p)
    scale = max(1.0, float(np.max(np.abs(sums))) if sums.size else 1.0)
    return all(
        bool(np.all(np.abs(sums[list(c)] - sums[c[0]]) <= FLOAT_TOL * scale)) for c in p.cells
    )


def quotient(m, p: Partition) -> QuotientMatrix:
    if not is_equitable(m, p):
        raise NotEquitableError("partition is not equitable for this matrix")
    sums = _block_row_sums(np.asarray(_matrix(m), dtype=np.float64), p)
    entries = np.array([sums[c[0]] for c in p.cells], dtype=np.float64)
    entries.setflags(write=False)
    return QuotientMatrix(entries, p.sizes)


def symmetrized_quotient(q: QuotientMatrix) -> np.ndarray:
    """``D^{1/2} B D^{-1/2}`` with ``D = diag(cell sizes)``; similar to ``B``.

    Symmetric because ``|X_i| b_ij = |X_j| b_ji`` (both count the block sum).
    """
    sizes = np.asarray(q.source_sizes, dtype=np.float64)
    if sizes.size != q.m or np.any(sizes <= 0):
        raise PartitionError("cell sizes must be positive and match the quotient")
    root = np.sqrt(sizes)
    s = q.entries * root[:, None] / root[None, :]
    scale = max(1.0, float(np.max(np.abs(s))))
    if np.max(np.abs(s - s.T)) > FLOAT_TOL * scale:
        raise NotEquitableError("scaled quotient is not symmetric")
    return (s + s.T) / 2


def quotient_spectrum(q: QuotientMatrix) -> Spectrum:
    return eig_sym(symmetrized_quotient(q))


@dataclass
class QuotientReport:
    quotient: QuotientMatrix
    quotient_spectrum: Spectrum
    full_spectrum: Spectrum
    contained: bool
    radius_applicable: bool
    radius_equal: bool | None
    findings: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.contained and self.radius_equal is not False

    def to_dict(self) -> dict:
        return {
            "quotient": self.quotient.entries.tolist(),
            "cell_sizes": list(self.quotient.source_sizes),
            "quotient_spectrum": list(self.quotient_spectrum.values),
            "full_spectrum": list(self.full_spectrum.values),
            "contained": self.contained,
            "radius_applicable": self.radius_applicable,
            "radius_equal": self.radius_equal,
            "findings": list(self.findings),
            "pass": self.passed,
        }


def verify_quotient_theorems(m, p: Partition, tol: float = 1e-7) -> QuotientReport:
    """Check spectrum containment and, when it applies, equal spectral radius."""
    q = quotient(m, p)
    qs = quotient_spectrum(q)
    full = eig_sym(np.asarray(_matrix(m), dtype=np.float64))
    findings: list[str] = []
    contained = multiset_contains(qs, full, tol)
    if not contained:
        findings.append("quotient eigenvalues are not a sub-multiset of the full spectrum")
    applicable = bool(np.all(q.entries >= 0) and is_irreducible_matrix(q.entries))
    radius_equal: bool | None = None
    if applicable:
        radius_equal = abs(spectral_radius(qs) - spectral_radius(full)) <= tol
        if not radius_equal:
            findings.append(
                f"spectral radii differ: quotient {spectral_radius(qs):.12g}, "
                f"full {spectral_radius(full):.12g}"
            )
    return QuotientReport(q, qs, full, contained, applicable, radius_equal, findings)


# --- partitions dictated by the block structures of the family and its deletions ---


def family_partition(spec: FamilySpec) -> Partition:
    """Clique, then one private block per copy of K_{2n}."""
    return Partition.of(spec.coalescence().blocks())


def deleted_partition(spec: FamilySpec, case: EdgeCase) -> Partition:
    """Coarse equitable partition of the family minus its representative edge of ``case``.

    Cell order matches the rows of the corresponding closed-form quotient.
    """
    n, N = spec.n, spec.order
    others = range(2 * n, N)
    if case is EdgeCase.CLIQUE_INTERNAL:
        # rest of clique | deleted endpoints {0,1} | every private vertex
        return Partition.of([range(2, n), (0, 1), range(n, N)])
    if case is EdgeCase.CLIQUE_INCIDENT:
        # {0} | rest of clique | {n} | rest of part 1 | other parts
        return Partition.of([(0,), range(1, n), (n,), range(n + 1, 2 * n), others])
    # clique | endpoints {n, n+1} | rest of part 1 | other parts
    return Partition.of([range(0, n), (n, n + 1), range(n + 2, 2 * n), others])


def parse_partition(text: str) -> Partition:
    cells = []
    for line in text.splitlines():
        if line.strip():
            try:
                cells.append(tuple(int(t) for t in line.split()))
            except ValueError as exc:
                raise PartitionError(f"malformed partition line {line!r}: {exc}") from None
    return Partition.of(cells)


def read_partition(path: str | Path) -> Partition:
    return parse_partition(Path(path).read_text(encoding="utf-8"))


def format_partition(p: Partition) -> str:
    return "".join(" ".join(str(v) for v in c) + "\n" for c in p.cells)


def partition_from_sizes(sizes: Sequence[int]) -> Partition:
    """Consecutive cells of the given sizes."""
    cells, start = [], 0
    for s in sizes:
        cells.append(range(start, start + s))
        start += s
    return Partition.of(cells)

"""Dense symmetric eigenvalues and the summaries built on them.

Every summary (energy, inertia, spectral radius, multiset comparison) takes a
:class:`Spectrum`, so numeric spectra and closed-form predictions go through
the same code.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

#: relative residual every computed eigenpair must meet
EIG_TOL = 1e-10


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues sorted descending, plus the certified relative residual."""

    values: tuple[float, ...]
    residual_bound: float = 0.0

    @classmethod
    def from_values(cls, values: Iterable[float], residual_bound: float = 0.0) -> "Spectrum":
        vals = sorted((float(v) for v in values), reverse=True)
        return cls(tuple(vals), float(residual_bound))

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.float64)


@dataclass(frozen=True)
class Inertia:
    negatives: int
    zeros: int
    positives: int
    zero_tolerance: float = 0.0

    def triple(self) -> tuple[int, int, int]:
        return (self.negatives, self.zeros, self.positives)


SpectrumLike = Union[Spectrum, Sequence[float], np.ndarray]


def _values(s: SpectrumLike) -> np.ndarray:
    if isinstance(s, Spectrum):
        return s.as_array()
    return np.asarray(s, dtype=np.float64).ravel()


def as_sym_matrix(m) -> np.ndarray:
    """Validate and convert to a float64 symmetric matrix."""
    entries = getattr(m, "entries", m)
    a = np.asarray(entries, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise SpectralError("matrix must be square")
    if not np.isfinite(a).all():
        raise SpectralError("matrix has non-finite entries")
    if not np.array_equal(a, a.T):
        raise SpectralError("matrix is not exactly symmetric")
    return a


def eig_sym(m) -> Spectrum:
    """All eigenvalues of a dense real symmetric matrix.

    Uses LAPACK's symmetric solver and checks every eigenpair:
    ``max ||A x - lam x|| <= EIG_TOL * ||A||_2``. The observed relative
    residual is stored on the result.
    """
    a = as_sym_matrix(m)
    if a.shape[0] == 0:
        return Spectrum((), 0.0)
    w, v = np.linalg.eigh(a)
    scale = float(np.max(np.abs(w)))
    resid = float(np.max(np.linalg.norm(a @ v - v * w, axis=0)))
    rel = resid / scale if scale > 0 else resid
    if rel > EIG_TOL:
        raise SpectralError(f"eigen-residual {rel:.3e} exceeds {EIG_TOL:.0e}")
    return Spectrum(tuple(float(x) for x in w[::-1]), rel)


def energy(s: SpectrumLike) -> float:
    return float(np.sum(np.abs(_values(s))))


def spectral_radius(s: SpectrumLike) -> float:
    vals = _values(s)
    if vals.size == 0:
        raise SpectralError("spectral radius of an empty spectrum")
    return float(np.max(np.abs(vals)))


def default_zero_tolerance(s: SpectrumLike) -> float:
    vals = _values(s)
    rho = float(np.max(np.abs(vals))) if vals.size else 0.0
    return 1e-6 * max(1.0, rho)


def inertia(s: SpectrumLike, zero_tolerance: float | None = None) -> Inertia:
    """Counts of eigenvalues below ``-tau``, inside ``[-tau, tau]``, above ``tau``."""
    vals = _values(s)
    tau = default_zero_tolerance(vals) if zero_tolerance is None else float(zero_tolerance)
    if tau <= 0:
        raise SpectralError("zero_tolerance must be positive")
    neg = int(np.count_nonzero(vals < -tau))
    pos = int(np.count_nonzero(vals > tau))
    return Inertia(neg, vals.size - neg - pos, pos, tau)


def multiset_match(a: SpectrumLike, b: SpectrumLike, tol: float) -> bool:
    """Equal-length multisets whose sorted pairing differs by at most ``tol``."""
    if tol <= 0:
        raise SpectralError("tol must be positive")
    x, y = np.sort(_values(a)), np.sort(_values(b))
    if x.size != y.size:
        return False
    return bool(np.all(np.abs(x - y) <= tol))


def multiset_contains(sub: SpectrumLike, sup: SpectrumLike, tol: float) -> bool:
    """True when every value of ``sub`` can be paired with a distinct value of ``sup``."""
    if tol <= 0:
        raise SpectralError("tol must be positive")
    x, y = np.sort(_values(sub)), np.sort(_values(sup))
    j = 0
    for val in x:
        while j < y.size and y[j] < val - tol:
            j += 1
        if j == y.size or y[j] > val + tol:
            return False
        j += 1
    return True


def largest_gap_below_top(s: SpectrumLike) -> float:
    """Distance between the two largest eigenvalues (inf for a 1x1 spectrum)."""
    vals = np.sort(_values(s))[::-1]
    return float(vals[0] - vals[1]) if vals.size > 1 else float("inf")

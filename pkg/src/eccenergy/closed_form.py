"""Analytic eccentricity spectra of complete-graph coalescences and their edge deletions.

The K_{2n} family ``G = K_{2n} o_n ... o_n K_{2n}`` (``l`` copies) and the three
single-edge deletions have spectra made of a few fixed eigenvalues plus the
eigenvalues of a small equitable quotient matrix. Roots always come from the
quotient matrix (symmetrized, then a symmetric eigensolve); the printed
characteristic polynomials are kept alongside as residual checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .graph_core import CoalescenceSpec, EdgeCase, FamilySpec
from .spectral import Inertia, Spectrum, eig_sym, multiset_match

ROOT_RESIDUAL_TOL = 1e-6


class ClosedFormError(ValueError):
    pass


# --------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class CharPoly:
    """Monic real polynomial, coefficients highest degree first."""

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coefficients)
        if not coeffs or coeffs[0] != 1.0:
            raise ClosedFormError("characteristic polynomials must be monic")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def scale(self) -> float:
        return max(abs(c) for c in self.coefficients)

    def __call__(self, x):
        return np.polyval(self.coefficients, x)

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        return CharPoly(tuple(np.polymul(self.coefficients, other.coefficients)))

    def __pow__(self, k: int) -> "CharPoly":
        out = CharPoly((1.0,))
        for _ in range(k):
            out = out * self
        return out


def _quadratic_roots(b: float, c: float) -> list[float]:
    """Roots of ``x^2 + b x + c`` without cancellation in the smaller root."""
    disc = b * b - 4.0 * c
    if disc < 0:
        if disc < -1e-12 * max(1.0, b * b):
            raise ClosedFormError("quadratic has complex roots")
        disc = 0.0
    q = -0.5 * (b + math.copysign(math.sqrt(disc), b))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q, c / q])


def real_roots(p: CharPoly) -> list[float]:
    """All roots (with multiplicity) of a monic polynomial with only real roots.

    Degree <= 2 uses the quadratic formula; higher degrees use companion
    matrix eigenvalues. Every returned root must satisfy
    ``|p(r)| <= 1e-6 * max|coefficient|``.
    """
    d = p.degree
    if d > 8:
        raise ClosedFormError("degree above 8 is not supported")
    c = p.coefficients
    if d == 0:
        return []
    if d == 1:
        roots = [-c[1]]
    elif d == 2:
        roots = _quadratic_roots(c[1], c[2])
    else:
        comp = np.zeros((d, d))
        comp[0, :] = -np.asarray(c[1:])
        comp[np.arange(1, d), np.arange(d - 1)] = 1.0
        # clustered real roots come back with small imaginary parts; the
        # residual check below is what certifies realness
        roots = [float(z.real) for z in np.linalg.eigvals(comp)]
    check_roots(p, roots)
    return sorted(roots)


def check_roots(p: CharPoly, roots: Sequence[float], tol: float = ROOT_RESIDUAL_TOL) -> float:
    """Largest ``|p(r)| / scale``; raises when it exceeds ``tol``."""
    if len(roots) == 0:
        return 0.0
    worst = float(np.max(np.abs(p(np.asarray(roots, dtype=np.float64))))) / p.scale
    if worst > tol:
        raise ClosedFormError(f"root residual {worst:.3e} exceeds {tol:.0e}")
    return worst


def charpoly_of(m: np.ndarray) -> CharPoly:
    return CharPoly(tuple(np.poly(np.asarray(m, dtype=np.float64))))


# --------------------------------------------------------------------------
# predicted spectra


@dataclass(frozen=True)
class FixedEigenvalue:
    value: float
    multiplicity: int
    at_least: bool = False


@dataclass(frozen=True, eq=False)
class SpectrumSpec:
    """Fixed eigenvalues with (lower-bound) multiplicities plus residual roots.

    ``residual_roots`` are the eigenvalues of ``quotient`` (when given) and
    ``residual_poly`` is the printed polynomial they should annihilate.
    """

    fixed: tuple[FixedEigenvalue, ...]
    residual_roots: tuple[float, ...]
    total: int
    residual_poly: CharPoly | None = None
    quotient: np.ndarray | None = None
    quotient_sizes: tuple[int, ...] | None = None
    label: str = ""

    def __post_init__(self) -> None:
        if self.residual_poly is not None and self.residual_poly.degree != len(self.residual_roots):
            raise ClosedFormError("residual polynomial degree does not match its roots")
        if self.stated_count > self.total:
            raise ClosedFormError("stated multiplicities exceed the order")

    @property
    def stated_count(self) -> int:
        return sum(f.multiplicity for f in self.fixed) + len(self.residual_roots)

    def values(self) -> list[float]:
        """Eigenvalues at their stated multiplicities."""
        out = [f.value for f in self.fixed for _ in range(f.multiplicity)]
        return out + list(self.residual_roots)

    def resolve(self, numeric: Sequence[float] | Spectrum, tol: float) -> list[float]:
        """Fill any gap between stated multiplicities and ``total`` using ``numeric``.

        Only ``at_least`` entries may grow, each by the surplus the numeric
        spectrum shows at that value.
        """
        num = np.asarray(numeric.values if isinstance(numeric, Spectrum) else numeric, float)
        pred = self.values()
        deficit = self.total - len(pred)
        for f in self.fixed:
            if deficit <= 0:
                break
            if not f.at_least:
                continue
            seen = int(np.count_nonzero(np.abs(num - f.value) <= tol))
            have = sum(1 for v in pred if abs(v - f.value) <= tol)
            extra = min(max(seen - have, 0), deficit)
            pred += [f.value] * extra
            deficit -= extra
        return pred

    def matches(self, numeric: Sequence[float] | Spectrum, tol: float = 1e-7) -> bool:
        vals = numeric.values if isinstance(numeric, Spectrum) else numeric
        pred = self.resolve(vals, tol)
        return len(pred) == self.total and multiset_match(pred, vals, tol)

    def spectrum(self) -> Spectrum:
        if self.stated_count != self.total:
            raise ClosedFormError("multiplicities do not account for every eigenvalue")
        return Spectrum.from_values(self.values())

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "total": self.total,
            "fixed": [
                {"value": f.value, "multiplicity": f.multiplicity, "at_least": f.at_least}
                for f in self.fixed
            ],
            "residual_roots": list(self.residual_roots),
            "residual_poly": list(self.residual_poly.coefficients) if self.residual_poly else None,
            "quotient": self.quotient.tolist() if self.quotient is not None else None,
            "quotient_sizes": list(self.quotient_sizes) if self.quotient_sizes else None,
        }


def quotient_roots(b: np.ndarray, sizes: Sequence[int]) -> list[float]:
    """Eigenvalues of an equitable quotient via ``D^{1/2} B D^{-1/2}``."""
    b = np.asarray(b, dtype=np.float64)
    root = np.sqrt(np.asarray(sizes, dtype=np.float64))
    s = b * root[:, None] / root[None, :]
    if np.max(np.abs(s - s.T)) > 1e-9 * max(1.0, float(np.max(np.abs(s)))):
        raise ClosedFormError("quotient is not symmetrizable with these cell sizes")
    return sorted(eig_sym((s + s.T) / 2).values)


# --- general coalescence ----------------------------------------------------


def coalescence_quotient(spec: CoalescenceSpec) -> np.ndarray:
    """Quotient over (clique, private block 1, ..., private block l)."""
    k, priv = spec.k, [a - spec.k for a in spec.parts]
    m = spec.l + 1
    b = np.zeros((m, m))
    b[0, 0] = k - 1
    b[0, 1:] = priv
    b[1:, 0] = k
    for i in range(1, m):
        for j in range(1, m):
            if i != j:
                b[i, j] = 2 * priv[j - 1]
    return b


def two_part_cubic(a1: int, a2: int, k: int) -> CharPoly:
    p, q = a1 - k, a2 - k
    return CharPoly((1, -(k - 1), -(4 * p * q + k * q + k * p), -4 * p * q))


def spectrum_coalescence(spec: CoalescenceSpec) -> SpectrumSpec:
    b = coalescence_quotient(spec)
    sizes = (spec.k,) + tuple(a - spec.k for a in spec.parts)
    roots = quotient_roots(b, sizes)
    poly = two_part_cubic(spec.parts[0], spec.parts[1], spec.k) if spec.l == 2 else charpoly_of(b)
    check_roots(poly, roots)
    fixed = (
        FixedEigenvalue(-1.0, spec.k - 1, True),
        FixedEigenvalue(0.0, sum(a - spec.k - 1 for a in spec.parts), True),
    )
    return SpectrumSpec(fixed, tuple(roots), spec.order, poly, b, sizes, "coalescence")


def inertia_two_parts(a1: int, a2: int, k: int) -> Inertia:
    if min(a1, a2) < 3 or not 1 <= k < min(a1, a2):
        raise ClosedFormError("need a1, a2 >= 3 and 1 <= k < min(a1, a2)")
    return Inertia(k + 1, a1 + a2 - 2 * k - 2, 1)


# --- the K_{2n} family ----------------------------------------------------


def _check_family(n: int, l: int, n_min: int = 2) -> None:  # noqa: E741
    if n < n_min or l < 2:
        raise ClosedFormError(f"need n >= {n_min} and l >= 2, got n={n}, l={l}")


def _family_terms(n: int, l: int) -> tuple[int, int]:  # noqa: E741
    """(linear, constant) coefficients of the quadratic factor."""
    return 1 - n * (2 * l - 1), n * n * (l - 2) - 2 * n * (l - 1)


def family_quadratic(n: int, l: int) -> CharPoly:  # noqa: E741
    b, c = _family_terms(n, l)
    return CharPoly((1, b, c))


def family_polynomial(n: int, l: int) -> CharPoly:  # noqa: E741
    """``(x+2n)^(l-1) (x^2 + x(1-n(2l-1)) + n^2(l-2) - 2n(l-1))``."""
    return CharPoly((1, 2 * n)) ** (l - 1) * family_quadratic(n, l)


def family_quotient(n: int, l: int) -> np.ndarray:  # noqa: E741
    return coalescence_quotient(FamilySpec(n, l).coalescence())


def spectrum_family(n: int, l: int) -> SpectrumSpec:  # noqa: E741
    _check_family(n, l)
    b, c = _family_terms(n, l)
    roots = _quadratic_roots(float(b), float(c))
    quad = family_quadratic(n, l)
    check_roots(quad, roots)
    fixed = (
        FixedEigenvalue(-1.0, n - 1, True),
        FixedEigenvalue(0.0, (n - 1) * l, True),
        FixedEigenvalue(-2.0 * n, l - 1),
    )
    return SpectrumSpec(
        fixed, tuple(roots), n * (l + 1), quad, family_quotient(n, l), (n,) * (l + 1), "family"
    )


def _disc(n: int, l: int) -> int:  # noqa: E741
    b, c = _family_terms(n, l)
    return b * b - 4 * c


def rho_family(n: int, l: int) -> float:  # noqa: E741
    _check_family(n, l)
    s = n * (2 * l - 1) - 1
    return (s + math.sqrt(_disc(n, l))) / 2


def sign_quantity(n: int, l: int) -> float:  # noqa: E741
    """Smaller root of the family quadratic.

    Evaluated as ``constant / larger_root`` so that exact zeros (e.g. n=4, l=3)
    come out as 0.0 rather than rounding noise.
    """
    _check_family(n, l)
    _, c = _family_terms(n, l)
    return c / rho_family(n, l)


def _sign(n: int, l: int) -> int:  # noqa: E741
    # larger root is positive, so the smaller root has the sign of the product
    _, c = _family_terms(n, l)
    return (c > 0) - (c < 0)


def inertia_family(n: int, l: int) -> Inertia:  # noqa: E741
    """Inertia from the sign of the smaller quadratic root (canonical form)."""
    _check_family(n, l)
    neg, zero, pos = n + l - 2, (n - 1) * l, 1
    s = _sign(n, l)
    if s > 0:
        pos += 1
    elif s == 0:
        zero += 1
    else:
        neg += 1
    return Inertia(neg, zero, pos)


def inertia_family_table(n: int, l: int) -> list[tuple[str, tuple[int, int, int]]]:  # noqa: E741
    """Every branch of the printed piecewise inertia table that applies to (n, l)."""
    branches = [
        ("l=2", l == 2, (n + 1, 2 * (n - 1), 1)),
        ("l=3,n=4", l == 3 and n == 4, (5, 10, 1)),
        ("l=3,n>4", l == 3 and n > 4, (n + 1, 3 * (n - 1), 2)),
        ("l=3,n<4", l == 3 and n < 4, (n + 2, 3 * (n - 1), 1)),
        ("l>=4,n=2", l >= 4 and n == 2, (l + 1, l, 1)),
        ("l>4,n>=3", l > 4 and n >= 3, (n + l - 2, (n - 1) * l, 2)),
        ("l=4,n=3", l == 4 and n == 3, (5, 9, 1)),
        ("l=4,n=2", l == 4 and n == 2, (5, 4, 1)),
        ("l=4,n>3", l == 4 and n > 3, (n + l - 2, (n - 1) * l, 2)),
    ]
    return [(name, triple) for name, applies, triple in branches if applies]


def inertia_table_findings(n: int, l: int) -> list[str]:  # noqa: E741
    """Disagreements between the printed table and the sign-based inertia."""
    derived = inertia_family(n, l).triple()
    hits = inertia_family_table(n, l)
    if not hits:
        return [f"inertia table has no branch for n={n}, l={l}"]
    return [
        f"inertia table branch {name} gives {triple}, sign-based gives {derived} (n={n}, l={l})"
        for name, triple in hits
        if triple != derived
    ]


def energy_family(n: int, l: int) -> float:  # noqa: E741
    _check_family(n, l)
    s = n * (2 * l - 1) - 1
    if _sign(n, l) > 0:
        return float(2 * s)
    return s + math.sqrt(_disc(n, l))


def energy_family_table(n: int, l: int) -> float:  # noqa: E741
    """The printed piecewise energy formula, branch conditions verbatim."""
    _check_family(n, l)
    s = n * (2 * l - 1) - 1
    if (l == 3 and n > 4) or (l > 4 and n >= 3) or (l == 4 and n > 3):
        return float(2 * s)
    return s + math.sqrt(_disc(n, l))


# --- single-edge deletions --------------------------------------------------


def case1_quotient(n: int, l: int) -> np.ndarray:  # noqa: E741
    return np.array(
        [[n - 3, 2, l * n], [n - 2, 2, 0], [n - 2, 0, 2 * n * (l - 1)]], dtype=np.float64
    )


def case2_quotient(n: int, l: int) -> np.ndarray:  # noqa: E741
    return np.array(
        [
            [0, n - 1, 2, 0, 0],
            [1, n - 2, 1, n - 1, n * (l - 1)],
            [2, n - 1, 0, 0, 2 * n * (l - 1)],
            [0, n - 1, 0, 0, 2 * n * (l - 1)],
            [0, n - 1, 2, 2 * (n - 1), 2 * n * (l - 2)],
        ],
        dtype=np.float64,
    )


def case3_quotient(n: int, l: int) -> np.ndarray:  # noqa: E741
    return np.array(
        [
            [n - 1, 2, n - 2, n * (l - 1)],
            [n, 2, 0, 2 * n * (l - 1)],
            [n, 0, 0, 2 * n * (l - 1)],
            [n, 4, 2 * (n - 2), 2 * n * (l - 2)],
        ],
        dtype=np.float64,
    )


def case_quotient_sizes(n: int, l: int, case: EdgeCase) -> tuple[int, ...]:  # noqa: E741
    if case is EdgeCase.CLIQUE_INTERNAL:
        return (n - 2, 2, n * l)
    if case is EdgeCase.CLIQUE_INCIDENT:
        return (1, n - 1, 1, n - 1, n * (l - 1))
    return (n, 2, n - 2, n * (l - 1))


def case1_cubic(n: int, l: int) -> CharPoly:  # noqa: E741
    return CharPoly((1, 1 + n - 2 * n * l, 2 * n + l * n * n - 2 * n * n - 2, 2 * l * n * n - 4 * n))


def case1_cubic_two_copies(n: int) -> CharPoly:
    return CharPoly((1, 1 - 3 * n, 2 * (n - 1), 4 * n * (n - 1)))


def case2_quintic(n: int, l: int, constant_sign: int = -1) -> CharPoly:  # noqa: E741
    """Printed quintic. ``constant_sign`` selects how the leading ``+-8ln^3``
    of the constant term is read (-1: minus, +1: plus)."""
    return CharPoly(
        (
            1,
            -2 * n * l + 3 * n + 2,
            -3 * n * l + 7 * n - 3 * l * n**2 - 3,
            -12 * n + 6 * l * n - 4 * l * n**2 + 2 * l * n**3 + 4 * n**2 - 4 * n**3 - 4,
            -12 * n - 4 * l * n + 8 * l * n**2 + 4 * l * n**3 - 4 * n**2 - 4 * n**3 + 4,
            constant_sign * 8 * l * n**3 + 32 * l * n**2 - 24 * l * n + 16 * n**3 - 48 * n**2 + 32 * n,
        )
    )


def case2_quintic_two_copies(n: int) -> CharPoly:
    return CharPoly(
        (1, 2 - n, -6 * n * n + n - 3, -4 * n * n - 4, 4 * n**3 + 12 * n * n - 20 * n + 4, 16 * n * (n - 1))
    )


def case3_quartic(n: int, l: int) -> CharPoly:  # noqa: E741
    return CharPoly(
        (
            1,
            -(2 * n * l - 3 * n + 1),
            -(2 * n - 2 * n * l + 3 * l * n * n + 2),
            4 * n - 12 * l * n + 2 * l * n * n + 2 * l * n**3 + 4 * n * n - 4 * n**3,
            16 * n - 24 * n * n + 8 * n**3 - 16 * l * n + 16 * l * n * n - 4 * l * n**3,
        )
    )


def _case_spec(n, l, case, fixed, poly, label) -> SpectrumSpec:  # noqa: E741
    b = {
        EdgeCase.CLIQUE_INTERNAL: case1_quotient,
        EdgeCase.CLIQUE_INCIDENT: case2_quotient,
        EdgeCase.CLIQUE_EXTERNAL: case3_quotient,
    }[case](n, l)
    sizes = case_quotient_sizes(n, l, case)
    roots = quotient_roots(b, sizes)
    check_roots(poly, roots)
    return SpectrumSpec(tuple(fixed), tuple(roots), n * (l + 1), poly, b, sizes, label)


def case1_spectrum(n: int, l: int) -> SpectrumSpec:  # noqa: E741
    """Family minus an edge inside the common clique."""
    _check_family(n, l, 3)
    fixed = [
        FixedEigenvalue(-1.0, n - 3, True),
        FixedEigenvalue(-2.0, 1, True),
        # stated exactly, but only a lower bound is constructed
        FixedEigenvalue(0.0, (n - 1) * l, True),
        FixedEigenvalue(-2.0 * n, l - 1),
    ]
    return _case_spec(n, l, EdgeCase.CLIQUE_INTERNAL, fixed, case1_cubic(n, l), "case1")


def case2_spectrum(n: int, l: int) -> SpectrumSpec:  # noqa: E741
    """Family minus an edge between the clique and a private vertex."""
    _check_family(n, l, 3)
    fixed = [
        FixedEigenvalue(-1.0, n - 2, True),
        FixedEigenvalue(0.0, (n - 1) * (l - 1) + n - 2, True),
        FixedEigenvalue(-2.0 * n, l - 2, True),
    ]
    return _case_spec(n, l, EdgeCase.CLIQUE_INCIDENT, fixed, case2_quintic(n, l), "case2")


def case3_spectrum(n: int, l: int) -> SpectrumSpec:  # noqa: E741
    """Family minus an edge between two private vertices of one copy."""
    _check_family(n, l, 3)
    fixed = [
        FixedEigenvalue(-1.0, n - 1, True),
        FixedEigenvalue(-2.0, 1, True),
        FixedEigenvalue(0.0, (n - 3) + (n - 1) * (l - 1), True),
        FixedEigenvalue(-2.0 * n, l - 2, True),
    ]
    return _case_spec(n, l, EdgeCase.CLIQUE_EXTERNAL, fixed, case3_quartic(n, l), "case3")


def predicted_spectrum(n: int, l: int, case: EdgeCase | None = None) -> SpectrumSpec:  # noqa: E741
    """``case=None`` is the undeleted family."""
    if case is None:
        return spectrum_family(n, l)
    return {
        EdgeCase.CLIQUE_INTERNAL: case1_spectrum,
        EdgeCase.CLIQUE_INCIDENT: case2_spectrum,
        EdgeCase.CLIQUE_EXTERNAL: case3_spectrum,
    }[case](n, l)


def quintic_sign_reading(n: int, l: int) -> str:  # noqa: E741
    """Which reading of the quintic's ``+-8ln^3`` matches the quotient's characteristic polynomial."""
    truth = np.poly(case2_quotient(n, l))
    hits = [
        name
        for name, sign in (("minus", -1), ("plus", +1))
        if np.allclose(case2_quintic(n, l, sign).coefficients, truth, rtol=0, atol=1e-6 * np.max(np.abs(truth)))
    ]
    return hits[0] if len(hits) == 1 else ("both" if hits else "neither")


@dataclass
class PolyResidual:
    label: str
    worst: float
    roots: list[float] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.worst <= ROOT_RESIDUAL_TOL


def polynomial_residual(p: CharPoly, roots: Sequence[float], label: str = "") -> PolyResidual:
    worst = 0.0
    if len(roots):
        worst = float(np.max(np.abs(p(np.asarray(roots, dtype=np.float64))))) / p.scale
    return PolyResidual(label, worst, list(roots))

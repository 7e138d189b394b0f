"""Acceptance checks. A PASS/FAIL line per criterion is printed in the terminal summary."""

import time

import numpy as np
import pytest

from eccenergy import closed_form as cf
from eccenergy import experiment as ex
from eccenergy.eccentricity import ecc_matrix, is_ecc_irreducible, is_irreducible_matrix
from eccenergy.equitable import family_partition, verify_quotient_theorems
from eccenergy.graph_core import (
    EdgeCase,
    FamilySpec,
    build_complete,
    build_family,
    build_friendship,
    delete_edge,
    path_graph,
    representative_edge,
)
from eccenergy.spectral import eig_sym, energy, inertia

CASES = [None, *EdgeCase]


def _deleted(n, l, case):  # noqa: E741
    fam = FamilySpec(n, l)
    g = build_family(fam)
    return g if case is None else delete_edge(g, representative_edge(fam.coalescence(), case))


@pytest.mark.criterion(1, "friendship graph F4 before and after deleting a spoke")
def test_friendship_f4():
    t0 = time.perf_counter()
    f4 = build_friendship(4)
    s = eig_sym(ecc_matrix(f4))
    after = energy(eig_sym(ecc_matrix(delete_edge(f4, ex.FRIENDSHIP_EDGE))))
    elapsed = time.perf_counter() - t0
    assert abs(energy(s) - 25.2664) <= 5e-4
    assert abs(after - 20.159) <= 5e-3
    assert inertia(s).positives == 1
    assert elapsed < 1.0


# (n, l, case, printed before, printed after)
NOTE_PAIRS = [
    (3, 3, EdgeCase.CLIQUE_INCIDENT, "28.422", "30.9233"),
    (4, 3, EdgeCase.CLIQUE_INCIDENT, "38", "40.9698"),
    (5, 3, EdgeCase.CLIQUE_INCIDENT, "48", "51.0058"),
    (3, 4, EdgeCase.CLIQUE_INCIDENT, "40", "42.618"),
    (4, 4, EdgeCase.CLIQUE_INCIDENT, "54", "56.7213"),
    (3, 3, EdgeCase.CLIQUE_EXTERNAL, "28.422", "30.8582"),
    (4, 3, EdgeCase.CLIQUE_EXTERNAL, "38", "40.8431"),
    (3, 4, EdgeCase.CLIQUE_EXTERNAL, "40", "42.2584"),
]


@pytest.mark.criterion(2, "printed before/after energies to half a unit of the last decimal")
@pytest.mark.parametrize(
    "n,l,case,before,after", NOTE_PAIRS, ids=[f"{c.name}-{n}-{l}" for n, l, c, _, _ in NOTE_PAIRS]
)
def test_note_pairs(n, l, case, before, after):  # noqa: E741
    t0 = time.perf_counter()
    e0 = energy(eig_sym(ecc_matrix(_deleted(n, l, None))))
    e1 = energy(eig_sym(ecc_matrix(_deleted(n, l, case))))
    assert time.perf_counter() - t0 < 5.0 / len(NOTE_PAIRS)
    assert abs(e0 - float(before)) <= ex._half_unit(before), f"before: computed {e0:.6f}"
    assert abs(e1 - float(after)) <= ex._half_unit(after), f"after: computed {e1:.6f}"


@pytest.mark.criterion(3, "closed-form spectra match numeric spectra on 3..8 x 2..6")
def test_closed_form_grid():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 9):
        for l in range(2, 7):  # noqa: E741
            for case in CASES:
                numeric = eig_sym(ecc_matrix(_deleted(n, l, case)))
                if not cf.predicted_spectrum(n, l, case).matches(numeric, 1e-7):
                    bad.append((n, l, case))
    assert bad == []
    assert time.perf_counter() - t0 < 60.0


@pytest.mark.criterion(4, "inertia formula agrees with numeric inertia on 2..8 x 2..6")
def test_inertia_grid():
    rep = ex.inertia_report(range(2, 9), range(2, 7))
    assert rep.passed, rep.findings
    by_key = {(r.n, r.l): r for r in rep.rows}
    assert by_key[(4, 3)].numeric == (5, 10, 1)
    assert cf.sign_quantity(4, 3) == 0.0
    assert cf.sign_quantity(3, 4) == 0.0
    assert by_key[(3, 4)].numeric == cf.inertia_family(3, 4).triple()
    # zero sign quantity adds a zero eigenvalue
    assert by_key[(3, 4)].numeric[1] == (3 - 1) * 4 + 1


@pytest.mark.criterion(5, "energy never drops under any edge deletion on 3..6 x 2..5")
def test_monotonicity_all_edges():
    t0 = time.perf_counter()
    rep = ex.sweep(range(3, 7), range(2, 6), mode="all_edges")
    elapsed = time.perf_counter() - t0
    assert rep.passed
    assert rep.findings == []
    assert rep.summary["deletions"] > 1000
    assert rep.summary["min_delta"] >= -1e-7
    assert rep.summary["strict"]
    assert elapsed < 120.0


@pytest.mark.criterion(6, "quotient eigenvalues and spectral radius for the natural partition")
def test_quotient_theorems_family():
    for n in range(2, 9):
        for l in range(2, 7):  # noqa: E741
            fam = FamilySpec(n, l)
            rep = verify_quotient_theorems(ecc_matrix(build_family(fam)), family_partition(fam), 1e-7)
            assert rep.contained, (n, l)
            assert rep.radius_applicable, (n, l)
            assert rep.radius_equal, (n, l)


@pytest.mark.criterion(7, "Perron ingredients for case-3 deletions with l = 2")
def test_perron_ingredients():
    for n in range(3, 9):
        rep = ex.check_perron_monotonicity(n, 2)
        main = rep.rows[0]
        assert main.dominance and main.irreducible_after and main.rho_monotone, n
        assert rep.passed


@pytest.mark.criterion(8, "trace, Frobenius, J-I, P3 and irreducibility properties")
def test_property_suite(corpus_graphs):
    for name, g in corpus_graphs:
        m = ecc_matrix(g)
        s = eig_sym(m)
        scale = max(1.0, float(np.linalg.norm(m.as_float(), 2)))
        tol = 1e-8 * g.order * scale
        assert abs(sum(s.values)) <= tol, name
        frob = float(np.sum(m.as_float() ** 2))
        assert abs(sum(v * v for v in s.values) - frob) <= tol * scale, name
        assert is_ecc_irreducible(g) == is_irreducible_matrix(m.entries), name
    for n in range(2, 9):
        vals = eig_sym(ecc_matrix(build_complete(n))).values
        assert vals[0] == pytest.approx(n - 1, abs=1e-12)
        assert all(v == pytest.approx(-1.0, abs=1e-12) for v in vals[1:])
    assert ecc_matrix(path_graph(3)).entries.tolist() == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]

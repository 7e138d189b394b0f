import json

import pytest

from eccenergy import experiment as ex
from eccenergy.graph_core import EdgeCase, EdgeRef


def test_verify_all_edges_3_2():
    rep = ex.verify_monotonicity(3, 2, "all_edges")
    assert rep.passed and rep.findings == []
    assert len(rep.rows) == 27
    assert all(r.delta > 0 and r.closed_form_agrees for r in rep.rows)
    assert rep.summary["strict"]


def test_verify_representative_rows():
    rep = ex.verify_monotonicity(3, 4)
    rows = {r.case: r for r in rep.rows}
    assert [r.edge for r in rep.rows] == [EdgeRef(0, 1), EdgeRef(0, 3), EdgeRef(3, 4)]
    assert rows[EdgeCase.CLIQUE_EXTERNAL].energy_before == pytest.approx(40.0)
    assert rows[EdgeCase.CLIQUE_EXTERNAL].energy_after == pytest.approx(42.2584, abs=5e-4)


def test_verify_3_3_case2_row():
    rows = {r.case: r for r in ex.verify_monotonicity(3, 3).rows}
    r = rows[EdgeCase.CLIQUE_INCIDENT]
    assert r.energy_before == pytest.approx(28.4222, abs=5e-4)
    assert r.energy_after == pytest.approx(30.9233, abs=5e-4)
    assert r.delta == pytest.approx(r.energy_after - r.energy_before)


def test_verify_rejects_bad_input():
    with pytest.raises(ValueError):
        ex.verify_monotonicity(2, 3)
    with pytest.raises(ValueError):
        ex.verify_monotonicity(3, 3, "some")


def test_sweep_order_and_symmetry():
    rep = ex.sweep(range(3, 5), range(2, 4), "all_edges")
    keys = [(r.n, r.l, r.case.value, r.edge) for r in rep.rows]
    assert keys == sorted(keys)
    assert rep.passed and rep.findings == []
    assert set(rep.summary["per_case"]) == {c.name for c in EdgeCase}


def test_sweep_representative_grid():
    rep = ex.sweep(range(3, 9), range(2, 7))
    assert rep.passed and rep.summary["deletions"] == 6 * 5 * 3


def test_sweep_empty_range():
    rep = ex.sweep(range(0), range(2, 4))
    assert rep.passed and rep.rows == [] and rep.to_csv() == ""


def test_guardrail():
    with pytest.raises(ex.GuardrailError):
        ex.sweep(range(3, 14), range(2, 3))
    with pytest.raises(ex.GuardrailError):
        ex.check_guardrail([3], [9])
    ex.check_guardrail([13], [9], allow_large=True)


def test_parallel_matches_serial():
    a = ex.verify_monotonicity(3, 3, "all_edges", jobs=1).to_json()
    b = ex.verify_monotonicity(3, 3, "all_edges", jobs=2).to_json()
    assert a == b


def test_report_byte_identical():
    assert ex.sweep(range(3, 5), range(2, 4)).to_json() == ex.sweep(range(3, 5), range(2, 4)).to_json()


def test_report_schema():
    d = json.loads(ex.verify_monotonicity(3, 2).to_json())
    assert d["schema_version"] == ex.SCHEMA_VERSION
    assert {"kind", "pass", "summary", "findings", "rows"} <= set(d)
    row = d["rows"][0]
    assert row["case"] == "CLIQUE_INTERNAL" and row["edge"] == [0, 1]
    header = ex.verify_monotonicity(3, 2).to_csv().splitlines()[0]
    assert "delta" in header and "edge" in header


def test_reproduce_paper_values():
    rep = ex.reproduce_paper_values()
    rows = {r.label: r for r in rep.rows}
    assert rows["case2 n=4 l=4"].ok and rows["base n=4 l=4"].ok
    assert rows["case3 n=4 l=3"].ok
    assert rows["F4 minus e energy"].ok and rows["F4 positive eigenvalues"].ok
    # printed values that recomputation does not reproduce are findings, not errors
    assert len(rep.findings) == rep.summary["mismatches"]
    assert not rep.passed


def test_friendship_edge_is_a_spoke():
    assert ex.FRIENDSHIP_EDGE.u == 0


def test_perron():
    rep = ex.check_perron_monotonicity(3)
    main, contrast = rep.rows
    assert rep.passed
    assert main.rho_before == pytest.approx(8.6904, abs=1e-4)
    assert main.rho_after >= main.rho_before
    assert not contrast.dominance
    assert rep.summary == {"case1_dominance": False}


@pytest.mark.parametrize("n,l", [(2, 2), (3, 2), (4, 3), (5, 5)])
def test_quotient_checks(n, l):  # noqa: E741
    rep = ex.quotient_checks(n, l)
    assert rep.passed, rep.findings
    assert len(rep.rows) == (1 if n == 2 else 4)


def test_parse_range():
    assert ex.parse_range("3..6") == range(3, 7)
    assert ex.parse_range("4") == range(4, 5)
    with pytest.raises(ValueError):
        ex.parse_range("a..b")


def test_disconnecting_deletion_is_skipped_with_finding(monkeypatch):
    monkeypatch.setattr(ex, "_evaluate_deletion", lambda args: (None, False, None))
    rep = ex.verify_monotonicity(3, 2)
    assert rep.passed
    assert len(rep.findings) == 3 and "disconnects" in rep.findings[0]
    assert all(r.energy_after is None and not r.connected_after for r in rep.rows)
    assert rep.summary["skipped_disconnected"] == 3


def test_energy_drop_fails_report(monkeypatch):
    real = ex._evaluate_deletion

    def lower(args):
        after, ok, values = real(args)
        return after - 100.0, ok, values

    monkeypatch.setattr(ex, "_evaluate_deletion", lower)
    rep = ex.verify_monotonicity(3, 2)
    assert not rep.passed
    assert any("drops" in f for f in rep.findings)

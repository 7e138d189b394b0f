"""Command-line interface.

Exit status: 0 when every check passes, 1 when anything is reported as a
finding, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import closed_form as cf
from . import experiment as ex
from .eccentricity import ecc_matrix, format_matrix
from .equitable import NotEquitableError, PartitionError, read_partition, verify_quotient_theorems
from .graph_core import EdgeCase, GraphError, read_graph
from .spectral import SpectralError, Spectrum, eig_sym, energy, inertia, spectral_radius

EXIT_OK, EXIT_FINDING, EXIT_USAGE = 0, 1, 2

CASES = {0: None, 1: EdgeCase.CLIQUE_INTERNAL, 2: EdgeCase.CLIQUE_INCIDENT, 3: EdgeCase.CLIQUE_EXTERNAL}


def spectrum_payload(s: Spectrum, zero_tolerance: float | None = None, **extra) -> dict:
    inert = inertia(s, zero_tolerance)
    out = {
        "schema_version": ex.SCHEMA_VERSION,
        "kind": "spectrum",
        "order": len(s),
        "eigenvalues": list(s.values),
        "energy": energy(s),
        "spectral_radius": spectral_radius(s),
        "inertia": {
            "negatives": inert.negatives,
            "zeros": inert.zeros,
            "positives": inert.positives,
            "zero_tolerance": inert.zero_tolerance,
        },
        "residual_bound": s.residual_bound,
    }
    out.update(extra)
    return out


def spectrum_csv(payload: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["key", "value"])
    w.writerow(["order", payload["order"]])
    w.writerow(["energy", repr(payload["energy"])])
    w.writerow(["spectral_radius", repr(payload["spectral_radius"])])
    for k in ("negatives", "zeros", "positives"):
        w.writerow([k, payload["inertia"][k]])
    for i, v in enumerate(payload["eigenvalues"]):
        w.writerow([f"eigenvalue[{i}]", repr(v)])
    return buf.getvalue()


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def _emit_payload(args, payload: dict) -> None:
    if args.format == "csv":
        _emit(args, spectrum_csv(payload))
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _emit_report(args, report: ex.Report) -> int:
    _emit(args, report.to_csv() if args.format == "csv" else report.to_json())
    return EXIT_OK if report.passed and not report.findings else EXIT_FINDING


def cmd_spectrum(args) -> int:
    s = eig_sym(ecc_matrix(read_graph(args.graph)))
    _emit_payload(args, spectrum_payload(s))
    return EXIT_OK


def cmd_energy(args) -> int:
    e = energy(eig_sym(ecc_matrix(read_graph(args.graph))))
    if args.format == "csv":
        _emit(args, f"key,value\nenergy,{e!r}\n")
    else:
        _emit(args, json.dumps({"schema_version": ex.SCHEMA_VERSION, "kind": "energy", "energy": e}) + "\n")
    return EXIT_OK


def cmd_ecc_matrix(args) -> int:
    _emit(args, format_matrix(ecc_matrix(read_graph(args.graph)).entries))
    return EXIT_OK


def cmd_closed_form(args) -> int:
    case = CASES[args.case]
    if case is not None and args.n < 3:
        raise cf.ClosedFormError("edge-deletion closed forms need n >= 3")
    spec = cf.predicted_spectrum(args.n, args.l, case)
    payload = spectrum_payload(spec.spectrum(), kind="closed_form", prediction=spec.to_dict())
    _emit_payload(args, payload)
    return EXIT_OK


def cmd_quotient_check(args) -> int:
    m = ecc_matrix(read_graph(args.graph))
    part = read_partition(args.partition)
    try:
        rep = verify_quotient_theorems(m, part, args.tol)
    except NotEquitableError as exc:
        payload = {"schema_version": ex.SCHEMA_VERSION, "kind": "quotient_check", "pass": False,
                   "findings": [str(exc)]}
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return EXIT_FINDING
    payload = {"schema_version": ex.SCHEMA_VERSION, "kind": "quotient_check", **rep.to_dict()}
    if args.format == "csv":
        text = "key,value\n" + "".join(
            f"{k},{payload[k]}\n" for k in ("contained", "radius_applicable", "radius_equal", "pass")
        )
        _emit(args, text)
    else:
        _emit(args, json.dumps(payload, indent=2, sort_keys=True) + "\n")
    return EXIT_OK if rep.passed else EXIT_FINDING


def cmd_verify(args) -> int:
    mode = "all_edges" if args.all_edges else "representative"
    return _emit_report(args, ex.verify_monotonicity(args.n, args.l, mode, args.tol, args.jobs))


def cmd_sweep(args) -> int:
    mode = "all_edges" if args.all_edges else "representative"
    report = ex.sweep(
        ex.parse_range(args.n_range),
        ex.parse_range(args.l_range),
        mode,
        args.tol,
        args.jobs,
        allow_large=args.allow_large,
    )
    return _emit_report(args, report)


def cmd_reproduce(args) -> int:
    return _emit_report(args, ex.reproduce_paper_values())


def cmd_perron(args) -> int:
    return _emit_report(args, ex.check_perron_monotonicity(args.n, args.l))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--json", dest="format", action="store_const", const="json")
    common.add_argument("--csv", dest="format", action="store_const", const="csv")
    common.add_argument("--tol", type=float, default=ex.DELTA_TOL, help="comparison tolerance")
    common.add_argument("--jobs", type=int, default=1, help="worker processes; output order is unaffected")
    common.add_argument("--out", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(
        prog="eccenergy",
        description="Eccentricity spectra and energy of complete-graph coalescences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues, energy, inertia, spectral radius")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", parents=[common], help="eccentricity energy of a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("ecc-matrix", parents=[common], help="dump the eccentricity matrix")
    p.add_argument("graph")
    p.set_defaults(func=cmd_ecc_matrix)

    p = sub.add_parser("closed-form", parents=[common], help="predicted spectrum of the K_2n family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--case", type=int, choices=sorted(CASES), default=0,
                   help="0 = undeleted, 1/2/3 = deleted edge case")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("quotient-check", parents=[common], help="check quotient theorems for a partition")
    p.add_argument("graph")
    p.add_argument("partition")
    p.set_defaults(func=cmd_quotient_check)

    p = sub.add_parser("verify", parents=[common], help="edge-deletion energy check for one (n, l)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--all-edges", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="edge-deletion check over a grid")
    p.add_argument("--n-range", required=True, help="inclusive range a..b")
    p.add_argument("--l-range", required=True, help="inclusive range c..d")
    p.add_argument("--all-edges", action="store_true")
    p.add_argument("--allow-large", action="store_true", help="lift the 3..12 x 2..8 guardrail")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("reproduce-paper", parents=[common], help="recompute the published energies")
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("perron", parents=[common], help="Perron-Frobenius ingredients for a case-3 deletion")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=2)
    p.set_defaults(func=cmd_perron)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (GraphError, PartitionError, SpectralError, cf.ClosedFormError, ex.GuardrailError,
            ValueError, OSError) as exc:
        print(f"eccenergy: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

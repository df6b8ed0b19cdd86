"""Batch command-line front end.

Subcommands: ``invariants`` evaluates every invariant and monotone on a
JSON state file, ``count`` prints invariant-count tables, ``verify`` runs
an identity or property suite and writes a certificate.  Output is JSON
(plus human-readable tables on stdout) and is byte-identical for identical
(subcommand, seed, input); no timestamps are emitted.

Exit codes: 0 success, 2 input error, 3 property violation.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import counting, lsl_qutrit, lu_invariants, monotones, qubit, states

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VIOLATION = 3


def _emit(report, out_path):
    text = json.dumps(report, indent=2, sort_keys=True)
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_invariants(args):
    try:
        state = states.load_state(args.state)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    dims = (state.dimA, state.dimB)
    diag = states.physicality(state)
    report = {
        "input": args.state,
        "seed": args.seed,
        "dimA": state.dimA,
        "dimB": state.dimB,
        "physicality": diag,
        "warnings": [] if diag["physical"] else ["state is not physical"],
    }
    if dims == (3, 3):
        report["invariants"] = lu_invariants.all_invariants(state.coords)
        c3 = lsl_qutrit.cubic_invariant(state.coords.ext)
        c6 = lsl_qutrit.sextic_invariant(state.coords.ext)
        report["C3"] = c3
        report["C6"] = c6
        report["monotones"] = {
            "abs_C3^(1/3)": abs(c3) ** (1.0 / 3.0),
            "abs_C6^(1/6)": abs(c6) ** (1.0 / 6.0),
        }
        report["C3_expansion_residual"] = lsl_qutrit.cubic_expansion_residual(state)
    elif dims == (2, 2):
        q = qubit.q_invariants(state.coords.ext)
        report["invariants"] = q
        report["det_rho"] = float(np.linalg.det(state.rho).real)
        report["monotones"] = {
            "abs_Q2^(1/2)": abs(q["Q2"]) ** 0.5,
            "abs_Q4^(1/4)": abs(q["Q4"]) ** 0.25,
            "abs_Q4t^(1/4)": abs(q["Q4t"]) ** 0.25,
            "abs_Q6^(1/6)": abs(q["Q6"]) ** (1.0 / 6.0),
        }
        report["expansion_residuals"] = qubit.expansion_residuals(state.coords)
    else:
        print(f"error: unsupported dimensions {dims}; expected (3,3) or (2,2)",
              file=sys.stderr)
        return EXIT_INPUT
    _emit(report, args.out)
    return EXIT_OK


def cmd_count(args):
    rows = []
    try:
        if args.family == "lu":
            max_n = args.max if args.max is not None else (5 if args.dim == 3 else 8)
            for n in range(max_n + 1):
                rows.append({"degree": n, "count": counting.count_lu_mixed(args.dim, n),
                             "method": "character inner squares", "conjecture": False})
        elif args.family == "lsl":
            max_n = args.max if args.max is not None else 12
            step = 1
            for n in range(0, max_n + 1, step):
                rep = counting.count_lsl(args.dim, n)
                if rep.count or n == 0 or not args.nonzero:
                    rows.append(rep.as_dict())
        elif args.family == "graded":
            columns = ([tuple(int(c) for c in args.pqs)]
                       if args.pqs else counting.GRADED_COLUMNS)
            for p, q, s in columns:
                rows.append({"grading": f"{p}{q}{s}",
                             "count": counting.count_graded_quartics(p, q, s),
                             "method": "plethysm singlet pairing",
                             "conjecture": False})
        else:
            raise ValueError(f"unknown family {args.family}")
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for row in rows:
        label = row.get("grading", row.get("degree"))
        flag = "  CONJECTURE" if row.get("conjecture") else ""
        print(f"{label:>8}  {row['count']:>8}  {row['method']}{flag}")
    if args.out:
        _emit({"family": args.family, "rows": rows, "seed": args.seed}, args.out)
    return EXIT_OK


def _verify_tensors(args):
    from .tensors import build_structure_tensors, cyclic_identity_check, det_from_dtilde
    t = build_structure_tensors(3)
    residuals = dict(cyclic_identity_check(t))
    rng = np.random.default_rng(args.seed)
    ratio_dev = 0.0
    for _ in range(args.trials):
        H = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        H = (H + H.conj().T) / 2
        coords = states.to_single_coords(H, 3)
        cubic, det = det_from_dtilde(coords)
        ratio_dev = max(ratio_dev, abs(cubic / det - 1.5) if abs(det) > 1e-9 else 0.0)
    residuals["cubic_determinant_ratio_deviation_from_1.5"] = ratio_dev
    tol = args.tol if args.tol is not None else 1e-10
    return residuals, max(residuals.values()) <= tol


def _verify_algebra(args):
    _, cert = lsl_qutrit.build_algebra(seed=args.seed, trials=max(args.trials, 5))
    numeric = {k: v for k, v in cert.items()
               if isinstance(v, float) and k.endswith("residual")}
    ok = (cert["span_dimension"] == 16
          and cert["linearized_preservation_residual"] <= 1e-12
          and cert["commutator_residual_9x9"] <= 1e-12
          and cert["commutator_residual_3x3"] <= 1e-12
          and cert["triality_kernel_residual"] <= 1e-12
          and cert["dtilde_preservation_residual"] <= 1e-10
          and cert["homomorphism_residual"] <= 1e-10)
    return cert, ok


def _verify_expansion(args):
    rng = np.random.default_rng(args.seed)
    tol = args.tol if args.tol is not None else 1e-10
    worst3 = 0.0
    for _ in range(args.trials):
        worst3 = max(worst3, lsl_qutrit.cubic_expansion_residual(
            states.random_state(3, 3, rng)))
    worstq = {"Q2": 0.0, "Q4": 0.0, "Q4t": 0.0, "Q4t_eps": 0.0}
    for _ in range(args.trials):
        res = qubit.expansion_residuals(states.random_state(2, 2, rng).coords)
        for k in worstq:
            worstq[k] = max(worstq[k], res[k])
    cert = {"seed": args.seed, "trials": args.trials,
            "max_cubic_expansion_residual": worst3,
            "max_qubit_expansion_residuals": worstq}
    ok = worst3 <= tol and max(worstq.values()) <= tol
    return cert, ok


def _verify_monotone(args):
    tol = args.tol if args.tol is not None else 1e-9
    report = monotones.run_trials(args.functional, args.trials, args.seed,
                                  workers=args.workers, tol=tol)
    scan = monotones.scalar_inequality_scan(100, seed=args.seed)
    control = monotones.wrong_exponent_counterexample()
    cert = {
        "trials_report": report,
        "scalar_scan": {k: v for k, v in scan.items()},
        "wrong_exponent_control": {
            "raw_margin": control["raw_margin"],
            "proper_margin": control["proper_margin"],
        },
    }
    ok = (not report["violations"]
          and scan["max_violation"] <= 1e-12
          and control["raw_margin"] < -1e-9
          and control["proper_margin"] >= -tol)
    return cert, ok


def cmd_verify(args):
    suites = {
        "tensors": _verify_tensors,
        "algebra": _verify_algebra,
        "expansion": _verify_expansion,
        "monotone": _verify_monotone,
    }
    try:
        runner = suites[args.suite]
    except KeyError:
        print(f"error: unknown suite {args.suite}", file=sys.stderr)
        return EXIT_INPUT
    cert, ok = runner(args)
    report = {"suite": args.suite, "seed": args.seed, "trials": args.trials,
              "passed": bool(ok), "certificate": cert}
    _emit(report, args.out)
    return EXIT_OK if ok else EXIT_VIOLATION


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qutrit-invariants",
        description="Polynomial invariants and entanglement monotones for "
                    "mixed two-qutrit and two-qubit states.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0,
                       help="64-bit seed echoed into the output")
        p.add_argument("--trials", type=int, default=1000)
        p.add_argument("--tol", type=float, default=None,
                       help="override the default tolerance")
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--out", help="write the JSON report to this path")

    p = sub.add_parser("invariants", help="evaluate invariants on a state file")
    p.add_argument("state", help="JSON state file")
    common(p)
    p.set_defaults(fn=cmd_invariants)

    p = sub.add_parser("count", help="invariant-count tables")
    p.add_argument("family", choices=["lu", "lsl", "graded"])
    p.add_argument("--dim", type=int, default=3, choices=[2, 3])
    p.add_argument("--max", type=int, default=None, help="maximum degree")
    p.add_argument("--pqs", help="single grading for the graded family, e.g. 004")
    p.add_argument("--nonzero", action="store_true",
                   help="suppress zero rows in the lsl table")
    common(p)
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("verify", help="run an identity/property suite")
    p.add_argument("suite", choices=["tensors", "algebra", "expansion", "monotone"])
    p.add_argument("--functional", default="C3",
                   choices=sorted(monotones.MONOTONE_FUNCTIONALS))
    common(p)
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.fn(args)


def entry():
    raise SystemExit(main())

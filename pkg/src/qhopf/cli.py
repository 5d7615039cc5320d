"""Command-line front end.

Five subcommands over instance spec files (small JSON objects, see
qhopf.params):

    qhopf verify INSTANCE        axiom checks on a basis window
    qhopf invariants INSTANCE    the invariant vector
    qhopf iso FIRST SECOND       isomorphism decision with explanation
    qhopf comodule INSTANCE      coactions for the built-in quotient
    qhopf report INSTANCE        instance echo + axioms + invariants

Exit codes: 0 success (iso: isomorphic), 1 axiom or comodule check
failure, 2 input error, 3 non-isomorphic.

`--format structured` emits a JSON document with sorted keys and no
timing data, so repeated runs are byte-identical; the human format
prints wall-clock time.  `--seed` is echoed into structured output for
provenance even though every computation here is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from qhopf import __version__
from qhopf.comodule import Coaction, QuotientError, default_quotient
from qhopf.families import build
from qhopf.invariants import invariant_vector, isomorphic, pi_degree_and_io
from qhopf.params import (
    AParams,
    BParams,
    CLiftParams,
    CParams,
    EnvNonabelianParams,
    ParamError,
    parse_params,
    params_str,
    params_to_json,
)
from qhopf.verify import verify_axioms


class InputError(Exception):
    """Unreadable file, malformed JSON, or invalid instance parameters."""


def _load_instance(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(
            f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}"
        ) from exc
    try:
        return parse_params(obj)
    except ParamError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _stamp(doc: dict, args) -> dict:
    doc["seed"] = args.seed
    doc["tool"] = {"name": "qhopf", "version": __version__}
    return doc


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _check_window(args) -> None:
    if args.window < 1:
        raise InputError(f"--window must be >= 1, got {args.window}")
    if getattr(args, "jobs", 1) < 1:
        raise InputError(f"--jobs must be >= 1, got {args.jobs}")


def _pi_profile(params):
    """PI data for the report: exact degrees where the carried-basis
    formula applies, "infinite" where the instance provably satisfies
    no polynomial identity, omitted (None) otherwise."""
    if isinstance(params, BParams):
        degree, io = pi_degree_and_io(params)
        return {"pi_degree": degree, "integral_order": io}
    if isinstance(params, CParams):
        # n = 1 is commutative, hence trivially PI: omit like the
        # other commutative families
        return "infinite" if params.n > 1 else None
    if isinstance(params, EnvNonabelianParams):
        return "infinite"
    if isinstance(params, (AParams, CLiftParams)):
        if isinstance(params, CLiftParams) and params.q.is_one():
            return "infinite"
        if params.q.root_order() is None:
            return "infinite"
    return None


# -- subcommands --------------------------------------------------------


def cmd_verify(args) -> int:
    _check_window(args)
    params = _load_instance(args.instance)
    alg = build(params)
    t0 = time.perf_counter()
    report = verify_axioms(alg, window=args.window, jobs=args.jobs, params=params)
    elapsed = time.perf_counter() - t0
    if args.format == "structured":
        _emit(
            _stamp(
                {
                    "command": "verify",
                    "instance": params_to_json(params),
                    "axioms": report.to_json(),
                },
                args,
            )
        )
    else:
        print(f"verify {params_str(params)}  window={args.window}")
        for name in sorted(report.checked):
            print(f"  {name}: {report.checked[name]} checks")
        for f in report.failures:
            print(f"  FAIL {f.axiom} at {f.where}: {f.residual}")
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{verdict} in {elapsed:.2f}s")
    return 0 if report.passed else 1


def cmd_invariants(args) -> int:
    _check_window(args)
    params = _load_instance(args.instance)
    alg = build(params)
    t0 = time.perf_counter()
    vec = invariant_vector(alg, bound=args.window)
    elapsed = time.perf_counter() - t0
    if args.format == "structured":
        _emit(
            _stamp(
                {
                    "command": "invariants",
                    "instance": params_to_json(params),
                    "window": args.window,
                    "invariants": vec.to_json(),
                },
                args,
            )
        )
    else:
        print(f"invariants {params_str(params)}  window={args.window}")
        for name, value in vec.fields():
            if name == "abelianization_goldie_rank":
                rank, quotient = value
                print(f"  {name}: rank={rank} quotient={quotient}")
            else:
                print(f"  {name}: {value}")
        print(f"done in {elapsed:.2f}s")
    return 0


def cmd_iso(args) -> int:
    p1 = _load_instance(args.first)
    p2 = _load_instance(args.second)
    same, why = isomorphic(p1, p2)
    if args.format == "structured":
        _emit(
            _stamp(
                {
                    "command": "iso",
                    "instances": [params_to_json(p1), params_to_json(p2)],
                    "isomorphic": same,
                    "explanation": why,
                },
                args,
            )
        )
    else:
        verdict = "isomorphic" if same else "non-isomorphic"
        print(f"{verdict}: {params_str(p1)} vs {params_str(p2)}")
        print(f"  {why}")
    return 0 if same else 3


def cmd_comodule(args) -> int:
    _check_window(args)
    if args.quotient != "default":
        raise InputError(
            f"unknown quotient {args.quotient!r} (the only built-in is 'default')"
        )
    params = _load_instance(args.instance)
    alg = build(params)
    try:
        co = Coaction(alg, default_quotient(alg))
    except QuotientError as exc:
        raise InputError(f"{args.instance}: {exc}") from exc

    t0 = time.perf_counter()
    box = alg.basis_box(args.window)
    compatible = all(co.coactions_compatible(alg.basis_el(i)) for i in box)
    counit_ok = all(co.counit_recovers(alg.basis_el(i)) for i in box)
    doc: dict = {
        "command": "comodule",
        "instance": params_to_json(params),
        "window": args.window,
        "quotient": {"kind": co.spec.kind, "name": "default"},
        "bicomodule_compatible": compatible,
        "counit_collapse": counit_ok,
    }
    ok = compatible and counit_ok

    if co.spec.kind == "laurent":
        decomposed = all(co.decomposes(alg.basis_el(i)) for i in box)
        doc["decomposition"] = decomposed
        doc["bigrades"] = {
            name: {"lam": co.lam_degree(idx), "rho": co.rho_degree(idx)}
            for name, idx in alg.generators()
        }
        sweep = [
            {"n": n, "spans": co.strong_grading(n, args.window)}
            for n in range(1, args.window + 1)
        ]
        doc["strong_grading"] = sweep
        ok = ok and decomposed and all(row["spans"] for row in sweep)
    else:
        doc["derivations"] = {
            name: {
                "delta_l": alg.el_str(co.delta_l(alg.basis_el(idx))),
                "delta_r": alg.el_str(co.delta_r(alg.basis_el(idx))),
            }
            for name, idx in alg.generators()
        }
        taylor = {
            name: co.taylor_matches(alg.basis_el(idx))
            for name, idx in alg.generators()
        }
        doc["taylor"] = taylor
        doc["coinvariants"] = {
            "left": [alg.el_str(v) for v in co.left_coinvariants(args.window)],
            "right": [alg.el_str(v) for v in co.right_coinvariants(args.window)],
        }
        ok = ok and all(taylor.values())
    elapsed = time.perf_counter() - t0

    if args.format == "structured":
        _emit(_stamp(doc, args))
    else:
        print(f"comodule {params_str(params)}  window={args.window}")
        print(f"  quotient: default ({co.spec.kind})")
        print(f"  bicomodule compatible on box: {compatible}")
        print(f"  counit collapse on box: {counit_ok}")
        if co.spec.kind == "laurent":
            print(f"  bigrade decomposition on box: {doc['decomposition']}")
            for name, grades in doc["bigrades"].items():
                print(f"  {name}: lam={grades['lam']} rho={grades['rho']}")
            for row in doc["strong_grading"]:
                print(f"  strong grading n={row['n']}: {row['spans']}")
        else:
            for name, ders in doc["derivations"].items():
                print(f"  delta_l({name}) = {ders['delta_l']}")
                print(f"  delta_r({name}) = {ders['delta_r']}")
            for name, good in doc["taylor"].items():
                print(f"  taylor expansion at {name}: {good}")
            for side in ("left", "right"):
                basis = doc["coinvariants"][side]
                print(f"  {side} coinvariants ({len(basis)}): {', '.join(basis)}")
        verdict = "PASS" if ok else "FAIL"
        print(f"{verdict} in {elapsed:.2f}s")
    return 0 if ok else 1


def cmd_report(args) -> int:
    _check_window(args)
    params = _load_instance(args.instance)
    alg = build(params)
    t0 = time.perf_counter()
    report = verify_axioms(alg, window=args.window, jobs=args.jobs, params=params)
    vec = invariant_vector(alg, bound=args.window)
    pi = _pi_profile(params)
    elapsed = time.perf_counter() - t0

    if args.format == "structured":
        doc = {
            "command": "report",
            "instance": params_to_json(params),
            "axioms": report.to_json(),
            "invariants": vec.to_json(),
        }
        if pi is not None:
            doc["pi"] = pi
        _emit(_stamp(doc, args))
    else:
        print(f"report {params_str(params)}  window={args.window}")
        print(f"  axioms: {'PASS' if report.passed else 'FAIL'}"
              f" ({sum(report.checked.values())} checks)")
        for f in report.failures:
            print(f"    FAIL {f.axiom} at {f.where}: {f.residual}")
        for name, value in vec.fields():
            if name == "abelianization_goldie_rank":
                rank, quotient = value
                print(f"  {name}: rank={rank} quotient={quotient}")
            else:
                print(f"  {name}: {value}")
        if isinstance(pi, dict):
            print(f"  pi_degree: {pi['pi_degree']}"
                  f"  integral_order: {pi['integral_order']}")
        elif pi == "infinite":
            print("  pi_degree: infinite")
        print(f"done in {elapsed:.2f}s")
    return 0 if report.passed else 1


# -- wiring --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qhopf",
        description="Exact window verification, invariants, and isomorphism "
        "classification for eight families of Hopf algebra domains.",
    )
    parser.add_argument(
        "--version", action="version", version=f"qhopf {__version__}"
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--window", type=int, default=3, metavar="N",
        help="basis box radius (default 3)",
    )
    common.add_argument(
        "--format", choices=("human", "structured"), default="human",
        help="output format (default human)",
    )
    common.add_argument(
        "--seed", type=int, default=0, metavar="S",
        help="seed recorded in structured output (default 0)",
    )
    common.add_argument(
        "--jobs", type=int, default=1, metavar="J",
        help="worker processes for the bialgebra pair scan (default 1)",
    )

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify", parents=[common], help="run the Hopf axiom checks on a window"
    )
    p.add_argument("instance", help="instance spec (JSON file)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "invariants", parents=[common], help="compute the invariant vector"
    )
    p.add_argument("instance", help="instance spec (JSON file)")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser(
        "iso", parents=[common], help="decide isomorphism of two instances"
    )
    p.add_argument("first", help="instance spec (JSON file)")
    p.add_argument("second", help="instance spec (JSON file)")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser(
        "comodule", parents=[common],
        help="coactions and gradings for the built-in quotient",
    )
    p.add_argument("instance", help="instance spec (JSON file)")
    p.add_argument(
        "--quotient", default="default",
        help="quotient name (only 'default' is built in)",
    )
    p.set_defaults(func=cmd_comodule)

    p = sub.add_parser(
        "report", parents=[common],
        help="full instance report: axioms, invariants, PI data",
    )
    p.add_argument("instance", help="instance spec (JSON file)")
    p.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

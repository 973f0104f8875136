"""Command-line front end.

Subcommands: spectrum, dim, branch, decompose, ratio, verify.  JSON is the
primary output format (byte-identical across identical invocations); CSV is
available for spectrum tables.  Exit codes: 0 success, 1 verification
failure, 2 usage error.  All fractions are printed exactly, never as
decimals.  Spectrum tables are emitted for the operators D_lambda (the sign
convention negates the tilde operators); spectra are symmetric under
negation, so the tables are unaffected.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import clifford, spectra
from .errors import SpinSphereError
from .exact import HalfInt
from .reptheory import (
    GroupId,
    branch_down,
    branch_up,
    parse_weight,
    casimir_scalar,
    spinor_form_components,
    weyl_dim,
)

FORMAT_VERSION = "1"


def _document(command: str, parameters: dict, **payload) -> dict:
    doc = {"format_version": FORMAT_VERSION, "command": command, "parameters": parameters}
    doc.update(payload)
    return doc


def _emit_json(doc: dict):
    print(json.dumps(doc, sort_keys=True, separators=(",", ":")))


def _frac(f: Fraction) -> str:
    return str(f)


def _spectrum_rows(entries):
    rows = []
    for e in entries:
        rows.append(
            {
                "eigenvalue": _frac(e.eigenvalue),
                "multiplicity": e.multiplicity,
                "ktype": str(e.ktype.weight),
                "branch": e.branch_tag,
                "level": e.ktype.l,
            }
        )
    return rows


def cmd_spectrum(args) -> int:
    n, j, lmax = args.n, args.j, args.lmax
    if not (n >= 2 and 0 <= 2 * j < n and lmax >= 0):
        raise UsageError(f"need n >= 2 and 0 <= j < n/2, got n={n} j={j}")
    if j == 0:
        entries = spectra.dirac_spectrum(n, lmax)
    else:
        if lmax < 1:
            raise UsageError("higher spin spectra start at l = 1; need --lmax >= 1")
        entries = spectra.higher_spin_spectrum(n, j, lmax)
    rows = _spectrum_rows(entries)
    if args.format == "csv":
        print("eigenvalue,multiplicity,ktype,branch,level")
        for r in rows:
            print(f"{r['eigenvalue']},{r['multiplicity']},\"{r['ktype']}\",{r['branch']},{r['level']}")
    else:
        _emit_json(_document("spectrum", {"n": n, "j": j, "lmax": lmax}, rows=rows))
    return 0


def cmd_dim(args) -> int:
    group = GroupId(args.n)
    w = parse_weight(group, args.weight)
    w.check_dominant()
    doc = _document(
        "dim",
        {"n": args.n, "weight": str(w)},
        dimension=weyl_dim(w),
        casimir=_frac(casimir_scalar(w)),
    )
    if group.parity == "D" and w.doubled[-1] != 0:
        flipped = ",".join(
            str(HalfInt(-d) if i == group.rank - 1 else HalfInt(d))
            for i, d in enumerate(w.doubled)
        )
        doc["note"] = (
            f"even-dimensional sign flip: {flipped} has the same dimension"
        )
    _emit_json(doc)
    return 0


def cmd_branch(args) -> int:
    n = args.n
    if args.direction == "down":
        group = GroupId(n + 1)
        alpha = parse_weight(group, args.weight)
        alpha.check_dominant()
        weights = branch_down(alpha)
        rows = [{"weight": str(w), "dimension": weyl_dim(w)} for w in weights]
        total = sum(r["dimension"] for r in rows)
        doc = _document(
            "branch",
            {"n": n, "weight": str(alpha), "direction": "down"},
            rows=rows,
            dimension_sum=total,
            dimension_of_input=weyl_dim(alpha),
            identity_holds=total == weyl_dim(alpha),
        )
        _emit_json(doc)
        return 0 if doc["identity_holds"] else 1
    if args.a1max is None:
        raise UsageError("--a1max is required for --direction up")
    group = GroupId(n)
    lam = parse_weight(group, args.weight)
    lam.check_dominant()
    weights = branch_up(lam, HalfInt.parse(args.a1max))
    rows = [{"weight": str(w), "dimension": weyl_dim(w)} for w in weights]
    _emit_json(
        _document(
            "branch",
            {"n": n, "weight": str(lam), "direction": "up", "a1max": args.a1max},
            rows=rows,
        )
    )
    return 0


def cmd_decompose(args) -> int:
    group = GroupId(args.n)
    comps = spinor_form_components(group, args.k)
    rows = [
        {"j": j, "weights": [str(w) for w in ws], "dimension": d}
        for j, ws, d in comps
    ]
    _emit_json(
        _document(
            "decompose",
            {"n": args.n, "k": args.k},
            rows=rows,
            dimension_sum=sum(r["dimension"] for r in rows),
        )
    )
    return 0


def cmd_ratio(args) -> int:
    group = GroupId(args.n + 1)
    alpha = parse_weight(group, args.weight)
    alpha_prime = parse_weight(group, args.weight2)
    alpha.check_dominant()
    alpha_prime.check_dominant()
    z1 = spectra.z_function(args.n, alpha)
    z2 = spectra.z_function(args.n, alpha_prime)
    _emit_json(
        _document(
            "ratio",
            {"n": args.n, "weight": str(alpha), "weight2": str(alpha_prime)},
            z=_frac(z1),
            z2=_frac(z2),
            ratio=_frac(z1 / z2),
        )
    )
    return 0


def cmd_verify(args) -> int:
    rows = []
    failures = 0
    cases = 0
    for n in range(2, args.nmax + 1):
        j_max = (n - 1) // 2
        rep = spectra.verify_consistency(
            n, j_max, args.lmax, swap_pairing=args.swap_pairing
        )
        cases += rep.cases
        failures += len(rep.failures)
        rows.append(
            {
                "suite": f"consistency n={n}",
                "cases": rep.cases,
                "failures": [list(f) for f in rep.failures],
                "pairing": rep.pairing,
            }
        )
    oracle = clifford.run_oracle(cap=args.clifford_cap)
    oracle_failures = [r for r in oracle if not r["ok"]]
    cases += len(oracle)
    failures += len(oracle_failures)
    rows.append(
        {
            "suite": f"clifford oracle cap={args.clifford_cap}",
            "cases": len(oracle),
            "failures": [[r["case"], r["expected"], r["got"]] for r in oracle_failures],
            "checks": [r["case"] for r in oracle],
        }
    )
    _emit_json(
        _document(
            "verify",
            {
                "nmax": args.nmax,
                "lmax": args.lmax,
                "clifford_cap": args.clifford_cap,
                "swap_pairing": args.swap_pairing,
            },
            rows=rows,
            cases=cases,
            failures=failures,
        )
    )
    return 0 if failures == 0 else 1


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinsphere",
        description="Exact spectra of higher spin Dirac operators on round spheres.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="eigenvalue/multiplicity table for level j")
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--j", type=int, required=True, help="ladder index, 0 <= j < n/2")
    p.add_argument("--lmax", type=int, required=True, help="highest level")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("dim", help="Weyl dimension and Casimir scalar of a weight")
    p.add_argument("--n", type=int, required=True, help="Spin(n) group dimension")
    p.add_argument("--weight", required=True, help="e.g. 3/2,3/2,1/2")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("branch", help="branching between Spin(n+1) and Spin(n)")
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--weight", required=True)
    p.add_argument("--direction", choices=("up", "down"), required=True)
    p.add_argument("--a1max", help="first-entry bound for --direction up")
    p.set_defaults(func=cmd_branch)

    p = sub.add_parser("decompose", help="ladder components of spinor-valued k-forms")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("ratio", help="spectral-function ratio of two Spin(n+1) weights")
    p.add_argument("--n", type=int, required=True, help="sphere dimension")
    p.add_argument("--weight", required=True)
    p.add_argument("--weight2", required=True)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("verify", help="run the full verification suite")
    p.add_argument("--nmax", type=int, default=6)
    p.add_argument("--lmax", type=int, default=10)
    p.add_argument("--clifford-cap", type=int, default=clifford.DEFAULT_ORACLE_CAP)
    p.add_argument(
        "--swap-pairing",
        action="store_true",
        help="negative-control hook: force the wrong eigenvalue/K-type pairing",
    )
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SpinSphereError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Command-line driver: ``gencesaro {verify,region,conjecture,dets,matrix}``.

Exit codes: 0 success, 1 a checked claim failed, 2 usage error.
"""

import argparse
import csv
import io
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

from .exact import ALPHA, format_rational, parse_rational
from .identities import (
    check_BB_identity, check_BM_identity, check_C1_identity, check_MQM_identity,
    check_hausdorff_consistency, check_preimages,
)
from .operators import KINDS, OperatorSpec, finite_section
from .positivity import (
    REFERENCE_DET_S, certify_conjecture_route, certify_theorem12, det_S_polynomial,
    reference_det_S,
)

DEFAULT_VERIFY_GRID = ("-1/2", "0", "1/3", "1/2", "1", "5/2")
DEFAULT_REGION_GRID = ("0", "1/10", "1/2", "9/10", "1", "3/2", "10")
DEFAULT_CONJECTURE_GRID = "1/10:9/10:1/10"
SYMBOLIC_SECTION = 8
REFERENCE_SECTIONS = 4

# argparse would read "-1/2" as an option flag
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


@dataclass
class SweepConfig:
    alpha_grid: list
    n_max: int
    mode: str
    output_format: str
    parallelism: int = 1


@dataclass
class FindingRecord:
    alpha: str
    n: int
    minor: str
    severity: str


def parse_grid(text):
    """``start:stop:step`` with rational parts; stop is included when hit."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must look like start:stop:step, got {text!r}")
    start, stop, step = (parse_rational(p) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    out, x = [], start
    while x <= stop:
        out.append(x)
        x += step
    return out


def in_expected_region(alpha):
    return alpha == 0 or alpha >= 1


# -- workers (top level so they pickle) --------------------------------------

def _verify_one(alpha, n, beta):
    reports = [
        check_MQM_identity(alpha, n),
        check_BM_identity(alpha, n),
        check_BB_identity(alpha, n),
        check_C1_identity(alpha, n),
        check_preimages(alpha, max(n, 3)),
        check_hausdorff_consistency(alpha, beta, n),
    ]
    return [r.to_dict() for r in reports]


def _verify_symbolic(n):
    return [check_MQM_identity(ALPHA, n).to_dict(), check_BB_identity(ALPHA, n).to_dict()]


def _region_one(alpha, n):
    cert = certify_theorem12(alpha, n)
    row = cert.to_dict()
    q = cert.q_minus_i
    # the nontrivial part of Q - I is its 2 x 2 corner: report det(Z_0) if it
    # is already negative, else det(Z_1)
    minor = q.minors[0] if q.minors[0] < 0 else q.minors[min(1, n - 1)]
    row["minor"] = format_rational(minor)
    row["expected"] = in_expected_region(alpha)
    row["match"] = cert.hyponormal_certified == row["expected"]
    row["note"] = "outside the expected hyponormality region" if alpha < 0 else ""
    return row


def _conjecture_one(alpha, n_max):
    rep = certify_conjecture_route(alpha, n_max)
    rows, findings, mismatches = [], [], []
    for size, minor in zip(rep.sizes, rep.minors):
        verdict = "positive" if minor > 0 else "nonpositive"
        rows.append({"alpha": format_rational(alpha), "n": size,
                     "minor_num": minor.numerator, "minor_den": minor.denominator,
                     "verdict": verdict})
        if minor <= 0:
            severity = "conjecture-counterexample-candidate" if 0 < alpha < 1 else "info"
            findings.append(asdict(FindingRecord(format_rational(alpha), size,
                                                 format_rational(minor), severity)))
        if size <= REFERENCE_SECTIONS and reference_det_S(size - 1)(alpha) != minor:
            mismatches.append(size)
    return {"alpha": format_rational(alpha), "classification": rep.classification,
            "rows": rows, "findings": findings, "reference_mismatch": mismatches}


def _run(fn, tasks, parallelism):
    if parallelism <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(fn, *zip(*tasks)))


# -- output ------------------------------------------------------------------

def _emit(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(fieldnames, rows):
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fieldnames, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def _jsonl(items):
    return "".join(json.dumps(x) + "\n" for x in items)


# -- subcommands -------------------------------------------------------------

def cmd_verify(args, config):
    results = _run(_verify_one, [(a, config.n_max, args.beta) for a in config.alpha_grid],
                   config.parallelism)
    reports = [r for group in results for r in group]
    if args.symbolic:
        reports.extend(_verify_symbolic(min(config.n_max, SYMBOLIC_SECTION)))
    if config.output_format == "csv":
        rows = [dict(r, first_mismatch=json.dumps(r.get("first_mismatch", ""))) for r in reports]
        _emit(args, _csv_text(["identity", "alpha", "n", "verdict", "first_mismatch"], rows))
    else:
        _emit(args, _jsonl(reports))
    return 0 if all(r["verdict"] == "exact-pass" for r in reports) else 1


def cmd_region(args, config):
    rows = _run(_region_one, [(a, config.n_max) for a in config.alpha_grid], config.parallelism)
    if config.output_format == "json":
        _emit(args, _jsonl(rows))
    else:
        _emit(args, _csv_text(["alpha", "n", "minor", "verdict", "q_minus_i", "i_minus_p",
                               "expected", "match", "note"],
                              [dict(r, verdict="certified" if r["hyponormal_certified"]
                                    else "not-certified") for r in rows]))
    return 0 if all(r["match"] for r in rows) else 1


def cmd_conjecture(args, config):
    results = _run(_conjecture_one, [(a, config.n_max) for a in config.alpha_grid],
                   config.parallelism)
    findings = [f for r in results for f in r["findings"]]
    mismatched = [r["alpha"] for r in results if r["reference_mismatch"]]
    for a in mismatched:
        findings.append(asdict(FindingRecord(a, REFERENCE_SECTIONS, "", "reference-mismatch")))
    if config.output_format == "json":
        _emit(args, _jsonl({k: v for k, v in r.items() if k != "findings"} for r in results))
    else:
        _emit(args, _csv_text(["alpha", "n", "minor_num", "minor_den", "verdict"],
                              [row for r in results for row in r["rows"]]))
    if findings:
        text = _jsonl(findings)
        if args.findings:
            with open(args.findings, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stderr.write(text)
    return 1 if mismatched else 0


def cmd_dets(args, config):
    out, ok = [], True
    for n in range(config.n_max + 1):
        d = det_S_polynomial(n)
        rec = d.to_dict()
        if n in REFERENCE_DET_S:
            ref = reference_det_S(n)
            got, want = d.numerator.coeffs, ref.numerator.coeffs
            diff = [k for k in range(max(len(got), len(want)))
                    if (got[k] if k < len(got) else 0) != (want[k] if k < len(want) else 0)]
            rec["reference_match"] = not diff and d.denominator_factors == ref.denominator_factors
            rec["coefficient_diff"] = diff
            ok &= rec["reference_match"]
        out.append(rec)
    _emit(args, _jsonl(out))
    return 0 if ok else 1


def cmd_matrix(args, config):
    if len(config.alpha_grid) != 1:
        raise _UsageError("matrix takes exactly one --alpha")
    spec = OperatorSpec(args.kind, config.alpha_grid[0], beta=args.beta)
    entries = finite_section(spec, config.n_max).to_strings()
    if config.output_format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(entries)
        _emit(args, buf.getvalue())
    else:
        _emit(args, json.dumps(entries) + "\n")
    return 0


class _UsageError(Exception):
    pass


def _add_common(p, default_n, default_format):
    p.add_argument("--alpha", action="append", default=None, metavar="P/Q",
                   help="exact rational alpha; repeat or comma-separate for several")
    p.add_argument("--grid", default=None, metavar="A:B:S", help="rational grid start:stop:step")
    p.add_argument("--n", type=int, default=default_n, help="section size (default %(default)s)")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--csv", dest="format", action="store_const", const="csv")
    p.set_defaults(format=default_format)
    p.add_argument("--out", default=None, metavar="PATH")
    p.add_argument("--parallelism", type=int, default=1)
    p._negative_number_matcher = _NEGATIVE_RATIONAL


def build_parser():
    parser = argparse.ArgumentParser(prog="gencesaro", description=__doc__.splitlines()[0])
    parser._negative_number_matcher = _NEGATIVE_RATIONAL
    sub = parser.add_subparsers(dest="mode", required=True)

    p = sub.add_parser("verify", help="exact identity checks on finite sections")
    _add_common(p, 20, "json")
    p.add_argument("--beta", type=int, default=2, help="order for the Hausdorff consistency check")
    p.add_argument("--symbolic", action="store_true", default=None,
                   help="also run the alpha-symbolic checks (on by default without --alpha/--grid)")

    p = sub.add_parser("region", help="certify Q >= I >= P >= 0 over an alpha grid")
    _add_common(p, 30, "csv")

    p = sub.add_parser("conjecture", help="leading minors of I - B*B over an alpha grid")
    _add_common(p, 25, "csv")
    p.add_argument("--findings", default=None, metavar="PATH",
                   help="where to write finding records (default: stderr)")

    p = sub.add_parser("dets", help="symbolic det(S_0..S_n) against the reference polynomials")
    _add_common(p, 3, "json")

    p = sub.add_parser("matrix", help="dump a finite section")
    p.add_argument("kind", choices=KINDS)
    _add_common(p, 5, "json")
    p.add_argument("--beta", type=int, default=2)
    return parser


def _config(parser, args):
    defaults = {"verify": DEFAULT_VERIFY_GRID, "region": DEFAULT_REGION_GRID,
                "matrix": ("0",), "dets": ()}
    try:
        grid = []
        for item in args.alpha or ():
            grid.extend(parse_rational(x) for x in item.split(","))
        if args.grid:
            grid.extend(parse_grid(args.grid))
        if not grid:
            if args.mode == "conjecture":
                grid = parse_grid(DEFAULT_CONJECTURE_GRID)
            else:
                grid = [parse_rational(x) for x in defaults[args.mode]]
    except ValueError as exc:
        parser.error(str(exc))
    bad = [a for a in grid if a <= -1]
    if bad:
        parser.error(f"alpha must exceed -1: {', '.join(map(format_rational, bad))}")
    if args.n < (0 if args.mode == "dets" else 1):
        parser.error("--n must be at least 1")
    if args.parallelism < 1:
        parser.error("--parallelism must be at least 1")
    if getattr(args, "beta", 1) < 1:
        parser.error("--beta must be at least 1")
    if args.mode == "verify" and args.symbolic is None:
        args.symbolic = not (args.alpha or args.grid)
    grid = sorted(set(grid))
    return SweepConfig(grid, args.n, args.mode, args.format, args.parallelism)


COMMANDS = {"verify": cmd_verify, "region": cmd_region, "conjecture": cmd_conjecture,
            "dets": cmd_dets, "matrix": cmd_matrix}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config(parser, args)
    try:
        return COMMANDS[args.mode](args, config)
    except _UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())

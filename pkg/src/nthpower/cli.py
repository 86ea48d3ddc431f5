"""Command-line entry point: ``nthpower <subcommand> [flags]``.

Exit codes: 0 success / all checks hold, 1 a counterexample, unexpected
search solution or failed verification, 2 usage error.  JSON numbers are
written as decimal strings.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import audit, completion, solver, triples
from .errors import NegativeRadicand, NthPowerError
from .exact_core import Poly

log = logging.getLogger("nthpower")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SCHEMA_VERSION = "1"


class UsageError(Exception):
    pass


@dataclass
class CommandConfig:
    subcommand: str
    parameters: dict = field(default_factory=dict)
    output_format: str = "text"
    output_path: Path | None = None
    verbosity: int = 0


def _grid(text: str) -> tuple[range, ...]:
    parts = text.split(",")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError("expected a1:a2,b1:b2[,x1:x2]")
    out = []
    for part in parts:
        try:
            lo, hi = (int(v) for v in part.split(":"))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad range {part!r}; expected lo:hi") from None
        if lo < 1 or hi < lo:
            raise argparse.ArgumentTypeError(f"range {part!r} must satisfy 1 <= lo <= hi")
        out.append(range(lo, hi + 1))
    return tuple(out)


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError("must be > 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nthpower",
        description="Completion-of-powers identities, Pythagorean triples, real roots and claim audits.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default=None)
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("triples", parents=[common], help="M-parameterized Pythagorean triples")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--m", type=int, help="a single M")
    g.add_argument("--m-max", type=int, help="all M in 1..m_max")
    p.add_argument("--include-degenerate", action="store_true", help="also emit minus-branch records")

    p = sub.add_parser("complete", parents=[common], help="completion factor P_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="check the master identity for a range of n")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int)
    g.add_argument("--n-max", type=int, default=64)

    p = sub.add_parser("pascal", parents=[common], help="signed binomial rows with applicable terms")
    p.add_argument("--n-max", type=int, default=10)

    p = sub.add_parser("solve", parents=[common], help="real root of F_n above max(a, b)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--tol", type=_positive_float, default=1e-12)

    p = sub.add_parser("audit", parents=[common], help="evaluate the checkable claims on finite grids")
    p.add_argument("--claim", choices=("all",) + audit.CLAIM_IDS, default="all")
    p.add_argument("--grid", type=_grid, default=None, help="a1:a2,b1:b2[,x1:x2] (inclusive)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--n", type=int, help="single n for eq89_grid")
    g.add_argument("--n-max", type=int, default=8, help="eq89_grid runs n = 3..n_max")
    p.add_argument("--m-max", type=int, default=100, help="M range for common_core")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-determinism)")

    p = sub.add_parser("search", parents=[common], help="exhaustive search for A^n + B^n = C^n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", type=int, default=None, help="default 300 for n = 2, else 200")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-determinism)")
    return parser


_FORMATS = {
    "triples": ("csv", {"csv", "json", "text"}),
    "complete": ("text", {"text", "json"}),
    "verify": ("text", {"text", "json"}),
    "pascal": ("text", {"text", "json", "csv"}),
    "solve": ("json", {"json", "text"}),
    "audit": ("json", {"json", "text"}),
    "search": ("json", {"json", "text"}),
}


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise UsageError(message)


def parse_config(argv: list[str] | None) -> CommandConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    params = {k: v for k, v in vars(ns).items() if k not in ("subcommand", "format", "out", "verbose")}
    default_fmt, allowed = _FORMATS[ns.subcommand]
    fmt = ns.format or default_fmt
    _require(fmt in allowed, f"--format {fmt} not supported by {ns.subcommand}; choose from {sorted(allowed)}")

    sc = ns.subcommand
    if sc == "triples":
        _require((ns.m or ns.m_max or 0) >= 1, "--m/--m-max must be >= 1")
    elif sc in ("complete", "solve", "search"):
        _require(ns.n >= 2, "--n must be >= 2")
    if sc == "verify":
        _require((ns.n if ns.n is not None else ns.n_max) >= 2, "--n/--n-max must be >= 2")
    elif sc == "pascal":
        _require(ns.n_max >= 2, "--n-max must be >= 2")
    elif sc == "solve":
        _require(ns.a >= 1 and ns.b >= 1, "--a and --b must be >= 1")
    elif sc == "audit":
        _require((ns.n if ns.n is not None else ns.n_max) >= 3, "--n/--n-max must be >= 3 for eq89_grid")
        _require(ns.m_max >= 1, "--m-max must be >= 1")
    elif sc == "search":
        if ns.bound is None:
            params["bound"] = 300 if ns.n == 2 else 200
        _require(params["bound"] >= 2, "--bound must be >= 2")
        _require(ns.jobs >= 1, "--jobs must be >= 1")
    return CommandConfig(sc, params, fmt, ns.out, ns.verbose)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _cmd_triples(p: dict, fmt: str) -> tuple[str, int]:
    if p["m"] is not None:
        records = []
        for a, b in triples.factor_pairs(p["m"]):
            for br in (triples.Branch.PLUS, triples.Branch.MINUS):
                records.append(triples.generate(triples.TripleParams(p["m"], a, b, br)))
    else:
        records = triples.enumerate_triples(p["m_max"])
    if not p["include_degenerate"]:
        records = [r for r in records if r.valid]
    if fmt == "csv":
        return triples.records_to_csv(records), EXIT_OK
    if fmt == "json":
        return _dump({"schema": f"triples/v{SCHEMA_VERSION}", "records": [r.to_record() for r in records]}), EXIT_OK
    lines = [
        f"M={r.params.M} a={r.params.a} b={r.params.b} {r.params.branch.value}: "
        + (f"({r.A}, {r.B}, {r.C})" if r.valid else f"degenerate ({r.degenerate_reason}: {r.A}, {r.B}, {r.C})")
        for r in records
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_complete(p: dict, fmt: str) -> tuple[str, int]:
    ident = completion.complete_power(p["n"])
    code = EXIT_OK if ident.verified else EXIT_FAIL
    if fmt == "json":
        return _dump({"schema": f"complete/v{SCHEMA_VERSION}", **ident.to_record()}), code
    rec = ident.to_record()
    text = (
        f"n = {ident.n}\n"
        f"P_n = {rec['p_poly']}\n"
        f"terms = {' | '.join(rec['terms'])}\n"
        f"identity: {rec['identity']}\n"
        f"verified: {'true' if ident.verified else 'false'}\n"
    )
    return text, code


def _cmd_verify(p: dict, fmt: str) -> tuple[str, int]:
    ns = [p["n"]] if p["n"] is not None else list(range(2, p["n_max"] + 1))
    results = []
    for n in ns:
        ok = completion.verify_master_identity(n)
        terms_ok = sum(completion.completion_terms(n), Poly()) == completion.complete_power(n).p_poly
        results.append((n, ok and terms_ok))
    code = EXIT_OK if all(ok for _, ok in results) else EXIT_FAIL
    if fmt == "json":
        return _dump({
            "schema": f"verify/v{SCHEMA_VERSION}",
            "results": [{"n": str(n), "verified": ok} for n, ok in results],
            "all_verified": code == EXIT_OK,
        }), code
    return "".join(f"n = {n}: {'verified' if ok else 'FAILED'}\n" for n, ok in results), code


def _cmd_pascal(p: dict, fmt: str) -> tuple[str, int]:
    rows = [completion.pascal_row(n) for n in range(2, p["n_max"] + 1)]
    if fmt == "json":
        return _dump({
            "schema": f"pascal/v{SCHEMA_VERSION}",
            "rows": [
                {"n": str(r.n), "coefficients": [str(c) for c in r.coefficients],
                 "applicable_terms": str(r.applicable_terms)}
                for r in rows
            ],
        }), EXIT_OK
    if fmt == "csv":
        return "n,applicable_terms,coefficients\n" + "".join(
            f"{r.n},{r.applicable_terms},{r.render()}\n" for r in rows
        ), EXIT_OK
    return completion.format_pascal_table(p["n_max"]), EXIT_OK


def _cmd_solve(p: dict, fmt: str) -> tuple[str, int]:
    n, a, b = p["n"], p["a"], p["b"]
    result = solver.solve_real(n, a, b, p["tol"])
    rec = {"schema": f"solve/v{SCHEMA_VERSION}", **result.to_record()}
    rec["relative_residual"] = solver.format_real(solver.relative_residual(result), 10)
    if n == 2:
        closed = solver.solve_closed_n2(a, b)
        rec["closed_form"] = solver.format_real(closed.value)
        rec["closed_form_exact"] = None if closed.exact is None else str(closed.exact)
    else:
        try:
            rec["fixed_point_residual"] = solver.format_real(solver.fixed_point_residual(n, result), 10)
        except NegativeRadicand as exc:
            rec["fixed_point_residual"] = None
            rec["fixed_point_note"] = str(exc)
    if fmt == "json":
        return _dump(rec), EXIT_OK
    return "".join(f"{k}: {v}\n" for k, v in rec.items() if k != "schema"), EXIT_OK


def _cmd_audit(p: dict, fmt: str) -> tuple[str, int]:
    wanted = audit.CLAIM_IDS if p["claim"] == "all" else (p["claim"],)
    grid = p["grid"]
    reports = []
    for claim in wanted:
        if claim == "common_core":
            reports.append(audit.common_core_report(p["m_max"]))
        elif claim == "eq46_chain":
            reports.append(audit.eq46_report())
        elif claim in ("eq63_grid", "eq87_grid"):
            fn = audit.eq63_report if claim == "eq63_grid" else audit.eq87_report
            reports.append(fn(grid[0], grid[1]) if grid else fn())
        else:
            ns = [p["n"]] if p["n"] is not None else range(3, p["n_max"] + 1)
            for n in ns:
                if grid and len(grid) == 3:
                    reports.append(audit.check_eq89_grid(n, *grid))
                elif grid:
                    reports.append(audit.check_eq89_grid(n, grid[0], grid[1]))
                else:
                    reports.append(audit.check_eq89_grid(n))
    for r in reports:
        log.info("%s: %s (%s)", r.claim_id, "holds" if r.holds else "FAILS", r.domain_tested)
    code = EXIT_OK if all(r.holds for r in reports) else EXIT_FAIL
    if fmt == "json":
        return _dump({
            "schema": f"audit/v{SCHEMA_VERSION}",
            "reports": [r.to_record(p["timing"]) for r in reports],
        }), code
    return "".join(
        f"{r.claim_id}: {'holds' if r.holds else 'FAILS'} on {r.domain_tested}"
        f" ({len(r.counterexamples)} counterexamples)\n"
        for r in reports
    ), code


def _cmd_search(p: dict, fmt: str) -> tuple[str, int]:
    n, bound = p["n"], p["bound"]
    report = audit.search_solutions(n, bound, jobs=p["jobs"])
    if n == 2:
        expected = {(t.B, t.A, t.C) for t in triples.euclid_oracle(bound)}
        matches = set(report.solutions) == expected
    else:
        matches = not report.solutions
    code = EXIT_OK if matches else EXIT_FAIL
    rec = {"schema": f"search/v{SCHEMA_VERSION}", **report.to_record(p["timing"]), "matches_expectation": matches}
    if fmt == "json":
        return _dump(rec), code
    lines = [f"n = {n}, bound = {bound}: {len(report.solutions)} solutions, "
             f"{report.candidates_checked} candidates checked"]
    lines += [f"{A}^{n} + {B}^{n} = {C}^{n}" for A, B, C in report.solutions]
    return "\n".join(lines) + "\n", code


_DISPATCH = {
    "triples": _cmd_triples,
    "complete": _cmd_complete,
    "verify": _cmd_verify,
    "pascal": _cmd_pascal,
    "solve": _cmd_solve,
    "audit": _cmd_audit,
    "search": _cmd_search,
}


def run(config: CommandConfig) -> int:
    logging.basicConfig(
        level=logging.WARNING - 10 * min(config.verbosity, 2),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        text, code = _DISPATCH[config.subcommand](config.parameters, config.output_format)
    except NthPowerError as exc:
        print(f"nthpower: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if config.output_path is not None:
        config.output_path.write_text(text)
    else:
        sys.stdout.write(text)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"nthpower: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # argparse: --help exits 0, bad flags exit 2
        return int(exc.code or 0)
    return run(config)


if __name__ == "__main__":
    sys.exit(main())

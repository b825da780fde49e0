"""autmg command line.

    autmg <command> [--n N] [--n-max N] [--k K] [--k-max K]
          [--format json|csv|text|bfile] [--which I|J] [--suite S]
          [--sequence AXXXXXX] [--terms T] [--budget B]

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 search budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import checks, closedforms, genfun, oracle, recurrence
from .exactnum import format_rational

COMMANDS = ("table", "verify", "formula", "genfun", "oracle", "oeis")
FORMATS = ("json", "csv", "text", "bfile")
SUITE_NAMES = (*checks.SUITES, "all")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="autmg", description="Inverse automorphism-order sums of connected multigraphs.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--n", type=int)
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--k", type=int)
    p.add_argument("--k-max", type=int, default=10)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--which", choices=("I", "J"), default="J")
    p.add_argument("--suite", choices=SUITE_NAMES, action="append")
    p.add_argument("--sequence")
    p.add_argument("--terms", type=int, default=10)
    p.add_argument("--budget", type=int, default=checks.DEFAULT_ORACLE_CAP,
                   help="largest n+k the multigraph oracle may enumerate")
    return p


def rational_json(q: Fraction | int) -> dict[str, str]:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _need(value, flag: str, minimum: int):
    if value is None:
        raise UsageError(f"{flag} is required")
    if value < minimum:
        raise UsageError(f"{flag} must be >= {minimum}")
    return value


@dataclass
class RunConfig:
    command: str
    n: int | None
    n_max: int
    k: int | None
    k_max: int
    format: str | None
    which: str
    suite: tuple[str, ...]
    sequence: str | None
    terms: int
    budget: int

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        return cls(ns.command, ns.n, ns.n_max, ns.k, ns.k_max, ns.format, ns.which,
                   tuple(ns.suite or ("all",)), ns.sequence, ns.terms, ns.budget)


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_table(cfg: RunConfig) -> tuple[int, str]:
    _need(cfg.n_max, "--n-max", 1)
    _need(cfg.k_max, "--k-max", 0)
    fmt = cfg.format or "text"
    if fmt == "bfile":
        raise UsageError("tables have no b-file form")
    rows = recurrence.build_table(cfg.n_max, cfg.k_max).entries(cfg.which)
    ks = range(cfg.k_max + 1)
    if fmt == "json":
        return EXIT_OK, _dump({
            "which": cfg.which,
            "n_max": cfg.n_max,
            "k_max": cfg.k_max,
            "rows": [{"n": n, "values": [rational_json(v) for v in row]} for n, row in enumerate(rows, 1)],
        })
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", *ks])
        for n, row in enumerate(rows, 1):
            w.writerow([n, *map(format_rational, row)])
        return EXIT_OK, buf.getvalue()
    lines = [f"{cfg.which}(n,k)  " + " ".join(f"k={k}" for k in ks)]
    for n, row in enumerate(rows, 1):
        lines.append(f"n={n}  " + " ".join(map(format_rational, row)))
    return EXIT_OK, "\n".join(lines) + "\n"


def formula_text(f: closedforms.ExponentialSumFormula) -> str:
    terms = sorted(f.terms, key=lambda t: (t[0], t[1]))
    body = " + ".join(f"({format_rational(c)})*{a}^k" for c, a in terms)
    return f"J({f.n_label},k) = {body or '0'}"


def cmd_formula(cfg: RunConfig) -> tuple[int, str]:
    n = _need(cfg.n, "--n", 1)
    f = genfun.zn_to_expsum(n)
    if (cfg.format or "text") == "json":
        return EXIT_OK, _dump({
            "n": n,
            "terms": [{"coefficient": rational_json(c), "base": a} for c, a in f.terms],
        })
    if cfg.format not in (None, "text"):
        raise UsageError("formula supports --format text or json")
    return EXIT_OK, formula_text(f) + "\n"


def cmd_genfun(cfg: RunConfig) -> tuple[int, str]:
    n = _need(cfg.n, "--n", 1)
    z = genfun.zn_ratfun(n)
    if (cfg.format or "text") == "json":
        return EXIT_OK, _dump({
            "n": n,
            "numerator": [rational_json(c) for c in z.numerator.coeffs],
            "poles": list(z.poles),
        })
    if cfg.format not in (None, "text"):
        raise UsageError("genfun supports --format text or json")
    return EXIT_OK, f"Z_{n}(t) = {z.format('t')}\n"


def cmd_oracle(cfg: RunConfig) -> tuple[int, str]:
    n = _need(cfg.n, "--n", 1)
    k = _need(cfg.k, "--k", 0)
    if n + k > cfg.budget:
        raise oracle.SearchTooLarge(f"n+k={n + k} is above the oracle cap {cfg.budget}; raise --budget")
    classes = oracle.enumerate_classes(n, k)
    total = sum((Fraction(1, c.aut_order) for c in classes), Fraction(0))
    if (cfg.format or "text") == "json":
        return EXIT_OK, _dump({
            "n": n,
            "k": k,
            "classes": [{"mult": [list(r) for r in c.rep.mult], "aut_order": c.aut_order} for c in classes],
            "I": rational_json(total),
        })
    lines = [f"# {len(classes)} classes of connected multigraphs, n={n}, k={k}"]
    for c in classes:
        lines.append(f"{' '.join(map(str, c.rep.flat()))}  |Aut|={c.aut_order}")
    lines.append(f"I({n},{k}) = {format_rational(total)}")
    return EXIT_OK, "\n".join(lines) + "\n"


SEQUENCES: dict[str, Callable[[int], Fraction | int]] = {
    "A001865": lambda n: closedforms.unicyclic_J(n),
    "A000272": lambda n: closedforms.dziobek_T(n),
    "A007830": lambda n: recurrence.compute_J(n, 0),
    "A069999": lambda n: genfun.distinct_square_sums(n)[0],
}


def cmd_oeis(cfg: RunConfig) -> tuple[int, str]:
    if cfg.sequence not in SEQUENCES:
        raise UsageError(f"--sequence must be one of {', '.join(SEQUENCES)}")
    terms = _need(cfg.terms, "--terms", 1)
    values = [Fraction(SEQUENCES[cfg.sequence](n)) for n in range(1, terms + 1)]
    fmt = cfg.format or "bfile"
    if fmt == "bfile":
        if any(v.denominator != 1 for v in values):
            raise UsageError(f"{cfg.sequence} is not integer-valued over n=1..{terms}; use --format text or json")
        return EXIT_OK, "".join(f"{n} {v.numerator}\n" for n, v in enumerate(values, 1))
    if fmt == "json":
        return EXIT_OK, _dump({"sequence": cfg.sequence, "values": [rational_json(v) for v in values]})
    if fmt == "csv":
        return EXIT_OK, "n,value\n" + "".join(f"{n},{format_rational(v)}\n" for n, v in enumerate(values, 1))
    return EXIT_OK, "".join(f"{n} {format_rational(v)}\n" for n, v in enumerate(values, 1))


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    _need(cfg.n_max, "--n-max", 1)
    _need(cfg.k_max, "--k-max", 0)
    bounds = checks.Bounds(cfg.n_max, cfg.k_max, cfg.budget)
    results = checks.run_suites(cfg.suite, bounds)
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"{status} {res.name} ({res.cases} cases)")
        for m in res.mismatches:
            lines.append(f"    {m.describe()}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed} passed, {failed} failed")
    return (EXIT_FAIL if failed else EXIT_OK), "\n".join(lines) + "\n"


HANDLERS = {
    "table": cmd_table,
    "verify": cmd_verify,
    "formula": cmd_formula,
    "genfun": cmd_genfun,
    "oracle": cmd_oracle,
    "oeis": cmd_oeis,
}


def run(argv: Sequence[str], stderr=None) -> tuple[int, str]:
    """Execute one command; returns (exit code, standard-output text)."""
    stderr = stderr if stderr is not None else sys.stderr
    try:
        cfg = RunConfig.from_args(build_parser().parse_args(list(argv)))
        return HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE, ""
    except oracle.SearchTooLarge as exc:
        print(f"autmg: search too large: {exc}", file=stderr)
        return EXIT_BUDGET, ""


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())

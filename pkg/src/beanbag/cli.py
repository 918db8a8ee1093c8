"""Command-line front end: ``beanbag {peirce,curve,simulate,twobox}``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from fractions import Fraction

from . import __version__, continuum, discrete
from .evidence import Color, Counts, EvidenceError
from .predictive_odds import replay, residual_jl, telescoped_factor, update_factor
from .sampler import RngSpec, run_experiment


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(2, f"{self.prog}: error: {message}\n")


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _exact(x: Fraction) -> str:
    """Fraction followed by a 4-significant-digit decimal."""
    return f"{_frac(x)} = {float(x):#.4g}"


def _pct(x: Fraction) -> str:
    return f"{100 * float(x):.2f}%"


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".beanbag-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _render(fmt: str, columns: list[str], rows: list[dict], meta: dict) -> str:
    if fmt == "json":
        return json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def _meta(command: str, args: argparse.Namespace, seed=None) -> dict:
    arguments = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    return {"command": command, "arguments": arguments, "version": __version__, "seed": seed}


# peirce ---------------------------------------------------------------------


def peirce_report() -> str:
    lines = []
    add = lines.append
    twenty = [Color.BLACK] * 20
    run = replay(twenty)
    add("(a) Twenty black beans in a row")
    add(f"{'draw':>4}  {'factor':>7}  {'dJL':>7}  {'odds W:B':>8}  {'P(Black next)':>13}")
    for step in run.steps:
        add(
            f"{step.index:>4}  {_frac(step.factor):>7}  {step.delta_jl:>+7.3f}  "
            f"{_frac(step.odds.as_fraction()):>8}  {float(step.p_black):>13.4f}"
        )
    state = run.state
    add(f"final odds W:B = {_exact(state.odds_white_black.as_fraction())}, JL = {state.jl:+.3f}")
    add(f"P(Black next | 20 B) = {_exact(state.p_black)} ({_pct(state.p_black)})")

    factor = update_factor(Color.WHITE, state.counts)
    after = replay(twenty + [Color.WHITE], trace=False).state
    add("")
    add("The 21st bean is white")
    add(f"factor = {_frac(factor)}, dJL = {math.log10(factor):+.3f}")
    add(f"odds W:B = {_exact(after.odds_white_black.as_fraction())}, JL = {after.jl:+.3f}")
    add(f"P(White next | 20 B, 1 W) = {_exact(after.p_white)} ({_pct(after.p_white)})")

    big = Counts(990, 1010)
    sequence = twenty + [Color.WHITE, Color.BLACK] * 990
    walked = replay(sequence)
    tele = telescoped_factor(big)
    last_black = update_factor(Color.BLACK, Counts(990, 1009))
    add("")
    add("(b) 1010 black and 990 white beans (twenty blacks first, then alternating)")
    add(f"telescoped factor = {_exact(tele)}")
    add(f"product of the {len(sequence)} step factors = {_frac(walked.state.odds_white_black.as_fraction())}")
    add(f"residual dJL = {residual_jl(big):+.5f}")
    add(f"dJL of the 1010th black = {math.log10(last_black):+.5f}")
    add(f"P(Black next | 1010 B, 990 W) = {_exact(continuum.predictive_black(big))} "
        f"({_pct(continuum.predictive_black(big))})")
    add(f"P(White next | 1010 B, 990 W) = {_exact(continuum.predictive_white(big))} "
        f"({_pct(continuum.predictive_white(big))})")
    add("")
    add(
        "Both samples show 20 more black than white, yet the odds are "
        f"{_frac(state.odds_white_black.as_fraction())} versus {_frac(tele)}: "
        "the arguments do not carry equal weights, so balancing reasons fails."
    )
    return "\n".join(lines) + "\n"


def cmd_peirce(args) -> int:
    _write(peirce_report(), None)
    return 0


# curve ----------------------------------------------------------------------

CURVE_COLUMNS = ["n_white", "n_black", "p", "density"]


def _parse_counts(text: str) -> Counts:
    try:
        w, b = (int(part) for part in text.split(","))
        return Counts(w, b)
    except (ValueError, TypeError):
        raise argparse.ArgumentTypeError(f"expected N_WHITE,N_BLACK with non-negative ints, got {text!r}")


def curve_rows(specs, grid_points: int) -> list[dict]:
    rows = []
    for counts in specs:
        c = continuum.curve(counts, grid_points)
        for p, f in zip(c.p.tolist(), c.density.tolist()):
            rows.append({"n_white": counts.n_white, "n_black": counts.n_black, "p": p, "density": f})
    return rows


def cmd_curve(args) -> int:
    specs = args.counts or list(continuum.FIGURE_COUNTS)
    if args.grid_points < 2:
        raise _UsageError("--grid-points must be at least 2")
    rows = curve_rows(specs, args.grid_points)
    meta = _meta("curve", args)
    meta["arguments"]["counts"] = [[c.n_white, c.n_black] for c in specs]
    _write(_render(args.format, CURVE_COLUMNS, rows, meta), args.out)
    return 0


# simulate -------------------------------------------------------------------

SUMMARY_COLUMNS = [
    "true_p", "seed", "n", "n_white", "n_black", "odds", "odds_value", "jl",
    "p_white", "p_white_value", "p_black", "p_black_value", "beta_mean", "beta_sd",
]
TRACE_COLUMNS = [
    "index", "color", "n_white", "n_black", "factor", "factor_value", "delta_jl",
    "odds", "odds_value", "jl", "p_white", "p_white_value", "p_black", "p_black_value",
]


def _summary_row(trace) -> dict:
    s = trace.summary
    odds = s.odds.as_fraction()
    return {
        "true_p": trace.true_p,
        "seed": trace.rng.seed,
        "n": s.counts.total(),
        "n_white": s.counts.n_white,
        "n_black": s.counts.n_black,
        "odds": _frac(odds),
        "odds_value": float(odds),
        "jl": s.jl,
        "p_white": _frac(s.p_white),
        "p_white_value": float(s.p_white),
        "p_black": _frac(s.p_black),
        "p_black_value": float(s.p_black),
        "beta_mean": float(s.beta_mean),
        "beta_sd": s.beta_sd,
    }


def _step_row(step) -> dict:
    odds = step.odds.as_fraction()
    return {
        "index": step.index,
        "color": step.color.value,
        "n_white": step.counts.n_white,
        "n_black": step.counts.n_black,
        "factor": _frac(step.factor),
        "factor_value": float(step.factor),
        "delta_jl": step.delta_jl,
        "odds": _frac(odds),
        "odds_value": float(odds),
        "jl": step.jl,
        "p_white": _frac(step.p_white),
        "p_white_value": float(step.p_white),
        "p_black": _frac(step.p_black),
        "p_black_value": float(step.p_black),
    }


def cmd_simulate(args) -> int:
    if not 0 <= args.true_p <= 1:
        raise _UsageError("--true-p must lie in [0, 1]")
    if args.n < 0:
        raise _UsageError("--n must be non-negative")
    if not 0 <= args.seed < 2**64:
        raise _UsageError("--seed must be a 64-bit unsigned integer")
    trace = run_experiment(args.true_p, args.n, RngSpec(args.seed), trace=args.trace)
    summary = _summary_row(trace)
    meta = _meta("simulate", args, seed=args.seed)
    meta["algorithm"] = trace.rng.algorithm
    meta["summary"] = summary
    if args.trace:
        rows, columns = [_step_row(s) for s in trace.steps], TRACE_COLUMNS
    else:
        rows, columns = [summary], SUMMARY_COLUMNS
    _write(_render(args.format, columns, rows, meta), args.out)
    return 0


# twobox ---------------------------------------------------------------------


def twobox_report(p1: float, p2: float, n_white: int, n_black: int) -> str:
    counts = Counts(n_white, n_black)
    space = discrete.DiscreteHypothesisSpace.two_boxes(p1, p2)
    lines = []
    add = lines.append
    add(f"Two boxes: p1 = {p1:g}, p2 = {p2:g} (white fractions), even prior odds")
    if math.isclose(p2, 1 - p1, rel_tol=0, abs_tol=1e-12):
        add("symmetric case p2 = 1 - p1: only n_black - n_white matters (balancing reasons holds)")
    add(f"observed: {n_white} white, {n_black} black")
    for color in Color:
        try:
            factor = discrete.single_bayes_factor(color, p1, p2)
            add(f"  dJL({color}) = {discrete.single_delta_jl(color, p1, p2):+.4f}  (factor {float(factor):#.4g})")
        except EvidenceError:
            add(f"  dJL({color}) undefined: impossible under both boxes")
    odds = discrete.combined_odds(counts, p1, p2)
    jl = discrete.combined_delta_jl(counts, p1, p2)
    add(f"combined dJL = {jl:+.4f}, odds box1:box2 = {float(odds):#.4g}")
    post = discrete.posterior(counts, space)
    for i, w in enumerate(post.weights, start=1):
        mark = "  [ruled out]" if w == 0 else ""
        add(f"P(box {i} | data) = {w:#.4g}{mark}")
    add(f"P(White next) = {discrete.predictive(counts, space):#.4g}")
    return "\n".join(lines) + "\n"


def cmd_twobox(args) -> int:
    for name in ("p1", "p2"):
        if not 0 <= getattr(args, name) <= 1:
            raise _UsageError(f"--{name} must lie in [0, 1]")
    if args.p1 == args.p2:
        raise _UsageError("--p1 and --p2 must differ")
    if args.n_white < 0 or args.n_black < 0:
        raise _UsageError("counts must be non-negative")
    _write(twobox_report(args.p1, args.p2, args.n_white, args.n_black), None)
    return 0


# dispatch -------------------------------------------------------------------


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="beanbag", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("peirce", help="replay the twenty-black and 1010/990 scenarios")
    p.set_defaults(func=cmd_peirce)

    p = sub.add_parser("curve", help="posterior density curves of the white fraction")
    p.add_argument("--counts", type=_parse_counts, action="append", metavar="W,B",
                   help="tallies to plot; repeatable (default: 1,1 2,2 5,5 10,10 25,25 50,50)")
    p.add_argument("--grid-points", type=int, default=continuum.DEFAULT_GRID_POINTS)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("simulate", help="seeded draws followed by the predictive odds")
    p.add_argument("--true-p", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--trace", action="store_true", help="emit one row per draw")
    p.add_argument("--out", default=None, help="output file (default: stdout)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("twobox", help="two known box compositions")
    p.add_argument("--p1", type=float, required=True)
    p.add_argument("--p2", type=float, required=True)
    p.add_argument("--n-white", type=int, default=0)
    p.add_argument("--n-black", type=int, default=0)
    p.set_defaults(func=cmd_twobox)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_UsageError, EvidenceError, OSError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        sys.stderr.write(f"beanbag {args.command}: error: {msg}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

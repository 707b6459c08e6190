"""Command-line interface: ``cqbounds {param,curve,enumerate,simulate,gv,random-linear}``.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 dimension overflow.
Flags fall back to ``CQX_GRID``, ``CQX_SEED``, ``CQX_DIM_CAP`` and ``CQX_R``.
"""

from __future__ import annotations

import argparse
import io
import math
import os
import sys
from typing import Iterable, TextIO

import numpy as np

from . import bounds, codes
from .channel import channel_param_c, holevo_capacity, load_channel
from .config import RunConfig
from .decoder import error_report, verify_lemma1
from .errors import DimensionOverflow, NoConvergence, ValidationError

EXIT_INPUT, EXIT_NUMERIC, EXIT_OVERFLOW = 2, 3, 4
THRESHOLD_RATES = [k / 10 for k in range(11)]


def fmt(x: float) -> str:
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x + 0.0:.12g}"  # + 0.0 folds -0.0 into 0.0


def csv_rows(header: Iterable[str], rows: Iterable[Iterable[float]]) -> str:
    lines = [",".join(header)]
    lines += [",".join(fmt(v) for v in row) for row in rows]
    return "\n".join(lines) + "\n"


def rate_grid(upper: float, points: int) -> list[float]:
    """``points`` rates strictly inside ``(0, upper)``."""
    return [upper * k / (points + 1) for k in range(1, points + 1)]


def cmd_param(args, config: RunConfig, out: TextIO):
    ch = load_channel(args.channel)
    c = channel_param_c(ch)
    capacity, prior = holevo_capacity(ch)
    print(f"c\t{fmt(c)}", file=out)
    print(f"cutoff_rate\t{fmt(bounds.quantum_cutoff_rate(ch))}", file=out)
    print(f"capacity\t{fmt(capacity)}", file=out)
    print(f"capacity_prior\t{fmt(prior.probs[0])}", file=out)
    print(f"effective_distance\t{fmt(bounds.effective_distance(c))}", file=out)
    print(f"expurgated_rate\t{fmt(bounds.expurgated_rate(c))}", file=out)
    print("", file=out)
    print("rate\tpositivity_threshold\tcutoff_bound_positive", file=out)
    for rate in THRESHOLD_RATES:
        positive = bounds.theorem1_bound(bounds.BinaryBoundParams(c, rate)).value > 0
        print(f"{fmt(rate)}\t{fmt(bounds.positivity_threshold(rate))}\t{'yes' if positive else 'no'}", file=out)


def cmd_curve(args, config: RunConfig, out: TextIO):
    ch = load_channel(args.channel)
    capacity, _ = holevo_capacity(ch)
    upper = min(1.0, capacity) if capacity > config.tolerances.optimizer else 1.0
    if not (ch.is_commuting() or ch.is_pure()):
        print("note: E_rc is the conjectured random-coding bound for this channel", file=sys.stderr)
    rows = []
    for rate in rate_grid(upper, config.grid):
        rows.append((
            rate,
            bounds.cutoff_exponent(ch, rate).value,
            bounds.expurgated_exponent(ch, rate).value,
            bounds.random_coding_exponent(ch, rate).value,
        ))
    out.write(csv_rows(["rate", "E_cut", "E_ex", "E_rc"], rows))


def _resolve_c(args) -> float | None:
    if args.channel is not None:
        return channel_param_c(load_channel(args.channel))
    return args.c


def _profile_line(name: str, values: np.ndarray) -> str:
    return f"{name}\t" + " ".join(fmt(float(v)) for v in values)


def cmd_enumerate(args, config: RunConfig, out: TextIO):
    code = codes.load_code(args.code)
    c = _resolve_c(args)
    avg = codes.average_multiplicity(code)
    print(f"n\t{code.n}", file=out)
    print(f"M\t{code.M}", file=out)
    print(f"rate\t{fmt(code.rate)}", file=out)
    print(f"linear\t{'yes' if codes.is_linear(code) else 'no'}", file=out)
    print(_profile_line("weight_enumerator", codes.weight_enumerator(code).counts), file=out)
    print(_profile_line("average_multiplicity", avg.counts), file=out)
    print(_profile_line("ame", codes.ame(avg, code.n).exponents), file=out)
    if c is not None:
        print(f"c\t{fmt(c)}", file=out)
        print(f"union_bound\t{fmt(codes.union_bound(code, c))}", file=out)


def cmd_simulate(args, config: RunConfig, out: TextIO):
    ch = load_channel(args.channel)
    code = codes.load_code(args.code, q=ch.q)
    r = args.r
    report = error_report(code, ch, r, cap=config.dimension_cap)
    print("m\tcodeword\tP_em\tP_em_bound\tinconclusive", file=out)
    for m, word in enumerate(code.words):
        print(f"{m}\t{word}\t{fmt(report.per_word[m])}\t{fmt(report.suboptimal_bounds[m])}\t"
              f"{fmt(report.inconclusive[m])}", file=out)
    print(f"overall\t{fmt(report.overall)}", file=out)
    print(f"union_bound\t{fmt(report.union_bound)}", file=out)
    print(f"r\t{fmt(r)}", file=out)
    if ch.q == 2:
        print(f"lemma1_deviation\t{fmt(verify_lemma1(code, ch, cap=config.dimension_cap))}", file=out)


def cmd_gv(args, config: RunConfig, out: TextIO):
    header = ["rate", "delta_GV"]
    if args.c is not None:
        header += ["E_cut", "E_ex"]
    rows = []
    for rate in rate_grid(1.0, config.grid):
        row = [rate, bounds.gv_distance(rate)]
        if args.c is not None:
            p = bounds.BinaryBoundParams(args.c, rate)
            row += [bounds.theorem1_bound(p).value, bounds.theorem2_bound(p).value]
        rows.append(row)
    out.write(csv_rows(header, rows))


def cmd_random_linear(args, config: RunConfig, out: TextIO):
    if args.expected:
        profile = codes.random_linear_expected_weights(args.n, args.k)
        print(_profile_line("expected_weights", profile.counts), file=out)
        return
    out.write(codes.format_code(codes.random_linear_code(args.n, args.k, config.seed)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cqbounds", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    p = add("param", cmd_param, "binary channel parameter, cutoff/expurgated rates, positivity table")
    p.add_argument("channel")

    p = add("curve", cmd_curve, "CSV of cutoff, expurgated and random-coding exponents")
    p.add_argument("channel")
    p.add_argument("--grid", type=int)

    p = add("enumerate", cmd_enumerate, "weight/multiplicity enumerators and union bound of a code")
    p.add_argument("code")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--c", type=float)
    g.add_argument("--channel")

    p = add("simulate", cmd_simulate, "exact square-root decoder error report")
    p.add_argument("channel")
    p.add_argument("code")
    p.add_argument("--r", type=float, default=None)
    p.add_argument("--dim-cap", type=int)

    p = add("gv", cmd_gv, "CSV of Gilbert-Varshamov distance and binary bounds")
    p.add_argument("--c", type=float)
    p.add_argument("--grid", type=int)

    p = add("random-linear", cmd_random_linear, "sample a systematic random linear code")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--expected", action="store_true", help="print the ensemble's expected weight enumerator")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = RunConfig.from_env(
            grid=getattr(args, "grid", None),
            seed=getattr(args, "seed", None),
            dimension_cap=getattr(args, "dim_cap", None),
        )
        if hasattr(args, "r") and args.r is None:
            args.r = float(os.environ.get("CQX_R", 0.5))
        buf = io.StringIO()
        args.func(args, config, buf)
        if args.out is None:
            sys.stdout.write(buf.getvalue())
        else:
            with open(args.out, "w", newline="\n") as fh:
                fh.write(buf.getvalue())
    except DimensionOverflow as exc:
        print(f"error: dimension overflow: d^N = {exc.dim} exceeds cap {exc.cap}", file=sys.stderr)
        return EXIT_OVERFLOW
    except NoConvergence as exc:
        print(f"error: no convergence: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end: construct codes, check self-decodability, run BLER
sweeps, and compute outage curves.

Exit codes: 0 success (and checks pass), 1 usage/validation error, 2 check
failure.  Output files are written atomically (temp + rename).
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import construction, defaults, harness, mapping
from .polar import PolarCodeSpec, erasure_sc_check, load_spec, save_spec


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="polarfade", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a code and write its spec JSON")
    c.add_argument("--n", type=int, required=True, help="block length (power of two)")
    c.add_argument("--k", type=int, required=True, help="number of info bits")
    c.add_argument("--design-snr-db", type=float, default=None,
                   help="design Es/N0 in dB (default: calibrated table)")
    c.add_argument("--diversity", action="store_true",
                   help="apply the paired-index constraint (requires k <= n/2)")
    c.add_argument("--out", required=True, help="spec JSON output path")

    k = sub.add_parser("check", help="erasure self-decodability of both blocks")
    k.add_argument("--spec", required=True, help="spec JSON path")

    s = sub.add_parser("simulate", help="Monte Carlo BLER sweep, CSV output")
    s.add_argument("--spec", required=True)
    s.add_argument("--interleaver", required=True, choices=harness.INTERLEAVERS)
    s.add_argument("--channel", required=True, choices=("awgn", "block_rayleigh"))
    s.add_argument("--snr-start", type=float, required=True, help="Es/N0 dB, grid start")
    s.add_argument("--snr-stop", type=float, required=True, help="grid stop (inclusive)")
    s.add_argument("--snr-step", type=float, required=True)
    s.add_argument("--seed", type=int, default=0,
                   help="master seed; also seeds the random interleaver (default 0)")
    s.add_argument("--max-trials", type=int, default=100000)
    s.add_argument("--target-errors", type=int, default=100)
    s.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="worker processes; results do not depend on this")
    s.add_argument("--out", required=True, help="results CSV path (JSON echo alongside)")

    o = sub.add_parser("outage", help="capacity-outage curve, CSV output")
    o.add_argument("--channel", required=True, choices=("awgn", "block_rayleigh"))
    o.add_argument("--rate", type=float, required=True)
    o.add_argument("--snr-start", type=float, required=True)
    o.add_argument("--snr-stop", type=float, required=True)
    o.add_argument("--snr-step", type=float, required=True)
    o.add_argument("--trials", type=int, default=1000000)
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--out", required=True)
    return p


def _snr_grid(start: float, stop: float, step: float, parser: _Parser) -> tuple[float, ...]:
    if step <= 0:
        parser.error("--snr-step must be > 0")
    if stop < start:
        parser.error("--snr-stop must be >= --snr-start")
    count = int(round((stop - start) / step)) + 1
    grid = [start + i * step for i in range(count) if start + i * step <= stop + 1e-9]
    return tuple(grid)


def _cmd_construct(args, parser: _Parser) -> int:
    n = args.n
    if n < 2 or n & (n - 1):
        parser.error(f"--n must be a power of two >= 2, got {n}")
    n_log2 = n.bit_length() - 1
    if args.diversity and args.k > n // 2:
        parser.error(f"--diversity requires k <= n/2 ({args.k} > {n // 2})")
    if not 1 <= args.k <= n:
        parser.error(f"--k must be in [1, {n}]")
    code_type = "diversity" if args.diversity else "awgn"
    snr = args.design_snr_db
    if snr is None:
        try:
            snr = defaults.default_design_snr_db(code_type, n_log2)
        except KeyError as e:
            parser.error(str(e))
    if args.diversity:
        spec = construction.construct_diversity(n_log2, args.k, snr)
    else:
        spec = construction.construct_awgn(n_log2, args.k, snr)
    tmp = f"{args.out}.tmp.{os.getpid()}"
    save_spec(spec, tmp)
    os.replace(tmp, args.out)
    print(f"N={n} K={args.k} {code_type} code, design Es/N0 = {snr} dB")
    print(f"info_set: {list(spec.info_set)}" if n <= 64
          else f"info_set: {spec.k} indices, first {list(spec.info_set[:8])} ...")
    print(f"wrote {args.out}")
    return 0


def _cmd_check(args, parser: _Parser) -> int:
    try:
        spec = load_spec(args.spec)
        assignment = mapping.diversity_ilv(spec)
    except (OSError, ValueError, KeyError) as e:
        parser.error(f"bad spec: {e}")
    ok = True
    for block in (1, 2):
        res = erasure_sc_check(spec, assignment.block_positions(block))
        if res.self_decodable:
            print(f"block {block}: PASS")
        else:
            print(f"block {block}: FAIL (first stuck info index {res.first_stuck_info_index})")
            ok = False
    return 0 if ok else 2


def _cmd_simulate(args, parser: _Parser) -> int:
    try:
        spec = load_spec(args.spec)
    except (OSError, ValueError, KeyError) as e:
        parser.error(f"bad spec: {e}")
    grid = _snr_grid(args.snr_start, args.snr_stop, args.snr_step, parser)
    try:
        config = harness.ExperimentConfig(
            code_type="diversity" if spec.diversity else "awgn",
            n_log2=spec.n_log2,
            k=spec.k,
            design_snr_db=spec.design_snr_db,
            interleaver=args.interleaver,
            channel=args.channel,
            snr_grid_db=grid,
            max_trials=args.max_trials,
            target_block_errors=args.target_errors,
            master_seed=args.seed,
            interleaver_seed=args.seed,
        )
    except ValueError as e:
        parser.error(str(e))
    result = harness.run_sweep(config, workers=args.workers)
    harness.write_result(result, args.out)
    for p in result.points:
        print(f"snr {p.snr_db:+.2f} dB: {p.block_errors}/{p.trials} errors, bler {p.bler:.3e}")
    print(f"wrote {args.out}")
    return 0


def _cmd_outage(args, parser: _Parser) -> int:
    grid = _snr_grid(args.snr_start, args.snr_stop, args.snr_step, parser)
    try:
        result = harness.run_outage(args.channel, args.rate, grid, args.trials, args.seed)
    except ValueError as e:
        parser.error(str(e))
    harness.write_result(result, args.out)
    for snr_db, p in result.snr_bler_pairs():
        print(f"snr {snr_db:+.2f} dB: outage {p:.3e}")
    print(f"wrote {args.out}")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "construct": _cmd_construct,
        "check": _cmd_check,
        "simulate": _cmd_simulate,
        "outage": _cmd_outage,
    }
    return handlers[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())

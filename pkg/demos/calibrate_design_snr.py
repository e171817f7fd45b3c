#!/usr/bin/env python3
"""Calibrate the default design SNRs in polarfade/defaults.py.

For each code type and block length, finds the Es/N0 (dB) at which the
rate-1/2 code *constructed at that SNR* reaches ~1% BLER on AWGN under SC
decoding: the self-consistent operating point.  Bisection on a Monte Carlo
probe; the final table is printed ready to paste into defaults.py.

Runtime: a few minutes (dominated by N=512/1024 probes).
"""

import sys

from polarfade import ExperimentConfig, run_sweep

TARGET_BLER = 1e-2
PROBE_ERRORS = 100
PROBE_MAX_TRIALS = 40000


def probe_bler(code_type: str, n_log2: int, snr_db: float, seed: int) -> float:
    cfg = ExperimentConfig(
        code_type=code_type,
        n_log2=n_log2,
        k=1 << (n_log2 - 1),
        design_snr_db=snr_db,
        interleaver="uniform",  # irrelevant on AWGN
        channel="awgn",
        snr_grid_db=(snr_db,),
        max_trials=PROBE_MAX_TRIALS,
        target_block_errors=PROBE_ERRORS,
        master_seed=seed,
    )
    return run_sweep(cfg).points[0].bler


def calibrate(code_type: str, n_log2: int, lo: float = -3.0, hi: float = 9.0) -> float:
    """Bisect for BLER(s) = 1% with the code re-designed at every probe SNR."""
    seed = 1000 * n_log2 + (0 if code_type == "awgn" else 1)
    while probe_bler(code_type, n_log2, hi, seed) > TARGET_BLER:
        hi += 1.5
    while probe_bler(code_type, n_log2, lo, seed) < TARGET_BLER:
        lo -= 1.5
    while hi - lo > 0.1:
        mid = 0.5 * (lo + hi)
        if probe_bler(code_type, n_log2, mid, seed) > TARGET_BLER:
            lo = mid
        else:
            hi = mid
    return round(0.5 * (lo + hi) / 0.05) * 0.05


def main() -> int:
    table = {}
    for code_type in ("awgn", "diversity"):
        for n_log2 in range(3, 11):
            snr = calibrate(code_type, n_log2)
            bler = probe_bler(code_type, n_log2, snr, seed=99)
            table[(code_type, n_log2)] = snr
            print(f"{code_type:9s} N={1 << n_log2:5d}: design Es/N0 = {snr:+.2f} dB "
                  f"(probe BLER {bler:.3g})", flush=True)
    print("\nDESIGN_SNR_DB: dict[tuple[str, int], float] = {")
    for (code_type, n_log2), snr in table.items():
        print(f'    ("{code_type}", {n_log2}): {snr:.2f},')
    print("}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Calibrated default design SNRs (Es/N0, dB) for rate-1/2 codes.

Each value is the operating SNR at which the code constructed *at that same
SNR* reaches ~1% BLER on AWGN under SC decoding, found by bisection with
Monte Carlo probes (see demos/calibrate_design_snr.py).  Values are rounded
to 0.05 dB; the BLER target band checked during calibration is [0.003, 0.03].
"""

from __future__ import annotations

# (code_type, n_log2) -> design Es/N0 in dB, rate 1/2
DESIGN_SNR_DB: dict[tuple[str, int], float] = {
    ("awgn", 3): 0.90,
    ("awgn", 4): 1.65,
    ("awgn", 5): 0.90,
    ("awgn", 6): 0.60,
    ("awgn", 7): 0.40,
    ("awgn", 8): 0.15,
    ("awgn", 9): -0.25,
    ("awgn", 10): -0.50,
    ("diversity", 3): 1.15,
    ("diversity", 4): 1.35,
    ("diversity", 5): 1.00,
    ("diversity", 6): 0.60,
    ("diversity", 7): 0.35,
    ("diversity", 8): 0.05,
    ("diversity", 9): -0.15,
    ("diversity", 10): -0.40,
}


def default_design_snr_db(code_type: str, n_log2: int) -> float:
    try:
        return DESIGN_SNR_DB[(code_type, n_log2)]
    except KeyError:
        raise KeyError(
            f"no calibrated design SNR for ({code_type!r}, N=2^{n_log2}); "
            "pass --design-snr-db explicitly"
        ) from None

#!/usr/bin/env python3
"""Erasure self-decodability of the two mapping blocks, across block lengths.

A block is self-decodable when the SC decoder recovers every info bit with
all other coded bits erased -- the limiting case of one fading block in a
deep fade.  Block 1 (the info-set positions) always passes; block 2 passes
for diversity codes at every size here, while plain codes start failing at
N = 256.  That asymmetry is the whole case for the mirror constraint.
"""

from polarfade import (
    construct_awgn,
    construct_diversity,
    default_design_snr_db,
    diversity_ilv,
    erasure_sc_check,
)


def verdict(spec) -> str:
    a = diversity_ilv(spec)
    out = []
    for block in (1, 2):
        res = erasure_sc_check(spec, a.block_positions(block))
        out.append("PASS" if res.self_decodable
                   else f"FAIL@u{res.first_stuck_info_index}")
    return f"block1 {out[0]:<5s} block2 {out[1]:<9s}"


print(f"{'N':>6s}  {'plain code':<32s}{'diversity code'}")
for n_log2 in range(3, 11):
    n = 1 << n_log2
    plain = construct_awgn(n_log2, n // 2, default_design_snr_db("awgn", n_log2))
    div = construct_diversity(n_log2, n // 2, default_design_snr_db("diversity", n_log2))
    print(f"{n:6d}  {verdict(plain):<32s}{verdict(div)}")

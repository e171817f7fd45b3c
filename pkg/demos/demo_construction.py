#!/usr/bin/env python3
"""Walk through code construction: density evolution reliabilities, plain
top-K selection, and the paired-index (mirror) constraint of diversity codes.
"""

from polarfade import construct_awgn, construct_diversity, ga_density_evolution

N_LOG2 = 4
DESIGN_SNR_DB = 1.65

profile = ga_density_evolution(N_LOG2, DESIGN_SNR_DB)
n = 1 << N_LOG2
print(f"GA density evolution, N={n}, design Es/N0 = {DESIGN_SNR_DB} dB")
print("mean decision LLR per u-index (natural order):")
for i, m in enumerate(profile.metric, start=1):
    print(f"  u{i:2d}: {m:10.3f}")

plain = construct_awgn(N_LOG2, n // 2, DESIGN_SNR_DB)
print(f"\nplain rate-1/2 info set (top {n // 2}): {list(plain.info_set)}")

div = construct_diversity(N_LOG2, n // 2, DESIGN_SNR_DB)
print(f"diversity rate-1/2 info set:           {list(div.info_set)}")
mirrors = sorted(n + 1 - i for i in div.info_set)
print(f"mirror image N+1-A:                    {mirrors}")
print("-> complement of the info set equals its mirror image: "
      f"{sorted(set(range(1, n + 1)) - set(div.info_set)) == mirrors}")

low = construct_diversity(N_LOG2, 4, DESIGN_SNR_DB)
print(f"\nrate-1/4 diversity code: info {list(low.info_set)} "
      f"inside mapping set {list(low.interleaver_set)}")

"""Code construction: Gaussian-approximation density evolution for BI-AWGN and
info-set selection for the plain (AWGN) and diversity code types.

The design SNR is Es/N0 in dB with unit-energy BPSK: noise variance
``sigma^2 = 1/(2 Es/N0)`` per dimension, so the channel LLR mean is
``m0 = 2/sigma^2 = 4 Es/N0`` (linear).  The recursion tracks mean LLRs of
the synthetic channels in natural u-index order; larger mean = more
reliable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .polar import PolarCodeSpec

# Saturation cap for mean LLRs: the plus-update doubles per level, so deep
# recursions at high design SNR overflow long before float64 does.  Ties at
# the cap are broken by the larger index, which is also the structurally
# more reliable one.
MEAN_LLR_CAP = 1.0e6

_PHI_SPLIT = 10.0


def _phi(m: float) -> float:
    """Two-piece approximation of E[tanh(L/2)] deficiency for L ~ N(m, 2m)."""
    if m <= 0.0:
        return 1.0
    if m < _PHI_SPLIT:
        return math.exp(-0.4527 * m**0.86 + 0.0218)
    return math.exp(-m / 4.0) * (1.0 - 10.0 / (7.0 * m)) * math.sqrt(math.pi / m)


def _phi_inv(y: float) -> float:
    """Inverse of ``_phi`` by bisection to relative tolerance 1e-9, capped."""
    if y >= 1.0:
        return 0.0
    if y <= 0.0:
        return MEAN_LLR_CAP
    lo, hi = 0.0, MEAN_LLR_CAP
    for _ in range(300):
        if hi - lo <= 1e-9 * max(hi, 1e-300):
            break
        mid = 0.5 * (lo + hi)
        if _phi(mid) > y:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass
class ReliabilityProfile:
    """Per-u-index mean decision LLRs under GA density evolution.

    ``metric[i]`` (0-based, natural u order) is the mean LLR of synthetic
    channel i+1; all entries are finite, >= 0, and capped at MEAN_LLR_CAP.
    """

    n_log2: int
    design_snr_db: float
    metric: np.ndarray

    def ranked_indices(self) -> np.ndarray:
        """1-based u-indices in decreasing reliability, ties to the larger index."""
        n = 1 << self.n_log2
        order = np.lexsort((-np.arange(n), -self.metric))
        return order + 1


def ga_density_evolution(n_log2: int, design_snr_db: float) -> ReliabilityProfile:
    """Run GA density evolution for a BI-AWGN channel at the given Es/N0 (dB).

    Level updates: m- = phi_inv(1 - (1 - phi(m))^2), m+ = 2m, starting from
    m0 = 4 * 10^(design_snr_db / 10).
    """
    if not 1 <= n_log2 <= 16:
        raise ValueError(f"n_log2 must be in [1, 16], got {n_log2}")
    if not math.isfinite(design_snr_db):
        raise ValueError("design_snr_db must be finite")
    m0 = 4.0 * 10.0 ** (design_snr_db / 10.0)
    means = [min(m0, MEAN_LLR_CAP)]
    for _ in range(n_log2):
        nxt = []
        for m in means:
            p = _phi(m)
            # 1 - (1 - p)^2 written as p(2 - p): no cancellation for tiny p.
            # The minus mean never exceeds its parent; the clamp repairs the
            # case where p underflows to exactly 0 and the inverse saturates.
            nxt.append(min(_phi_inv(p * (2.0 - p)), m))
            nxt.append(min(2.0 * m, MEAN_LLR_CAP))
        means = nxt
    return ReliabilityProfile(n_log2, float(design_snr_db), np.array(means))


def construct_awgn(n_log2: int, k: int, design_snr_db: float) -> PolarCodeSpec:
    """Pick the K most reliable synthetic channels (no pairing constraint).

    The attached interleaver_set is the top-N/2 reliability set, which makes
    the diversity mapping available to plain codes at any rate <= 1/2.
    """
    n = 1 << n_log2
    if not 1 <= k <= n:
        raise ValueError(f"k must be in [1, {n}], got {k}")
    ranked = ga_density_evolution(n_log2, design_snr_db).ranked_indices()
    info = tuple(sorted(int(i) for i in ranked[:k]))
    ilv = tuple(sorted(int(i) for i in ranked[: n // 2]))
    return PolarCodeSpec(
        n_log2=n_log2,
        info_set=info,
        design_snr_db=float(design_snr_db),
        diversity=False,
        interleaver_set=ilv,
    )


def construct_diversity(n_log2: int, k: int, design_snr_db: float) -> PolarCodeSpec:
    """Pick reliable channels under the paired-index constraint: at most one
    of {i, N+1-i} may carry information.

    A size-N/2 set is built greedily in decreasing reliability, admitting an
    index only if its mirror has not been admitted; the resulting set contains
    exactly one of every mirror pair and defines the block mapping.  At rate
    1/2 it is the info set; below, the info set is its K most reliable members.
    """
    n = 1 << n_log2
    if not 1 <= k <= n // 2:
        raise ValueError(f"rate above 1/2 unsupported: k must be in [1, {n // 2}], got {k}")
    profile = ga_density_evolution(n_log2, design_snr_db)
    ranked = profile.ranked_indices()
    half: list[int] = []
    admitted = np.zeros(n + 1, dtype=bool)
    for i in ranked:
        i = int(i)
        if admitted[n + 1 - i]:
            continue
        admitted[i] = True
        half.append(i)
        if len(half) == n // 2:
            break
    # half is already in decreasing reliability; its first K members are the info set
    info = tuple(sorted(half[:k]))
    return PolarCodeSpec(
        n_log2=n_log2,
        info_set=info,
        design_snr_db=float(design_snr_db),
        diversity=True,
        interleaver_set=tuple(sorted(half)),
    )

import numpy as np
import pytest

from polarfade import bit_reverse
from polarfade.construction import (
    MEAN_LLR_CAP,
    construct_awgn,
    construct_diversity,
    ga_density_evolution,
)

import oracles


class TestDensityEvolution:
    def test_plus_update_is_doubling(self):
        snr_db = 2.0
        m0 = 4.0 * 10 ** (snr_db / 10.0)
        profile = ga_density_evolution(1, snr_db)
        assert profile.metric[1] == 2.0 * m0

    def test_entries_finite_nonnegative_capped(self):
        for snr_db in (-5.0, 2.0, 30.0):
            metric = ga_density_evolution(12, snr_db).metric
            assert np.all(np.isfinite(metric))
            assert np.all(metric >= 0.0)
            assert np.all(metric <= MEAN_LLR_CAP)
        assert np.any(ga_density_evolution(12, 30.0).metric == MEAN_LLR_CAP)

    def test_n8_top4_well_known(self):
        prof = ga_density_evolution(3, 2.0)
        top4 = set(int(i) for i in prof.ranked_indices()[:4])
        assert top4 == {4, 6, 7, 8}

    def test_ranking_matches_monte_carlo_oracle(self):
        # genie-aided per-channel error rates at the same SNR, independent path
        err = oracles.mc_channel_error_rates(3, 2.0, trials=200000, seed=7)
        mc_top4 = set(int(i) + 1 for i in np.argsort(err)[:4])
        assert mc_top4 == {4, 6, 7, 8}

    def test_top_half_stable_between_nearby_snrs(self):
        a = set(construct_awgn(3, 4, 1.0).info_set)
        b = set(construct_awgn(3, 4, 1.5).info_set)
        assert a == b

    def test_rejects_bad_args(self):
        with pytest.raises(ValueError):
            ga_density_evolution(0, 1.0)
        with pytest.raises(ValueError):
            ga_density_evolution(17, 1.0)
        with pytest.raises(ValueError):
            ga_density_evolution(4, float("nan"))


class TestConstructAwgn:
    def test_n8_k4(self):
        assert construct_awgn(3, 4, 2.0).info_set == (4, 6, 7, 8)

    def test_rate_one(self):
        assert construct_awgn(3, 8, 2.0).info_set == tuple(range(1, 9))

    def test_k1_is_last_index(self):
        for n_log2 in (3, 6, 10):
            assert construct_awgn(n_log2, 1, 2.0).info_set == (1 << n_log2,)

    def test_monotone_rate_nesting(self):
        specs = [construct_awgn(6, k, 1.0) for k in range(1, 33)]
        for a, b in zip(specs, specs[1:]):
            assert set(a.info_set) < set(b.info_set)

    def test_interleaver_set_is_top_half(self):
        spec = construct_awgn(6, 10, 1.0)
        assert len(spec.interleaver_set) == 32
        assert set(spec.info_set) <= set(spec.interleaver_set)
        assert spec.interleaver_set == construct_awgn(6, 32, 1.0).interleaver_set


class TestConstructDiversity:
    def test_n8_k4_constraint_already_met(self):
        spec = construct_diversity(3, 4, 2.0)
        assert spec.info_set == (4, 6, 7, 8)
        assert spec.interleaver_set == (4, 6, 7, 8)
        assert set(9 - i for i in spec.info_set) == {5, 3, 2, 1}

    def test_n8_k2_top_of_half(self):
        assert construct_diversity(3, 2, 2.0).info_set == (7, 8)

    def test_pairing_constraint_always(self):
        for n_log2, k, snr in ((3, 4, 2.0), (5, 10, 0.0), (8, 128, 1.0), (10, 512, 0.5)):
            spec = construct_diversity(n_log2, k, snr)
            n = spec.block_len
            half = set(spec.interleaver_set)
            assert len(half) == n // 2
            assert all((n + 1 - i) not in half for i in half)
            assert set(spec.info_set) <= half

    def test_rate_above_half_rejected(self):
        with pytest.raises(ValueError):
            construct_diversity(3, 5, 2.0)

    def test_mirror_complement_at_half_rate(self):
        for n_log2 in range(3, 11):
            n = 1 << n_log2
            spec = construct_diversity(n_log2, n // 2, 1.0)
            comp = set(range(1, n + 1)) - set(spec.info_set)
            assert comp == {n + 1 - a for a in spec.info_set}

    def test_bit_reversal_mirror_symmetry(self):
        # images under bit reversal keep the mirror structure of the two halves
        for n_log2 in range(3, 11):
            n = 1 << n_log2
            spec = construct_diversity(n_log2, n // 2, 1.0)
            comp = sorted(set(range(1, n + 1)) - set(spec.info_set))
            img_a = {1 + bit_reverse(a - 1, n_log2) for a in spec.info_set}
            img_c = {1 + bit_reverse(c - 1, n_log2) for c in comp}
            assert img_a == {n + 1 - b for b in img_c}

    def test_nesting_against_unconstrained_top_half(self):
        for n_log2 in (4, 6, 8):
            n = 1 << n_log2
            top = set(construct_awgn(n_log2, n // 2, 1.0).info_set)
            half = set(construct_diversity(n_log2, n // 2, 1.0).info_set)
            for i in range(1, n // 2 + 1):
                pair = {i, n + 1 - i}
                if len(top & pair) == 1:
                    assert top & pair == half & pair

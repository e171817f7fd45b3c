import numpy as np
import pytest

from polarfade import (
    PolarCodeSpec,
    apply_assignment,
    diversity_ilv,
    erasure_sc_check,
    horizontal,
    invert_assignment,
    random_ilv,
    uniform,
)
from polarfade.construction import construct_awgn, construct_diversity
from polarfade.mapping import Xoshiro256StarStar


class TestFixedMappings:
    def test_horizontal(self):
        assert horizontal(4).block_of.tolist() == [1, 1, 2, 2]
        assert horizontal(2).block_of.tolist() == [1, 2]

    def test_uniform(self):
        assert uniform(4).block_of.tolist() == [2, 1, 2, 1]
        assert uniform(2).block_of.tolist() == [2, 1]
        b = uniform(64).block_of
        assert np.array_equal(b[::2], np.full(32, 2)) and np.array_equal(b[1::2], np.ones(32))

    def test_balanced(self):
        for n in (2, 8, 256):
            for a in (horizontal(n), uniform(n), random_ilv(n, 1)):
                assert (a.block_of == 1).sum() == n // 2
                assert (a.block_of == 2).sum() == n // 2

    def test_odd_length_rejected(self):
        with pytest.raises(ValueError):
            horizontal(6 + 1)


class TestRandomMapping:
    def test_deterministic_given_seed(self):
        assert np.array_equal(random_ilv(256, 42).block_of, random_ilv(256, 42).block_of)

    def test_different_seeds_differ(self):
        for seed in range(10):
            a = random_ilv(256, seed).block_of
            b = random_ilv(256, seed + 1000).block_of
            assert not np.array_equal(a, b)

    def test_splitmix_reference_vector(self):
        # published SplitMix64 test value for seed 0
        from polarfade.mapping import _splitmix64

        assert next(_splitmix64(0)) == 0xE220A8397B1DCDAF

    def test_xoshiro_stream_frozen(self):
        # regression pin for the SplitMix64-seeded xoshiro256** stream
        rng = Xoshiro256StarStar(0)
        got = [rng.next_u64() for _ in range(4)]
        assert got == [
            11091344671253066420,
            13793997310169335082,
            1900383378846508768,
            7684712102626143532,
        ]

    def test_assignment_frozen_for_seed_zero(self):
        # cross-run stability of the full Fisher-Yates pipeline
        assert random_ilv(8, 0).block_of.tolist() == [1, 1, 2, 1, 1, 2, 2, 2]


class TestDiversityMapping:
    def test_n8_positions(self):
        spec = construct_diversity(3, 4, 2.0)
        a = diversity_ilv(spec)
        assert a.block_positions(1).tolist() == [4, 6, 7, 8]
        assert a.block_positions(2).tolist() == [1, 2, 3, 5]

    def test_n4_positions(self):
        spec = PolarCodeSpec(n_log2=2, info_set=(3, 4), interleaver_set=(3, 4))
        a = diversity_ilv(spec)
        assert a.block_positions(1).tolist() == [3, 4]

    def test_blocks_mirror_for_diversity_codes(self):
        for n_log2 in range(3, 11):
            n = 1 << n_log2
            a = diversity_ilv(construct_diversity(n_log2, n // 2, 1.0))
            b1 = set(a.block_positions(1).tolist())
            b2 = set(a.block_positions(2).tolist())
            assert b1 == {n + 1 - p for p in b2}

    def test_requires_interleaver_set(self):
        with pytest.raises(ValueError):
            diversity_ilv(PolarCodeSpec(n_log2=3, info_set=(4, 6, 7, 8)))


class TestApplyInvert:
    def test_round_trip(self):
        rng = np.random.default_rng(0)
        for n in (4, 256):
            for a in (horizontal(n), uniform(n), random_ilv(n, 3)):
                v = rng.standard_normal(n)
                b1, b2 = apply_assignment(a, v)
                assert np.array_equal(invert_assignment(a, b1, b2), v)

    def test_horizontal_is_halves(self):
        v = np.arange(8.0)
        b1, b2 = apply_assignment(horizontal(8), v)
        assert np.array_equal(b1, v[:4]) and np.array_equal(b2, v[4:])

    def test_uniform_n4(self):
        b1, b2 = apply_assignment(uniform(4), np.array([10.0, 20.0, 30.0, 40.0]))
        assert b1.tolist() == [20.0, 40.0]
        assert b2.tolist() == [10.0, 30.0]

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            apply_assignment(uniform(4), np.zeros(6))
        with pytest.raises(ValueError):
            invert_assignment(uniform(4), np.zeros(3), np.zeros(2))


class TestSelfDecodability:
    def test_awgn_code_block1_always_passes(self):
        # knowing the coded positions of the info set recovers it (systematic
        # encoding argument), so block 1 of the mapping passes at every size
        for n_log2 in range(3, 11):
            n = 1 << n_log2
            spec = construct_awgn(n_log2, n // 2, 1.0)
            a = diversity_ilv(spec)
            assert erasure_sc_check(spec, a.block_positions(1)).self_decodable

    def test_diversity_code_both_blocks(self):
        # conjectured, not proved; recorded here as observed behavior per size
        results = {}
        for n_log2 in range(3, 11):
            n = 1 << n_log2
            spec = construct_diversity(n_log2, n // 2, 1.0)
            a = diversity_ilv(spec)
            results[n] = (
                erasure_sc_check(spec, a.block_positions(1)).self_decodable,
                erasure_sc_check(spec, a.block_positions(2)).self_decodable,
            )
        assert all(r == (True, True) for r in results.values()), results

    def test_low_rate_uses_top_half_mapping(self):
        spec = construct_awgn(6, 10, 1.0)
        a = diversity_ilv(spec)
        assert erasure_sc_check(spec, a.block_positions(1)).self_decodable

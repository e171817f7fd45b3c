"""Block mappings: partition the N coded bits into two equal fading blocks.

``block_of[j]`` says which block (1 or 2) carries coded bit j+1, in natural
codeword order.  Within a block, natural order is preserved by apply/invert
(block error rate over per-bit memoryless channels does not depend on
within-block order, so the simplest deterministic choice is used).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .polar import PolarCodeSpec

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int):
    state &= _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield (z ^ (z >> 31)) & _MASK64


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Xoshiro256StarStar:
    """xoshiro256** seeded via SplitMix64 (both public-domain algorithms).

    Hand-rolled so random block assignments are bit-identical across
    implementations in any language, given the same integer seed.
    """

    def __init__(self, seed: int):
        sm = _splitmix64(int(seed))
        self._s = [next(sm) for _ in range(4)]

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result


@dataclass(frozen=True)
class BlockAssignment:
    """Which of the two fading blocks carries each coded bit."""

    name: str  # horizontal | uniform | random | diversity
    block_of: np.ndarray  # length N over {1, 2}
    seed: int | None = None  # random only

    def __post_init__(self):
        b = np.asarray(self.block_of, dtype=np.int64)
        n = b.size
        if n % 2 or n < 2:
            raise ValueError(f"assignment length must be even >= 2, got {n}")
        counts = np.bincount(b, minlength=3)
        if counts[1] != n // 2 or counts[2] != n // 2:
            raise ValueError("assignment must put exactly N/2 bits in each block")
        b.setflags(write=False)
        object.__setattr__(self, "block_of", b)

    @property
    def n(self) -> int:
        return self.block_of.size

    def block_positions(self, block: int) -> np.ndarray:
        """1-based coded positions carried by the given block, ascending."""
        if block not in (1, 2):
            raise ValueError(f"block must be 1 or 2, got {block}")
        return np.flatnonzero(self.block_of == block) + 1

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "block_of": self.block_of.tolist(),
        }


def horizontal(n: int) -> BlockAssignment:
    """First N/2 coded bits on block 1, rest on block 2 (no interleaving)."""
    _check_even(n)
    b = np.ones(n, dtype=np.int64)
    b[n // 2 :] = 2
    return BlockAssignment("horizontal", b)


def uniform(n: int) -> BlockAssignment:
    """Even 1-based coded positions on block 1, odd on block 2."""
    _check_even(n)
    b = np.full(n, 2, dtype=np.int64)
    b[1::2] = 1  # 0-based odd = 1-based even
    return BlockAssignment("uniform", b)


def random_ilv(n: int, seed: int = 0) -> BlockAssignment:
    """Uniformly random balanced partition, deterministic given the seed.

    Fisher-Yates over the multiset {1}*N/2 + {2}*N/2 with xoshiro256**;
    the bounded draw is next_u64() mod (i+1) for i = N-1 .. 1.
    """
    _check_even(n)
    b = np.ones(n, dtype=np.int64)
    b[n // 2 :] = 2
    rng = Xoshiro256StarStar(seed)
    for i in range(n - 1, 0, -1):
        j = rng.next_u64() % (i + 1)
        b[i], b[j] = b[j], b[i]
    return BlockAssignment("random", b, seed=int(seed))


def diversity_ilv(spec: PolarCodeSpec) -> BlockAssignment:
    """Send the spec's interleaver-set coded positions over block 1, the rest
    over block 2.

    Positions are natural-order coded positions (the encoder is natural-order,
    so the self-decodable set of a code with info set A is the coded position
    set A itself; its complement mirrors it for diversity codes).
    """
    if spec.interleaver_set is None:
        raise ValueError("spec carries no interleaver_set")
    n = spec.block_len
    b = np.full(n, 2, dtype=np.int64)
    b[np.asarray(spec.interleaver_set) - 1] = 1
    return BlockAssignment("diversity", b)


def apply_assignment(assignment: BlockAssignment, values) -> tuple[np.ndarray, np.ndarray]:
    """Split a natural-order length-N vector into (block1, block2) halves."""
    v = np.asarray(values)
    if v.shape[-1] != assignment.n:
        raise ValueError(f"length {v.shape[-1]} != assignment length {assignment.n}")
    m1 = assignment.block_of == 1
    return v[..., m1], v[..., ~m1]


def invert_assignment(assignment: BlockAssignment, block1, block2) -> np.ndarray:
    """Scatter per-block halves back into natural codeword order."""
    b1 = np.asarray(block1)
    b2 = np.asarray(block2)
    h = assignment.n // 2
    if b1.shape[-1] != h or b2.shape[-1] != h:
        raise ValueError(f"each block must have length {h}")
    m1 = assignment.block_of == 1
    out = np.empty(b1.shape[:-1] + (assignment.n,), dtype=np.result_type(b1, b2))
    out[..., m1] = b1
    out[..., ~m1] = b2
    return out


def _check_even(n: int) -> None:
    if n < 2 or n % 2:
        raise ValueError(f"N must be even >= 2, got {n}")

"""Polar transform, LLR-domain successive cancellation decoding, and erasure analysis.

Conventions used throughout the package:

* The encoder is natural-order: ``x = u F^{(x)n}`` over GF(2) with
  ``F = [[1,0],[1,1]]``.  No bit-reversal is applied anywhere in the
  encode/decode path; block mappings work directly on natural coded
  positions (see :mod:`polarfade.mapping`).
* Sets of u-indices and coded positions in the public API are 1-based;
  internal arrays are 0-based.  ``bit_reverse`` is exposed 0-based.
* LLR sign convention: positive means bit 0 is more likely.  Decision
  ties go to 0.  ``+inf``/``-inf`` are legal LLR values; an erasure is
  exactly 0.0, and the saturating sum ``inf + (-inf)`` is defined as 0
  (two perfectly confident, contradictory observations cancel).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np


def bit_reverse(index: int, n_log2: int) -> int:
    """Reverse the ``n_log2``-bit binary representation of ``index`` (0-based).

    Involutive: ``bit_reverse(bit_reverse(i, n), n) == i``.
    """
    if n_log2 < 1:
        raise ValueError(f"n_log2 must be >= 1, got {n_log2}")
    if not 0 <= index < (1 << n_log2):
        raise ValueError(f"index {index} out of range for {n_log2} bits")
    out = 0
    for _ in range(n_log2):
        out = (out << 1) | (index & 1)
        index >>= 1
    return out


@dataclass(frozen=True)
class PolarCodeSpec:
    """A polar code: block length, info set, and construction metadata.

    Parameters
    ----------
    n_log2 : int
        log2 of the block length N.
    info_set : tuple of int
        1-based u-indices carrying data, ascending.  Size K.
    design_snr_db : float
        Es/N0 (dB) the reliability profile was computed at.
    diversity : bool
        True if the info set was built under the paired-index constraint
        (at most one of i and N+1-i is an info bit).
    interleaver_set : tuple of int or None
        1-based size-N/2 set defining block 1 of the diversity mapping.
        Equals the info set at rate 1/2; a superset of it below rate 1/2.
    frozen_values : tuple of int or None
        Values of the frozen bits, aligned with ``frozen_set``.  None
        means all-zero (the default everywhere in this package).
    """

    n_log2: int
    info_set: tuple[int, ...]
    design_snr_db: float = 0.0
    diversity: bool = False
    interleaver_set: tuple[int, ...] | None = None
    frozen_values: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n_log2 < 1:
            raise ValueError(f"n_log2 must be >= 1, got {self.n_log2}")
        n = self.block_len
        a = tuple(self.info_set)
        if not a or len(set(a)) != len(a) or list(a) != sorted(a):
            raise ValueError("info_set must be non-empty, unique and ascending")
        if a[0] < 1 or a[-1] > n:
            raise ValueError(f"info_set indices must lie in [1, {n}]")
        object.__setattr__(self, "info_set", a)
        if self.interleaver_set is not None:
            s = tuple(sorted(self.interleaver_set))
            if len(s) != n // 2 or len(set(s)) != len(s):
                raise ValueError(f"interleaver_set must hold N/2 = {n // 2} distinct indices")
            if s[0] < 1 or s[-1] > n:
                raise ValueError(f"interleaver_set indices must lie in [1, {n}]")
            object.__setattr__(self, "interleaver_set", s)
        if self.frozen_values is not None:
            fv = tuple(int(v) for v in self.frozen_values)
            if len(fv) != n - len(a) or any(v not in (0, 1) for v in fv):
                raise ValueError("frozen_values must be bits, one per frozen index")
            object.__setattr__(self, "frozen_values", fv)
        if self.diversity and len(a) == n // 2:
            info = set(a)
            for i in a:
                if (n + 1 - i) in info:
                    raise ValueError(
                        f"diversity info set violates the paired-index constraint at {i}"
                    )

    @property
    def block_len(self) -> int:
        return 1 << self.n_log2

    @property
    def k(self) -> int:
        return len(self.info_set)

    @property
    def frozen_set(self) -> tuple[int, ...]:
        info = set(self.info_set)
        return tuple(i for i in range(1, self.block_len + 1) if i not in info)

    def info_mask(self) -> np.ndarray:
        """Bool array, length N, True at info positions (0-based natural u order)."""
        mask = np.zeros(self.block_len, dtype=bool)
        mask[np.asarray(self.info_set) - 1] = True
        return mask

    def frozen_value_vector(self) -> np.ndarray:
        """uint8 array, length N, frozen values in place and 0 at info positions."""
        vec = np.zeros(self.block_len, dtype=np.uint8)
        if self.frozen_values is not None:
            vec[np.asarray(self.frozen_set) - 1] = self.frozen_values
        return vec

    def to_json_dict(self) -> dict:
        d = {
            "n": self.block_len,
            "info_set": list(self.info_set),
            "design_snr_db": float(self.design_snr_db),
            "diversity": bool(self.diversity),
        }
        if self.interleaver_set is not None:
            d["interleaver_set"] = list(self.interleaver_set)
        return d

    @classmethod
    def from_json_dict(cls, d: dict) -> "PolarCodeSpec":
        n = int(d["n"])
        if n < 2 or n & (n - 1):
            raise ValueError(f"n must be a power of two >= 2, got {n}")
        ilv = d.get("interleaver_set")
        return cls(
            n_log2=n.bit_length() - 1,
            info_set=tuple(int(i) for i in d["info_set"]),
            design_snr_db=float(d["design_snr_db"]),
            diversity=bool(d["diversity"]),
            interleaver_set=None if ilv is None else tuple(int(i) for i in ilv),
        )


def save_spec(spec: PolarCodeSpec, path) -> None:
    with open(path, "w") as f:
        json.dump(spec.to_json_dict(), f, indent=2)
        f.write("\n")


def load_spec(path) -> PolarCodeSpec:
    with open(path) as f:
        return PolarCodeSpec.from_json_dict(json.load(f))


def polar_transform(bits) -> np.ndarray:
    """Apply the GF(2) butterfly ``v -> v F^{(x)n}`` along the last axis.

    Self-inverse.  Accepts a single vector or a batch (..., N).
    """
    x = np.array(bits, dtype=np.uint8, copy=True)
    n_len = x.shape[-1]
    if n_len < 2 or n_len & (n_len - 1):
        raise ValueError(f"length must be a power of two >= 2, got {n_len}")
    step = 2
    while step <= n_len:
        v = x.reshape(x.shape[:-1] + (n_len // step, step))
        v[..., : step // 2] ^= v[..., step // 2 :]
        step *= 2
    return x


def polar_encode(spec: PolarCodeSpec, message) -> np.ndarray:
    """Encode K message bits into an N-bit codeword (natural order)."""
    message = np.asarray(message, dtype=np.uint8)
    if message.shape[-1] != spec.k:
        raise ValueError(f"message length {message.shape[-1]} != K = {spec.k}")
    u = np.broadcast_to(
        spec.frozen_value_vector(), message.shape[:-1] + (spec.block_len,)
    ).copy()
    u[..., np.asarray(spec.info_set) - 1] = message
    return polar_transform(u)


def _f_op(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # check-node (min-sum, exact on erasures/infinities): sign(a)sign(b)min(|a|,|b|)
    return np.sign(a) * np.sign(b) * np.minimum(np.abs(a), np.abs(b))


def _g_op(a: np.ndarray, b: np.ndarray, u_hat: np.ndarray) -> np.ndarray:
    # variable-node: b + (1-2u)a, with inf + (-inf) := 0 (conflicting certainties erase)
    with np.errstate(invalid="ignore"):
        r = b + (1.0 - 2.0 * u_hat) * a
    return np.where(np.isnan(r), 0.0, r)


def _sc_recurse(llr, frozen_mask, frozen_vals, u_out, leaf_out, off) -> np.ndarray:
    """Recursive SC core over a batch.  Returns the subtree's partial-sum codeword."""
    n_local = llr.shape[1]
    if n_local == 1:
        if leaf_out is not None:
            leaf_out[:, off] = llr[:, 0]
        if frozen_mask[0]:
            u = np.full(llr.shape[0], frozen_vals[0], dtype=np.uint8)
        else:
            u = (llr[:, 0] < 0).astype(np.uint8)
        u_out[:, off] = u
        return u[:, None]
    h = n_local // 2
    a, b = llr[:, :h], llr[:, h:]
    c1 = _sc_recurse(_f_op(a, b), frozen_mask[:h], frozen_vals[:h], u_out, leaf_out, off)
    g = _g_op(a, b, c1.astype(np.float64))
    c2 = _sc_recurse(g, frozen_mask[h:], frozen_vals[h:], u_out, leaf_out, off + h)
    return np.concatenate([c1 ^ c2, c2], axis=1)


def sc_decode_batch(spec: PolarCodeSpec, channel_llrs: np.ndarray) -> np.ndarray:
    """SC-decode a batch of LLR vectors, shape (B, N) -> decided info bits (B, K).

    LLRs are in natural codeword order (any block interleaving already
    undone by the caller).
    """
    llr = np.asarray(channel_llrs, dtype=np.float64)
    if llr.ndim != 2 or llr.shape[1] != spec.block_len:
        raise ValueError(f"expected shape (B, {spec.block_len}), got {llr.shape}")
    if np.isnan(llr).any():
        raise ValueError("LLR vector contains NaN")
    frozen_mask = ~spec.info_mask()
    frozen_vals = spec.frozen_value_vector()
    u_out = np.empty((llr.shape[0], spec.block_len), dtype=np.uint8)
    _sc_recurse(llr, frozen_mask, frozen_vals, u_out, None, 0)
    return u_out[:, np.asarray(spec.info_set) - 1]


def sc_decode(spec: PolarCodeSpec, channel_llrs) -> np.ndarray:
    """SC-decode one length-N LLR vector to the K info bits (info-set order)."""
    llr = np.asarray(channel_llrs, dtype=np.float64)
    if llr.ndim != 1:
        raise ValueError("sc_decode expects a single LLR vector; see sc_decode_batch")
    return sc_decode_batch(spec, llr[None, :])[0]


class ErasureCheckResult(NamedTuple):
    self_decodable: bool
    first_stuck_info_index: int | None  # 1-based u-index, None if none stuck


def erasure_sc_check(spec: PolarCodeSpec, known_codebits: Sequence[int]) -> ErasureCheckResult:
    """Deterministic erasure propagation: can SC recover all info bits when only
    ``known_codebits`` (1-based coded positions) survive?

    Channel LLRs are +inf at known positions and 0 (erased) elsewhere; the
    all-zero codeword is used, which is representative for every codeword by
    linearity.  The property is structural: it depends only on the erasure
    pattern, the info set, and the transform.
    """
    n = spec.block_len
    known = np.asarray(sorted(set(int(i) for i in known_codebits)), dtype=np.int64)
    if known.size and (known[0] < 1 or known[-1] > n):
        raise ValueError(f"known positions must lie in [1, {n}]")
    llr = np.zeros((1, n))
    if known.size:
        llr[0, known - 1] = np.inf
    frozen_mask = ~spec.info_mask()
    # all-zero analysis: frozen values pinned to 0 regardless of spec.frozen_values
    u_out = np.empty((1, n), dtype=np.uint8)
    leaf = np.empty((1, n))
    _sc_recurse(llr, frozen_mask, np.zeros(n, dtype=np.uint8), u_out, leaf, 0)
    info_leaf = leaf[0, np.asarray(spec.info_set) - 1]
    stuck = np.flatnonzero(info_leaf == 0.0)
    if stuck.size:
        return ErasureCheckResult(False, int(spec.info_set[stuck[0]]))
    return ErasureCheckResult(True, None)

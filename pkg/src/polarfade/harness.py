"""Monte Carlo BLER sweeps over (code x interleaver x channel) configurations.

Reproducibility contract: every trial owns an RNG derived only from
(master_seed, snr_index, trial_index), trials are consumed in index order
with early stopping applied to the cumulative error count, and chunks are
merged in order.  The result is therefore a pure function of the config,
independent of chunking and of how many workers execute the chunks.

Per-trial draw order (fixed): message bits, then the channel realization
(block_rayleigh consumes two exponentials; awgn consumes nothing), then one
unit normal per coded bit, the first N/2 landing on block-1 positions in
ascending natural order.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import channel as chan
from . import construction, mapping
from .polar import PolarCodeSpec, polar_encode, sc_decode, sc_decode_batch

ARTIFACT_VERSION = "0.1.0"

CODE_TYPES = ("awgn", "diversity")
INTERLEAVERS = ("horizontal", "uniform", "random", "diversity")

CSV_COLUMNS = (
    "code",
    "interleaver",
    "channel",
    "n",
    "k",
    "design_snr_db",
    "interleaver_seed",
    "master_seed",
    "snr_db",
    "trials",
    "block_errors",
    "bler",
)

_CHUNK_TRIALS = 1024  # constant so chunking never leaks into results


@dataclass(frozen=True)
class ExperimentConfig:
    code_type: str
    n_log2: int
    k: int
    design_snr_db: float
    interleaver: str
    channel: str
    snr_grid_db: tuple[float, ...]
    max_trials: int
    target_block_errors: int
    master_seed: int = 0
    interleaver_seed: int = 0

    def __post_init__(self):
        if self.code_type not in CODE_TYPES:
            raise ValueError(f"code_type must be one of {CODE_TYPES}")
        if self.interleaver not in INTERLEAVERS:
            raise ValueError(f"interleaver must be one of {INTERLEAVERS}")
        if self.channel not in chan.CHANNEL_MODELS:
            raise ValueError(f"channel must be one of {chan.CHANNEL_MODELS}")
        grid = tuple(float(s) for s in self.snr_grid_db)
        if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
            raise ValueError("snr_grid_db must be non-empty and strictly increasing")
        object.__setattr__(self, "snr_grid_db", grid)
        if not self.max_trials >= self.target_block_errors >= 1:
            raise ValueError("need max_trials >= target_block_errors >= 1")


@dataclass(frozen=True)
class SweepPoint:
    snr_db: float
    trials: int
    block_errors: int

    @property
    def bler(self) -> float:
        return self.block_errors / self.trials


@dataclass(frozen=True)
class SweepResult:
    config: ExperimentConfig
    points: tuple[SweepPoint, ...]
    version: str = ARTIFACT_VERSION

    def snr_bler_pairs(self) -> list[tuple[float, float]]:
        return [(p.snr_db, p.bler) for p in self.points]


def build_spec(config: ExperimentConfig) -> PolarCodeSpec:
    if config.code_type == "diversity":
        return construction.construct_diversity(config.n_log2, config.k, config.design_snr_db)
    return construction.construct_awgn(config.n_log2, config.k, config.design_snr_db)


def build_assignment(config: ExperimentConfig, spec: PolarCodeSpec) -> mapping.BlockAssignment:
    n = spec.block_len
    if config.interleaver == "horizontal":
        return mapping.horizontal(n)
    if config.interleaver == "uniform":
        return mapping.uniform(n)
    if config.interleaver == "random":
        return mapping.random_ilv(n, config.interleaver_seed)
    return mapping.diversity_ilv(spec)


def trial_rng(master_seed: int, snr_index: int, trial_index: int) -> np.random.Generator:
    """The per-trial RNG: a pure function of (master_seed, snr_index, trial_index)."""
    ss = np.random.SeedSequence([int(master_seed), int(snr_index), int(trial_index)])
    return np.random.Generator(np.random.PCG64(ss))


def run_trial(
    config: ExperimentConfig,
    spec: PolarCodeSpec,
    assignment: mapping.BlockAssignment,
    snr_db: float,
    rng: np.random.Generator,
) -> bool:
    """One end-to-end trial; True iff the decoded message differs from the sent one."""
    message = rng.integers(0, 2, spec.k, dtype=np.uint8)
    x = polar_encode(spec, message)
    s1, s2 = mapping.apply_assignment(assignment, chan.modulate(x))
    realization = chan.draw_realization(config.channel, snr_db, rng)
    llr1, llr2 = chan.transmit_demod((s1, s2), realization, rng)
    llr = mapping.invert_assignment(assignment, llr1, llr2)
    decoded = sc_decode(spec, llr)
    return not np.array_equal(decoded, message)


def _trial_flags(
    spec: PolarCodeSpec,
    assignment: mapping.BlockAssignment,
    channel_model: str,
    snr_db: float,
    master_seed: int,
    snr_index: int,
    t_start: int,
    t_stop: int,
) -> np.ndarray:
    """Error flags for trials [t_start, t_stop), bit-identical to run_trial.

    The per-trial randomness is drawn trial by trial (same stream layout as
    run_trial); the encode/channel/decode math then runs batched.
    """
    n = spec.block_len
    batch = t_stop - t_start
    msgs = np.empty((batch, spec.k), dtype=np.uint8)
    amps = np.ones((batch, 2))
    noise = np.empty((batch, n))
    rayleigh = channel_model == "block_rayleigh"
    for row, t in enumerate(range(t_start, t_stop)):
        rng = trial_rng(master_seed, snr_index, t)
        msgs[row] = rng.integers(0, 2, spec.k, dtype=np.uint8)
        if rayleigh:
            amps[row] = np.sqrt(rng.standard_exponential(2))
        noise[row] = rng.standard_normal(n)
    s = chan.modulate(polar_encode(spec, msgs))
    # noise was drawn block 1 first: scatter the first N/2 draws onto block-1 positions
    perm = np.concatenate(
        [assignment.block_positions(1) - 1, assignment.block_positions(2) - 1]
    )
    noise_nat = np.empty_like(noise)
    noise_nat[:, perm] = noise
    amp_full = amps[:, assignment.block_of - 1]
    sigma = chan.noise_sigma_for(snr_db)
    y = amp_full * s + sigma * noise_nat
    llr = 2.0 * amp_full * y / (sigma * sigma)
    decoded = sc_decode_batch(spec, llr)
    return (decoded != msgs).any(axis=1)


def _pool_context():
    methods = multiprocessing.get_all_start_methods()
    return multiprocessing.get_context("fork" if "fork" in methods else "spawn")


def _run_point(spec, assignment, config, snr_db, snr_index, pool, width) -> SweepPoint:
    """Run one SNR point to target_block_errors or max_trials, in order."""
    target = config.target_block_errors
    max_trials = config.max_trials
    errors = 0
    trials = 0
    next_start = 0
    inflight: deque = deque()

    def submit() -> bool:
        nonlocal next_start
        if next_start >= max_trials:
            return False
        stop = min(next_start + _CHUNK_TRIALS, max_trials)
        args = (spec, assignment, config.channel, snr_db,
                config.master_seed, snr_index, next_start, stop)
        if pool is None:
            inflight.append(args)
        else:
            inflight.append(pool.submit(_trial_flags, *args))
        next_start = stop
        return True

    while len(inflight) < width and submit():
        pass
    while inflight:
        head = inflight.popleft()
        flags = _trial_flags(*head) if pool is None else head.result()
        cum = np.cumsum(flags)
        hit = np.flatnonzero(cum >= target - errors)
        if hit.size:
            stop_at = int(hit[0])
            errors += int(cum[stop_at])
            trials += stop_at + 1
            break
        if flags.size:
            errors += int(cum[-1])
        trials += flags.size
        submit()
    for fut in inflight:
        if pool is not None:
            fut.cancel()
    return SweepPoint(float(snr_db), trials, errors)


def run_sweep(config: ExperimentConfig, workers: int = 1) -> SweepResult:
    """Estimate BLER at every grid SNR; deterministic for any worker count."""
    workers = max(1, int(workers))
    spec = build_spec(config)
    assignment = build_assignment(config, spec)
    points = []
    if workers == 1:
        for si, snr_db in enumerate(config.snr_grid_db):
            points.append(_run_point(spec, assignment, config, snr_db, si, None, 1))
    else:
        with ProcessPoolExecutor(workers, mp_context=_pool_context()) as pool:
            for si, snr_db in enumerate(config.snr_grid_db):
                points.append(
                    _run_point(spec, assignment, config, snr_db, si, pool, workers)
                )
    return SweepResult(config=config, points=tuple(points))


class BlerNotBracketedError(ValueError):
    """The requested BLER level is not bracketed by the curve's points."""


def estimate_snr_at_bler(result, bler_target: float) -> float:
    """SNR (dB) where the curve crosses bler_target, by log-linear interpolation
    on the first bracketing segment.  Zero-BLER points cannot be interpolated
    through and are skipped.
    """
    if not 0.0 < bler_target < 1.0:
        raise ValueError("bler_target must be in (0, 1)")
    pairs = result.snr_bler_pairs() if hasattr(result, "snr_bler_pairs") else list(result)
    for (s0, b0), (s1, b1) in zip(pairs, pairs[1:]):
        if b0 == bler_target:
            return float(s0)
        if b0 >= bler_target >= b1 > 0.0:
            t = (math.log10(bler_target) - math.log10(b0)) / (math.log10(b1) - math.log10(b0))
            return float(s0 + t * (s1 - s0))
    if pairs and pairs[-1][1] == bler_target:
        return float(pairs[-1][0])
    raise BlerNotBracketedError(f"bler {bler_target} not bracketed by curve")


@dataclass(frozen=True)
class OutageResult:
    """Outage reference curve in the same row shape as code sweeps."""

    channel: str
    rate: float
    snr_grid_db: tuple[float, ...]
    trials: int
    counts: tuple[int, ...]
    master_seed: int = 0
    version: str = ARTIFACT_VERSION

    def snr_bler_pairs(self) -> list[tuple[float, float]]:
        return [(s, c / self.trials) for s, c in zip(self.snr_grid_db, self.counts)]


def run_outage(
    channel_model: str, rate: float, snr_grid_db, trials: int, master_seed: int = 0
) -> OutageResult:
    grid = tuple(float(s) for s in snr_grid_db)
    if not grid or any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("snr_grid_db must be non-empty and strictly increasing")
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([int(master_seed)])))
    counts = chan.outage_event_counts(channel_model, grid, rate, trials, rng)
    return OutageResult(channel_model, float(rate), grid, int(trials),
                        tuple(int(c) for c in counts), int(master_seed))


# ---------------------------------------------------------------------------
# result serialization


def _fmt(value) -> str:
    return str(value)


def result_csv_rows(result) -> list[dict]:
    """Rows (column -> string) for a SweepResult or OutageResult."""
    rows = []
    if isinstance(result, SweepResult):
        cfg = result.config
        for p in result.points:
            rows.append({
                "code": cfg.code_type,
                "interleaver": cfg.interleaver,
                "channel": cfg.channel,
                "n": _fmt(1 << cfg.n_log2),
                "k": _fmt(cfg.k),
                "design_snr_db": _fmt(float(cfg.design_snr_db)),
                "interleaver_seed": _fmt(cfg.interleaver_seed),
                "master_seed": _fmt(cfg.master_seed),
                "snr_db": _fmt(p.snr_db),
                "trials": _fmt(p.trials),
                "block_errors": _fmt(p.block_errors),
                "bler": _fmt(p.bler),
            })
    elif isinstance(result, OutageResult):
        for snr_db, count in zip(result.snr_grid_db, result.counts):
            rows.append({
                "code": "outage",
                "interleaver": "-",
                "channel": result.channel,
                "n": "0",
                "k": "0",
                "design_snr_db": "0.0",
                "interleaver_seed": "0",
                "master_seed": _fmt(result.master_seed),
                "snr_db": _fmt(snr_db),
                "trials": _fmt(result.trials),
                "block_errors": _fmt(count),
                "bler": _fmt(count / result.trials),
            })
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return rows


def format_csv(result) -> str:
    lines = [",".join(CSV_COLUMNS)]
    for row in result_csv_rows(result):
        lines.append(",".join(row[c] for c in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def config_echo_json(result) -> str:
    if isinstance(result, SweepResult):
        cfg = result.config
        echo = {
            "kind": "sweep",
            "version": result.version,
            "config": {
                "code_type": cfg.code_type,
                "n": 1 << cfg.n_log2,
                "k": cfg.k,
                "design_snr_db": cfg.design_snr_db,
                "interleaver": cfg.interleaver,
                "interleaver_seed": cfg.interleaver_seed,
                "channel": cfg.channel,
                "snr_grid_db": list(cfg.snr_grid_db),
                "max_trials": cfg.max_trials,
                "target_block_errors": cfg.target_block_errors,
                "master_seed": cfg.master_seed,
            },
        }
    elif isinstance(result, OutageResult):
        echo = {
            "kind": "outage",
            "version": result.version,
            "config": {
                "channel": result.channel,
                "rate": result.rate,
                "snr_grid_db": list(result.snr_grid_db),
                "trials": result.trials,
                "master_seed": result.master_seed,
            },
        }
    else:
        raise TypeError(f"cannot serialize {type(result).__name__}")
    return json.dumps(echo, indent=2) + "\n"


def atomic_write_text(path, text: str) -> None:
    """Write via a temp file + rename so failures never leave partial output."""
    path = os.fspath(path)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as f:
        f.write(text)
    os.replace(tmp, path)


def write_result(result, csv_path, json_path=None) -> None:
    atomic_write_text(csv_path, format_csv(result))
    if json_path is None:
        root, _ = os.path.splitext(os.fspath(csv_path))
        json_path = root + ".json"
    atomic_write_text(json_path, config_echo_json(result))

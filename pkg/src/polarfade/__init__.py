"""Polar codes with diversity interleaving for 2-block slow fading channels."""

from .channel import (
    ChannelRealization,
    bpsk_capacity,
    draw_realization,
    modulate,
    noise_sigma_for,
    outage_curve,
    outage_probability,
    transmit_demod,
)
from .construction import (
    ReliabilityProfile,
    construct_awgn,
    construct_diversity,
    ga_density_evolution,
)
from .defaults import DESIGN_SNR_DB, default_design_snr_db
from .harness import (
    ARTIFACT_VERSION,
    BlerNotBracketedError,
    ExperimentConfig,
    OutageResult,
    SweepPoint,
    SweepResult,
    estimate_snr_at_bler,
    run_outage,
    run_sweep,
    run_trial,
    trial_rng,
    write_result,
)
from .mapping import (
    BlockAssignment,
    apply_assignment,
    diversity_ilv,
    horizontal,
    invert_assignment,
    random_ilv,
    uniform,
)
from .polar import (
    ErasureCheckResult,
    PolarCodeSpec,
    bit_reverse,
    erasure_sc_check,
    load_spec,
    polar_encode,
    polar_transform,
    save_spec,
    sc_decode,
    sc_decode_batch,
)

__version__ = ARTIFACT_VERSION

__all__ = [
    "ARTIFACT_VERSION",
    "BlerNotBracketedError",
    "BlockAssignment",
    "ChannelRealization",
    "DESIGN_SNR_DB",
    "ErasureCheckResult",
    "ExperimentConfig",
    "OutageResult",
    "PolarCodeSpec",
    "ReliabilityProfile",
    "SweepPoint",
    "SweepResult",
    "apply_assignment",
    "bit_reverse",
    "bpsk_capacity",
    "construct_awgn",
    "construct_diversity",
    "default_design_snr_db",
    "diversity_ilv",
    "draw_realization",
    "erasure_sc_check",
    "estimate_snr_at_bler",
    "ga_density_evolution",
    "horizontal",
    "invert_assignment",
    "load_spec",
    "modulate",
    "noise_sigma_for",
    "outage_curve",
    "outage_probability",
    "polar_encode",
    "polar_transform",
    "random_ilv",
    "run_outage",
    "run_sweep",
    "run_trial",
    "save_spec",
    "sc_decode",
    "sc_decode_batch",
    "transmit_demod",
    "trial_rng",
    "uniform",
    "write_result",
]

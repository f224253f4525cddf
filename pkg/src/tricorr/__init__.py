"""Quantum-correlation measures for tripartite states with nonorthogonal components.

The package computes pairwise and global squared concurrence, entanglement of
formation, quantum discord and geometric quantum discord for balanced
superpositions of three-mode product states, verifies their monogamy and
conservation relations with independent numeric oracles, and tabulates the
symmetric (Schrodinger-cat) special case.
"""

from .aggregate import GlobalReport, conservation_check, global_measure, monogamy_residual, tangle
from .catstates import CatConfig, CatRecord, SweepTable, cat_closed_forms, overlap_from_alpha, sweep
from .linalg import binary_entropy, hermitian_eigenvalues, partial_trace, tensor, von_neumann_entropy
from .mapping import (
    MixedPair,
    OverlapConfig,
    PureSplit,
    SingularNormalizationError,
    TwoQubitPure,
    full_state_qubits,
    mixed_reduced_density,
    normalization,
    pure_split_state,
)
from .measures import (
    BlochForm,
    PairwiseReport,
    bloch_decompose,
    concurrence_closed,
    delta_pm,
    discord_closed,
    eof_closed,
    eof_from_concurrence,
    geometric_discord,
    geometric_discord_closed,
    pair_entropy,
    pairwise_report,
    single_mode_entropy,
    wootters_concurrence,
)
from .oracle import (
    MeasurementAngles,
    OracleResult,
    discord_projective_oracle,
    kmax_direction_oracle,
    koashi_winter_check,
    min_conditional_entropy,
)

__version__ = "0.1.0"

__all__ = [
    "BlochForm",
    "CatConfig",
    "CatRecord",
    "GlobalReport",
    "MeasurementAngles",
    "MixedPair",
    "OracleResult",
    "OverlapConfig",
    "PairwiseReport",
    "PureSplit",
    "SingularNormalizationError",
    "SweepTable",
    "TwoQubitPure",
    "binary_entropy",
    "bloch_decompose",
    "cat_closed_forms",
    "concurrence_closed",
    "conservation_check",
    "delta_pm",
    "discord_closed",
    "discord_projective_oracle",
    "eof_closed",
    "eof_from_concurrence",
    "full_state_qubits",
    "geometric_discord",
    "geometric_discord_closed",
    "global_measure",
    "hermitian_eigenvalues",
    "kmax_direction_oracle",
    "koashi_winter_check",
    "min_conditional_entropy",
    "mixed_reduced_density",
    "monogamy_residual",
    "normalization",
    "overlap_from_alpha",
    "pair_entropy",
    "pairwise_report",
    "partial_trace",
    "pure_split_state",
    "single_mode_entropy",
    "sweep",
    "tangle",
    "tensor",
    "von_neumann_entropy",
    "wootters_concurrence",
]

"""Schrodinger-cat specialization: symmetric closed forms and figure sweeps.

A three-mode cat state has all three overlaps equal to p = exp(-2|alpha|^2),
so every quantity reduces to a one-parameter closed form per parity.  The
expressions here are written out directly from the symmetric arithmetic and
are cross-checked against the general modules in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Optional, Sequence

import numpy as np

from .linalg import binary_entropy
from .mapping import OverlapConfig, SingularNormalizationError, parity_sign
from .measures import eof_from_concurrence

#: Odd-parity sweeps stop this far below the fully-overlapping singular point.
ODD_PARITY_CAP = 1.0 - 1e-6

#: Even-parity branch point of the mixed-pair geometric discord.
BRANCH_POINT = np.sqrt(2.0) - 1.0


@dataclass(frozen=True)
class CatConfig:
    """Symmetric cat-state parameters: overlap p in (0, 1] plus parity sign."""

    p: float
    sign: int = +1

    def __post_init__(self) -> None:
        if not (0.0 < self.p <= 1.0) or not np.isfinite(self.p):
            raise ValueError(f"overlap p={self.p!r} outside (0, 1]")
        if self.sign not in (+1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.sign < 0 and 1.0 - self.p**3 < 1e-9:
            raise SingularNormalizationError(
                "singular normalization: odd parity with fully overlapping components"
            )

    @classmethod
    def from_alpha(cls, alpha_abs: float, parity: str) -> "CatConfig":
        return cls(overlap_from_alpha(alpha_abs), parity_sign(parity))

    @classmethod
    def from_overlap(cls, p: float, parity: str) -> "CatConfig":
        return cls(p, parity_sign(parity))

    @property
    def parity(self) -> str:
        return "even" if self.sign > 0 else "odd"


def overlap_from_alpha(alpha_abs: float) -> float:
    """Overlap of two opposite coherent components of amplitude |alpha|."""
    if not np.isfinite(alpha_abs) or alpha_abs < 0.0:
        raise ValueError(f"amplitude must be a finite nonnegative real, got {alpha_abs!r}")
    return float(np.exp(-2.0 * alpha_abs**2))


def cat_overlap_config(cat: CatConfig) -> OverlapConfig:
    """The symmetric three-mode overlap configuration of a cat state."""
    return OverlapConfig(cat.p, cat.p, cat.p, cat.sign)


def _denom(p: float, sign: int) -> float:
    return 1.0 + sign * p**3


def split_concurrence(p: float, sign: int) -> float:
    """Concurrence of any one-mode-versus-pair split.

    The odd-parity form divides out the common (1 - p) factor so the value
    stays accurate arbitrarily close to the singular full-overlap point.
    """
    if sign > 0:
        return float(np.sqrt((1.0 - p**2) * (1.0 - p**4)) / _denom(p, +1))
    return float((1.0 + p) * np.sqrt(1.0 + p**2) / (1.0 + p + p**2))


def pair_concurrence(p: float, sign: int) -> float:
    """Concurrence of any reduced mode pair."""
    if sign > 0:
        return float(p * (1.0 - p**2) / _denom(p, +1))
    return float(p * (1.0 + p) / (1.0 + p + p**2))


def tangle_value(p: float, sign: int) -> float:
    """Squared-concurrence residual: one split term minus two pair terms.

    Simplifies to (1 - p^2)^3 / (1 + sign p^3)^2.
    """
    if sign > 0:
        return float((1.0 - p**2) ** 3 / _denom(p, +1) ** 2)
    return float((1.0 - p) * (1.0 + p) ** 3 / (1.0 + p + p**2) ** 2)


def global_squared_concurrence(p: float, sign: int) -> float:
    """Twelve-term average of the squared concurrence."""
    if sign > 0:
        return float(0.5 * (1.0 + 2.0 * p**2) * (1.0 - p**2) ** 2 / _denom(p, +1) ** 2)
    return float(0.5 * (1.0 + 2.0 * p**2) * (1.0 + p) ** 2 / (1.0 + p + p**2) ** 2)


def split_eof(p: float, sign: int) -> float:
    """Formation entanglement (in bits) of any split; also its discord."""
    if sign > 0:
        return binary_entropy(0.5 + 0.5 * (p + p**2) / _denom(p, +1))
    return binary_entropy(0.5 + 0.5 * p / (1.0 + p + p**2))


def pair_eof(p: float, sign: int) -> float:
    """Formation entanglement (in bits) of any reduced pair."""
    return eof_from_concurrence(pair_concurrence(p, sign))


def eof_residual(p: float, sign: int) -> float:
    """Formation-entanglement monogamy residual around any pivot."""
    return split_eof(p, sign) - 2.0 * pair_eof(p, sign)


def global_eof(p: float, sign: int) -> float:
    """Twelve-term average of the formation entanglement."""
    return 0.5 * (split_eof(p, sign) + pair_eof(p, sign))


def split_geometric_discord(p: float, sign: int) -> float:
    """Raw geometric discord of any split: half the squared concurrence."""
    return 0.5 * split_concurrence(p, sign) ** 2


def even_pair_geometric_discord_branches(p: float) -> tuple[float, float]:
    """Both even-parity branch expressions for the mixed-pair geometric discord.

    The first applies below the branch point (small overlap), the second
    above; they agree at p = sqrt(2) - 1.
    """
    d2 = _denom(p, +1) ** 2
    low = 0.25 * p**2 * (1.0 + p) ** 2 * (2.0 + (1.0 - p) ** 2) / d2
    high = 0.25 * (1.0 + p**2) * (1.0 + p) ** 2 * (1.0 - p) ** 2 / d2
    return float(low), float(high)


def pair_geometric_discord(p: float, sign: int) -> float:
    """Raw geometric discord of any reduced pair.

    Even parity takes whichever candidate eigenvalue sum is smaller (the two
    branches cross at p = sqrt(2) - 1); odd parity always sits on the first
    branch.
    """
    if sign > 0:
        return min(even_pair_geometric_discord_branches(p))
    return float(0.25 * p**2 * (2.0 + (1.0 + p) ** 2) / (1.0 + p + p**2) ** 2)


def geometric_discord_residual(p: float, sign: int) -> float:
    """Raw geometric-discord monogamy residual around any pivot.

    Odd parity simplifies to (1 + 2p - p^2) / (2 (1 + p + p^2)^2), which is
    positive on the whole range; even parity is positive below the branch
    point and identically zero above it.
    """
    return split_geometric_discord(p, sign) - 2.0 * pair_geometric_discord(p, sign)


def global_geometric_discord(p: float, sign: int) -> float:
    """Twelve-term average of the raw geometric discord."""
    return 0.5 * (split_geometric_discord(p, sign) + pair_geometric_discord(p, sign))


@dataclass(frozen=True)
class CatRecord:
    """All symmetric closed-form quantities at one overlap value."""

    p: float
    parity: str
    c_split: float
    c_pair: float
    tangle: float
    c2_global: float
    e_split: float
    e_pair: float
    e_residual: float
    e_global: float
    discord_global: float
    dg_split: float
    dg_pair: float
    dg_residual: float
    dg_global: float
    dg2_global: float


#: Column names a sweep can request, in canonical order.
SWEEP_KINDS = tuple(
    f.name for f in fields(CatRecord) if f.name not in ("p", "parity")
)


def cat_record(p: float, sign: int) -> CatRecord:
    """Evaluate every symmetric closed form at one overlap value.

    Unlike the rest of this module, the global-discord entry is computed
    through the general aggregation route so that sweeps exercise the
    discord/formation conservation identity rather than assuming it.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"overlap p={p!r} outside [0, 1]")
    if sign < 0 and 1.0 - p**3 < 1e-9:
        raise SingularNormalizationError(
            "singular normalization: odd parity with fully overlapping components"
        )
    from . import aggregate  # deferred: aggregate is a heavier import

    cfg = OverlapConfig(p, p, p, sign)
    discord_global = aggregate.global_measure(cfg, "discord").value
    dg_global = global_geometric_discord(p, sign)
    return CatRecord(
        p=float(p),
        parity="even" if sign > 0 else "odd",
        c_split=split_concurrence(p, sign),
        c_pair=pair_concurrence(p, sign),
        tangle=tangle_value(p, sign),
        c2_global=global_squared_concurrence(p, sign),
        e_split=split_eof(p, sign),
        e_pair=pair_eof(p, sign),
        e_residual=eof_residual(p, sign),
        e_global=global_eof(p, sign),
        discord_global=discord_global,
        dg_split=split_geometric_discord(p, sign),
        dg_pair=pair_geometric_discord(p, sign),
        dg_residual=geometric_discord_residual(p, sign),
        dg_global=dg_global,
        dg2_global=2.0 * dg_global,
    )


def cat_closed_forms(cat: CatConfig) -> CatRecord:
    """Symmetric closed forms for a cat-state configuration."""
    return cat_record(cat.p, cat.sign)


@dataclass(frozen=True)
class SweepTable:
    """A rectangular sweep result: one row per overlap value."""

    columns: tuple[str, ...]
    rows: np.ndarray

    def __post_init__(self) -> None:
        rows = np.asarray(self.rows, dtype=float)
        if rows.ndim != 2 or rows.shape[1] != len(self.columns):
            raise ValueError("row shape does not match the column schema")
        if not np.all(np.isfinite(rows)):
            raise ValueError("sweep produced non-finite values")
        p = rows[:, 0]
        if np.any(np.diff(p) <= 0.0):
            raise ValueError("overlap column must be strictly increasing")
        object.__setattr__(self, "rows", rows)

    def column(self, name: str) -> np.ndarray:
        return self.rows[:, self.columns.index(name)]


def sweep(parity: str, p_min: float, p_max: float, steps: int,
          kinds: Optional[Sequence[str]] = None) -> SweepTable:
    """Tabulate symmetric closed forms on a uniform overlap grid.

    Odd-parity grids are capped at ``ODD_PARITY_CAP`` to stay clear of the
    singular fully-overlapping point.
    """
    sign = parity_sign(parity)
    if not (0.0 <= p_min < p_max <= 1.0):
        raise ValueError(f"need 0 <= p_min < p_max <= 1, got [{p_min}, {p_max}]")
    if steps < 2:
        raise ValueError(f"steps must be at least 2, got {steps}")
    if sign < 0:
        p_max = min(p_max, ODD_PARITY_CAP)
        if p_min >= p_max:
            raise ValueError(f"odd-parity range collapsed: [{p_min}, {p_max}]")
    if kinds is None:
        kinds = SWEEP_KINDS
    else:
        kinds = tuple(kinds)
        unknown = set(kinds) - set(SWEEP_KINDS)
        if unknown:
            raise ValueError(f"unknown sweep kinds: {sorted(unknown)}")
    grid = np.linspace(p_min, p_max, steps)
    rows = np.empty((steps, 1 + len(kinds)))
    for row, p in enumerate(grid):
        record = cat_record(float(p), sign)
        rows[row, 0] = p
        for col, kind in enumerate(kinds, start=1):
            rows[row, col] = getattr(record, kind)
    return SweepTable(columns=("p",) + tuple(kinds), rows=rows)


FIGURE_STEPS = 200
_FIGURE_GLOBAL_KINDS = ("c2_global", "e_global", "dg2_global")


def figure_table(figure: int, steps: int = FIGURE_STEPS) -> SweepTable:
    """Preset sweeps matching the three standard comparison plots.

    Figure 1 tabulates the formation-entanglement monogamy residual for both
    parities; figures 2 and 3 tabulate the global squared concurrence, global
    formation entanglement (equal to global discord) and the doubled global
    geometric discord for even and odd parity respectively.
    """
    if figure == 1:
        grid = np.linspace(0.0, ODD_PARITY_CAP, steps)
        rows = np.empty((steps, 3))
        for row, p in enumerate(grid):
            rows[row] = (p, eof_residual(float(p), +1), eof_residual(float(p), -1))
        return SweepTable(columns=("p", "e_residual_even", "e_residual_odd"), rows=rows)
    if figure == 2:
        return sweep("even", 0.0, 1.0, steps, _FIGURE_GLOBAL_KINDS)
    if figure == 3:
        return sweep("odd", 0.0, 1.0, steps, _FIGURE_GLOBAL_KINDS)
    raise ValueError(f"figure must be 1, 2 or 3, got {figure}")

"""Global correlation measures, monogamy residuals, and conservation identities.

The global value of a measure is the average of all twelve ordered bipartite
terms: both measurement orders of the three mode pairs, plus both orders of
the three one-versus-pair splits (whose two orders always coincide here).
"""

from __future__ import annotations

from dataclasses import dataclass

from .mapping import MODES, MixedPair, OverlapConfig, PureSplit
from .measures import (
    concurrence_closed,
    delta_pm,
    discord_closed,
    eof_closed,
    geometric_discord_closed,
)

KINDS = ("squared_concurrence", "eof", "discord", "geometric_discord")

#: Ordered mixed-pair terms: measurement falls on the first listed mode.
ORDERED_PAIRS = ((1, 2), (2, 1), (1, 3), (3, 1), (2, 3), (3, 2))

#: Orientation in which the pairwise discord and its asymmetry telescope.
CYCLIC_PAIRS = ((1, 2), (2, 3), (3, 1))

UNORDERED_PAIRS = ((1, 2), (1, 3), (2, 3))


@dataclass(frozen=True)
class GlobalReport:
    """A global measure value with its per-bipartition breakdown and residuals."""

    kind: str
    value: float
    terms: tuple[tuple[str, float], ...]
    monogamy_residuals: tuple[float, float, float]
    conservation_residual: float
    delta_plus_residual: float
    delta_minus_residual: float
    normalized: bool = False

    def __post_init__(self) -> None:
        if len(self.terms) != 12:
            raise ValueError(f"expected 12 ordered terms, got {len(self.terms)}")
        total = sum(v for _, v in self.terms) / 12.0
        if self.value != total:
            raise ValueError("global value must be the exact mean of its terms")


def _mixed_term(cfg: OverlapConfig, kind: str, a: int, b: int, normalized: bool) -> float:
    pair = MixedPair(a, b)
    if kind == "squared_concurrence":
        return concurrence_closed(cfg, pair) ** 2
    if kind == "eof":
        return eof_closed(cfg, pair)
    if kind == "discord":
        return discord_closed(cfg, pair, "first")
    if kind == "geometric_discord":
        return geometric_discord_closed(cfg, pair, "first", normalized)
    raise ValueError(f"unknown measure kind {kind!r}")


def _split_term(cfg: OverlapConfig, kind: str, k: int, normalized: bool) -> float:
    split = PureSplit(k)
    if kind == "squared_concurrence":
        return concurrence_closed(cfg, split) ** 2
    if kind == "eof":
        return eof_closed(cfg, split)
    if kind == "discord":
        return discord_closed(cfg, split)
    if kind == "geometric_discord":
        return geometric_discord_closed(cfg, split, "first", normalized)
    raise ValueError(f"unknown measure kind {kind!r}")


def global_measure(cfg: OverlapConfig, kind: str, normalized: bool = False) -> GlobalReport:
    """Average the twelve ordered bipartite terms of one measure.

    For discord and geometric discord the measurement falls on the first
    mode of each ordered pair; the split terms are side-independent.
    Geometric discord enters on the raw scale unless ``normalized`` is set.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    terms: list[tuple[str, float]] = []
    for a, b in ORDERED_PAIRS:
        terms.append((f"{a}{b}", _mixed_term(cfg, kind, a, b, normalized)))
    for k in MODES:
        i, j = PureSplit(k).pair
        value = _split_term(cfg, kind, k, normalized)
        terms.append((f"{k}({i}{j})", value))
        terms.append((f"({i}{j}){k}", value))
    value = sum(v for _, v in terms) / 12.0
    residuals = conservation_check(cfg)
    return GlobalReport(
        kind=kind,
        value=value,
        terms=tuple(terms),
        monogamy_residuals=tuple(
            monogamy_residual(cfg, kind, m, normalized=normalized) for m in MODES
        ),
        conservation_residual=residuals[0],
        delta_plus_residual=residuals[1],
        delta_minus_residual=residuals[2],
        normalized=normalized,
    )


def monogamy_residual(cfg: OverlapConfig, kind: str, pivot: int,
                      measured_side: str = "pivot", normalized: bool = False) -> float:
    """Split-versus-pairs residual of one measure around a pivot mode.

    Positive means the measure is monogamous at this configuration: the
    pivot's correlation with the joint pair exceeds the sum of its pairwise
    correlations.  For asymmetric measures the pivot is the measured side of
    each pair term; ``measured_side="partner"`` selects the other convention.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if pivot not in MODES:
        raise ValueError(f"pivot must be in {MODES}, got {pivot}")
    if measured_side not in ("pivot", "partner"):
        raise ValueError(f"measured_side must be 'pivot' or 'partner', got {measured_side!r}")
    total = _split_term(cfg, kind, pivot, normalized)
    for other in MODES:
        if other == pivot:
            continue
        a, b = (pivot, other) if measured_side == "pivot" else (other, pivot)
        total -= _mixed_term(cfg, kind, a, b, normalized)
    return total


def tangle(cfg: OverlapConfig, pivot: int = 1) -> float:
    """Squared-concurrence monogamy residual (the three-way tangle)."""
    return monogamy_residual(cfg, "squared_concurrence", pivot)


def conservation_check(cfg: OverlapConfig) -> tuple[float, float, float]:
    """Residuals of the three discord/formation distribution identities.

    The pairwise discords and their half-differences telescope only in the
    cyclic orientation (12, 23, 31), in which each mode is measured exactly
    once; both sums are compared against the total pairwise formation
    entanglement.  Returns absolute residuals in bits.
    """
    sum_eof = sum(eof_closed(cfg, MixedPair(i, j)) for i, j in UNORDERED_PAIRS)
    sum_discord = sum(discord_closed(cfg, MixedPair(a, b), "first") for a, b in CYCLIC_PAIRS)
    sum_plus = sum(delta_pm(cfg, pair)[0] for pair in UNORDERED_PAIRS)
    sum_minus = sum(delta_pm(cfg, pair)[1] for pair in CYCLIC_PAIRS)
    return (
        abs(sum_discord - sum_eof),
        abs(sum_plus - sum_eof),
        abs(sum_minus),
    )

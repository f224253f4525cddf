"""Tripartite states built from nonorthogonal components, and their qubit forms.

The state family is the balanced superposition of two product states whose
per-mode inner products are ``p1, p2, p3``, with a relative phase of +1
("even") or -1 ("odd").  Each mode carries an orthonormal logical-qubit basis
in which the "+" combination of the two component states is |0> and the "-"
combination is |1>; all matrix representations below are written in that
basis, ordered |00>, |01>, |10>, |11> (and |000> ... |111> for the full
three-qubit vector).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Union

import numpy as np

#: Normalization is considered singular when 1 + p1*p2*p3*sign drops below this.
SINGULAR_EPS = 1e-9

MODES = (1, 2, 3)


class SingularNormalizationError(ValueError):
    """The requested state has vanishing norm (fully overlapping, odd parity)."""


def parity_sign(parity: str) -> int:
    """Map an 'even'/'odd' parity label to the relative-phase sign +1/-1."""
    try:
        return {"even": +1, "odd": -1}[parity]
    except KeyError:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}") from None


@dataclass(frozen=True)
class OverlapConfig:
    """Mode overlaps and parity sign; the single input to every closed form.

    ``sign`` is the relative phase of the superposition: +1 for even parity,
    -1 for odd.  Overlaps are restricted to [0, 1].
    """

    p1: float
    p2: float
    p3: float
    sign: int = +1

    def __post_init__(self) -> None:
        for name, p in zip(("p1", "p2", "p3"), self.overlaps):
            if not (0.0 <= p <= 1.0) or not np.isfinite(p):
                raise ValueError(f"{name}={p!r} outside the physical range [0, 1]")
        if self.sign not in (+1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if 1.0 + self.product * self.sign < SINGULAR_EPS:
            raise SingularNormalizationError(
                f"singular normalization: 1 + p1*p2*p3*sign = "
                f"{1.0 + self.product * self.sign:.3e}"
            )

    @classmethod
    def from_parity(cls, p1: float, p2: float, p3: float, parity: str) -> "OverlapConfig":
        return cls(p1, p2, p3, parity_sign(parity))

    @property
    def overlaps(self) -> tuple[float, float, float]:
        return (self.p1, self.p2, self.p3)

    @property
    def product(self) -> float:
        return self.p1 * self.p2 * self.p3

    @property
    def parity(self) -> str:
        return "even" if self.sign > 0 else "odd"

    def overlap(self, mode: int) -> float:
        return self.overlaps[mode - 1]

    def is_symmetric(self) -> bool:
        return self.p1 == self.p2 == self.p3


@dataclass(frozen=True)
class PureSplit:
    """One mode versus the remaining pair; the joint state stays pure."""

    k: int

    def __post_init__(self) -> None:
        if self.k not in MODES:
            raise ValueError(f"mode index must be in {MODES}, got {self.k}")

    @property
    def pair(self) -> tuple[int, int]:
        return tuple(m for m in MODES if m != self.k)  # type: ignore[return-value]

    def label(self) -> str:
        i, j = self.pair
        return f"{self.k}({i}{j})"


@dataclass(frozen=True)
class MixedPair:
    """Two modes kept after tracing out the third; a rank-2 mixed state."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if self.i not in MODES or self.j not in MODES or self.i == self.j:
            raise ValueError(f"pair indices must be distinct modes, got ({self.i}, {self.j})")

    @property
    def spectator(self) -> int:
        return ({1, 2, 3} - {self.i, self.j}).pop()

    def swapped(self) -> "MixedPair":
        return MixedPair(self.j, self.i)

    def label(self) -> str:
        return f"{self.i}{self.j}"


Bipartition = Union[PureSplit, MixedPair]


@dataclass(frozen=True)
class TwoQubitPure:
    """Real amplitudes of a two-qubit pure state in the |00>,|01>,|10>,|11> order."""

    c00: float
    c01: float
    c10: float
    c11: float

    def __post_init__(self) -> None:
        if abs(self.norm_squared - 1.0) > 1e-12:
            raise ValueError(f"amplitudes not normalized: sum |C|^2 = {self.norm_squared!r}")

    @property
    def norm_squared(self) -> float:
        return self.c00**2 + self.c01**2 + self.c10**2 + self.c11**2

    @cached_property
    def vector(self) -> np.ndarray:
        return np.array([self.c00, self.c01, self.c10, self.c11], dtype=complex)

    def density(self) -> np.ndarray:
        v = self.vector
        return np.outer(v, v.conj())


def normalization(cfg: OverlapConfig) -> float:
    """Overall norm factor [2 + 2 p1 p2 p3 sign]^(-1/2) of the superposition."""
    return float((2.0 + 2.0 * cfg.product * cfg.sign) ** -0.5)


def _plus_minus(p: float) -> tuple[float, float]:
    # sqrt((1 +- p)/2), the weights of the "+"/"-" basis combinations
    return np.sqrt((1.0 + p) / 2.0), np.sqrt((1.0 - p) / 2.0)


def pure_split_state(cfg: OverlapConfig, k: int) -> TwoQubitPure:
    """Two-qubit amplitudes of the mode-k versus pair split.

    The pair acts as a single logical qubit built on the "+"/"-" combinations
    of its two product components.  Even parity populates |00> and |11> only;
    odd parity populates |01> and |10> only.
    """
    split = PureSplit(k)
    i, j = split.pair
    n = normalization(cfg)
    ck_plus, ck_minus = _plus_minus(cfg.overlap(k))
    cij_plus, cij_minus = _plus_minus(cfg.overlap(i) * cfg.overlap(j))
    same = n * (1.0 + cfg.sign)  # weight on |00>, |11>
    diff = n * (1.0 - cfg.sign)  # weight on |01>, |10>
    return TwoQubitPure(
        c00=same * ck_plus * cij_plus,
        c01=diff * ck_plus * cij_minus,
        c10=diff * ck_minus * cij_plus,
        c11=same * ck_minus * cij_minus,
    )


def _mode_component_vectors(cfg: OverlapConfig, mode: int) -> tuple[np.ndarray, np.ndarray]:
    # logical-qubit coordinates of the two nonorthogonal components of a mode
    a, b = _plus_minus(cfg.overlap(mode))
    return np.array([a, b]), np.array([a, -b])


def mixed_reduced_density(cfg: OverlapConfig, pair: tuple[int, int] | MixedPair) -> np.ndarray:
    """4x4 reduced density of a mode pair after tracing out the third mode.

    Rank 2 by construction: it is a two-term mixture of the pair's "+" and
    "-" superpositions weighted by the spectator overlap.
    """
    if not isinstance(pair, MixedPair):
        pair = MixedPair(*pair)
    n2 = normalization(cfg) ** 2
    pk = cfg.overlap(pair.spectator)
    ui, vi = _mode_component_vectors(cfg, pair.i)
    uj, vj = _mode_component_vectors(cfg, pair.j)
    u = np.kron(ui, uj)
    v = np.kron(vi, vj)
    rho = n2 * (
        np.outer(u, u)
        + np.outer(v, v)
        + cfg.sign * pk * (np.outer(u, v) + np.outer(v, u))
    )
    return rho.astype(complex)


def full_state_qubits(cfg: OverlapConfig) -> np.ndarray:
    """Unit 8-vector of the full state in the three mode-local qubit bases.

    Mode 1 is the most significant qubit.  Reductions of this vector agree
    elementwise with :func:`mixed_reduced_density`.
    """
    n = normalization(cfg)
    comps = [_mode_component_vectors(cfg, m) for m in MODES]
    u = np.kron(np.kron(comps[0][0], comps[1][0]), comps[2][0])
    v = np.kron(np.kron(comps[0][1], comps[1][1]), comps[2][1])
    return (n * (u + cfg.sign * v)).astype(complex)


def single_mode_reduced_density(cfg: OverlapConfig, mode: int) -> np.ndarray:
    """2x2 reduced density of one mode (diagonal in its logical basis)."""
    if mode not in MODES:
        raise ValueError(f"mode index must be in {MODES}, got {mode}")
    j, k = (m for m in MODES if m != mode)
    n2 = normalization(cfg) ** 2
    p = cfg.overlap(mode)
    cross = cfg.sign * cfg.overlap(j) * cfg.overlap(k)
    return np.diag(
        [n2 * (1.0 + p) * (1.0 + cross), n2 * (1.0 - p) * (1.0 - cross)]
    ).astype(complex)

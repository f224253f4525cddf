"""Bipartite correlation measures, in closed form and as generic numeric routes.

Closed forms are functions of an :class:`~tricorr.mapping.OverlapConfig`;
numeric routes take an explicit 4x4 density matrix.  Entropic quantities are
in bits; geometric discord is reported on the raw scale (maximum 1/2 for two
qubits) unless ``normalized=True`` doubles it.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

import numpy as np

from .linalg import (
    PAULIS,
    SIGMA_0,
    SIGMA_Y,
    binary_entropy,
    check_density,
    clamp_spectrum,
    tensor,
)
from .mapping import (
    Bipartition,
    MixedPair,
    OverlapConfig,
    PureSplit,
    mixed_reduced_density,
    normalization,
    pure_split_state,
)

Side = str  # "first" | "second"


def _check_side(side: Side) -> Side:
    if side not in ("first", "second"):
        raise ValueError(f"measured_side must be 'first' or 'second', got {side!r}")
    return side


# ---------------------------------------------------------------------------
# concurrence and entanglement of formation
# ---------------------------------------------------------------------------

def wootters_concurrence(rho: np.ndarray, tol: float = 1e-9) -> float:
    """Concurrence of a two-qubit density matrix.

    Uses the spin-flip construction: the decreasing square roots
    ``l1 >= l2 >= l3 >= l4`` of the eigenvalues of ``rho @ rho_tilde`` give
    ``max(l1 - l2 - l3 - l4, 0)``.  The l_i are obtained as the singular
    values of ``sqrt(rho) (sy x sy) conj(sqrt(rho))``, whose Gram matrix is
    similar to ``rho @ rho_tilde``; unlike an eigensolve of the product this
    loses no precision on the near-zero roots.
    """
    rho = check_density(rho, tol)
    if rho.shape[0] != 4:
        raise ValueError("wootters_concurrence expects a 4x4 density matrix")
    flip = tensor(SIGMA_Y, SIGMA_Y)  # conjugation is in the computational basis
    w, vecs = np.linalg.eigh(rho)
    sqrt_rho = (vecs * np.sqrt(clamp_spectrum(w))) @ vecs.conj().T
    lam = np.linalg.svd(sqrt_rho @ flip @ sqrt_rho.conj(), compute_uv=False)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def eof_from_concurrence(c: float) -> float:
    """Entanglement of formation in bits for a given two-qubit concurrence."""
    if not (-1e-12 <= c <= 1.0 + 1e-12):
        raise ValueError(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    return binary_entropy(0.5 + 0.5 * np.sqrt(1.0 - c * c))


def concurrence_closed(cfg: OverlapConfig, b: Bipartition) -> float:
    """Concurrence of a bipartition straight from the overlaps."""
    denom = 1.0 + cfg.product * cfg.sign
    if isinstance(b, PureSplit):
        pk = cfg.overlap(b.k)
        pi, pj = (cfg.overlap(m) for m in b.pair)
        return float(np.sqrt((1.0 - pk**2) * (1.0 - (pi * pj) ** 2)) / denom)
    pk = cfg.overlap(b.spectator)
    pi, pj = cfg.overlap(b.i), cfg.overlap(b.j)
    return float(pk * np.sqrt((1.0 - pi**2) * (1.0 - pj**2)) / denom)


# ---------------------------------------------------------------------------
# entropies of the reduced states
# ---------------------------------------------------------------------------

def single_mode_entropy(cfg: OverlapConfig, mode: int) -> float:
    """Entropy in bits of one mode's reduced state."""
    j, k = (m for m in (1, 2, 3) if m != mode)
    cross = cfg.sign * cfg.overlap(j) * cfg.overlap(k)
    arg = (1.0 + cfg.overlap(mode)) * (1.0 + cross) / (2.0 * (1.0 + cfg.product * cfg.sign))
    return binary_entropy(arg)


def pair_entropy(cfg: OverlapConfig, pair: tuple[int, int] | MixedPair) -> float:
    """Entropy in bits of a two-mode reduced state.

    Because the three-mode state is pure this always equals the entropy of
    the traced-out mode, and is implemented that way so the equality is exact.
    """
    if not isinstance(pair, MixedPair):
        pair = MixedPair(*pair)
    return single_mode_entropy(cfg, pair.spectator)


def eof_closed(cfg: OverlapConfig, b: Bipartition) -> float:
    """Entanglement of formation of a bipartition from the overlaps.

    Pure splits use the marginal-entropy form; mixed pairs pass the pair
    concurrence through the standard two-qubit conversion.  Both routes agree
    with :func:`eof_from_concurrence` on :func:`concurrence_closed`.
    """
    if isinstance(b, PureSplit):
        pk = cfg.overlap(b.k)
        pi, pj = (cfg.overlap(m) for m in b.pair)
        denom = 1.0 + cfg.product * cfg.sign
        return binary_entropy(0.5 + 0.5 * (pk + pi * pj * cfg.sign) / denom)
    return eof_from_concurrence(concurrence_closed(cfg, b))


# ---------------------------------------------------------------------------
# quantum discord (via the purification identity) and its asymmetry
# ---------------------------------------------------------------------------

def discord_closed(cfg: OverlapConfig, b: Bipartition, measured_side: Side = "first") -> float:
    """Quantum discord of a bipartition in bits.

    For a mixed pair (i, j) with the measurement on i this is
    ``S_i - S_ij + E_jk`` where k is the traced-out mode: the minimal
    conditional entropy of a rank-2 state equals the formation entanglement
    of its purification complement.  Measuring the second mode swaps the
    roles of i and j.  Pure splits have discord equal to their entanglement
    of formation on either side.
    """
    _check_side(measured_side)
    if isinstance(b, PureSplit):
        return eof_closed(cfg, b)
    pair = b if measured_side == "first" else b.swapped()
    k = pair.spectator
    return (
        single_mode_entropy(cfg, pair.i)
        - pair_entropy(cfg, pair)
        + eof_closed(cfg, MixedPair(pair.j, k))
    )


def delta_pm(cfg: OverlapConfig, pair: tuple[int, int] | MixedPair) -> tuple[float, float]:
    """Half-sum and half-difference of the two one-sided discords of a pair."""
    if not isinstance(pair, MixedPair):
        pair = MixedPair(*pair)
    fwd = discord_closed(cfg, pair, "first")
    bwd = discord_closed(cfg, pair, "second")
    return 0.5 * (fwd + bwd), 0.5 * (fwd - bwd)


# ---------------------------------------------------------------------------
# Bloch decomposition and geometric discord
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlochForm:
    """Local Bloch vectors and 3x3 correlation tensor of a two-qubit density."""

    x: np.ndarray
    y: np.ndarray
    R: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Rebuild the density matrix; inverse of :func:`bloch_decompose`."""
        rho = tensor(SIGMA_0, SIGMA_0).astype(complex)
        for i in range(3):
            rho += self.x[i] * tensor(PAULIS[i], SIGMA_0)
            rho += self.y[i] * tensor(SIGMA_0, PAULIS[i])
            for j in range(3):
                rho += self.R[i, j] * tensor(PAULIS[i], PAULIS[j])
        return rho / 4.0

    def k_matrix(self, measured_side: Side = "first") -> np.ndarray:
        """The 3x3 matrix v v^T + R R^T whose spectrum fixes geometric discord."""
        _check_side(measured_side)
        if measured_side == "first":
            return np.outer(self.x, self.x) + self.R @ self.R.T
        return np.outer(self.y, self.y) + self.R.T @ self.R


def bloch_decompose(rho: np.ndarray, tol: float = 1e-9) -> BlochForm:
    """Pauli expectation values of a two-qubit density matrix."""
    rho = check_density(rho, tol)
    if rho.shape[0] != 4:
        raise ValueError("bloch_decompose expects a 4x4 density matrix")
    x = np.array([np.trace(rho @ tensor(s, SIGMA_0)).real for s in PAULIS])
    y = np.array([np.trace(rho @ tensor(SIGMA_0, s)).real for s in PAULIS])
    R = np.array(
        [[np.trace(rho @ tensor(si, sj)).real for sj in PAULIS] for si in PAULIS]
    )
    return BlochForm(x=x, y=y, R=R)


def geometric_discord(rho: np.ndarray, measured_side: Side = "first",
                      normalized: bool = False) -> float:
    """Hilbert-Schmidt distance squared to the nearest zero-discord state.

    Equals one quarter of the sum of the two smallest eigenvalues of
    ``v v^T + R R^T`` with v the measured side's Bloch vector (and R
    transposed for the second side).  Raw scale tops out at 1/2;
    ``normalized=True`` doubles the result.
    """
    k = bloch_decompose(rho).k_matrix(measured_side)
    w = np.sort(np.linalg.eigvalsh(k))
    value = 0.25 * float(w[0] + w[1])
    return 2.0 * value if normalized else value


def mixed_pair_k_eigenvalues(cfg: OverlapConfig, pair: MixedPair,
                             measured_side: Side = "first") -> tuple[float, float, float]:
    """Closed-form eigenvalues (l1, l2, l3) of the K matrix of a mixed pair.

    l1 belongs to the z-axis block and depends on which mode is measured;
    l2 and l3 = l2 * pk^2 come from the transverse correlations and do not.
    """
    _check_side(measured_side)
    pi, pj = cfg.overlap(pair.i), cfg.overlap(pair.j)
    pk = cfg.overlap(pair.spectator)
    pa, pb = (pi, pj) if measured_side == "first" else (pj, pi)
    n4 = normalization(cfg) ** 4
    l1 = 4.0 * n4 * ((pa + pb * pk * cfg.sign) ** 2 + (pi * pj + pk * cfg.sign) ** 2)
    l2 = 4.0 * n4 * (1.0 - pi**2) * (1.0 - pj**2)
    l3 = l2 * pk**2
    return float(l1), float(l2), float(l3)


def geometric_discord_closed(cfg: OverlapConfig, b: Bipartition,
                             measured_side: Side = "first",
                             normalized: bool = False) -> float:
    """Geometric discord of a bipartition from the overlaps.

    Pure splits give half the squared concurrence on either side.  Mixed
    pairs minimize over the two candidate eigenvalue pairs directly (l3 never
    exceeds l2, so only l1+l3 and l2+l3 compete); the branch is selected by
    comparison, never by a precomputed threshold.
    """
    _check_side(measured_side)
    if isinstance(b, PureSplit):
        value = 0.5 * concurrence_closed(cfg, b) ** 2
    else:
        l1, l2, l3 = mixed_pair_k_eigenvalues(cfg, b, measured_side)
        value = 0.25 * min(l1 + l3, l2 + l3)
    return 2.0 * value if normalized else value


# ---------------------------------------------------------------------------
# per-bipartition report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PairwiseReport:
    """All four measures for one bipartition, both measurement sides.

    Closed-form values are always present; the ``*_oracle`` fields are filled
    when the report is built with independent numeric verification enabled.
    """

    bipartition: Bipartition
    concurrence: float
    eof: float
    discord_forward: float
    discord_backward: float
    geometric_discord_forward: float
    geometric_discord_backward: float
    normalized: bool = False
    concurrence_oracle: Optional[float] = None
    discord_forward_oracle: Optional[float] = None
    discord_backward_oracle: Optional[float] = None
    geometric_discord_forward_oracle: Optional[float] = None
    geometric_discord_backward_oracle: Optional[float] = None

    def __post_init__(self) -> None:
        values = (
            self.concurrence,
            self.eof,
            self.discord_forward,
            self.discord_backward,
            self.geometric_discord_forward,
            self.geometric_discord_backward,
        )
        if min(values) < -1e-10:
            raise ValueError(f"negative measure value in report: {min(values)!r}")
        if self.concurrence > 1.0 + 1e-10:
            raise ValueError(f"concurrence {self.concurrence!r} exceeds 1")

    def label(self) -> str:
        return self.bipartition.label()


def bipartition_density(cfg: OverlapConfig, b: Bipartition) -> np.ndarray:
    """4x4 density matrix of either bipartition kind, in its mapped basis."""
    if isinstance(b, PureSplit):
        return pure_split_state(cfg, b.k).density()
    return mixed_reduced_density(cfg, b)


def pairwise_report(cfg: OverlapConfig, b: Bipartition, include_oracle: bool = False,
                    oracle_tol: float = 1e-6, normalized: bool = False) -> PairwiseReport:
    """Assemble the full measure report for one bipartition."""
    report = PairwiseReport(
        bipartition=b,
        concurrence=concurrence_closed(cfg, b),
        eof=eof_closed(cfg, b),
        discord_forward=discord_closed(cfg, b, "first"),
        discord_backward=discord_closed(cfg, b, "second"),
        geometric_discord_forward=geometric_discord_closed(cfg, b, "first", normalized),
        geometric_discord_backward=geometric_discord_closed(cfg, b, "second", normalized),
        normalized=normalized,
    )
    if not include_oracle:
        return report
    from . import oracle  # deferred: oracle depends on this module

    rho = bipartition_density(cfg, b)
    return replace(
        report,
        concurrence_oracle=wootters_concurrence(rho),
        discord_forward_oracle=oracle.discord_projective_oracle(rho, "first", tol=oracle_tol).value,
        discord_backward_oracle=oracle.discord_projective_oracle(rho, "second", tol=oracle_tol).value,
        geometric_discord_forward_oracle=geometric_discord(rho, "first", normalized),
        geometric_discord_backward_oracle=geometric_discord(rho, "second", normalized),
    )

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import overlap_configs, seeded_configs
from tricorr.mapping import MixedPair, OverlapConfig, PureSplit
from tricorr.measures import (
    bipartition_density,
    bloch_decompose,
    concurrence_closed,
    delta_pm,
    discord_closed,
    eof_closed,
    eof_from_concurrence,
    geometric_discord,
    geometric_discord_closed,
    mixed_pair_k_eigenvalues,
    pair_entropy,
    pairwise_report,
    single_mode_entropy,
    wootters_concurrence,
)

EOF_ONE_THIRD = 0.18729859856877245  # H(1/2 + sqrt(8)/6), high-precision
H_FIVE_SIXTHS = 0.6500224216483542
SQRT5_OVER_3 = 0.7453559924999299

BELL = np.zeros(4, dtype=complex)
BELL[0] = BELL[3] = 2**-0.5
BELL_RHO = np.outer(BELL, BELL.conj())

ALL_PAIRS = (MixedPair(1, 2), MixedPair(1, 3), MixedPair(2, 3))
ALL_BIPARTITIONS = tuple(PureSplit(k) for k in (1, 2, 3)) + ALL_PAIRS


def test_wootters_bell_state_is_maximal():
    assert wootters_concurrence(BELL_RHO) == pytest.approx(1.0, abs=1e-12)


def test_wootters_product_state_is_zero():
    ket = np.kron([1, 0], [2**-0.5, 2**-0.5]).astype(complex)
    assert wootters_concurrence(np.outer(ket, ket)) == 0.0


def test_wootters_mixed_pair_one_third():
    from tricorr.mapping import mixed_reduced_density

    rho = mixed_reduced_density(OverlapConfig(0.5, 0.5, 0.5, +1), (1, 2))
    assert wootters_concurrence(rho) == pytest.approx(1 / 3, abs=1e-12)


def test_eof_from_concurrence_endpoints():
    assert eof_from_concurrence(0.0) == 0.0
    assert eof_from_concurrence(1.0) == pytest.approx(1.0, abs=1e-15)


def test_eof_from_concurrence_one_third():
    assert eof_from_concurrence(1 / 3) == pytest.approx(EOF_ONE_THIRD, abs=1e-14)


def test_eof_from_concurrence_rejects_out_of_range():
    with pytest.raises(ValueError):
        eof_from_concurrence(1.2)


def test_concurrence_closed_examples():
    ghz = OverlapConfig(0, 0, 0, +1)
    assert concurrence_closed(ghz, PureSplit(1)) == pytest.approx(1.0)
    assert concurrence_closed(ghz, MixedPair(1, 2)) == 0.0
    sym = OverlapConfig(0.5, 0.5, 0.5, +1)
    assert concurrence_closed(sym, PureSplit(2)) == pytest.approx(SQRT5_OVER_3, abs=1e-14)
    assert concurrence_closed(sym, MixedPair(1, 3)) == pytest.approx(1 / 3, abs=1e-15)


@given(overlap_configs(), st.sampled_from(ALL_BIPARTITIONS))
def test_concurrence_closed_matches_spin_flip(cfg, b):
    closed = concurrence_closed(cfg, b)
    numeric = wootters_concurrence(bipartition_density(cfg, b))
    assert abs(closed - numeric) < 1e-9


def test_single_mode_entropy_examples():
    assert single_mode_entropy(OverlapConfig(0, 0, 0, +1), 1) == pytest.approx(1.0)
    assert single_mode_entropy(OverlapConfig(1, 1, 1, +1), 2) == 0.0
    assert single_mode_entropy(OverlapConfig(0.5, 0.5, 0.5, +1), 3) == pytest.approx(
        H_FIVE_SIXTHS, abs=1e-14
    )


@given(overlap_configs(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_pair_entropy_equals_spectator_entropy(cfg, pair):
    pair = MixedPair(*pair)
    assert pair_entropy(cfg, pair) == single_mode_entropy(cfg, pair.spectator)


def test_pair_entropy_example():
    assert pair_entropy(OverlapConfig(0.5, 0.5, 0.5, +1), (1, 2)) == pytest.approx(
        H_FIVE_SIXTHS, abs=1e-14
    )


def test_eof_closed_examples():
    ghz = OverlapConfig(0, 0, 0, +1)
    assert eof_closed(ghz, PureSplit(1)) == pytest.approx(1.0)
    assert eof_closed(ghz, MixedPair(1, 2)) == 0.0
    sym = OverlapConfig(0.5, 0.5, 0.5, +1)
    assert eof_closed(sym, MixedPair(2, 3)) == pytest.approx(EOF_ONE_THIRD, abs=1e-14)


@given(overlap_configs(), st.sampled_from(ALL_BIPARTITIONS))
def test_eof_closed_routes_agree(cfg, b):
    via_concurrence = eof_from_concurrence(concurrence_closed(cfg, b))
    assert abs(eof_closed(cfg, b) - via_concurrence) < 1e-12


@given(overlap_configs(), st.sampled_from([1, 2, 3]))
def test_pure_split_eof_is_marginal_entropy(cfg, k):
    assert abs(eof_closed(cfg, PureSplit(k)) - single_mode_entropy(cfg, k)) < 1e-12


def test_discord_closed_examples():
    ghz = OverlapConfig(0, 0, 0, +1)
    assert discord_closed(ghz, MixedPair(1, 2), "first") == pytest.approx(0.0, abs=1e-14)
    sym = OverlapConfig(0.5, 0.5, 0.5, +1)
    assert discord_closed(sym, MixedPair(1, 2), "first") == pytest.approx(
        EOF_ONE_THIRD, abs=1e-13
    )


@given(st.floats(0.0, 0.95), st.sampled_from([+1, -1]),
       st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_discord_symmetric_configs_have_equal_sides(p, sign, pair):
    cfg = OverlapConfig(p, p, p, sign)
    fwd = discord_closed(cfg, MixedPair(*pair), "first")
    bwd = discord_closed(cfg, MixedPair(*pair), "second")
    assert abs(fwd - bwd) < 1e-12


@given(overlap_configs(), st.sampled_from([1, 2, 3]))
def test_discord_on_pure_split_equals_eof(cfg, k):
    assert discord_closed(cfg, PureSplit(k)) == eof_closed(cfg, PureSplit(k))


@given(overlap_configs(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_discord_backward_equals_swapped_forward(cfg, pair):
    pair = MixedPair(*pair)
    assert discord_closed(cfg, pair, "second") == discord_closed(
        cfg, pair.swapped(), "first"
    )


def test_delta_pm_symmetric_and_bounds():
    sym = OverlapConfig(0.4, 0.4, 0.4, -1)
    plus, minus = delta_pm(sym, (1, 2))
    assert minus == pytest.approx(0.0, abs=1e-14)
    assert plus >= abs(minus)


@given(overlap_configs(), st.sampled_from([(1, 2), (1, 3), (2, 3)]))
def test_delta_plus_dominates_delta_minus(cfg, pair):
    plus, minus = delta_pm(cfg, pair)
    assert plus >= abs(minus) - 1e-12


def test_delta_minus_asymmetric_value():
    # derived: Delta- = [(S_1 - S_2) + (E_23 - E_13)] / 2, evaluated in
    # high precision for (0.3, 0.6, 0.9) even
    cfg = OverlapConfig(0.3, 0.6, 0.9, +1)
    _, minus = delta_pm(cfg, (1, 2))
    assert minus == pytest.approx(-0.017729085817949199, abs=1e-14)
    structural = 0.5 * (
        (single_mode_entropy(cfg, 1) - single_mode_entropy(cfg, 2))
        + (eof_closed(cfg, MixedPair(2, 3)) - eof_closed(cfg, MixedPair(1, 3)))
    )
    assert minus == pytest.approx(structural, abs=1e-14)


def test_bloch_decompose_maximally_mixed():
    bf = bloch_decompose(np.eye(4) / 4)
    assert np.allclose(bf.x, 0) and np.allclose(bf.y, 0) and np.allclose(bf.R, 0)


def test_bloch_decompose_bell_state():
    bf = bloch_decompose(BELL_RHO)
    assert np.allclose(bf.x, 0, atol=1e-14) and np.allclose(bf.y, 0, atol=1e-14)
    assert np.allclose(bf.R, np.diag([1.0, -1.0, 1.0]), atol=1e-14)


@given(st.floats(0.0, 0.95), st.sampled_from([+1, -1]))
def test_bloch_mixed_pair_nonzero_pattern(p, sign):
    # only R11, R22, R33 and the z components of both local vectors survive
    from tricorr.mapping import mixed_reduced_density, normalization

    cfg = OverlapConfig(p, p, p, sign)
    bf = bloch_decompose(mixed_reduced_density(cfg, (1, 2)))
    n2 = normalization(cfg) ** 2
    root = np.sqrt((1 - p**2) * (1 - p**2))
    assert np.allclose(bf.x[:2], 0, atol=1e-12) and np.allclose(bf.y[:2], 0, atol=1e-12)
    assert bf.x[2] == pytest.approx(2 * n2 * (p + p * p * sign), abs=1e-12)
    assert bf.y[2] == pytest.approx(2 * n2 * (p + p * p * sign), abs=1e-12)
    assert bf.R[0, 0] == pytest.approx(2 * n2 * root, abs=1e-12)
    assert bf.R[1, 1] == pytest.approx(-2 * n2 * root * p * sign, abs=1e-12)
    assert bf.R[2, 2] == pytest.approx(2 * n2 * (p * p + p * sign), abs=1e-12)
    off_diag = bf.R - np.diag(np.diag(bf.R))
    assert np.max(np.abs(off_diag)) < 1e-12


@given(st.integers(0, 2**31 - 1))
def test_bloch_reconstruction_roundtrip(seed):
    from conftest import random_density

    rho = random_density(4, seed)
    assert np.allclose(bloch_decompose(rho).reconstruct(), rho, atol=1e-12)


def test_geometric_discord_product_state_is_zero():
    ket = np.kron([1, 0], [2**-0.5, 2**-0.5]).astype(complex)
    rho = np.outer(ket, ket)
    assert geometric_discord(rho, "first") == pytest.approx(0.0, abs=1e-14)
    assert geometric_discord(rho, "second") == pytest.approx(0.0, abs=1e-14)


def test_geometric_discord_bell_state_is_half():
    assert geometric_discord(BELL_RHO, "first") == pytest.approx(0.5, abs=1e-14)
    assert geometric_discord(BELL_RHO, "first", normalized=True) == pytest.approx(
        1.0, abs=1e-14
    )


def test_geometric_discord_pure_split_value():
    # derived: half the squared concurrence, 0.5 * 5/9 = 5/18
    cfg = OverlapConfig(0.5, 0.5, 0.5, +1)
    rho = bipartition_density(cfg, PureSplit(1))
    assert geometric_discord(rho, "first") == pytest.approx(5 / 18, abs=1e-12)


@given(overlap_configs(), st.sampled_from(ALL_BIPARTITIONS),
       st.sampled_from(["first", "second"]))
def test_geometric_discord_closed_matches_numeric(cfg, b, side):
    closed = geometric_discord_closed(cfg, b, side)
    numeric = geometric_discord(bipartition_density(cfg, b), side)
    assert abs(closed - numeric) < 1e-9


@given(overlap_configs(), st.sampled_from([1, 2, 3]))
def test_geometric_discord_pure_split_is_half_squared_concurrence(cfg, k):
    split = PureSplit(k)
    expected = 0.5 * concurrence_closed(cfg, split) ** 2
    assert abs(geometric_discord_closed(cfg, split, "first") - expected) < 1e-10
    assert geometric_discord_closed(cfg, split, "first") == geometric_discord_closed(
        cfg, split, "second"
    )


def test_geometric_discord_closed_orthogonal_pair_is_zero():
    cfg = OverlapConfig(0, 0, 0, +1)
    assert geometric_discord_closed(cfg, MixedPair(1, 2), "first") == 0.0


@pytest.mark.parametrize("p", [0.1, 0.25, 0.4])
def test_geometric_discord_small_overlap_branch(p):
    # below the branch point: p^2 (1+p)^2 (2 + (1-p)^2) / (4 (1+p^3)^2)
    cfg = OverlapConfig(p, p, p, +1)
    expected = p**2 * (1 + p) ** 2 * (2 + (1 - p) ** 2) / (4 * (1 + p**3) ** 2)
    assert geometric_discord_closed(cfg, MixedPair(1, 2), "first") == pytest.approx(
        expected, abs=1e-14
    )


@pytest.mark.parametrize("p", [0.45, 0.7, 0.9])
def test_geometric_discord_large_overlap_branch(p):
    # above the branch point: (1+p^2)(1+p)^2 (1-p)^2 / (4 (1+p^3)^2)
    cfg = OverlapConfig(p, p, p, +1)
    expected = (1 + p**2) * (1 + p) ** 2 * (1 - p) ** 2 / (4 * (1 + p**3) ** 2)
    assert geometric_discord_closed(cfg, MixedPair(1, 2), "first") == pytest.approx(
        expected, abs=1e-14
    )


def test_geometric_discord_branch_continuity():
    p_star = np.sqrt(2.0) - 1.0
    low = OverlapConfig(p_star - 1e-11, p_star - 1e-11, p_star - 1e-11, +1)
    high = OverlapConfig(p_star + 1e-11, p_star + 1e-11, p_star + 1e-11, +1)
    gap = abs(
        geometric_discord_closed(low, MixedPair(1, 2), "first")
        - geometric_discord_closed(high, MixedPair(1, 2), "first")
    )
    assert gap < 1e-10


def test_geometric_discord_sides_differ_for_asymmetric_overlaps():
    # measurement side matters once the first branch is active and p_i != p_j
    cfg = OverlapConfig(0.1, 0.3, 0.2, +1)
    first = geometric_discord_closed(cfg, MixedPair(1, 2), "first")
    second = geometric_discord_closed(cfg, MixedPair(1, 2), "second")
    assert abs(first - second) > 1e-4
    for side in ("first", "second"):
        rho = bipartition_density(cfg, MixedPair(1, 2))
        assert abs(
            geometric_discord_closed(cfg, MixedPair(1, 2), side)
            - geometric_discord(rho, side)
        ) < 1e-12


def test_k_eigenvalue_ordering():
    # the transverse eigenvalues obey l3 = l2 pk^2 <= l2 for every side
    for cfg in seeded_configs(20, tag=11):
        for side in ("first", "second"):
            l1, l2, l3 = mixed_pair_k_eigenvalues(cfg, MixedPair(1, 2), side)
            assert l3 <= l2 + 1e-15
            assert l3 == pytest.approx(l2 * cfg.overlap(3) ** 2, abs=1e-15)
            del l1


def test_pairwise_report_fields_and_validation():
    cfg = OverlapConfig(0.5, 0.5, 0.5, +1)
    report = pairwise_report(cfg, MixedPair(1, 2))
    assert report.label() == "12"
    assert report.concurrence == pytest.approx(1 / 3)
    assert report.eof == pytest.approx(EOF_ONE_THIRD, abs=1e-13)
    assert report.discord_forward == pytest.approx(report.discord_backward, abs=1e-13)
    assert report.concurrence_oracle is None

    with_oracle = pairwise_report(cfg, MixedPair(1, 2), include_oracle=True)
    assert with_oracle.concurrence_oracle == pytest.approx(1 / 3, abs=1e-9)
    assert with_oracle.discord_forward_oracle == pytest.approx(
        report.discord_forward, abs=1e-4
    )


def test_invalid_measured_side_rejected():
    cfg = OverlapConfig(0.5, 0.5, 0.5, +1)
    with pytest.raises(ValueError, match="measured_side"):
        discord_closed(cfg, MixedPair(1, 2), "both")
    with pytest.raises(ValueError, match="measured_side"):
        geometric_discord_closed(cfg, MixedPair(1, 2), "up")

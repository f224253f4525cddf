"""Small dense complex linear algebra for two-qubit and three-qubit problems.

Everything here works on plain ``numpy`` arrays of the supported dimensions
(2, 3, 4, 8).  All entropies are base-2 (bits).
"""

from __future__ import annotations

import numpy as np

SUPPORTED_DIMS = (2, 3, 4, 8)

#: Floor below which a density eigenvalue is treated as genuinely negative
#: rather than rounding noise.
EIG_FLOOR = 1e-12

SIGMA_0 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


class LinalgError(ValueError):
    """Invalid matrix input (shape, hermiticity, spectrum, normalization)."""


def _as_square(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise LinalgError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise LinalgError("matrix contains non-finite entries")
    return m


def tensor(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Kronecker product, restricted to the dimensions this library handles."""
    a = _as_square(a)
    b = _as_square(b)
    dim = a.shape[0] * b.shape[0]
    if dim not in SUPPORTED_DIMS:
        raise LinalgError(f"unsupported result dimension {dim}")
    return np.kron(a, b)


def partial_trace(rho: np.ndarray, trace_out: str, dim_first: int, dim_second: int) -> np.ndarray:
    """Trace out one factor of a bipartite density matrix.

    ``trace_out`` selects which subsystem is discarded ("first" or "second");
    the returned matrix describes the kept subsystem.  Trace is preserved
    exactly up to floating-point addition.
    """
    rho = _as_square(rho)
    if dim_first * dim_second != rho.shape[0]:
        raise LinalgError(
            f"dimension mismatch: {dim_first}x{dim_second} != {rho.shape[0]}"
        )
    t = rho.reshape(dim_first, dim_second, dim_first, dim_second)
    if trace_out == "first":
        return np.einsum("abad->bd", t)
    if trace_out == "second":
        return np.einsum("abcb->ac", t)
    raise LinalgError(f"trace_out must be 'first' or 'second', got {trace_out!r}")


def hermiticity_defect(m: np.ndarray) -> float:
    """Max-abs deviation of a matrix from its own conjugate transpose."""
    return float(np.max(np.abs(m - m.conj().T)))


def hermitian_eigenvalues(m: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted in descending order."""
    m = _as_square(m)
    if hermiticity_defect(m) > tol:
        raise LinalgError("matrix is not Hermitian within tolerance")
    w = np.linalg.eigvalsh(m)
    return w[::-1].copy()


def clamp_spectrum(w: np.ndarray, floor: float = EIG_FLOOR) -> np.ndarray:
    """Zero out tiny negative eigenvalues; reject genuinely negative ones."""
    w = np.asarray(w, dtype=float)
    if np.min(w) < -floor:
        raise LinalgError(f"negative eigenvalue {np.min(w):.3e} below -{floor:.0e}")
    return np.where(w < 0.0, 0.0, w)


def check_density(rho: np.ndarray, tol: float = 1e-9) -> np.ndarray:
    """Validate a density matrix: Hermitian, unit trace, positive spectrum.

    Returns the validated array unchanged so calls compose:
    ``w = hermitian_eigenvalues(check_density(rho))``.
    """
    rho = _as_square(rho)
    if rho.shape[0] not in SUPPORTED_DIMS:
        raise LinalgError(f"unsupported dimension {rho.shape[0]}")
    if hermiticity_defect(rho) > tol:
        raise LinalgError("density matrix is not Hermitian within tolerance")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > tol:
        raise LinalgError(f"density matrix trace {tr:.6g} != 1")
    w = np.linalg.eigvalsh(rho)
    if np.min(w) < -max(tol, EIG_FLOOR):
        raise LinalgError(f"density matrix has negative eigenvalue {np.min(w):.3e}")
    return rho


def binary_entropy(x: float, tol: float = 1e-9) -> float:
    """H(x) = -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0."""
    if x < -tol or x > 1.0 + tol:
        raise LinalgError(f"binary_entropy argument {x!r} outside [0, 1]")
    x = min(max(float(x), 0.0), 1.0)
    total = 0.0
    for v in (x, 1.0 - x):
        if v > 0.0:
            total -= v * np.log2(v)
    return total


def entropy_from_spectrum(w: np.ndarray, floor: float = EIG_FLOOR) -> float:
    """Von Neumann entropy in bits from an eigenvalue list."""
    w = clamp_spectrum(w, floor)
    nz = w[w > 0.0]
    return float(-np.sum(nz * np.log2(nz)))


def von_neumann_entropy(rho: np.ndarray, tol: float = 1e-9) -> float:
    """Entropy in bits of a density matrix (eigenvalues clamped at zero)."""
    rho = check_density(rho, tol)
    return entropy_from_spectrum(np.linalg.eigvalsh(rho))

"""Dense complex linear algebra kernels and numerical contracts.

Matrices and vectors are plain ``numpy.ndarray`` objects with dtype
``complex128``; every routine validates finiteness and shape instead of
trusting the caller. All residual checks in this package use the Frobenius
norm (cheap and basis-independent), and a single rank convention: singular
values below ``tol.abs`` times the largest singular value are treated as
zero everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimMismatch, NonFinite, NotHermitian


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair used by all residual checks.

    A residual ``r`` at scale ``s`` passes when ``r <= abs + rel * s``.
    """

    abs: float = 1e-10
    rel: float = 1e-10

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.abs == 0 and self.rel == 0:
            raise ValueError("abs and rel tolerance cannot both be zero")

    def bound(self, scale: float) -> float:
        """Largest residual accepted at the given scale."""
        return self.abs + self.rel * float(scale)


DEFAULT_TOL = Tolerance()

#: Looser tolerance used where a classification gates an algorithm branch.
CLASSIFY_TOL = Tolerance(abs=1e-8, rel=0.0)


def fro(M: np.ndarray) -> float:
    """Frobenius norm."""
    return float(np.linalg.norm(M))


def as_matrix(M, square: bool = False) -> np.ndarray:
    """Coerce to a finite 2-d complex array (copy only when needed)."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise DimMismatch(f"expected a matrix, got shape {M.shape}")
    if square and M.shape[0] != M.shape[1]:
        raise DimMismatch(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M.real)) or not np.all(np.isfinite(M.imag)):
        raise NonFinite("matrix has non-finite entries")
    return M


def as_vector(v) -> np.ndarray:
    """Coerce to a finite 1-d complex array."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1:
        raise DimMismatch(f"expected a vector, got shape {v.shape}")
    if not np.all(np.isfinite(v.real)) or not np.all(np.isfinite(v.imag)):
        raise NonFinite("vector has non-finite entries")
    return v


def svd(M) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition ``M = U @ diag(sigma) @ V.conj().T``.

    Returns
    -------
    U, sigma, V
        ``U`` and ``V`` have orthonormal columns (economy size) and
        ``sigma`` is real, nonnegative and nonincreasing. Note that ``V``
        is returned, not ``V.conj().T`` as in ``numpy.linalg.svd``.
    """
    M = as_matrix(M)
    U, s, Vh = np.linalg.svd(M, full_matrices=False)
    return U, s, Vh.conj().T


def hermitian_eig(M, tol: Tolerance = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix.

    Returns ``(values, vectors)`` with real eigenvalues in ascending order
    and unitary ``vectors`` (eigenvectors as columns). Raises
    :class:`NotHermitian` when ``M`` deviates from ``M*`` beyond ``tol``.
    """
    M = as_matrix(M, square=True)
    dev = fro(M - M.conj().T)
    if dev > tol.bound(fro(M)):
        raise NotHermitian(f"matrix deviates from Hermitian by {dev:.3e}")
    values, vectors = np.linalg.eigh(M)
    return values, vectors


def rank_cutoff(sigma: np.ndarray, tol: Tolerance = DEFAULT_TOL) -> float:
    """Threshold below which singular values count as zero."""
    return tol.abs * (float(sigma[0]) if len(sigma) else 0.0)


def nullspace(M, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the numerical kernel of ``M``.

    Returns an ``n x k`` array whose columns span the kernel; ``k`` may be
    zero. A singular value is treated as zero when it falls below
    ``tol.abs`` times the largest one.
    """
    M = as_matrix(M)
    _, s, Vh = np.linalg.svd(M, full_matrices=True)
    rank = int(np.sum(s > rank_cutoff(s, tol)))
    return Vh.conj().T[:, rank:]


def cluster_indices(values: np.ndarray, gap: float) -> list[list[int]]:
    """Group (possibly complex) values into clusters of mutual distance <= gap.

    Single-linkage union by pairwise distance; returns index groups sorted
    by the position of their first member, so the grouping of presorted
    input is deterministic.
    """
    values = np.asarray(values)
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= gap:
                parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed random unitary matrix."""
    z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))

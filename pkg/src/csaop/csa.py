"""Complex-self-adjointness: verification, generation, and spectral pairing.

A square matrix ``H`` is *C-self-adjoint* with respect to an antiunitary
``C`` when ``C H C^{-1} = H*``; it is *C-real* when ``C H C^{-1} = H``
(equivalently ``[C, H] = 0``). On a finite-dimensional space the notions
"C-symmetric" and "C-self-adjoint" coincide, because an inclusion between
everywhere-defined maps is an equality; the checks below report both under
one roof.

The generator :func:`generate_csa` samples the *real-linear* solution space
of ``A @ conj(H) = H* @ A``. Symmetrizing ``(M + C^{-1} M* C) / 2`` would
only be a projection onto that space when ``C^2 = +-I``, so the linear
system route is used to cover arbitrary antiunitary ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .antiunitary import AntiunitaryOp, conjugate_linear_map
from .errors import DimMismatch, EmptySolutionSpace, NotCsa
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, cluster_indices, fro, nullspace

#: Absolute eigenvalue clustering gap, relative to ||H||. Eigenvalues of
#: non-normal matrices are only accurate to roughly sqrt(machine epsilon).
EIG_CLUSTER_GAP = 1e-6


@dataclass(frozen=True)
class CsaReport:
    """Outcome of a C-self-adjointness (or C-reality) residual check."""

    residual: float
    is_csa: bool
    tol_used: Tolerance

    def to_json(self) -> dict:
        return {"residual": self.residual, "is_csa": self.is_csa}


def _check(H, C: AntiunitaryOp, target: np.ndarray, tol: Tolerance) -> CsaReport:
    residual = fro(conjugate_linear_map(C, H) - target)
    return CsaReport(residual=residual, is_csa=residual <= tol.bound(fro(H)), tol_used=tol)


def check_c_selfadjoint(H, C: AntiunitaryOp, tol: Tolerance = DEFAULT_TOL) -> CsaReport:
    """Residual check of ``C H C^{-1} = H*`` (Frobenius norm)."""
    H = as_matrix(H, square=True)
    return _check(H, C, H.conj().T, tol)


def check_c_real(H, C: AntiunitaryOp, tol: Tolerance = DEFAULT_TOL) -> CsaReport:
    """Residual check of ``C H C^{-1} = H``, i.e. the commutation [C, H] = 0."""
    H = as_matrix(H, square=True)
    return _check(H, C, H, tol)


def _require_csa(H, C, tol) -> np.ndarray:
    H = as_matrix(H, square=True)
    report = check_c_selfadjoint(H, C, tol)
    if not report.is_csa:
        raise NotCsa(f"C-self-adjointness residual {report.residual:.3e} exceeds tolerance")
    return H


# Cache of constraint nullspace bases keyed by the unitary part's bytes;
# generate_csa is typically called for many seeds with the same C.
_BASIS_CACHE: dict[bytes, np.ndarray] = {}


def _solution_basis(C: AntiunitaryOp) -> np.ndarray:
    """Orthonormal basis (rows) of the real-linear space of solutions of
    ``A @ conj(H) = H* @ A``, as vectors [Re H, Im H] of length 2 n^2."""
    A = C.unitary_part
    key = A.tobytes()
    cached = _BASIS_CACHE.get(key)
    if cached is not None:
        return cached
    n = C.dim
    columns = []
    for unit in (1.0, 1.0j):
        for p in range(n):
            for q in range(n):
                E = np.zeros((n, n), dtype=complex)
                E[p, q] = unit
                L = A @ np.conj(E) - E.conj().T @ A
                columns.append(np.concatenate([L.real.ravel(), L.imag.ravel()]))
    constraint = np.array(columns).T
    basis = np.ascontiguousarray(nullspace(constraint).T.real)  # rows; real by construction
    basis.setflags(write=False)
    _BASIS_CACHE[key] = basis
    return basis


def generate_csa(C: AntiunitaryOp, seed: int) -> np.ndarray:
    """Pseudo-random C-self-adjoint matrix, deterministic in ``seed``.

    Samples a standard-normal combination of an orthonormal basis of the
    solution space of the structure constraint. The space always contains
    the identity, so it is never empty.
    """
    basis = _solution_basis(C)
    if basis.shape[0] == 0:
        raise EmptySolutionSpace("structure constraint admits only H = 0")
    rng = np.random.default_rng(seed)
    vec = rng.standard_normal(basis.shape[0]) @ basis
    n = C.dim
    return vec[: n * n].reshape(n, n) + 1j * vec[n * n :].reshape(n, n)


def eigen_pairing(
    H, C: AntiunitaryOp, tol: Tolerance = DEFAULT_TOL
) -> list[tuple[complex, np.ndarray, float]]:
    """Eigenvector pairing ``H psi = lambda psi  =>  H* (C psi) = conj(lambda) (C psi)``.

    For each eigenpair of ``H`` reports the residual
    ``||(H* - conj(lambda) I) C psi||``; all residuals are small exactly
    when ``H`` is C-self-adjoint (this is the finite-dimensional reason the
    residual spectrum is empty). Raises :class:`NotCsa` otherwise.
    """
    H = _require_csa(H, C, tol)
    values, vectors = np.linalg.eig(H)
    Hs = H.conj().T
    out = []
    for lam, psi in zip(values, vectors.T):
        mapped = C.apply(psi)
        residual = float(np.linalg.norm(Hs @ mapped - np.conj(lam) * mapped))
        out.append((complex(lam), psi, residual))
    return out


def eigenvalue_multiplicities(H, gap: float | None = None) -> list[int]:
    """Cluster the eigenvalues of ``H`` and return the cluster sizes.

    The default gap is ``EIG_CLUSTER_GAP * ||H||``.
    """
    H = as_matrix(H, square=True)
    if gap is None:
        gap = EIG_CLUSTER_GAP * fro(H)
    values = np.linalg.eigvals(H)
    order = np.lexsort((values.imag, values.real))
    clusters = cluster_indices(values[order], gap)
    return [len(c) for c in clusters]


def kernel_pairing(
    H, C: AntiunitaryOp, lam: complex, tol: Tolerance = DEFAULT_TOL
) -> tuple[int, int, bool]:
    """Kernel dimensions of ``H - lam I`` and ``H* - conj(lam) I`` plus the
    mapping property of ``C`` between them.

    For a C-self-adjoint ``H`` the two nullities agree and ``C`` maps the
    first kernel onto the second; ``mapped_ok`` reports whether every
    kernel basis vector ``f`` satisfies
    ``||(H* - conj(lam) I) C f|| <= tol.bound(||H||)``.
    """
    H = _require_csa(H, C, tol)
    if C.dim != H.shape[0]:
        raise DimMismatch("operator dimensions differ")
    n = H.shape[0]
    shifted = H - lam * np.eye(n)
    shifted_adj = H.conj().T - np.conj(lam) * np.eye(n)
    ker = nullspace(shifted, tol)
    ker_adj = nullspace(shifted_adj, tol)
    bound = tol.bound(fro(H))
    mapped_ok = all(
        np.linalg.norm(shifted_adj @ C.apply(f)) <= bound for f in ker.T
    )
    return ker.shape[1], ker_adj.shape[1], mapped_ok

"""Antilinear eigenvalue problems via the resolvent, and pseudospectra.

For a C-self-adjoint ``H`` and a shift ``z`` in the resolvent set, the
resolvent ``R(z) = (H - z I)^{-1}`` is again C-self-adjoint, and its
refined singular-value expansion turns into a complete orthonormal family
of solutions of the antilinear eigenvalue problem

    (H - z I) psi_j = lambda_j C psi_j,      lambda_j > 0 ascending,

with ``lambda_j = 1 / sigma_j(R(z))`` and ``psi_j = C^{-1} phi_j``. In
particular ``||R(z)|| = 1 / lambda_1``, which drives the pseudospectrum
scan: ``z`` belongs to the epsilon-pseudospectrum iff ``z`` is in the
spectrum or ``||R(z)|| > 1 / epsilon`` (strict, per the definition).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .antiunitary import AntiunitaryOp
from .csa import _require_csa
from .decomp import SVD_CLUSTER_GAP, refined_svd
from .errors import NumericalFailure, ZInSpectrum
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, fro

#: sigma_min(H - z I) at or below this fraction of ||H - z I|| counts as
#: "z in the spectrum".
SPECTRUM_CUTOFF = 1e-12


@dataclass(frozen=True)
class AntilinearEigenSystem:
    """Solutions of ``(H - z I) psi_j = lambda_j C psi_j``.

    ``lambdas`` is positive and nondecreasing; the columns of ``psis`` are
    orthonormal and, in finite dimension, form a complete basis.
    """

    z: complex
    lambdas: np.ndarray
    psis: np.ndarray


@dataclass(frozen=True)
class PseudospectrumGrid:
    """Resolvent-norm samples over a rectangular grid.

    ``in_pseudospectrum`` marks points with ``resolvent_norm > 1/epsilon``
    (points numerically in the spectrum carry ``resolvent_norm = inf``).
    """

    epsilon: float
    zs: np.ndarray
    resolvent_norms: np.ndarray
    in_pseudospectrum: np.ndarray

    @property
    def points(self) -> list[tuple[complex, float, bool]]:
        return [
            (complex(z), float(r), bool(m))
            for z, r, m in zip(self.zs, self.resolvent_norms, self.in_pseudospectrum)
        ]


def _shifted(H: np.ndarray, z: complex) -> np.ndarray:
    return H - z * np.eye(H.shape[0])


def resolvent_norm(H, z: complex) -> float:
    """Operator norm ``||(H - z I)^{-1}|| = 1 / sigma_min(H - z I)``.

    Returns ``inf`` when ``z`` is numerically in the spectrum.
    """
    M = _shifted(as_matrix(H, square=True), z)
    s = np.linalg.svd(M, compute_uv=False)
    smin = float(s[-1]) if len(s) else 0.0
    if smin <= SPECTRUM_CUTOFF * fro(M):
        return float("inf")
    return 1.0 / smin


def antilinear_eigensystem(
    H, C: AntiunitaryOp, z: complex, tol: Tolerance = DEFAULT_TOL
) -> AntilinearEigenSystem:
    """Solve ``(H - z I) psi = lambda C psi`` for a C-self-adjoint ``H``.

    The resolvent is inverted through its SVD (robust near the spectrum),
    verified to be C-self-adjoint, and expanded by :func:`refined_svd`;
    the expansion is then transported back. Raises :class:`ZInSpectrum`
    when ``z`` is numerically in the spectrum, and propagates
    :class:`UnsupportedDegeneracy` from the refined SVD when the resolvent
    has degenerate singular values and ``C`` is not involutive.
    """
    H = _require_csa(H, C, tol)
    z = complex(z)
    M = _shifted(H, z)
    W, s, Vh = np.linalg.svd(M)
    if s[-1] <= SPECTRUM_CUTOFF * fro(M):
        raise ZInSpectrum(f"sigma_min(H - zI) = {s[-1]:.3e}; shift z = {z} is in the spectrum")
    resolvent = (Vh.conj().T / s) @ W.conj().T

    expansion = refined_svd(resolvent, C, tol)
    # sigma(R) descending makes lambda = 1/sigma ascending, pairs preserved
    lambdas = 1.0 / expansion.sigmas
    psis = expansion.etas
    system = AntilinearEigenSystem(z=z, lambdas=lambdas, psis=psis)

    n = H.shape[0]
    # vectors inside a singular-value cluster of R may mix, which shifts
    # the matching lambda by at most the cluster's lambda spread
    sigma = expansion.sigmas
    gap = SVD_CLUSTER_GAP * sigma[0]
    close = np.abs(np.diff(sigma)) <= gap
    slack = float(np.max(np.abs(np.diff(lambdas))[close], initial=0.0))
    bound = tol.bound(max(1.0, fro(H)) + float(lambdas[-1])) + 2.0 * slack * np.sqrt(n)
    residual = fro(M @ psis - (C.unitary_part @ np.conj(psis)) * lambdas)
    complete = fro(psis @ psis.conj().T - np.eye(n))
    if residual > bound or complete > tol.bound(1.0):
        raise NumericalFailure(
            f"expansion residual {residual:.3e} or completeness defect {complete:.3e} "
            "exceeds tolerance"
        )
    return system


def pseudospectrum(
    H,
    epsilon: float,
    bounds: tuple[float, float, float, float],
    resolution: int,
) -> PseudospectrumGrid:
    """Scan ``resolvent_norm`` over a rectangle and mark the pseudospectrum.

    ``bounds = (re_min, re_max, im_min, im_max)``; ``resolution`` points
    per axis (so ``resolution**2`` grid points, imaginary part varying
    slowest). Grid points are independent; they are evaluated in chunked
    batches, and the result does not depend on the evaluation order.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if resolution < 2:
        raise ValueError("resolution must be at least 2")
    H = as_matrix(H, square=True)
    re_min, re_max, im_min, im_max = map(float, bounds)
    res = np.linspace(re_min, re_max, resolution)
    ims = np.linspace(im_min, im_max, resolution)
    zs = (res[None, :] + 1j * ims[:, None]).ravel()

    n = H.shape[0]
    eye = np.eye(n)
    norms = np.empty(len(zs))
    chunk = max(1, 2**22 // max(1, n * n))  # cap batch memory at ~64 MB
    for start in range(0, len(zs), chunk):
        block = zs[start : start + chunk]
        shifted = H[None, :, :] - block[:, None, None] * eye[None, :, :]
        s = np.linalg.svd(shifted, compute_uv=False)
        smin = s[:, -1]
        scale = np.linalg.norm(shifted, axis=(1, 2))
        with np.errstate(divide="ignore"):
            vals = np.where(smin <= SPECTRUM_CUTOFF * scale, np.inf, 1.0 / smin)
        norms[start : start + len(block)] = vals
    mask = norms > 1.0 / epsilon
    return PseudospectrumGrid(
        epsilon=float(epsilon), zs=zs, resolvent_norms=norms, in_pseudospectrum=mask
    )

"""Refined polar and singular-value decompositions.

For a C-self-adjoint matrix ``H`` the classical polar decomposition
``H = U |H|`` refines to ``H = C^{-1} J |H|`` where ``J = C o U`` is a
partially antiunitary map with initial and final set ``range(|H|)`` that
commutes with ``|H|``. ``J`` inherits the involution class of ``C`` on
``range(|H|)``, which makes a further refinement possible: eigenvectors of
``|H|`` can be re-phased (simple eigenvalues) or re-combined (involutive
``J``) into a *J-fixed* orthonormal family ``phi_j``, giving the rank-one
expansion

    H  = sum_j sigma_j (C^{-1} phi_j) <phi_j, .>
    H* = sum_j sigma_j phi_j <C^{-1} phi_j, .>

When a nonzero singular value is degenerate and ``C`` is not involutive,
no such basis is guaranteed; for anti-involutive ``C`` it cannot exist at
all (``J phi = phi`` with ``J^2 = -I`` forces ``phi = -phi``), and every
nonzero singular value is even-fold degenerate instead.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .antiunitary import (
    AntilinearMap,
    AntiunitaryOp,
    InvolutionClass,
    classify,
    compose_antilinear,
)
from .csa import _require_csa
from .errors import (
    NotInvariant,
    NotInvolutive,
    NumericalFailure,
    UnsupportedDegeneracy,
)
from .linalg import DEFAULT_TOL, Tolerance, as_matrix, as_vector, cluster_indices, fro, rank_cutoff

#: Relative singular-value gap below which values count as one cluster.
SVD_CLUSTER_GAP = 1e-6

#: Fallback threshold in the fixed-basis construction: when ||psi + J psi||
#: falls below this, i*psi is used instead (it is J-fixed in the limit).
FIX_FALLBACK = 1e-8


@dataclass(frozen=True)
class RefinedPolar:
    """Triple ``(|H|, U, J)`` with ``H = U |H| = C^{-1} J |H|``.

    ``U`` is the partial isometry of the classical polar decomposition
    (zero on ``ker H``) and ``J = C o U`` is antilinear, partially
    antiunitary with initial and final set ``range(|H|)``, and commutes
    with ``|H|``.
    """

    absH: np.ndarray
    U: np.ndarray
    J: AntilinearMap


@dataclass(frozen=True)
class RefinedSVD:
    """Nonzero singular values with a J-fixed eigenbasis of ``|H|``.

    ``phis[:, j]`` is a unit eigenvector of ``|H|`` for ``sigmas[j]`` with
    ``J phi_j = phi_j``; ``etas[:, j] = C^{-1} phi_j`` is the matching
    eigenvector of ``|H*|``.
    """

    sigmas: np.ndarray
    phis: np.ndarray
    etas: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """``sum_j sigma_j eta_j phi_j*``, which reproduces ``H``."""
        return (self.etas * self.sigmas) @ self.phis.conj().T

    def reconstruct_adjoint(self) -> np.ndarray:
        """``sum_j sigma_j phi_j eta_j*``, which reproduces ``H*``."""
        return (self.phis * self.sigmas) @ self.etas.conj().T


def _polar_data(H, C: AntiunitaryOp, tol: Tolerance):
    """Shared kernel: csa check, SVD, partial isometry U, |H| and J."""
    H = _require_csa(H, C, tol)
    W, s, Vh = np.linalg.svd(H)
    V = Vh.conj().T
    keep = s > rank_cutoff(s, tol)
    U = W[:, keep] @ V[:, keep].conj().T
    absH = (V * s) @ V.conj().T
    J = compose_antilinear(C, U)
    return H, W, s, V, keep, U, absH, J


def refined_polar(H, C: AntiunitaryOp, tol: Tolerance = DEFAULT_TOL) -> RefinedPolar:
    """Refined polar decomposition ``H = C^{-1} J |H|`` of a C-self-adjoint H.

    Raises :class:`NotCsa` when ``H`` fails the C-self-adjointness check
    and :class:`NumericalFailure` when the computed factors do not satisfy
    the decomposition identities within tolerance.
    """
    H, _, _, _, _, U, absH, J = _polar_data(H, C, tol)
    bound = tol.bound(max(1.0, fro(H)))
    polar_res = fro(H - U @ absH)
    # J |H| = |H| J as antilinear maps: B conj(|H|) = |H| B
    commute_res = fro(J.matrix @ np.conj(absH) - absH @ J.matrix)
    if polar_res > bound or commute_res > bound:
        raise NumericalFailure(
            f"polar residual {polar_res:.3e} / commutation residual {commute_res:.3e} "
            f"exceed bound {bound:.3e}"
        )
    return RefinedPolar(absH=absH, U=U, J=J)


def phase_fix(J: AntilinearMap, psi, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Re-phase a unit vector spanning a J-invariant line so J fixes it.

    If ``J psi = exp(i a) psi`` then ``phi = exp(i a / 2) psi`` satisfies
    ``J phi = phi``. Raises :class:`NotInvariant` when ``|<psi, J psi>|``
    is not 1 within tolerance (the line is not J-invariant, or ``psi``
    meets the kernel of a partial ``J``).
    """
    psi = as_vector(psi)
    phase = np.vdot(psi, J.apply(psi))
    if abs(abs(phase) - 1.0) > tol.bound(1.0):
        raise NotInvariant(f"|<psi, J psi>| = {abs(phase):.6f}, expected 1")
    return np.exp(0.5j * np.angle(phase)) * psi


def fix_basis_involutive(J: AntilinearMap, E, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """J-fixed orthonormal basis of a J-invariant subspace, J involutive there.

    ``E`` holds orthonormal columns spanning the subspace. The construction
    is the classical greedy one: take the first remaining basis vector
    ``psi``, use ``v = psi + J psi`` (or ``v = i psi`` when that nearly
    vanishes; both are J-fixed), normalize, orthogonalize the rest against
    it and repeat. Input order fixes the output, so results are
    deterministic.
    """
    E = as_matrix(E)
    m = E.shape[1]
    if m == 0:
        return E.copy()
    gram_dev = fro(E.conj().T @ E - np.eye(m))
    if gram_dev > 1e-8:
        raise ValueError(f"basis columns not orthonormal (deviation {gram_dev:.3e})")
    # restriction of J to span(E) in E-coordinates: x -> a @ conj(x)
    image = J.matrix @ np.conj(E)
    a = E.conj().T @ image
    bound = tol.bound(1.0)
    invariance = fro(image - E @ a)
    if invariance > bound:
        raise NotInvariant(f"J maps span(E) out of itself by {invariance:.3e}")
    involution = fro(a @ np.conj(a) - np.eye(m))
    if involution > bound:
        raise NotInvolutive(f"J^2 deviates from identity on span(E) by {involution:.3e}")

    fixed: list[np.ndarray] = []
    remaining = [np.eye(m, dtype=complex)[:, j] for j in range(m)]
    while remaining:
        x = remaining[0]
        v = x + a @ np.conj(x)
        if np.linalg.norm(v) < FIX_FALLBACK:
            v = 1j * x
        phi = v / np.linalg.norm(v)
        fixed.append(phi)
        survivors: list[np.ndarray] = []
        for cand in remaining:
            w = cand - phi * np.vdot(phi, cand)
            for s in survivors:
                w = w - s * np.vdot(s, w)
            # second pass stabilizes the Gram-Schmidt sweep
            w = w - phi * np.vdot(phi, w)
            for s in survivors:
                w = w - s * np.vdot(s, w)
            norm = np.linalg.norm(w)
            if norm > 1e-6 and len(survivors) < len(remaining) - 1:
                survivors.append(w / norm)
        if len(survivors) != len(remaining) - 1:
            raise NumericalFailure("lost rank while orthogonalizing the fixed basis")
        remaining = survivors
    return E @ np.column_stack(fixed)


def check_fixable_2d(J: AntilinearMap, psi1, psi2, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Necessary condition for a J-fixed basis of a 2-d J-invariant span.

    With ``a_jk = <psi_j, J psi_k>``, a fixed orthonormal basis can only
    exist when ``a_12 = a_21``; that always holds for involutive ``J`` but
    can fail otherwise. Only necessity is tested; the condition being true
    does not by itself guarantee a fixed basis.
    """
    psi1, psi2 = as_vector(psi1), as_vector(psi2)
    E = np.column_stack([psi1, psi2])
    image = J.matrix @ np.conj(E)
    a = E.conj().T @ image
    bound = tol.bound(1.0)
    if fro(image - E @ a) > bound:
        raise NotInvariant("span(psi1, psi2) is not J-invariant")
    return bool(abs(a[0, 1] - a[1, 0]) <= bound)


def refined_svd(H, C: AntiunitaryOp, tol: Tolerance = DEFAULT_TOL) -> RefinedSVD:
    """Singular-value expansion of a C-self-adjoint ``H`` with J-fixed vectors.

    Requires every nonzero singular value to be simple (relative cluster
    gap ``SVD_CLUSTER_GAP``) or ``C`` to be involutive; otherwise raises
    :class:`UnsupportedDegeneracy`. For anti-involutive ``C`` the latter
    always fires on nonzero ``H``, since ``J^2 = -I`` on ``range(|H|)``
    admits no fixed vector. More generally ``H`` commutes with the unitary
    ``C^2``, whose conjugate eigenvalue pairs force paired singular
    values, so a simple nonzero singular value can only occur where
    ``C^2`` acts as the identity.
    """
    H, _, s, V, keep, _, absH, J = _polar_data(H, C, tol)
    kept = np.flatnonzero(keep)
    kind = classify(C)
    # the construction gates below only need to confirm structure, not
    # re-certify it at arithmetic precision
    gate = Tolerance(abs=max(tol.abs, 1e-8), rel=tol.rel)

    phis_blocks: list[np.ndarray] = []
    spread = 0.0  # widest cluster: mixing its vectors costs up to this much
    if kept.size:
        gap = SVD_CLUSTER_GAP * s[0]
        for group in cluster_indices(s[kept], gap):
            idx = kept[group]
            E = V[:, idx]
            spread = max(spread, float(s[idx[0]] - s[idx[-1]]))
            if kind is InvolutionClass.INVOLUTIVE:
                phis_blocks.append(fix_basis_involutive(J, E, gate))
            elif len(idx) == 1:
                phis_blocks.append(phase_fix(J, E[:, 0], gate)[:, None])
            else:
                detail = (
                    "no J-fixed vector can exist for anti-involutive C"
                    if kind is InvolutionClass.ANTI_INVOLUTIVE
                    else "C is not involutive"
                )
                raise UnsupportedDegeneracy(
                    f"singular value {s[idx[0]]:.6g} has multiplicity {len(idx)} and {detail}"
                )
    phis = np.column_stack(phis_blocks) if phis_blocks else np.zeros((H.shape[0], 0), complex)
    sigmas = s[kept]
    etas = np.column_stack([C.apply_inverse(phi) for phi in phis.T]) if kept.size else phis.copy()
    result = RefinedSVD(sigmas=sigmas, phis=phis, etas=etas)

    bound = tol.bound(max(1.0, fro(H))) + 2.0 * spread * np.sqrt(max(1, len(sigmas)))
    eig_res = fro(absH @ phis - phis * sigmas)
    fix_res = fro(J.matrix @ np.conj(phis) - phis)
    recon_res = fro(H - result.reconstruct())
    adj_res = fro(H.conj().T - result.reconstruct_adjoint())
    worst = max(eig_res, fix_res, recon_res, adj_res)
    if worst > bound:
        raise NumericalFailure(
            f"refined SVD residual {worst:.3e} exceeds bound {bound:.3e}"
        )
    return result

"""The spin-1/2 toy model with asymmetric off-diagonal coupling.

The momentum-space symbol [[k^2, k], [alpha k, k^2]] is self-adjoint only
at alpha = 1, yet its spectrum stays real for every alpha >= 0 thanks to a
commuting antiunitary symmetry. The script sweeps the coupling, tabulates
which constant conjugations work, and runs the exhaustive search for a
constant involutive one.
"""

import numpy as np

from csaop import check_c_real, check_c_selfadjoint
from csaop.antiunitary import AntiunitaryOp
from csaop.pauli import (
    SIGMA1,
    SIGMA3,
    constant_conjugation_search,
    discretize,
    distance_to_closed_form,
    lift_conjugation,
    spectrum_sample,
)

print("== spectrum as a function of the coupling ==")
grid = np.linspace(-3, 3, 601)
for alpha in (4.0, 0.0, -1.0):
    eigs = spectrum_sample(alpha, grid).eigenvalues.ravel()
    if alpha >= 0:
        print(f"  alpha = {alpha:+.1f}: real in [{eigs.real.min():+.4f}, {eigs.real.max():.1f}]"
              f"  (predicted left endpoint {-alpha / 4:+.4f})")
    else:
        worst = max(distance_to_closed_form(alpha, lam) for lam in eigs)
        print(f"  alpha = {alpha:+.1f}: parabola |Im|^2 = {-alpha:.0f} Re,"
              f" max distance to it {worst:.2e}")

print()
print("== which constant antiunitaries conjugate the model? ==")
kgrid = np.linspace(-2, 2, 9)
rows = []
for alpha in (-2.0, -1.0, 0.5, 1.0):
    H, C2, P = discretize(alpha, kgrid)
    score = {
        "C2": check_c_selfadjoint(H, C2).is_csa,
        "K": check_c_selfadjoint(H, lift_conjugation(np.eye(2), kgrid)).is_csa,
        "sigma1 K": check_c_selfadjoint(H, lift_conjugation(SIGMA1, kgrid)).is_csa,
        "sigma3 K": check_c_selfadjoint(H, lift_conjugation(SIGMA3, kgrid)).is_csa,
        "P C2 (commutes)": check_c_real(H, AntiunitaryOp(P @ C2.unitary_part)).is_csa,
        "self-adjoint": bool(np.linalg.norm(H - H.conj().T) < 1e-12),
    }
    rows.append((alpha, score))
names = list(rows[0][1])
print("  alpha   " + "  ".join(f"{n:>15}" for n in names))
for alpha, score in rows:
    print(f"  {alpha:+.1f}  " + "  ".join(f"{str(score[n]):>15}" for n in names))

print()
print("== exhaustive search for a constant involutive conjugation ==")
for alpha in (-2.0, -1.0, 0.0, 1.0, 2.0):
    exists, witness = constant_conjugation_search(alpha)
    text = f"found A =\n{np.round(witness, 6)}" if exists else "none exists"
    print(f"  alpha = {alpha:+.1f}: {text}")

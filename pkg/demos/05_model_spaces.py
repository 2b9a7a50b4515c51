"""Finite model spaces and generalized Toeplitz compressions.

Polynomials of degree < N carry a natural involutive conjugation
(reverse + conjugate), a twisted variant that can square to -I, and a
pairing conjugation acting on consecutive coefficients. Structured
matrices and parity-split Toeplitz compressions are self-adjoint up to
these conjugations.
"""

import numpy as np

from csaop import check_c_selfadjoint, classify
from csaop.linalg import fro
from csaop.modelspaces import (
    BlockAntilinear,
    block_antiunitary_check,
    build_T,
    check_condition_and,
    conjugation_c_alphabeta,
    conjugation_c_gamma,
    example1_matrix,
    example2_conjugation,
    example2_matrix,
)

rng = np.random.default_rng(2)
a = rng.standard_normal(4) + 1j * rng.standard_normal(4)

print("== conjugations on coefficients (a0, a1, a2, a3) ==")
print("  input:                 ", np.round(a, 3))
print("  reverse+conjugate:     ", np.round(conjugation_c_gamma(4).apply(a), 3))
half_twist = conjugation_c_alphabeta(2, 2, np.pi)
print("  pi-twisted split:      ", np.round(half_twist.apply(a), 3),
      f"  ({classify(half_twist).value})")
pairing = example2_conjugation(4)
print("  consecutive pairing:   ", np.round(pairing.apply(a), 3),
      f"  ({classify(pairing).value})")

print()
print("== structured matrices built to match them ==")
params = rng.standard_normal(6) + 1j * rng.standard_normal(6)
H1 = example1_matrix(*params)
H2 = example2_matrix(*params)
print("  twisted-split fixture residual: ",
      f"{check_c_selfadjoint(H1, half_twist).residual:.2e}")
print("  pairing fixture residual:       ",
      f"{check_c_selfadjoint(H2, pairing).residual:.2e}")

print()
print("== parity-split Toeplitz compressions ==")
phi1, phi2 = {2: 1.0}, {-2: 1.0}
print("  symbols phi1 = z^2, phi2 = conj(z)^2; identity check:",
      check_condition_and(phi1, phi2))
for N in (4, 6, 8):
    T = build_T(phi1, phi2, N)
    res = check_c_selfadjoint(T, example2_conjugation(N)).residual
    print(f"  N = {N}: residual {res:.2e}")

print()
print("== blocks of antilinear maps ==")
eye = np.eye(3)
B = BlockAntilinear.from_matrices(0 * eye, eye, -eye, 0 * eye)
antiunitary, anti_involutive = block_antiunitary_check(B)
print(f"  [[0, K], [-K, 0]] : antiunitary={antiunitary}, anti_involutive={anti_involutive}")
M = B.assembled()
print("  squared:", np.round(fro(M.squared() + np.eye(6)), 12), "from -I")

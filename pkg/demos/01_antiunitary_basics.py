"""Antiunitary operators and matrices self-adjoint up to one.

Every antiunitary on C^n is a unitary matrix composed with entrywise
conjugation. This script walks through the basic algebra: applying the
operators, classifying their squares, conjugating linear maps, and
generating matrices H with C H C^{-1} = H* for a chosen C.
"""

import numpy as np

from csaop import (
    AntiunitaryOp,
    check_c_selfadjoint,
    classify,
    conjugate_linear_map,
    conjugation_k,
    generate_csa,
)
from csaop.pauli import MINUS_I_SIGMA2

rng = np.random.default_rng(1)

print("== plain conjugation K and the fermionic time reversal C2 ==")
K = conjugation_k(2)
C2 = AntiunitaryOp(MINUS_I_SIGMA2)
psi = np.array([1 + 1j, 2.0 - 0.5j])
print("psi          =", psi)
print("K psi        =", K.apply(psi))
print("C2 psi       =", C2.apply(psi))
print("C2 (C2 psi)  =", C2.apply(C2.apply(psi)), " (= -psi: anti-involutive)")
print("classify(K)  =", classify(K).value)
print("classify(C2) =", classify(C2).value)

print()
print("== a square that is neither +I nor -I ==")
C = AntiunitaryOp(np.array([[0, 1], [np.exp(1j * np.pi / 3), 0]]))
print("C^2 =\n", np.round(C.squared(), 6))
print("classify =", classify(C).value)

print()
print("== conjugating a linear map: C H C^{-1} ==")
H = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
print("H =\n", np.round(H, 3))
print("C2 H C2^{-1} =\n", np.round(conjugate_linear_map(C2, H), 3))

print()
print("== generating C-self-adjoint matrices ==")
for name, conj in [("K (4x4)", conjugation_k(4)), ("C2 blocks (4x4)", AntiunitaryOp(np.kron(np.eye(2), MINUS_I_SIGMA2)))]:
    H = generate_csa(conj, seed=7)
    report = check_c_selfadjoint(H, conj)
    eigs = np.sort_complex(np.linalg.eigvals(H))
    print(f"{name}: residual {report.residual:.2e}")
    print("  eigenvalues:", np.round(eigs, 4))
print("note the doubled eigenvalues in the anti-involutive case")

"""Scratch validation of the core layer reading (not part of the package)."""
import numpy as np
from xxzsov import bulk
from xxzsov.bulk import (ModelParams, default_model, default_boundary, r_matrix,
                         monodromy, monodromy_hat, coeff_a, coeff_d, qdet_m,
                         coeff_a_minus)
from xxzsov.numcore import aux_blocks, kron, ID2, SIGMA_X, SIGMA_Y, SIGMA_Z

rng = np.random.default_rng(7)
eta = 0.73j


def rc(scale=1.0):
    return scale * (rng.normal() + 1j * rng.normal())

# --- Yang-Baxter for R ---
def yb_residual(lam, mu):
    R = r_matrix
    I = np.eye(2)
    R12 = np.kron(R(lam - mu, eta), I)
    R23 = np.kron(I, R(mu, eta))
    # R13 on spaces 1,3 of 3 qubits
    R13 = np.einsum('ABab,CD->ACBaDb'.replace('D', 'x'), np.zeros(0)) if False else None
    G = R(lam, eta).reshape(2, 2, 2, 2)
    R13 = np.zeros((8, 8), complex)
    for A in range(2):
        for B in range(2):
            for a in range(2):
                for b in range(2):
                    e1 = np.zeros((2, 2)); e1[A, a] = 1
                    e3 = np.zeros((2, 2)); e3[B, b] = 1
                    R13 += G[A, B, a, b] * np.kron(np.kron(e1, I), e3)
    lhs = R12 @ R13 @ R23
    rhs = R23 @ R13 @ R12
    return np.abs(lhs - rhs).max()

print("YB residual:", max(yb_residual(rc(), rc()) for _ in range(5)))

# R(0) = sinh(eta) P
P = np.array([[1,0,0,0],[0,0,1,0],[0,1,0,0],[0,0,0,1]], dtype=complex)
print("R(0)-sinh(eta)P:", np.abs(r_matrix(0, eta) - np.sinh(eta)*P).max())
# unitarity-like: R(l)R(-l) = sinh(eta+l)sinh(eta-l) I
lam = rc()
print("RR inv:", np.abs(r_matrix(lam, eta) @ r_matrix(-lam, eta)
      - np.sinh(eta+lam)*np.sinh(eta-lam)*np.eye(4)).max())

# --- monodromy highest weight ---
p = default_model(3)
lam = rc()
A, B, C, D = aux_blocks(monodromy(p, lam))
v0 = np.zeros(8, complex); v0[0] = 1.0   # all-up state in computational basis
print("A|0> = a(lam)|0> :", np.abs(A @ v0 - coeff_a(p, lam) * v0).max())
print("D|0> = d(lam)|0> :", np.abs(D @ v0 - coeff_d(p, lam) * v0).max())
print("C|0> = 0        :", np.abs(C @ v0).max())

# --- M-inverse identity: Mhat(lam+eta/2) M(-lam+eta/2) = (-1)^N detqM(-lam) I ---
p2 = default_model(2)
lam = rc()
lhs = monodromy_hat(p2, lam + eta/2) @ monodromy(p2, -lam + eta/2)
sign = (-1) ** p2.n_sites
print("M-inverse (mirrored args):", np.abs(lhs - sign * qdet_m(p2, -lam) * np.eye(8)).max() / np.abs(lhs).max())
lhs2 = monodromy_hat(p2, lam + eta/2) @ monodromy(p2, lam + eta/2)
print("M-inverse (same args, should be big):", np.abs(lhs2 - sign * qdet_m(p2, -lam) * np.eye(8)).max() / np.abs(lhs2).max())

# YB algebra for M on two aux spaces, N=2: R12(l-m) M1(l) M2(m) = M2(m) M1(l) R12(l-m)
# spaces: aux1, aux2, chain(2^2): build M1 = M acting on (aux1, chain), M2 on (aux2, chain)
N = 2
dimq = 4
lam_, mu_ = rc(), rc()
def emb_M(m, which):
    # m on aux(x)chain; build on aux1(x)aux2(x)chain
    a, b, c, d = aux_blocks(m)
    blocks = {(0,0): a, (0,1): b, (1,0): c, (1,1): d}
    out = np.zeros((2*2*dimq, 2*2*dimq), complex)
    for i in range(2):
        for j in range(2):
            e = np.zeros((2,2)); e[i,j] = 1
            if which == 1:
                out += np.kron(e, np.kron(ID2, blocks[(i,j)]))
            else:
                out += np.kron(ID2, np.kron(e, blocks[(i,j)]))
    return out
M1 = emb_M(monodromy(p2, lam_), 1)
M2 = emb_M(monodromy(p2, mu_), 2)
R12 = np.kron(r_matrix(lam_ - mu_, eta), np.eye(dimq))
lhs = R12 @ M1 @ M2
rhs = M2 @ M1 @ R12
print("YB algebra residual:", np.abs(lhs - rhs).max() / np.abs(lhs).max())

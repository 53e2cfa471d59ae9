"""Scratch validation of the reflection layer."""
import numpy as np
from xxzsov.bulk import (default_model, default_boundary, qdet_m, ModelParams,
                         BoundaryParams, coeff_a_minus)
from xxzsov.reflection import (u_minus, u_plus, transfer_matrix,
                               transfer_matrix_via_plus, qdet_u_minus,
                               qdet_u_minus_operator, qdet_k, k_minus, k_plus,
                               reflection_equation_residual, k_scalar,
                               hamiltonian_direct, hamiltonian_from_transfer,
                               traceless, check_hermiticity)
from xxzsov.numcore import aux_blocks, SIGMA_Z

rng = np.random.default_rng(11)
rc = lambda: rng.normal() + 1j * rng.normal()

p = default_model(2)
b = default_boundary()
eta = p.eta
I = np.eye(p.dim * 2)
Iq = np.eye(p.dim)

# K-matrix basics
print("K(eta/2) = I:", np.abs(k_scalar(eta/2, b.zeta_m, b.kappa_m, b.tau_m, eta) - np.eye(2)).max())
lam = rc()
kk = k_scalar(lam + eta/2, b.zeta_m, b.kappa_m, b.tau_m, eta) @ k_scalar(eta/2 - lam, b.zeta_m, b.kappa_m, b.tau_m, eta)
target = qdet_k(p, b, -1, lam) / np.sinh(2*lam - 2*eta)
print("K inverse identity:", np.abs(kk - target*np.eye(2)).max() / abs(target))

# reflection equation
print("RE minus:", max(reflection_equation_residual(p, b, rc(), rc()) for _ in range(3)))
print("RE plus :", max(reflection_equation_residual(p, b, rc(), rc(), which='plus') for _ in range(3)))

# U- anchors
um = u_minus(p, b, eta/2)
print("U-(eta/2) = detqM(0) I:", np.abs(um - qdet_m(p, 0) * I).max() / abs(qdet_m(p, 0)))
um2 = u_minus(p, b, eta/2 + 1j*np.pi/2)
anchor = 1j / np.tanh(b.zeta_m) * qdet_m(p, 1j*np.pi/2)
sz = np.kron(SIGMA_Z, Iq)
print("U-(eta/2+ipi/2) = i coth(zeta-) detqM(ipi/2) sigma0z:", np.abs(um2 - anchor*sz).max()/abs(anchor))

# Inversion: U-(eta/2+lam) U-(eta/2-lam) = detqU-/sinh(2l-2eta) I
lam = rc()
lhs = u_minus(p, b, eta/2 + lam) @ u_minus(p, b, eta/2 - lam)
target = qdet_u_minus(p, b, lam) / np.sinh(2*lam - 2*eta)
print("U- inversion:", np.abs(lhs - target*I).max()/abs(target))

# qdet forms
lam = rc()
sc = qdet_u_minus(p, b, lam)
for eps in (1, -1):
    for form in ("A", "D"):
        op = qdet_u_minus_operator(p, b, lam, eps, form)
        print(f"qdet op eps={eps} form={form}:", np.abs(op - sc*Iq).max()/abs(sc))
# qdet exp: detqU- = detqK- detqM(l) detqM(-l)
alt = qdet_k(p, b, -1, lam) * qdet_m(p, lam) * qdet_m(p, -lam)
print("qdetU- scalar vs K*M*M form:", abs(sc - alt)/abs(sc))

# commuting family + evenness + equality of two trace forms
l1, l2 = rc(), rc()
t1, t2 = transfer_matrix(p, b, l1), transfer_matrix(p, b, l2)
print("[T,T]:", np.linalg.norm(t1@t2 - t2@t1)/(np.linalg.norm(t1)*np.linalg.norm(t2)))
print("T even:", np.linalg.norm(transfer_matrix(p, b, -l1) - t1)/np.linalg.norm(t1))
print("T via U+:", np.linalg.norm(transfer_matrix_via_plus(p, b, l1) - t1)/np.linalg.norm(t1))

# T anchors
t_h = transfer_matrix(p, b, eta/2)
print("T(eta/2) anchor:", np.abs(t_h - 2*np.cosh(eta)*qdet_m(p, 0)*Iq).max()/abs(2*np.cosh(eta)*qdet_m(p,0)))
t_i = transfer_matrix(p, b, eta/2 - 1j*np.pi/2)
val = -2*np.cosh(eta)/np.tanh(b.zeta_m)/np.tanh(b.zeta_p)*qdet_m(p, 1j*np.pi/2)
print("T(eta/2-ipi/2) anchor:", np.abs(t_i - val*Iq).max()/abs(val))

# --- hermiticity regimes ---
# massless: eta imaginary; i*tau, i*kappa, i*zeta real; xi real
rng2 = np.random.default_rng(3)
bm = BoundaryParams.from_couplings(*(1j * rng2.uniform(0.5, 1.2, 6) * np.sign(rng2.normal(size=6))))
pm = ModelParams(2, 0.73j, (0.13, 0.29))
print("massless residuals:", check_hermiticity(pm, bm, "massless"))
# massive: eta real; tau,kappa,zeta real; xi imaginary
bv = BoundaryParams.from_couplings(*(rng2.uniform(0.5, 1.2, 6) * np.sign(rng2.normal(size=6))))
pv = ModelParams(2, 0.41, (0.13j, 0.29j))
print("massive residuals:", check_hermiticity(pv, bv, "massive"))
# negative control
print("generic (should be O(1)):", check_hermiticity(p, b, "massless"))

# --- Hamiltonian: direct vs transfer derivative ---
for delta in (1e-2, 1e-3, 1e-4):
    hd = hamiltonian_from_transfer(2, b, eta, delta)
    h0 = hamiltonian_direct(2, b, eta)
    diff = np.linalg.norm(traceless(hd) - traceless(h0)) / np.linalg.norm(traceless(h0))
    print(f"H match delta={delta}: {diff:.3e}")

# Richardson in delta (assume O(delta^2))
d = 1e-3
h1 = hamiltonian_from_transfer(2, b, eta, d)
h2 = hamiltonian_from_transfer(2, b, eta, d/2)
hx_1 = 2*h2 - h1
hx_2 = (4*h2 - h1)/3
h0 = hamiltonian_direct(2, b, eta)
print("Richardson O(d):  ", np.linalg.norm(traceless(hx_1)-traceless(h0))/np.linalg.norm(traceless(h0)))
print("Richardson O(d^2):", np.linalg.norm(traceless(hx_2)-traceless(h0))/np.linalg.norm(traceless(h0)))

# H hermiticity question: massless-class params, direct H
hm = hamiltonian_direct(2, bm, 0.73j)
print("H=H^dag massless class:", np.linalg.norm(hm - hm.conj().T)/np.linalg.norm(hm))
hmv = hamiltonian_direct(2, bv, 0.41)
print("H=H^dag massive class:", np.linalg.norm(hmv - hmv.conj().T)/np.linalg.norm(hmv))
# diagonal boundaries: kappa=0 -> U(1) block structure
bd = BoundaryParams(zeta_m=0.9+0.2j, kappa_m=0.0, tau_m=0.0, zeta_p=0.4-0.7j, kappa_p=0.0, tau_p=0.0)
hdg = hamiltonian_direct(2, bd, eta)
# sz-total blocks: basis index bit-sum; off-block entries
dim = 4
import itertools
off = 0.0
for i in range(dim):
    for j in range(dim):
        if bin(i).count('1') != bin(j).count('1'):
            off = max(off, abs(hdg[i, j]))
print("diagonal-boundary H off-sector:", off)

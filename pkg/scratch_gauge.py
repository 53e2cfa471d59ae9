"""Scratch validation of the gauge layer."""
import numpy as np
from xxzsov import gauge as G
from xxzsov.bulk import default_model, default_boundary, coeff_a, monodromy
from xxzsov.gauge import (GaugeParams, g_bar, g_bar_inv, g_tilde, g_tilde_inv,
                          g_hat, g_hat_inv, vec_x, vec_y, row_ytilde, row_xtilde,
                          gauged_monodromy, gauged_monodromy_hat, gauged_u_minus,
                          op_a_minus, op_b_minus, op_c_minus, op_d_minus,
                          gauged_k_minus, gauged_k_plus, gauged_k_plus_closed,
                          a_plus, d_plus, reference_bra, reference_ket,
                          bra_norm_factor)
from xxzsov.reflection import u_minus, transfer_matrix, qdet_u_minus
from xxzsov.numcore import aux_blocks, SIGMA_Z

rng = np.random.default_rng(23)
rc = lambda: rng.normal() + 1j * rng.normal()

p = default_model(2)
b = default_boundary()
eta = p.eta
N = p.n_sites
g = GaugeParams(alpha=0.5 + 0.3j, beta=-0.4 + 0.9j)

# 1. inverses
lam = rc(); ba = rc()
for name, M, Mi in (("bar", g_bar, g_bar_inv), ("tilde", g_tilde, g_tilde_inv), ("hat", g_hat, g_hat_inv)):
    r = np.abs(Mi(g, eta, lam, ba) @ M(g, eta, lam, ba) - np.eye(2)).max()
    print(f"{name} inverse:", r)

# 2. Y(l|b) = X(l|-b)
print("Y=X(-b):", np.abs(vec_y(g, eta, lam, ba) - vec_x(g, eta, lam, -ba)).max())

# 3. special contractions
v1 = row_ytilde(g, eta, 0.0, g.beta - 1) @ vec_x(g, eta, 0.0, g.beta + 1)
v2 = row_ytilde(g, eta, 1j*np.pi/2, g.beta - 1) @ (SIGMA_Z @ vec_x(g, eta, -1j*np.pi/2, g.beta + 1))
print("Ytilde.X(0) = 1:", abs(v1 - 1))
print("Ytilde sz X (ipi/2) = -1:", abs(v2 + 1))

# 4. B-row identity: B(l|base) = Ytilde(l-eta/2|base-1) M(l) Y(l-eta/2|base+N-1)
from xxzsov.bulk import monodromy
lam = rc()
base = g.beta
gm = gauged_monodromy(p, g, lam, base)
A_, B_, C_, D_ = aux_blocks(gm)
row = row_ytilde(g, eta, lam - eta/2, base - 1)
col = vec_y(g, eta, lam - eta/2, base + N - 1)
m = monodromy(p, lam)
a, bb, c, d = aux_blocks(m)
brow = row[0]*(a*col[0] + bb*col[1]) + row[1]*(c*col[0] + d*col[1])
print("B-row identity:", np.abs(B_ - brow).max()/np.abs(B_).max())

# 5. reference state actions
bra = reference_bra(p, g, base)
gm_at = lambda lam: gauged_monodromy(p, g, lam, base)
gmh_at = lambda lam: gauged_monodromy_hat(p, g, lam, base)
A_, B_, C_, D_ = aux_blocks(gm_at(lam))
Ab, Bb, Cb, Db = aux_blocks(gmh_at(lam))
prod_a = np.prod([np.sinh(lam - x + eta/2) for x in p.xi])
prod_d = np.prod([np.sinh(lam - x - eta/2) for x in p.xi])
prod_ab = np.prod([np.sinh(lam + x + eta/2) for x in p.xi])
prod_db = np.prod([np.sinh(lam + x - eta/2) for x in p.xi])
bm1 = reference_bra(p, g, base - 1)
bp1 = reference_bra(p, g, base + 1)
print("<b|B = 0     :", np.abs(bra @ B_).max() / np.abs(B_).max())
print("<b|Bbar = 0  :", np.abs(bra @ Bb).max() / np.abs(Bb).max())
r = bra @ A_ - np.sinh((N + base)*eta)/np.sinh(base*eta)*prod_a*bm1
print("<b|A         :", np.abs(r).max() / np.abs(bra @ A_).max())
r = bra @ D_ - prod_d * bp1
print("<b|D         :", np.abs(r).max() / np.abs(bra @ D_).max())
r = bra @ Ab - np.sinh(base*eta)/np.sinh((N+base)*eta)*prod_ab*bp1
print("<b|Abar      :", np.abs(r).max()/np.abs(bra @ Ab).max())
r = bra @ Db - prod_db * bm1
print("<b|Dbar      :", np.abs(r).max()/np.abs(bra @ Db).max())

# right reference: |base+1> annihilated by C(l|base), Cbar(l|base)
ket = reference_ket(p, g, base + 1)
ket0 = reference_ket(p, g, base)
ket2 = reference_ket(p, g, base + 2)
print("C|b+1> = 0   :", np.abs(C_ @ ket).max()/np.abs(C_).max())
print("Cbar|b+1> = 0:", np.abs(Cb @ ket).max()/np.abs(Cb).max())
r = A_ @ ket - prod_a * ket2
print("A|b+1>       :", np.abs(r).max()/np.abs(A_ @ ket).max())
r = D_ @ ket - np.sinh((N+base)*eta)/np.sinh(base*eta)*prod_d*ket0
print("D|b+1>       :", np.abs(r).max()/np.abs(D_ @ ket).max())
r = Ab @ ket - prod_ab * ket0
print("Abar|b+1>    :", np.abs(r).max()/np.abs(Ab @ ket).max())
r = Db @ ket - np.sinh(base*eta)/np.sinh((N+base)*eta)*prod_db*ket2
print("Dbar|b+1>    :", np.abs(r).max()/np.abs(Db @ ket).max())

# 6. factorizations
acc = np.array([1.0], dtype=complex)
for n in range(1, N+1):
    acc = np.kron(acc, np.array([1.0, 0.0], dtype=complex))
bra0 = acc
mat = np.eye(1, dtype=complex)
# <beta| = N_beta <0| prod_n Gbar_n^{-1}(xi_n | base+N-n)
full = np.array([1.0], dtype=complex)
for n in range(1, N+1):
    gi = g_bar_inv(g, eta, p.xi[n-1], base + N - n)
    full = np.kron(full, gi[0, :])   # <0|_n Gbar^-1 = first row
cand = bra_norm_factor(p, g, base) * full
print("bra factorization:", np.abs(cand - bra).max()/np.abs(bra).max())
fullk = np.array([1.0], dtype=complex)
for n in range(1, N+1):
    gb = g_bar(g, eta, p.xi[n-1], base + N - n)
    fullk = np.kron(fullk, gb[:, 0])
print("ket factorization:", np.abs(fullk - ket0).max()/np.abs(ket0).max())

# 7. boundary-bulk decomposition vs direct sandwich
lam = rc()
u_g = gauged_u_minus(p, b, g, lam, base)
calA, calB, calC, calD = aux_blocks(u_g)   # A(l|base+2), B(l|base), C(l|base+2), D(l|base)
kpl, kbar = gauged_k_minus(b, g, eta, lam, base)
gm_b = gauged_monodromy(p, g, lam, base)
A_, B_, C_, D_ = aux_blocks(gm_b)
Ab1, Bb1, Cb1, Db1 = aux_blocks(gauged_monodromy_hat(p, g, lam, base + 1))
Abm, Bbm, Cbm, Dbm = aux_blocks(gauged_monodromy_hat(p, g, lam, base - 1))
pref = np.exp(-lam + eta/2)
candA = pref * ((A_ @ Ab1) * 0 + (kbar[0,0]*A_ + kbar[1,0]*B_) @ Ab1 + (kbar[0,1]*A_ + kbar[1,1]*B_) @ Cb1)
candC = pref * ((kbar[0,0]*C_ + kbar[1,0]*D_) @ Ab1 + (kbar[0,1]*C_ + kbar[1,1]*D_) @ Cb1)
candB = pref * ((kpl[0,0]*A_ + kpl[1,0]*B_) @ Bbm + (kpl[0,1]*A_ + kpl[1,1]*B_) @ Dbm)
candD = pref * ((kpl[0,0]*C_ + kpl[1,0]*D_) @ Bbm + (kpl[0,1]*C_ + kpl[1,1]*D_) @ Dbm)
print("decomp A:", np.abs(candA - calA).max()/np.abs(calA).max())
print("decomp B:", np.abs(candB - calB).max()/np.abs(calB).max())
print("decomp C:", np.abs(candC - calC).max()/np.abs(calC).max())
print("decomp D:", np.abs(candD - calD).max()/np.abs(calD).max())

# 8. gauged K+ sandwich vs closed form
for side in ("L", "R"):
    s = gauged_k_plus(b, g, eta, lam, base, side)
    c = gauged_k_plus_closed(b, g, eta, lam, base, side)
    print(f"K+^{side} sandwich vs closed:")
    print("  ratio:", np.abs(s - c) / np.abs(c).max())

# 9. triangular gauge zero
gt = GaugeParams.triangular(b, eta, alpha=0.37 - 0.21j, k=0)
for side in ("L", "R"):
    v = gauged_k_plus(b, gt, eta, rc(), gt.beta - 1, side)[0, 1]
    print(f"triangular K+^{side}_12:", abs(v))
gt1 = GaugeParams.triangular(b, eta, alpha=0.37 - 0.21j, k=1)
print("triangular k=1:", abs(gauged_k_plus(b, gt1, eta, rc(), gt1.beta - 1, "L")[0, 1]))

# 10. T decompositions
lam = rc()
t = transfer_matrix(p, b, lam)
pref = np.exp(-lam + eta/2)
kl = gauged_k_plus(b, g, eta, lam, g.beta - 1, "L")
tl = (kl[0,0]*op_a_minus(p,b,g,lam,g.beta) + kl[1,1]*op_d_minus(p,b,g,lam,g.beta)
      + kl[1,0]*op_b_minus(p,b,g,lam,g.beta-2) + kl[0,1]*op_c_minus(p,b,g,lam,g.beta+2))
print("T-decomp L:", np.abs(pref*t - tl).max()/np.abs(t).max())
kr = gauged_k_plus(b, g, eta, lam, g.beta - 1, "R")
tr = (kr[0,0]*op_a_minus(p,b,g,lam,g.beta) + kr[1,1]*op_d_minus(p,b,g,lam,g.beta)
      + kr[1,0]*op_b_minus(p,b,g,lam,g.beta+2) + kr[0,1]*op_c_minus(p,b,g,lam,g.beta))
print("T-decomp R:", np.abs(pref*t - tr).max()/np.abs(t).max())

# 11. a+/d+ two-term forms
ta = (a_plus(b,g,eta,lam,g.beta-1)*op_a_minus(p,b,g,lam,g.beta)
      + a_plus(b,g,eta,-lam,g.beta-1)*op_a_minus(p,b,g,-lam,g.beta)
      + kl[1,0]*op_b_minus(p,b,g,lam,g.beta-2) + kl[0,1]*op_c_minus(p,b,g,lam,g.beta+2))
print("a+ form vs e^{-l+eta/2}T:", np.abs(pref*t - ta).max()/np.abs(t).max())
print("a+ form vs T:", np.abs(t - ta).max()/np.abs(t).max())
td = (d_plus(b,g,eta,lam,g.beta-1)*op_d_minus(p,b,g,lam,g.beta)
      + d_plus(b,g,eta,-lam,g.beta-1)*op_d_minus(p,b,g,-lam,g.beta)
      + kr[1,0]*op_b_minus(p,b,g,lam,g.beta+2) + kr[0,1]*op_c_minus(p,b,g,lam,g.beta))
print("d+ form vs e^{-l+eta/2}T:", np.abs(pref*t - td).max()/np.abs(t).max())

# 12. gauged commutation relations
l1, l2 = rc(), rc()
be = g.beta
lhs = op_b_minus(p,b,g,l2,be) @ op_b_minus(p,b,g,l1,be-2)
rhs = op_b_minus(p,b,g,l1,be) @ op_b_minus(p,b,g,l2,be-2)
print("CR BB:", np.abs(lhs-rhs).max()/np.abs(lhs).max())

sh = np.sinh
AB_l = op_a_minus(p,b,g,l2,be+2) @ op_b_minus(p,b,g,l1,be)
c1 = sh(l1-l2+eta)*sh(l2+l1-eta)/(sh(l1-l2)*sh(l1+l2))
c2 = sh(l1+l2-eta)*sh(l1-l2+(be-1)*eta)*sh(eta)/(sh(l2-l1)*sh(l1+l2)*sh((be-1)*eta))
c3 = sh(eta)*sh(l1+l2-be*eta)/(sh(l1+l2)*sh((be-1)*eta))
AB_r = (c1*op_b_minus(p,b,g,l1,be) @ op_a_minus(p,b,g,l2,be)
        + c2*op_b_minus(p,b,g,l2,be) @ op_a_minus(p,b,g,l1,be)
        + c3*op_b_minus(p,b,g,l2,be) @ op_d_minus(p,b,g,l1,be))
print("CR AB:", np.abs(AB_l-AB_r).max()/np.abs(AB_l).max())

BD_l = op_b_minus(p,b,g,l1,be) @ op_d_minus(p,b,g,l2,be)
d1 = sh(l1-l2+eta)*sh(l2+l1-eta)/(sh(l1-l2)*sh(l1+l2))
d2 = sh(l2-l1+(be+1)*eta)*sh(l2+l1-eta)/(sh(l1-l2)*sh(l2+l1)*sh((be+1)*eta))
d3 = sh(eta)*sh(l2+l1+be*eta)/(sh(l2+l1)*sh((be+1)*eta))
BD_r = (d1*op_d_minus(p,b,g,l2,be+2) @ op_b_minus(p,b,g,l1,be)
        - d2*op_d_minus(p,b,g,l1,be+2) @ op_b_minus(p,b,g,l2,be)
        - d3*op_a_minus(p,b,g,l1,be+2) @ op_b_minus(p,b,g,l2,be))
print("CR BD:", np.abs(BD_l-BD_r).max()/np.abs(BD_l).max())

e1 = sh(eta)*sh(l1+l2-be*eta)/(sh(l1+l2)*sh((be-1)*eta))
AA_l = (op_a_minus(p,b,g,l1,be+2) @ op_a_minus(p,b,g,l2,be+2)
        - e1*op_b_minus(p,b,g,l1,be) @ op_c_minus(p,b,g,l2,be+2))
AA_r = (op_a_minus(p,b,g,l2,be+2) @ op_a_minus(p,b,g,l1,be+2)
        - e1*op_b_minus(p,b,g,l2,be) @ op_c_minus(p,b,g,l1,be+2))
print("CR AA-BC:", np.abs(AA_l-AA_r).max()/np.abs(AA_l).max())

# 13. gauged parity
lam = rc()
lhs = op_a_minus(p,b,g,lam,be)
rhs = (-sh(eta)*sh(2*lam-(be-1)*eta)/(sh(2*lam)*sh((be-2)*eta)) * op_d_minus(p,b,g,lam,be)
       + sh(2*lam-eta)*sh((be-1)*eta)/(sh(2*lam)*sh((be-2)*eta)) * op_d_minus(p,b,g,-lam,be))
print("parity A<-D:", np.abs(lhs-rhs).max()/np.abs(lhs).max())
lhs = op_d_minus(p,b,g,lam,be)
rhs = (sh(eta)*sh(2*lam+(be-1)*eta)/(sh(2*lam)*sh(be*eta)) * op_a_minus(p,b,g,lam,be)
       + sh(2*lam-eta)*sh((be-1)*eta)/(sh(2*lam)*sh(be*eta)) * op_a_minus(p,b,g,-lam,be))
print("parity D<-A:", np.abs(lhs-rhs).max()/np.abs(lhs).max())
lhs = op_b_minus(p,b,g,-lam,be)
rhs = -sh(2*lam+eta)/sh(2*lam-eta) * op_b_minus(p,b,g,lam,be)
print("parity B:", np.abs(lhs-rhs).max()/np.abs(lhs).max())

# 14. sigma-x conjugation: U(l|-base+2) = sx U(l|base) sx
u1 = gauged_u_minus(p, b, g, lam, -complex(be) + 2)
u0 = gauged_u_minus(p, b, g, lam, be)
a0, b0, c0, d0 = aux_blocks(u0)
sx_u = np.block([[d0, c0], [b0, a0]])
print("sigma-x conj:", np.abs(u1 - sx_u).max()/np.abs(u1).max())

# 15. gauged inversion + gauged qdet
lam = rc()
lhs = gauged_u_minus(p,b,g,lam+eta/2,be) @ gauged_u_minus(p,b,g,eta/2-lam,be)
tgt = qdet_u_minus(p, b, lam)/np.sinh(2*lam-2*eta)
print("gauged inversion:", np.abs(lhs - tgt*np.eye(2*p.dim)).max()/abs(tgt))
for eps in (1,-1):
    qa = (op_a_minus(p,b,g,eps*lam+eta/2,be+2) @ op_a_minus(p,b,g,eta/2-eps*lam,be+2)
          + op_b_minus(p,b,g,eps*lam+eta/2,be) @ op_c_minus(p,b,g,eta/2-eps*lam,be+2))
    qd = (op_d_minus(p,b,g,eps*lam+eta/2,be) @ op_d_minus(p,b,g,eta/2-eps*lam,be)
          + op_c_minus(p,b,g,eps*lam+eta/2,be+2) @ op_b_minus(p,b,g,eta/2-eps*lam,be))
    print(f"gauged qdet A eps={eps}:", np.abs(qa - tgt*np.eye(p.dim)).max()/abs(tgt))
    print(f"gauged qdet D eps={eps}:", np.abs(qd - tgt*np.eye(p.dim)).max()/abs(tgt))

"""Scratch validation of the SOV layer."""
import numpy as np
from xxzsov.bulk import (default_model, default_boundary, coeff_a_minus,
                         BoundaryParams)
from xxzsov.gauge import (GaugeParams, op_a_minus, op_b_minus, op_d_minus,
                          reference_bra, reference_ket)
from xxzsov.sov import (SovGrid, kappa_index, index_to_h, left_sov_basis,
                        right_sov_basis, pseudo_eval_left, pseudo_eval_right,
                        a_minus_left_action, d_minus_right_action, vandermonde,
                        z_constant, gram_matrix, identity_decomposition_residual,
                        sov_applicability, f_ratio)

rng = np.random.default_rng(43)
rc = lambda: rng.normal() + 1j * rng.normal()

p = default_model(3)
b = default_boundary()
eta = p.eta
N = p.n_sites
g = GaugeParams.triangular(b, eta, alpha=0.37 - 0.21j, k=0)
be = g.beta
print("gauge beta:", be)

grid = SovGrid(p)
grid.validate()

# --- left basis ---
L = left_sov_basis(p, b, g, be - 2)
Lm2 = left_sov_basis(p, b, g, be - 4)
print("left cond:", L.cond)
print("h=0 state is reference:", np.abs(L.state((0,)*N) - reference_bra(p, g, be - 2)).max())

# pseudo-eigen: <be-2,h| B(l|be-2) = B_h(l|be-2) <be-4,h|
err = 0
for trial in range(3):
    lam = rc()
    Bop = op_b_minus(p, b, g, lam, be - 2)
    for i in (1, 3, p.dim):
        h = index_to_h(i, N)
        lhs = L.state(h) @ Bop
        rhs = pseudo_eval_left(p, b, g, h, lam, be - 2) * Lm2.state(h)
        err = max(err, np.abs(lhs - rhs).max() / max(np.abs(lhs).max(), 1e-300))
print("left pseudo-eigen:", err)

# order independence: build h=(1,1,0) with swapped factor order
h = (1, 1, 0)
lam1 = eta/2 - p.xi[0]
lam2 = eta/2 - p.xi[1]
op1 = op_a_minus(p, b, g, lam1, be) / coeff_a_minus(p, b, lam1)
op2 = op_a_minus(p, b, g, lam2, be) / coeff_a_minus(p, b, lam2)
sA = reference_bra(p, g, be - 2) @ op1 @ op2
sB = reference_bra(p, g, be - 2) @ op2 @ op1
print("order independence:", np.abs(sA - sB).max()/np.abs(sA).max())
print("matches basis state:", np.abs(sA - L.state(h)).max()/np.abs(sA).max())

# --- right basis ---
R = right_sov_basis(p, b, g, be)
Rp2 = right_sov_basis(p, b, g, be + 2)
print("right cond:", R.cond)
print("h=1 state is reference:", np.abs(R.state((1,)*N) - reference_ket(p, g, -be + 2)).max())

err = 0
for trial in range(3):
    lam = rc()
    Bop = op_b_minus(p, b, g, lam, be)
    for i in (1, 4, p.dim):
        h = index_to_h(i, N)
        lhs = Bop @ R.state(h)
        rhs = pseudo_eval_right(p, b, g, h, lam, be) * Rp2.state(h)
        err = max(err, np.abs(lhs - rhs).max() / max(np.abs(lhs).max(), 1e-300))
print("right pseudo-eigen:", err)

# D annihilation on reference: D(-xi_n - eta/2 | be)|-be+2> = 0
ket = reference_ket(p, g, -be + 2)
v0 = op_d_minus(p, b, g, -p.xi[0] - eta/2, be) @ ket
v1 = op_d_minus(p, b, g, p.xi[0] + eta/2, be) @ ket
print("D(-xi-eta/2)|ref> = 0:", np.abs(v0).max(), " D(xi+eta/2)|ref> != 0:", np.abs(v1).max())

# --- actions: direct vs interpolated ---
err = 0
for trial in range(2):
    lam = rc()
    Aop = op_a_minus(p, b, g, lam, be)  # acts on left basis at be-2
    for i in (1, 3, 6):
        h = index_to_h(i, N)
        direct = Lm2.state(h) @ 0 if False else L.state(h) @ Aop
        interp = a_minus_left_action(p, b, g, L, h, lam)
        err = max(err, np.abs(direct - interp).max()/np.abs(direct).max())
print("A action interp (left):", err)

err = 0
for trial in range(2):
    lam = rc()
    Dop = op_d_minus(p, b, g, lam, be)
    for i in (2, 5, 8):
        h = index_to_h(i, N)
        direct = Dop @ R.state(h)
        interp = d_minus_right_action(p, b, g, R, h, lam)
        err = max(err, np.abs(direct - interp).max()/np.abs(direct).max())
print("D action interp (right):", err)

# node checks at lam = eta/2
h = index_to_h(3, N)
lhsA = L.state(h) @ op_a_minus(p, b, g, eta/2, be)
from xxzsov.bulk import qdet_m
print("A at eta/2 node:", np.abs(lhsA - qdet_m(p, 0)*L.state(h)).max()/np.abs(lhsA).max())

# --- gram ---
M = gram_matrix(L, R)
z = z_constant(p, b, g, be - 2)
off = np.abs(M - np.diag(np.diag(M))).max()
print("gram off-diagonal:", off / np.abs(np.diag(M)).max())
errs = []
for i in range(1, p.dim + 1):
    h = index_to_h(i, N)
    pred = z / vandermonde(grid, h)
    errs.append(abs(M[i-1, i-1] - pred) / abs(pred))
print("gram diagonal vs closed form:", max(errs))

# ratio test: flip one h_a
for a in range(1, N + 1):
    h0 = list((0,)*N); h1 = list((0,)*N)
    h1[a-1] = 1
    i0, i1 = kappa_index(tuple(h0)) - 1, kappa_index(tuple(h1)) - 1
    lhs = M[i1, i1] / M[i0, i0]
    num = den = 1.0 + 0j
    for m in range(1, N + 1):
        if m == a:
            continue
        z0a = np.cosh(2*(p.xi[a-1] - 0.5*eta))
        z1a = np.cosh(2*(p.xi[a-1] + 0.5*eta))
        zm = np.cosh(2*(p.xi[m-1] + (h0[m-1] - 0.5)*eta))
        num *= z0a - zm
        den *= z1a - zm
    print(f"F-ratio site {a}:", abs(lhs - num/den)/abs(lhs))

# --- identity decomposition ---
res = identity_decomposition_residual(p, b, g, Lm2, R, z)
print("identity decomposition:", res)

# --- applicability ---
rep = sov_applicability(b, eta, N, gauge=g)
print("generic applicability:", {k: v["feasible"] for k, v in rep.items() if isinstance(v, dict) and "feasible" in v}, rep["applicable"], rep.get("gauge_checks"))

# engineered failure: Fail-i with k=m=0
tau_p_fail = b.tau_m + (b.alpha_m + b.beta_m) - (b.alpha_p - b.beta_p) - (N - 1)*eta
b_fail = BoundaryParams.from_couplings(b.zeta_m, b.kappa_m, b.tau_m,
                                       b.zeta_p, b.kappa_p, tau_p_fail)
rep = sov_applicability(b_fail, eta, N)
print("engineered Fail-i:", {k: v["feasible"] for k, v in rep.items() if isinstance(v, dict) and "feasible" in v}, rep["applicable"])

# engineered double failure: requires both conditions; from Fail-i solve also Fail-ii
# (1-N)eta = tm - tp + s1(am+bm) - s2(ap-bp) + i pi k: pick s1=-1 vs Fail-i's +1
# Fail-i: (N-1)eta = tm - tp + (am+bm) - (ap-bp)
# Fail-ii with s1=-1, s2=+1: (1-N)eta = tm - tp - (am+bm) - (ap-bp)
# subtract: 2(N-1)eta = 2(am+bm) -> need am+bm = (N-1)eta: engineer boundary minus side.
from xxzsov.bulk import BoundaryParams as BP
import numpy as np
apb_target = (N - 1) * eta
# choose alpha_m, beta_m with alpha_m+beta_m = target: pick alpha_m = target/2 + 0.3, beta_m = target/2 - 0.3
am = apb_target/2 + 0.3
bm = apb_target/2 - 0.3
# invert: sinh(am)cosh(bm) = sinh(zm)/(2 km), cosh(am)sinh(bm) = cosh(zm)/(2 km)
# => sinh(am+bm) = e^zm/(2km), sinh(am-bm) = -e^{-zm}/(2km)
# => e^{2 zm} = -sinh(am+bm)/sinh(am-bm)
z2 = -np.sinh(am + bm)/np.sinh(am - bm)
zm = 0.5*np.log(z2)
km = np.exp(zm)/(2*np.sinh(am+bm))
bb = BP.from_couplings(zm, km, b.tau_m, b.zeta_p, b.kappa_p, b.tau_p)
print("check am+bm:", bb.alpha_m + bb.beta_m, "target:", apb_target)
tp_fail = bb.tau_m + (bb.alpha_m + bb.beta_m) - (bb.alpha_p - bb.beta_p) - (N-1)*eta
bff = BP.from_couplings(zm, km, bb.tau_m, bb.zeta_p, bb.kappa_p, tp_fail)
rep = sov_applicability(bff, eta, N)
print("engineered double failure:", {k: v["feasible"] for k, v in rep.items() if isinstance(v, dict) and "feasible" in v}, rep["applicable"])

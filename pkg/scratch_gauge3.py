"""Pin down K+^(R) and the a+/d+ coefficient conventions."""
import numpy as np
from xxzsov.bulk import default_model, default_boundary
from xxzsov.gauge import (GaugeParams, op_a_minus, op_b_minus, op_c_minus,
                          op_d_minus, gauged_k_plus, gauged_k_plus_closed,
                          a_plus, d_plus, row_xbar, row_ybar, vec_x, vec_y,
                          row_xtilde, row_ytilde, vec_xhat, vec_yhat)
from xxzsov.reflection import transfer_matrix, k_plus
from xxzsov.numcore import aux_blocks

rng = np.random.default_rng(29)
rc = lambda: rng.normal() + 1j * rng.normal()

p = default_model(2)
b = default_boundary()
eta = p.eta
g = GaugeParams(alpha=0.5 + 0.3j, beta=-0.4 + 0.9j)
be = g.beta
sh = np.sinh


def fit(lam, ops, target):
    Amat = np.stack([o.ravel() for o in ops], axis=1)
    coef, res, rank, sv = np.linalg.lstsq(Amat, target.ravel(), rcond=None)
    resid = np.abs(Amat @ coef - target.ravel()).max() / np.abs(target).max()
    return coef, resid, sv[0] / sv[-1]


# unique coefficients of printed R pattern at two lambdas
for trial in range(2):
    lam = rc()
    t = transfer_matrix(p, b, lam)
    tgt = np.exp(-lam + eta / 2) * t
    ops = [op_a_minus(p, b, g, lam, be), op_d_minus(p, b, g, lam, be),
           op_b_minus(p, b, g, lam, be + 2), op_c_minus(p, b, g, lam, be)]
    coef, resid, cond = fit(lam, ops, tgt)
    print(f"R-pattern fit: resid {resid:.1e} cond {cond:.1e}")
    needed = np.array([[coef[0], coef[3]], [coef[2], coef[1]]])
    # scan candidate sandwiches: rows Ybar/Xbar(eta/2-lam|r1/r2), cols X(..|c), Y(..|c)
    mu_l = eta / 2 - lam
    mu_r = lam - eta / 2
    kp = k_plus(b, lam, eta)
    found = []
    shifts = (-3, -2, -1, 0, 1, 2, 3)
    for r1 in shifts:
        v = row_ybar(g, eta, mu_l, be - 1 + r1)
        for c1 in shifts:
            e11 = v @ kp @ vec_x(g, eta, mu_r, be - 1 + c1)
            if abs(e11 - needed[0, 0]) < 1e-9 * abs(needed[0, 0]):
                found.append(("11", "Ybar", r1, "X", c1))
    for r1 in shifts:
        v = row_ybar(g, eta, mu_l, be - 1 + r1)
        for c1 in shifts:
            e12 = v @ kp @ vec_y(g, eta, mu_r, be - 1 + c1)
            if abs(e12 - needed[0, 1]) < 1e-9 * abs(needed[0, 1]):
                found.append(("12", "Ybar", r1, "Y", c1))
    for r1 in shifts:
        v = row_xbar(g, eta, mu_l, be - 1 + r1)
        for c1 in shifts:
            e21 = v @ kp @ vec_x(g, eta, mu_r, be - 1 + c1)
            if abs(e21 - needed[1, 0]) < 1e-9 * abs(needed[1, 0]):
                found.append(("21", "Xbar", r1, "X", c1))
            e22 = v @ kp @ vec_y(g, eta, mu_r, be - 1 + c1)
            if abs(e22 - needed[1, 1]) < 1e-9 * abs(needed[1, 1]):
                found.append(("22", "Xbar", r1, "Y", c1))
    print("  matches (entry, row, rowshift-from-(be-1), col, colshift):", found)

# a+ pattern fit and comparison with the printed a+ formula
print()
for trial in range(2):
    lam = rc()
    t = transfer_matrix(p, b, lam)
    ops = [op_a_minus(p, b, g, lam, be), op_a_minus(p, b, g, -lam, be),
           op_b_minus(p, b, g, lam, be - 2), op_c_minus(p, b, g, lam, be + 2)]
    for nm, tgt in (("T", t), ("e^{-l+eta/2}T", np.exp(-lam + eta / 2) * t)):
        coef, resid, cond = fit(lam, ops, tgt)
        if resid < 1e-10:
            r0 = coef[0] / a_plus(b, g, eta, lam, be - 1)
            r1 = coef[1] / a_plus(b, g, eta, -lam, be - 1)
            print(f"a+ fit to {nm}: resid {resid:.1e} cond {cond:.1e} "
                  f"ratio0 {r0:.6f} ratio1 {r1:.6f}")

# d+ pattern
for trial in range(2):
    lam = rc()
    t = transfer_matrix(p, b, lam)
    for bpat, cpat, nmpat in ((be, be, "B(be),C(be)"), (be + 2, be, "B(be+2),C(be)"),
                              (be - 2, be + 2, "B(be-2),C(be+2)")):
        ops = [op_d_minus(p, b, g, lam, be), op_d_minus(p, b, g, -lam, be),
               op_b_minus(p, b, g, lam, bpat), op_c_minus(p, b, g, lam, cpat)]
        for nm, tgt in (("T", t), ("eT", np.exp(-lam + eta / 2) * t)):
            coef, resid, cond = fit(lam, ops, tgt)
            if resid < 1e-10 and cond < 1e8:
                r0 = coef[0] / d_plus(b, g, eta, lam, be - 1)
                r1 = coef[1] / d_plus(b, g, eta, -lam, be - 1)
                print(f"d+ [{nmpat}] fit to {nm}: resid {resid:.1e} cond {cond:.1e} "
                      f"ratio0 {r0:.6f} ratio1 {r1:.6f}")

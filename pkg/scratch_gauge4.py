"""Confirm normalization conventions for gauged K+ and a+/d+."""
import numpy as np
from xxzsov.bulk import default_model, default_boundary
from xxzsov.gauge import (GaugeParams, op_a_minus, op_b_minus, op_c_minus,
                          op_d_minus, gauged_k_plus, gauged_k_plus_closed,
                          a_plus, d_plus)
from xxzsov.reflection import transfer_matrix

rng = np.random.default_rng(31)
rc = lambda: rng.normal() + 1j * rng.normal()

p = default_model(2)
b = default_boundary()
eta = p.eta
g = GaugeParams(alpha=0.5 + 0.3j, beta=-0.4 + 0.9j)
be = g.beta
sh = np.sinh

# closed vs sandwich with the e^{lam - eta/2} factor
lam = rc()
for side in ("L", "R"):
    s = gauged_k_plus(b, g, eta, lam, be, side)
    c = gauged_k_plus_closed(b, g, eta, lam, be, side)
    print(f"{side}: closed vs e^(l-eta/2)*sandwich:",
          np.abs(np.exp(lam - eta/2)*s - c).max()/np.abs(c).max())

# corrected T-decomp-R: T = sum K^R(l|be-1)_ij * blocks [A(l|be),C(l|be),B(l|be),D(l|be)]
lam = rc()
t = transfer_matrix(p, b, lam)
kr = gauged_k_plus(b, g, eta, lam, be - 1, "R")
tr = (kr[0,0]*op_a_minus(p,b,g,lam,be) + kr[0,1]*op_c_minus(p,b,g,lam,be)
      + kr[1,0]*op_b_minus(p,b,g,lam,be) + kr[1,1]*op_d_minus(p,b,g,lam,be))
print("T-decomp-R (corrected pattern, sandwich):",
      np.abs(np.exp(-lam+eta/2)*t - tr).max()/np.abs(t).max())
krc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "R")
trc = (krc[0,0]*op_a_minus(p,b,g,lam,be) + krc[0,1]*op_c_minus(p,b,g,lam,be)
       + krc[1,0]*op_b_minus(p,b,g,lam,be) + krc[1,1]*op_d_minus(p,b,g,lam,be))
print("T-decomp-R (closed forms, target T):", np.abs(t - trc).max()/np.abs(t).max())

klc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "L")
tlc = (klc[0,0]*op_a_minus(p,b,g,lam,be) + klc[1,1]*op_d_minus(p,b,g,lam,be)
       + klc[1,0]*op_b_minus(p,b,g,lam,be-2) + klc[0,1]*op_c_minus(p,b,g,lam,be+2))
print("T-decomp-L (closed forms, target T):", np.abs(t - tlc).max()/np.abs(t).max())

# a+ derived from K^L closed + parity coefficient, vs printed a+
for lam in (rc(), rc(), rc()):
    klc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "L")
    c1 = sh(eta)*sh(2*lam + (be-1)*eta)/(sh(2*lam)*sh(be*eta))
    c2 = sh(2*lam - eta)*sh((be-1)*eta)/(sh(2*lam)*sh(be*eta))
    ader = klc[0, 0] + c1*klc[1, 1]
    ader_m = c2*klc[1, 1]
    print("a+ derived/printed:", ader/a_plus(b, g, eta, lam, be-1),
          " minus-side:", ader_m/a_plus(b, g, eta, -lam, be-1))

# d+ derived from K^R closed + parity, vs printed d+
for lam in (rc(), rc()):
    krc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "R")
    c3 = sh(eta)*sh(2*lam - (be-1)*eta)/(sh(2*lam)*sh((be-2)*eta))
    c4 = sh(2*lam - eta)*sh((be-1)*eta)/(sh(2*lam)*sh((be-2)*eta))
    dder = krc[1, 1] - c3*krc[0, 0]
    dder_m = c4*krc[0, 0]
    print("d+ derived/printed:", dder/d_plus(b, g, eta, lam, be-1),
          " minus-side:", dder_m/d_plus(b, g, eta, -lam, be-1))

# full a+/d+ two-term forms against T with closed-normalization
lam = rc()
t = transfer_matrix(p, b, lam)
klc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "L")
ta = (a_plus(b,g,eta,lam,be-1)*op_a_minus(p,b,g,lam,be)
      + a_plus(b,g,eta,-lam,be-1)*op_a_minus(p,b,g,-lam,be)
      + klc[1,0]*op_b_minus(p,b,g,lam,be-2) + klc[0,1]*op_c_minus(p,b,g,lam,be+2))
print("a+ two-term form vs T:", np.abs(t - ta).max()/np.abs(t).max())
krc = gauged_k_plus_closed(b, g, eta, lam, be - 1, "R")
td = (d_plus(b,g,eta,lam,be-1)*op_d_minus(p,b,g,lam,be)
      + d_plus(b,g,eta,-lam,be-1)*op_d_minus(p,b,g,-lam,be)
      + krc[1,0]*op_b_minus(p,b,g,lam,be) + krc[0,1]*op_c_minus(p,b,g,lam,be))
print("d+ two-term form vs T:", np.abs(t - td).max()/np.abs(t).max())

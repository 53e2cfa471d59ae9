"""Scratch validation of the spectrum layer."""
import numpy as np
from xxzsov.bulk import default_model, default_boundary
from xxzsov.gauge import GaugeParams
from xxzsov.reflection import transfer_matrix, qdet_k, qdet_u_minus
from xxzsov.sov import (left_sov_basis, right_sov_basis, SovGrid,
                        gram_site_factors, index_to_h)
from xxzsov.spectrum import (coeff_a_big, build_ansatz, assemble_quadratic_system,
                             solve_spectrum_oracle, newton_polish,
                             solve_spectrum_newton, build_right_eigenstate,
                             build_left_eigenstate, baxter_residual)

rng = np.random.default_rng(53)
rc = lambda: rng.normal() + 1j * rng.normal()
b = default_boundary()

N = 3
p = default_model(N)
eta = p.eta
g = GaugeParams.triangular(b, eta, alpha=0.37 - 0.21j, k=0)
grid = SovGrid(p)

# A-big zeros
print("A(zeta_1^0):", abs(coeff_a_big(p, b, g, grid.zeta(1, 0))))
print("A(-zeta_1^1):", abs(coeff_a_big(p, b, g, -grid.zeta(1, 1))))

# Tot-q-det: A(l+eta/2)A(-l+eta/2) = detqK+ detqU- / (sinh(2l+eta) sinh(2l-eta))
for _ in range(3):
    lam = rc()
    lhs = coeff_a_big(p, b, g, lam + eta/2) * coeff_a_big(p, b, g, -lam + eta/2)
    rhs = (qdet_k(p, b, +1, lam) * qdet_u_minus(p, b, lam)
           / (np.sinh(2*lam + eta) * np.sinh(2*lam - eta)))
    print("tot-q-det:", abs(lhs - rhs)/abs(rhs))

# q_n both ways
ansatz = build_ansatz(p, b)
system = assemble_quadratic_system(ansatz, p, b, g)
for n in range(1, N + 1):
    xi = p.xi[n-1]
    alt = (qdet_k(p, b, +1, xi) * qdet_u_minus(p, b, xi)
           / (np.sinh(eta + 2*xi) * np.sinh(eta - 2*xi)))
    alt2 = (qdet_k(p, b, +1, xi) * qdet_u_minus(p, b, xi)
            / (np.sinh(2*xi + eta) * np.sinh(2*xi - eta)))
    print(f"q_{n}: vs printed-sign {abs(system.qvec[n-1]-alt)/abs(alt):.2e}  "
          f"vs flipped-sign {abs(system.qvec[n-1]-alt2)/abs(alt2):.2e}")

# ansatz cardinal properties
for a in range(1, N + 1):
    for c in range(1, N + 1):
        v = ansatz.g_basis(grid.zeta(c, 0), a)
        expect = 1.0 if a == c else 0.0
        assert abs(v - expect) < 1e-12, (a, c, v)
print("g_a cardinality ok; g_a(eta/2):", abs(ansatz.g_basis(eta/2, 1)),
      " g_a(eta/2-ipi/2):", abs(ansatz.g_basis(eta/2 - 1j*np.pi/2, 1)))
print("f anchors:", abs(ansatz.f_inhom(eta/2) - ansatz.tau_half),
      abs(ansatz.f_inhom(eta/2 + 1j*np.pi/2) - ansatz.tau_half_ipi))
lam = rc()
print("evenness:", abs(ansatz.g_basis(-lam, 2) - ansatz.g_basis(lam, 2)),
      abs(ansatz.f_inhom(-lam) - ansatz.f_inhom(lam)))

# oracle
sols, ansatz, system = solve_spectrum_oracle(p, b, g)
print("n solutions:", len(sols))
print("max quad residual (relative to q):",
      max(np.abs(system.residual(s.x)).max() for s in sols) / np.abs(system.qvec).max())
print("max functional residual:", max(s.functional_residual for s in sols))

# tau matches Rayleigh quotient at fresh mu
err = 0
for mu in (rc(), rc(), rc()):
    t = transfer_matrix(p, b, mu)
    w = np.linalg.eigvals(t)
    taus = sorted([s.tau(mu) for s in sols], key=lambda z: (z.real, z.imag))
    ws = sorted(w, key=lambda z: (z.real, z.imag))
    err = max(err, max(abs(a - b2)/abs(b2) for a, b2 in zip(taus, ws)))
print("eigenvalue multiset match:", err)

# Newton re-convergence
for s in sols[:4]:
    x, it, ok = newton_polish(system, s.x + 1e-3)
    print(f"newton: ok={ok} iters={it} dist={np.abs(x - s.x).max():.2e}")

# perturbed seeds recapture
hits = 0
for s in sols:
    x, it, ok = newton_polish(system, s.x * (1 + 0.01*rc()))
    if ok and min(np.abs(x - s2.x).max() for s2 in sols) < 1e-6:
        hits += 1
print(f"recapture: {hits}/{len(sols)}")

# eigenstates
L = left_sov_basis(p, b, g, g.beta - 2)
R = right_sov_basis(p, b, g, g.beta)
rho = gram_site_factors(p, L, R)
res_r, res_l = [], []
forms = set()
for s in sols:
    vec, ratio, name, res = build_right_eigenstate(p, b, g, s, R, rho=rho)
    res_r.append(res); forms.add(("R", name))
    cvec, cratio, cname, cres = build_left_eigenstate(p, b, g, s, L, rho=rho)
    res_l.append(cres); forms.add(("L", cname))
print("right eigen-residuals:", max(res_r), "forms:", forms)
print("left eigen-residuals:", max(res_l))

# Baxter system on oracle wavefunctions
worst = 0
for s in sols:
    psi = L.states @ s.eigenvector
    worst = max(worst, baxter_residual(p, b, g, L, s.tau, psi))
print("baxter residual (oracle wavefunctions):", worst)

# biorthogonality of built eigenstates
vecs = [build_right_eigenstate(p, b, g, s, R, rho=rho)[0] for s in sols]
cvecs = [build_left_eigenstate(p, b, g, s, L, rho=rho)[0] for s in sols]
cross = 0
for i in range(len(sols)):
    for j in range(len(sols)):
        if i != j:
            v = abs(cvecs[i] @ vecs[j]) / (np.linalg.norm(cvecs[i]) * np.linalg.norm(vecs[j]))
            cross = max(cross, v)
print("biorthogonality cross:", cross)
diag_ok = min(abs(cvecs[i] @ vecs[i]) / (np.linalg.norm(cvecs[i]) * np.linalg.norm(vecs[i])) for i in range(len(sols)))
print("diagonal pairings min:", diag_ok)

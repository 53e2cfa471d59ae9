"""Scalar K-matrices, double-row monodromy matrices, the boundary transfer
matrix, quantum determinants, the Hamiltonian, and hermiticity predicates.
"""

from functools import lru_cache

import numpy as np

from .bulk import (coeff_a_minus, coeff_g, monodromy, monodromy_hat, qdet_m,
                   ModelParams)
from .numcore import (ID2, SIGMA_X, SIGMA_Y, SIGMA_Z, aux_blocks,
                      aux_transpose, embed_site, from_aux_blocks,
                      partial_trace_aux)

__all__ = [
    "k_scalar", "k_minus", "k_plus", "qdet_k",
    "u_minus", "u_plus", "qdet_u_minus", "qdet_u_minus_operator",
    "transfer_matrix", "transfer_matrix_via_plus",
    "hamiltonian_direct", "hamiltonian_from_transfer", "traceless",
    "check_hermiticity", "reflection_equation_residual",
]


def k_scalar(lam, zeta, kappa, tau, eta):
    """Most general scalar reflection matrix (2x2)."""
    sz = np.sinh(zeta)
    if abs(sz) < 1e-14:
        raise ValueError("zeta in i*pi*Z: scalar K-matrix is singular")
    s2 = np.sinh(2 * lam - eta)
    return np.array([
        [np.sinh(lam - eta / 2 + zeta), kappa * np.exp(tau) * s2],
        [kappa * np.exp(-tau) * s2, np.sinh(zeta - lam + eta / 2)],
    ], dtype=complex) / sz


def k_minus(b, lam, eta):
    return k_scalar(lam, b.zeta_m, b.kappa_m, b.tau_m, eta)


def k_plus(b, lam, eta):
    # K_+(lam) = K(lam + eta) with the plus-side couplings
    return k_scalar(lam + eta, b.zeta_p, b.kappa_p, b.tau_p, eta)


def qdet_k(p, b, sign, lam):
    """Quantum determinant of K_{+/-}: -/+ sinh(2lam +/- 2eta) g(lam+eta/2) g(-lam+eta/2)."""
    eta = p.eta
    g = lambda x: coeff_g(b, sign, x, eta)
    s = np.sinh(2 * lam + 2 * eta) if sign > 0 else np.sinh(2 * lam - 2 * eta)
    pref = -1 if sign > 0 else 1
    return pref * s * g(lam + eta / 2) * g(-lam + eta / 2)


@lru_cache(maxsize=4096)
def _u_minus_cached(p, b, lam):
    km = np.kron(k_minus(b, lam, p.eta), np.eye(p.dim, dtype=complex))
    u = monodromy(p, lam) @ km @ monodromy_hat(p, lam)
    u.flags.writeable = False
    return u


def u_minus(p, b, lam):
    """Double-row monodromy matrix U_-(lam) = M K_- M_hat on aux (x) chain."""
    return _u_minus_cached(p, b, complex(lam))


@lru_cache(maxsize=4096)
def _u_plus_cached(p, b, lam):
    kp = np.kron(k_plus(b, lam, p.eta).T, np.eye(p.dim, dtype=complex))
    ut = aux_transpose(monodromy(p, lam)) @ kp @ aux_transpose(monodromy_hat(p, lam))
    u = aux_transpose(ut)
    u.flags.writeable = False
    return u


def u_plus(p, b, lam):
    """Double-row monodromy U_+(lam), defined through its aux transpose."""
    return _u_plus_cached(p, b, complex(lam))


def qdet_u_minus(p, b, lam):
    """Scalar quantum determinant of U_-."""
    eta = p.eta
    return (np.sinh(2 * lam - 2 * eta)
            * coeff_a_minus(p, b, lam + eta / 2)
            * coeff_a_minus(p, b, -lam + eta / 2))


def qdet_u_minus_operator(p, b, lam, eps=1, form="A"):
    """Operator combination realizing det_q U_- (central, proportional to I)."""
    eta = p.eta
    lam = complex(lam)
    a1, b1, c1, d1 = aux_blocks(u_minus(p, b, eps * lam + eta / 2))
    a2, b2, c2, d2 = aux_blocks(u_minus(p, b, eta / 2 - eps * lam))
    if form == "A":
        comb = a1 @ a2 + b1 @ c2
    elif form == "D":
        comb = d1 @ d2 + c1 @ b2
    else:
        raise ValueError("form must be 'A' or 'D'")
    return np.sinh(2 * lam - 2 * eta) * comb


@lru_cache(maxsize=8192)
def _transfer_cached(p, b, lam):
    kp = k_plus(b, lam, p.eta)
    ua, ub, uc, ud = aux_blocks(u_minus(p, b, lam))
    t = kp[0, 0] * ua + kp[0, 1] * uc + kp[1, 0] * ub + kp[1, 1] * ud
    t.flags.writeable = False
    return t


def transfer_matrix(p, b, lam):
    """Boundary transfer matrix tr_0 { K_+(lam) U_-(lam) }."""
    return _transfer_cached(p, b, complex(lam))


def transfer_matrix_via_plus(p, b, lam):
    """Same transfer matrix computed as tr_0 { K_-(lam) U_+(lam) }."""
    km = np.kron(k_minus(b, lam, p.eta), np.eye(p.dim, dtype=complex))
    return partial_trace_aux(km @ u_plus(p, b, lam))


def hamiltonian_direct(n_sites, b, eta):
    """Open XXZ Hamiltonian with generic boundary fields, assembled from Paulis."""
    dim = 1 << n_sites
    h = np.zeros((dim, dim), dtype=complex)
    for i in range(1, n_sites):
        for op, w in ((SIGMA_X, 1.0), (SIGMA_Y, 1.0), (SIGMA_Z, np.cosh(eta))):
            h += w * embed_site(op, i, n_sites) @ embed_site(op, i + 1, n_sites)
    for site, zeta, kappa, tau in ((1, b.zeta_m, b.kappa_m, b.tau_m),
                                   (n_sites, b.zeta_p, b.kappa_p, b.tau_p)):
        field = (np.cosh(zeta) * SIGMA_Z
                 + 2 * kappa * (np.cosh(tau) * SIGMA_X + 1j * np.sinh(tau) * SIGMA_Y))
        h += (np.sinh(eta) / np.sinh(zeta)) * embed_site(field, site, n_sites)
    return h


def traceless(m):
    n = m.shape[0]
    return m - (np.trace(m) / n) * np.eye(n, dtype=complex)


def _transfer_derivative(p, b, step):
    """d/dlam T at lam = eta/2: central difference with one Richardson step."""
    lam0 = p.eta / 2

    def cd(h):
        return (transfer_matrix(p, b, lam0 + h) - transfer_matrix(p, b, lam0 - h)) / (2 * h)

    d1 = cd(step)
    d2 = cd(step / 2)
    return (4 * d2 - d1) / 3


def hamiltonian_from_transfer(n_sites, b, eta, delta, step_scale=1e-5):
    """Hamiltonian from the transfer-matrix derivative at inhomogeneity xi_n = delta*n.

    Returns the prefactored derivative; it matches the direct Hamiltonian up
    to an additive multiple of the identity in the delta -> 0 limit.
    """
    xi = tuple(delta * n for n in range(1, n_sites + 1))
    p = ModelParams(n_sites, eta, xi)
    tp = _transfer_derivative(p, b, step_scale * abs(eta))
    trkp = np.trace(k_plus(b, eta / 2, eta))
    trkm = np.trace(k_minus(b, eta / 2, eta))
    pref = 2 * np.sinh(eta) ** (1 - 2 * n_sites) / (trkp * trkm)
    return pref * tp


def reflection_equation_residual(p, b, lam, mu, which="minus"):
    """Residual of the boundary Yang-Baxter (reflection) equation for U_-.

    Evaluated on aux1 (x) aux2 (x) chain; `which='plus'` tests the
    transposed-reflected solution built from U_+.
    """
    from .bulk import r_matrix
    eta = p.eta
    dimq = p.dim
    if which == "minus":
        u1m = u_minus(p, b, lam)
        u2m = u_minus(p, b, mu)
    else:
        u1m = aux_transpose(u_plus(p, b, -lam))
        u2m = aux_transpose(u_plus(p, b, -mu))

    def emb(m, which_aux):
        a, bb, c, d = aux_blocks(m)
        blocks = {(0, 0): a, (0, 1): bb, (1, 0): c, (1, 1): d}
        out = np.zeros((4 * dimq, 4 * dimq), complex)
        for i in range(2):
            for j in range(2):
                e = np.zeros((2, 2)); e[i, j] = 1
                if which_aux == 1:
                    out += np.kron(e, np.kron(ID2, blocks[(i, j)]))
                else:
                    out += np.kron(ID2, np.kron(e, blocks[(i, j)]))
        return out

    u1 = emb(u1m, 1)
    u2 = emb(u2m, 2)
    perm = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)

    def r12(x):
        return np.kron(r_matrix(x, eta), np.eye(dimq, dtype=complex))

    def r21(x):
        return np.kron(perm @ r_matrix(x, eta) @ perm, np.eye(dimq, dtype=complex))

    lhs = r12(lam - mu) @ u1 @ r21(lam + mu - eta) @ u2
    rhs = u2 @ r12(lam + mu - eta) @ u1 @ r21(lam - mu)
    scale = max(np.linalg.norm(lhs), 1e-300)
    return np.linalg.norm(lhs - rhs) / scale


def check_hermiticity(p, b, regime, lams=None):
    """Residuals of the conjugation relations for the double-row matrices and
    the transfer matrix in the massless (eta imaginary) or massive (eta real)
    reality class.

    On full aux (x) chain matrices the relation reads U(lam)^dag = U(s lam^*)
    with s = -1 (massless) or s = +1 (massive): the full adjoint already
    contains the auxiliary transpose that accompanies the blockwise adjoint.
    The transfer matrix satisfies T(lam)^dag = T(lam^*) in both regimes.
    """
    if regime not in ("massless", "massive"):
        raise ValueError("regime must be 'massless' or 'massive'")
    if lams is None:
        lams = [0.3 + 0.4j, -0.7 + 0.1j]
    sign = -1 if regime == "massless" else 1
    out = {"u_minus": 0.0, "u_plus": 0.0, "transfer": 0.0}
    for lam in lams:
        mirror = sign * np.conj(lam)
        for key, fn in (("u_minus", u_minus), ("u_plus", u_plus)):
            lhs = fn(p, b, lam).conj().T
            rhs = fn(p, b, mirror)
            out[key] = max(out[key], np.linalg.norm(lhs - rhs) / np.linalg.norm(lhs))
        tl = transfer_matrix(p, b, lam).conj().T
        tr = transfer_matrix(p, b, np.conj(lam))
        out["transfer"] = max(out["transfer"], np.linalg.norm(tl - tr) / np.linalg.norm(tl))
    return out


def hermitian_parameter_set(regime, n_sites, seed=5):
    """A parameter set in the reality class that makes T a normal family.

    Massless: eta, zeta, tau imaginary, kappa real, xi real.
    Massive: eta, zeta, kappa real, tau imaginary, xi imaginary.
    """
    from .bulk import BoundaryParams
    rng = np.random.default_rng(seed)

    def r():
        return rng.uniform(0.5, 1.2) * np.sign(rng.normal())

    if regime == "massless":
        b = BoundaryParams.from_couplings(1j * r(), r(), 1j * r(),
                                          1j * r(), r(), 1j * r())
        p = ModelParams(n_sites, 0.73j,
                        tuple(0.11 * n + 0.05 * n * n for n in range(1, n_sites + 1)))
    elif regime == "massive":
        b = BoundaryParams.from_couplings(r(), r(), 1j * r(),
                                          r(), r(), 1j * r())
        p = ModelParams(n_sites, 0.41,
                        tuple(1j * (0.11 * n + 0.05 * n * n) for n in range(1, n_sites + 1)))
    else:
        raise ValueError("regime must be 'massless' or 'massive'")
    return p, b

"""Gauge transformation layer: gauge vectors and matrices, gauged bulk and
double-row monodromy matrices, gauged boundary matrices, reference states,
and the gauged transfer-matrix decompositions.

Shift bookkeeping is the chief hazard here, so every gauged object takes its
base argument explicitly; shifted bases (base+1, base+N-n, ...) are always
computed at the call site, never implicitly.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .bulk import monodromy, monodromy_hat
from .numcore import aux_blocks
from .reflection import k_minus, k_plus, u_minus

__all__ = [
    "GaugeParams", "gauge_condition_residual",
    "vec_x", "vec_y", "vec_xhat", "vec_yhat",
    "row_xbar", "row_ybar", "row_xtilde", "row_ytilde",
    "g_bar", "g_bar_inv", "g_tilde", "g_tilde_inv", "g_hat", "g_hat_inv",
    "gauged_monodromy", "gauged_monodromy_hat", "gauged_u_minus",
    "op_a_minus", "op_b_minus", "op_c_minus", "op_d_minus",
    "gauged_k_minus", "gauged_k_plus", "gauged_k_plus_closed",
    "a_plus", "d_plus",
    "reference_bra", "reference_ket", "bra_norm_factor",
]

_IPI = 1j * np.pi


@dataclass(frozen=True)
class GaugeParams:
    """The two gauge constants; beta is the dynamical one."""

    alpha: complex
    beta: complex

    def __post_init__(self):
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))

    @classmethod
    def triangular(cls, b, eta, alpha, k=0):
        """Fix beta so the upper-right entries of both gauged K_+ matrices vanish.

        The condition is (alpha - beta + 2) eta = -tau_+ + (-1)^k (alpha_+ - beta_+)
        + i pi k; alpha stays free.
        """
        rhs = -b.tau_p + (-1) ** k * (b.alpha_p - b.beta_p) + _IPI * k
        beta = alpha + 2 - rhs / eta
        return cls(alpha, beta)


def gauge_condition_residual(b, g, eta, k=0):
    rhs = -b.tau_p + (-1) ** k * (b.alpha_p - b.beta_p) + _IPI * k
    return abs((g.alpha - g.beta + 2) * eta - rhs)


def _check_nonsingular(g, eta, barg):
    if abs(np.sinh(barg * eta)) < 1e-10:
        raise ValueError(f"singular gauge: sinh(base*eta) ~ 0 at base {barg}")


# ---------------------------------------------------------------------------
# gauge vectors (columns) and dual rows
# ---------------------------------------------------------------------------

def vec_x(g, eta, lam, barg):
    return np.array([np.exp(-(lam + (g.alpha + barg) * eta)), 1.0], dtype=complex)


def vec_y(g, eta, lam, barg):
    return vec_x(g, eta, lam, -barg)


def row_xbar(g, eta, lam, barg):
    _check_nonsingular(g, eta, barg)
    pref = np.exp(lam + g.alpha * eta) / (2 * np.sinh(barg * eta))
    return pref * np.array([1.0, -np.exp(-(lam + (g.alpha + barg) * eta))], dtype=complex)


def row_ybar(g, eta, lam, barg):
    _check_nonsingular(g, eta, barg)
    pref = np.exp(lam + g.alpha * eta) / (2 * np.sinh(barg * eta))
    return pref * np.array([-1.0, np.exp(-(lam + (g.alpha - barg) * eta))], dtype=complex)


def row_xtilde(g, eta, lam, barg):
    return (np.exp(eta) * np.sinh(barg * eta) / np.sinh((barg - 1) * eta)
            * row_xbar(g, eta, lam, barg))


def row_ytilde(g, eta, lam, barg):
    return (np.exp(eta) * np.sinh(barg * eta) / np.sinh((barg + 1) * eta)
            * row_ybar(g, eta, lam, barg))


def vec_xhat(g, eta, lam, barg):
    # defined so that vec_xhat(.., base+2) = e^eta sinh((base-1)eta)/sinh(base eta) X(..|base+2)
    base = barg - 2
    return (np.exp(eta) * np.sinh((base - 1) * eta) / np.sinh(base * eta)
            * vec_x(g, eta, lam, barg))


def vec_yhat(g, eta, lam, barg):
    base = barg + 2
    return (np.exp(eta) * np.sinh((base + 1) * eta) / np.sinh(base * eta)
            * vec_y(g, eta, lam, barg))


# ---------------------------------------------------------------------------
# 2x2 gauge matrices and inverses
# ---------------------------------------------------------------------------

def g_bar(g, eta, lam, barg):
    return np.column_stack([vec_x(g, eta, lam, barg), vec_y(g, eta, lam, barg)])


def g_bar_inv(g, eta, lam, barg):
    return np.vstack([row_ybar(g, eta, lam, barg), row_xbar(g, eta, lam, barg)])


def g_tilde(g, eta, lam, barg):
    return np.column_stack([vec_x(g, eta, lam, barg + 1), vec_y(g, eta, lam, barg - 1)])


def g_tilde_inv(g, eta, lam, barg):
    return np.vstack([row_ytilde(g, eta, lam, barg - 1), row_xtilde(g, eta, lam, barg + 1)])


def g_hat(g, eta, lam, barg):
    return np.column_stack([vec_xhat(g, eta, lam, barg + 2), vec_yhat(g, eta, lam, barg - 2)])


def g_hat_inv(g, eta, lam, barg):
    return np.vstack([row_ytilde(g, eta, lam, barg - 2), row_xtilde(g, eta, lam, barg + 2)])


def _aux_sandwich(left2, mat, right2):
    """(left2 (x) I) @ mat @ (right2 (x) I) without forming the Kroneckers."""
    a, b, c, d = aux_blocks(mat)
    l, r = left2, right2
    a2 = l[0, 0] * a + l[0, 1] * c
    b2 = l[0, 0] * b + l[0, 1] * d
    c2 = l[1, 0] * a + l[1, 1] * c
    d2 = l[1, 0] * b + l[1, 1] * d
    out_a = a2 * r[0, 0] + b2 * r[1, 0]
    out_b = a2 * r[0, 1] + b2 * r[1, 1]
    out_c = c2 * r[0, 0] + d2 * r[1, 0]
    out_d = c2 * r[0, 1] + d2 * r[1, 1]
    return np.block([[out_a, out_b], [out_c, out_d]])


# ---------------------------------------------------------------------------
# gauged monodromy matrices
# ---------------------------------------------------------------------------

def gauged_monodromy(p, g, lam, base):
    """Bulk monodromy in the gauged frame; blocks A,B,C,D carry base `base`."""
    mu = lam - p.eta / 2
    return _aux_sandwich(g_tilde_inv(g, p.eta, mu, base),
                         monodromy(p, lam),
                         g_tilde(g, p.eta, mu, base + p.n_sites))


def gauged_monodromy_hat(p, g, lam, base):
    mu = p.eta / 2 - lam
    return _aux_sandwich(g_bar_inv(g, p.eta, mu, base + p.n_sites),
                         monodromy_hat(p, lam),
                         g_bar(g, p.eta, mu, base))


@lru_cache(maxsize=8192)
def _gauged_u_minus_cached(p, b, g, lam, base):
    eta = p.eta
    raw = _aux_sandwich(g_tilde_inv(g, eta, lam - eta / 2, base),
                        u_minus(p, b, lam),
                        g_tilde(g, eta, eta / 2 - lam, base))
    out = np.exp(-lam + eta / 2) * raw
    out.flags.writeable = False
    return out


def gauged_u_minus(p, b, g, lam, base):
    """Normalized gauged double-row matrix at sandwich base `base`.

    Block layout: [[A(lam|base+2), B(lam|base)], [C(lam|base+2), D(lam|base)]].
    """
    return _gauged_u_minus_cached(p, b, g, complex(lam), complex(base))


def op_a_minus(p, b, g, lam, beta_arg):
    return aux_blocks(gauged_u_minus(p, b, g, lam, beta_arg - 2))[0]


def op_b_minus(p, b, g, lam, beta_arg):
    return aux_blocks(gauged_u_minus(p, b, g, lam, beta_arg))[1]


def op_c_minus(p, b, g, lam, beta_arg):
    return aux_blocks(gauged_u_minus(p, b, g, lam, beta_arg - 2))[2]


def op_d_minus(p, b, g, lam, beta_arg):
    return aux_blocks(gauged_u_minus(p, b, g, lam, beta_arg))[3]


# ---------------------------------------------------------------------------
# gauged boundary matrices
# ---------------------------------------------------------------------------

def gauged_k_minus(p, b, g, lam, base):
    """The two gauged K_- sandwiches entering the boundary-bulk decompositions.

    Both carry the shift base+N on the inverse-gauge side.
    """
    eta = p.eta
    shifted = base + p.n_sites
    km = k_minus(b, lam, eta)
    left = g_tilde_inv(g, eta, lam - eta / 2, shifted)
    k_plain = left @ km @ g_bar(g, eta, eta / 2 - lam, shifted - 1)
    k_barred = left @ km @ g_bar(g, eta, eta / 2 - lam, shifted + 1)
    return k_plain, k_barred


def gauged_k_plus(b, g, eta, lam, base, side="L"):
    """Gauged K_+ from the vector sandwiches (left or right version)."""
    kp = k_plus(b, lam, eta)
    mu_l = eta / 2 - lam
    mu_r = lam - eta / 2
    if side == "L":
        return np.array([
            [row_ytilde(g, eta, mu_l, base - 2) @ kp @ vec_xhat(g, eta, mu_r, base + 2),
             row_ytilde(g, eta, mu_l, base) @ kp @ vec_yhat(g, eta, mu_r, base - 2)],
            [row_xtilde(g, eta, mu_l, base) @ kp @ vec_xhat(g, eta, mu_r, base + 2),
             row_xtilde(g, eta, mu_l, base + 2) @ kp @ vec_yhat(g, eta, mu_r, base - 2)],
        ], dtype=complex)
    if side == "R":
        return np.array([
            [row_ybar(g, eta, mu_l, base) @ kp @ vec_x(g, eta, mu_r, base),
             row_ybar(g, eta, mu_l, base) @ kp @ vec_y(g, eta, mu_r, base - 2)],
            [row_xbar(g, eta, mu_l, base) @ kp @ vec_x(g, eta, mu_r, base + 2),
             row_xbar(g, eta, mu_l, base) @ kp @ vec_y(g, eta, mu_r, base)],
        ], dtype=complex)
    raise ValueError("side must be 'L' or 'R'")


def gauged_k_plus_closed(b, g, eta, lam, base, side="L"):
    """Closed-form entries of the gauged K_+ matrices.

    Normalization: these equal e^{lam - eta/2} times the vector sandwiches,
    so they weight the e^{-lam+eta/2}-normalized double-row blocks in a
    decomposition of T(lam) itself.
    """
    al = g.alpha
    be = base
    zp, kp_, tp = b.zeta_p, b.kappa_p, b.tau_p
    sz = np.sinh(zp)
    s2p = np.sinh(2 * lam + eta)
    sb = np.sinh(be * eta)
    l11 = (np.sinh(zp) * np.cosh(lam + eta / 2) * np.sinh(lam - eta / 2 + be * eta)
           - (np.cosh(zp) * np.sinh(lam + eta / 2) * np.cosh(lam - eta / 2 + be * eta)
              + kp_ * s2p * np.sinh(tp + (al + 2) * eta))) / (sb * sz)
    l12 = (np.exp((be + 1) * eta) * s2p
           * (kp_ * np.sinh((be - 1 - al) * eta - tp) - np.exp(-zp) / 2)) / (sb * sz)
    l21 = (np.exp(-(be - 1) * eta) * s2p
           * (kp_ * np.sinh((be + al + 1) * eta + tp) + np.exp(-zp) / 2)) / (sb * sz)
    l22 = (np.exp(zp) * np.sinh((be + 1) * eta) + np.exp(-zp) * np.sinh(2 * lam - be * eta)
           + 2 * kp_ * s2p * np.sinh(tp + (al + 2) * eta)) / (2 * sb * sz)
    if side == "L":
        return np.array([[l11, l12], [l21, l22]], dtype=complex)
    if side == "R":
        r11 = (np.exp(zp) * np.sinh((be - 1) * eta) - np.exp(-zp) * np.sinh(2 * lam + be * eta)
               - 2 * kp_ * s2p * np.sinh(tp + al * eta)) / (2 * sb * sz)
        r22 = (np.exp(-zp) * np.sinh(2 * lam - be * eta) + np.exp(zp) * np.sinh((be + 1) * eta)
               + 2 * kp_ * s2p * np.sinh(tp + al * eta)) / (2 * sb * sz)
        return np.array([[r11, np.exp(-2 * eta) * l12],
                         [np.exp(-2 * eta) * l21, r22]], dtype=complex)
    raise ValueError("side must be 'L' or 'R'")


# ---------------------------------------------------------------------------
# transfer-matrix coefficient functions
# ---------------------------------------------------------------------------

def a_plus(b, g, eta, lam, barg):
    """Coefficient of the A block (base barg+1) in the two-term form of T(lam).

    Obtained by eliminating the D block from the left decomposition through
    the gauged parity relation, so it is exact by construction.
    """
    be = barg + 1
    kl = gauged_k_plus_closed(b, g, eta, lam, barg, "L")
    c1 = (np.sinh(eta) * np.sinh(2 * lam + (be - 1) * eta)
          / (np.sinh(2 * lam) * np.sinh(be * eta)))
    return kl[0, 0] + c1 * kl[1, 1]


def d_plus(b, g, eta, lam, barg):
    """Coefficient of the D block (base barg+1) in the two-term form of T(lam)."""
    be = barg + 1
    kr = gauged_k_plus_closed(b, g, eta, lam, barg, "R")
    c3 = (np.sinh(eta) * np.sinh(2 * lam - (be - 1) * eta)
          / (np.sinh(2 * lam) * np.sinh((be - 2) * eta)))
    return kr[1, 1] - c3 * kr[0, 0]


# ---------------------------------------------------------------------------
# reference states
# ---------------------------------------------------------------------------

def reference_bra(p, g, barg):
    """Left reference state, a row vector of length 2^N."""
    out = np.array([1.0], dtype=complex)
    for n in range(1, p.n_sites + 1):
        local = np.array([-1.0,
                          np.exp(-g.alpha * p.eta + (p.n_sites - n + barg) * p.eta
                                 - p.xi[n - 1])], dtype=complex)
        out = np.kron(out, local)
    return out


def reference_ket(p, g, barg):
    """Right reference state, a column vector of length 2^N."""
    out = np.array([1.0], dtype=complex)
    for n in range(1, p.n_sites + 1):
        local = np.array([np.exp(-g.alpha * p.eta - (p.n_sites - n + barg) * p.eta
                                 - p.xi[n - 1]), 1.0], dtype=complex)
        out = np.kron(out, local)
    return out


def bra_norm_factor(p, g, barg):
    """Normalization relating the left reference state to the gauged ferromagnet."""
    val = 2 ** p.n_sites * np.exp(-g.alpha * p.n_sites * p.eta - np.sum(p.xi))
    for n in range(1, p.n_sites + 1):
        val *= np.sinh((p.n_sites - n + barg) * p.eta)
    return val

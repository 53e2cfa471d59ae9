"""Six-vertex R-matrix, bulk monodromy matrices and scalar coefficient
functions of the inhomogeneous open XXZ chain.
"""

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .kernels import apply_pair_gate
from .numcore import aux_blocks, from_aux_blocks, require_finite

__all__ = [
    "GenericityError", "ModelParams", "BoundaryParams",
    "r_matrix", "monodromy", "monodromy_hat",
    "coeff_a", "coeff_d", "coeff_g", "coeff_a_minus", "coeff_a_h", "qdet_m",
    "default_model", "default_boundary",
]

_IPI = 1j * np.pi


class GenericityError(ValueError):
    """A genericity condition required by the solution scheme is violated."""


@dataclass(frozen=True)
class ModelParams:
    """Chain length, anisotropy parameter and inhomogeneities."""

    n_sites: int
    eta: complex
    xi: tuple

    def __post_init__(self):
        if self.n_sites < 1:
            raise ValueError("n_sites must be >= 1")
        if len(self.xi) != self.n_sites:
            raise ValueError("xi must have one entry per site")
        object.__setattr__(self, "eta", complex(self.eta))
        object.__setattr__(self, "xi", tuple(complex(x) for x in self.xi))

    @property
    def dim(self):
        return 1 << self.n_sites

    def genericity_violations(self, tol=1e-10):
        """Pairs (a, b, r) with xi_a = xi_b + r*eta mod i*pi, within tol."""
        bad = []
        for a in range(self.n_sites):
            for b in range(self.n_sites):
                if a == b:
                    continue
                for r in (-1, 0, 1):
                    if abs(np.sinh(self.xi[a] - self.xi[b] - r * self.eta)) < tol:
                        bad.append((a + 1, b + 1, r))
        return bad

    def validate(self, tol=1e-10):
        bad = self.genericity_violations(tol)
        if bad:
            raise GenericityError(
                f"xi-pairwise-genericity violated at (site a, site b, shift r) = {bad}")


@dataclass(frozen=True)
class BoundaryParams:
    """The six boundary couplings and the derived hyperbolic parametrization.

    alpha/beta satisfy sinh(alpha) cosh(beta) = sinh(zeta)/(2 kappa) and
    cosh(alpha) sinh(beta) = cosh(zeta)/(2 kappa) on each side.
    """

    zeta_m: complex
    kappa_m: complex
    tau_m: complex
    zeta_p: complex
    kappa_p: complex
    tau_p: complex
    alpha_m: complex = field(default=0j)
    beta_m: complex = field(default=0j)
    alpha_p: complex = field(default=0j)
    beta_p: complex = field(default=0j)

    @staticmethod
    def _alpha_beta(zeta, kappa):
        if abs(kappa) == 0:
            raise ValueError("kappa must be nonzero to derive alpha/beta")
        # sinh(alpha+beta) = e^{zeta}/(2 kappa), sinh(alpha-beta) = -e^{-zeta}/(2 kappa)
        s = np.arcsinh(np.exp(zeta) / (2 * kappa))
        d = np.arcsinh(-np.exp(-zeta) / (2 * kappa))
        return (s + d) / 2, (s - d) / 2

    @classmethod
    def from_couplings(cls, zeta_m, kappa_m, tau_m, zeta_p, kappa_p, tau_p):
        am, bm = cls._alpha_beta(zeta_m, kappa_m)
        ap, bp = cls._alpha_beta(zeta_p, kappa_p)
        out = cls(complex(zeta_m), complex(kappa_m), complex(tau_m),
                  complex(zeta_p), complex(kappa_p), complex(tau_p),
                  am, bm, ap, bp)
        out.check_parametrization()
        return out

    def check_parametrization(self, tol=1e-10):
        for zeta, kappa, al, be in (
                (self.zeta_m, self.kappa_m, self.alpha_m, self.beta_m),
                (self.zeta_p, self.kappa_p, self.alpha_p, self.beta_p)):
            t1 = np.sinh(zeta) / (2 * kappa)
            t2 = np.cosh(zeta) / (2 * kappa)
            scale = max(1.0, abs(t1), abs(t2))
            r1 = abs(np.sinh(al) * np.cosh(be) - t1) / scale
            r2 = abs(np.cosh(al) * np.sinh(be) - t2) / scale
            if r1 > tol or r2 > tol:
                raise ValueError(f"alpha/beta parametrization residual too large: "
                                 f"{r1:.2e}, {r2:.2e}")


def r_matrix(lam, eta):
    """Trigonometric six-vertex R-matrix on C^2 (x) C^2."""
    sp = np.sinh(lam + eta)
    s = np.sinh(lam)
    e = np.sinh(eta)
    return np.array([
        [sp, 0, 0, 0],
        [0, s, e, 0],
        [0, e, s, 0],
        [0, 0, 0, sp],
    ], dtype=complex)


@lru_cache(maxsize=4096)
def _monodromy_cached(p, lam):
    n = p.n_sites
    dim = 1 << (n + 1)
    m = np.eye(dim, dtype=complex)
    # product R_{0N} ... R_{01}: site 1 acts first
    for site in range(1, n + 1):
        gate = r_matrix(lam - p.xi[site - 1] - p.eta / 2, p.eta)
        m = apply_pair_gate(gate, m, 0, site, n + 1)
    m.flags.writeable = False
    return m


def monodromy(p, lam):
    """Inhomogeneous bulk monodromy matrix on aux (x) chain."""
    return _monodromy_cached(p, complex(lam))


@lru_cache(maxsize=4096)
def _monodromy_hat_cached(p, lam):
    a, b, c, d = aux_blocks(monodromy(p, -lam))
    sign = -1.0 if p.n_sites % 2 else 1.0
    m = sign * from_aux_blocks(d, -b, -c, a)
    m.flags.writeable = False
    return m


def monodromy_hat(p, lam):
    """Right-to-left monodromy matrix: (-1)^N sigma_0^y M^{t_0}(-lam) sigma_0^y."""
    return _monodromy_hat_cached(p, complex(lam))


def coeff_a(p, lam):
    return np.prod([np.sinh(lam - x + p.eta / 2) for x in p.xi])


def coeff_d(p, lam):
    return coeff_a(p, lam - p.eta)


def coeff_g(b, sign, lam, eta):
    """Boundary dressing factor g_{+/-}; sign is +1 or -1."""
    al = b.alpha_p if sign > 0 else b.alpha_m
    be = b.beta_p if sign > 0 else b.beta_m
    den = np.sinh(al) * np.cosh(be)
    if abs(den) < 1e-14:
        raise ZeroDivisionError("sinh(alpha) cosh(beta) vanishes in boundary factor")
    return np.sinh(lam + al - eta / 2) * np.cosh(lam + be - eta / 2) / den


def coeff_a_minus(p, b, lam):
    """Scalar eigenvalue-type coefficient g_-(lam) a(lam) d(-lam)."""
    return coeff_g(b, -1, lam, p.eta) * coeff_a(p, lam) * coeff_d(p, -lam)


def coeff_a_h(p, h, lam):
    """Product over sites of sinh(lam - xi_n - (h_n - 1/2) eta)."""
    return np.prod([np.sinh(lam - x - (hn - 0.5) * p.eta)
                    for x, hn in zip(p.xi, h)])


def qdet_m(p, lam):
    """Bulk quantum determinant a(lam + eta/2) d(lam - eta/2)."""
    return coeff_a(p, lam + p.eta / 2) * coeff_d(p, lam - p.eta / 2)


def default_model(n_sites, eta=0.73j):
    """Generic desk-scale parameter point used across the test suites."""
    xi = tuple(0.1 * n + 0.05j * n * n for n in range(1, n_sites + 1))
    p = ModelParams(n_sites, eta, xi)
    p.validate()
    return p


def default_boundary(seed=20130521):
    """Seeded generic boundary couplings of modulus about one."""
    rng = np.random.default_rng(seed)

    def draw():
        mod = rng.uniform(0.8, 1.2)
        phase = rng.uniform(0, 2 * np.pi)
        return mod * np.exp(1j * phase)

    return BoundaryParams.from_couplings(draw(), draw(), draw(),
                                         draw(), draw(), draw())

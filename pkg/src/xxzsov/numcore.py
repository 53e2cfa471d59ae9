"""Dense complex linear algebra substrate: Kronecker embeddings, partial
traces over the auxiliary factor, and a dense nonsymmetric eigensolver.

Convention used package-wide: the auxiliary two-dimensional space is the
leftmost Kronecker factor; chain sites 1..N follow left to right.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

__all__ = [
    "ID2", "SIGMA_X", "SIGMA_Y", "SIGMA_Z",
    "kron", "embed_site", "partial_trace_aux", "aux_blocks",
    "from_aux_blocks", "aux_transpose", "eig_dense", "EigenDecomposition",
    "require_finite",
]

ID2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def require_finite(m, what="matrix"):
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise FloatingPointError(f"non-finite entries in {what}")
    return m


def kron(a, b):
    """Kronecker product, left factor most significant."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def embed_site(op2, site, n_sites):
    """Embed a 2x2 operator at chain site `site` (1-based) in 2^n_sites dims."""
    op2 = np.asarray(op2, dtype=complex)
    if op2.shape != (2, 2):
        raise ValueError("embed_site expects a 2x2 operator")
    if not 1 <= site <= n_sites:
        raise ValueError(f"site {site} out of range 1..{n_sites}")
    left = np.eye(1 << (site - 1), dtype=complex)
    right = np.eye(1 << (n_sites - site), dtype=complex)
    return np.kron(np.kron(left, op2), right)


def partial_trace_aux(m):
    """Trace out the leading 2-dimensional auxiliary factor of a (2d)x(2d) matrix."""
    m = np.asarray(m)
    n = m.shape[0]
    if m.shape[0] != m.shape[1] or n % 2:
        raise ValueError("partial_trace_aux expects an even-dimensional square matrix")
    d = n // 2
    return m[:d, :d] + m[d:, d:]


def aux_blocks(m):
    """Split a (2d)x(2d) matrix into its four d x d auxiliary-space blocks."""
    d = m.shape[0] // 2
    return m[:d, :d], m[:d, d:], m[d:, :d], m[d:, d:]


def from_aux_blocks(a, b, c, d):
    return np.block([[a, b], [c, d]])


def aux_transpose(m):
    """Transpose in the auxiliary space only (swap off-diagonal blocks)."""
    a, b, c, d = aux_blocks(m)
    return from_aux_blocks(a, c, b, d)


@dataclass
class EigenDecomposition:
    eigenvalues: np.ndarray
    right_eigenvectors: np.ndarray   # unit-norm columns
    residuals: np.ndarray            # per-pair ||A v - w v|| / ||v||


def eig_dense(m):
    """All eigenpairs of a dense complex matrix, with per-pair residuals."""
    m = np.asarray(m, dtype=complex)
    if m.shape[0] != m.shape[1]:
        raise ValueError("eig_dense expects a square matrix")
    if m.shape[0] > 4096:
        raise ValueError("eig_dense is limited to dimension 4096")
    require_finite(m, "eig_dense input")
    w, v = scipy.linalg.eig(m)
    norms = np.linalg.norm(v, axis=0)
    v = v / norms
    res = np.linalg.norm(m @ v - v * w, axis=0)
    return EigenDecomposition(eigenvalues=w, right_eigenvectors=v, residuals=res)

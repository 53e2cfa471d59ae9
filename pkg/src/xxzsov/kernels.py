"""Hot kernel for monodromy assembly, with backend selection at import.

The single operation that dominates runtime is rebuilding products of
R-matrices (one 4x4 gate per chain site) for every spectral-parameter
evaluation.  A compiled Cython kernel does this with structured index
arithmetic; a pure-numpy reshape/einsum fallback is used when the
extension is unavailable or when ``XXZSOV_PURE_PYTHON=1`` is set.
"""

import os

import numpy as np

__all__ = ["apply_pair_gate", "apply_pair_gate_py", "backend_name"]


def apply_pair_gate_py(gate, mat, bit_a, bit_b, n_bits):
    """Return (G_{ab} (x) I_rest) @ mat for a 4x4 gate on bits (a, b).

    Bit 0 is the most significant Kronecker factor.  Requires
    bit_a < bit_b.
    """
    dim = 1 << n_bits
    ncol = mat.shape[1]
    pre = 1 << bit_a
    mid = 1 << (bit_b - bit_a - 1)
    post = 1 << (n_bits - 1 - bit_b)
    t = mat.reshape(pre, 2, mid, 2, post, ncol)
    g = np.asarray(gate, dtype=np.complex128).reshape(2, 2, 2, 2)
    out = np.einsum("ABab,pambqk->pAmBqk", g, t, optimize=True)
    return np.ascontiguousarray(out.reshape(dim, ncol))


def _load_compiled():
    if os.environ.get("XXZSOV_PURE_PYTHON"):
        return None
    try:
        from . import _gatekernel
    except ImportError:
        return None
    return _gatekernel.apply_pair_gate


_compiled = _load_compiled()


def backend_name():
    return "compiled" if _compiled is not None else "python"


if _compiled is not None:
    def apply_pair_gate(gate, mat, bit_a, bit_b, n_bits):
        gate = np.ascontiguousarray(gate, dtype=np.complex128)
        mat = np.ascontiguousarray(mat, dtype=np.complex128)
        return _compiled(gate, mat, bit_a, bit_b, n_bits)
else:
    apply_pair_gate = apply_pair_gate_py

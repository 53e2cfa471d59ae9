# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: left-multiply a matrix by a two-qubit gate.

Bit convention matches the Kronecker layout used throughout the package:
bit 0 is the most significant factor (the auxiliary space), bit n the
n-th chain site.
"""

import numpy as np


def apply_pair_gate(double complex[:, :] gate,
                    double complex[:, :] mat,
                    int bit_a, int bit_b, int n_bits):
    """Return (G_{ab} (x) I_rest) @ mat for a 4x4 gate G on bits (a, b)."""
    cdef Py_ssize_t dim = 1 << n_bits
    cdef Py_ssize_t ncol = mat.shape[1]
    cdef Py_ssize_t pa = 1 << (n_bits - 1 - bit_a)
    cdef Py_ssize_t pb = 1 << (n_bits - 1 - bit_b)
    out_arr = np.empty((dim, ncol), dtype=np.complex128)
    cdef double complex[:, ::1] out = out_arr
    cdef double complex g00 = gate[0, 0], g01 = gate[0, 1], g02 = gate[0, 2], g03 = gate[0, 3]
    cdef double complex g10 = gate[1, 0], g11 = gate[1, 1], g12 = gate[1, 2], g13 = gate[1, 3]
    cdef double complex g20 = gate[2, 0], g21 = gate[2, 1], g22 = gate[2, 2], g23 = gate[2, 3]
    cdef double complex g30 = gate[3, 0], g31 = gate[3, 1], g32 = gate[3, 2], g33 = gate[3, 3]
    cdef double complex v0, v1, v2, v3
    cdef Py_ssize_t i, k, i01, i10, i11
    for i in range(dim):
        if (i & pa) or (i & pb):
            continue
        i01 = i | pb
        i10 = i | pa
        i11 = i | pa | pb
        for k in range(ncol):
            v0 = mat[i, k]
            v1 = mat[i01, k]
            v2 = mat[i10, k]
            v3 = mat[i11, k]
            out[i, k] = g00 * v0 + g01 * v1 + g02 * v2 + g03 * v3
            out[i01, k] = g10 * v0 + g11 * v1 + g12 * v2 + g13 * v3
            out[i10, k] = g20 * v0 + g21 * v1 + g22 * v2 + g23 * v3
            out[i11, k] = g30 * v0 + g31 * v1 + g32 * v2 + g33 * v3
    return out_arr

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: spinor map and path lifting through SL(2,C) -> L_1."""
import numpy as np
from libc.math cimport sqrt, hypot

cdef double complex[4][2][2] SIG
SIG[0][0][0] = 1; SIG[0][0][1] = 0; SIG[0][1][0] = 0; SIG[0][1][1] = 1
SIG[1][0][0] = 0; SIG[1][0][1] = 1; SIG[1][1][0] = 1; SIG[1][1][1] = 0
SIG[2][0][0] = 0; SIG[2][0][1] = -1j; SIG[2][1][0] = 1j; SIG[2][1][1] = 0
SIG[3][0][0] = 1; SIG[3][0][1] = 0; SIG[3][1][0] = 0; SIG[3][1][1] = -1

cdef double complex[4][4][2][2] SS
cdef int _m, _n, _i, _j, _k
for _m in range(4):
    for _n in range(4):
        for _i in range(2):
            for _j in range(2):
                SS[_m][_n][_i][_j] = 0
                for _k in range(2):
                    SS[_m][_n][_i][_j] += SIG[_m][_i][_k] * SIG[_n][_k][_j]

cdef double[4] GD
GD[0] = 1.0; GD[1] = -1.0; GD[2] = -1.0; GD[3] = -1.0


cdef inline double complex csqrt_(double complex z) nogil:
    cdef double x = z.real, y = z.imag
    cdef double r = hypot(x, y)
    cdef double re = sqrt(0.5 * (r + x))
    cdef double im = sqrt(0.5 * (r - x))
    if y < 0:
        im = -im
    return re + 1j * im


cdef inline void local_lift_c(double[4][4] lam, double complex[2][2] out) nogil:
    cdef int m, n, i, j
    cdef double complex acc[2][2]
    cdef double complex det, s
    for i in range(2):
        for j in range(2):
            acc[i][j] = 0
    for m in range(4):
        for n in range(4):
            if lam[m][n] != 0.0:
                for i in range(2):
                    for j in range(2):
                        acc[i][j] += lam[m][n] * SS[m][n][i][j]
    det = acc[0][0] * acc[1][1] - acc[0][1] * acc[1][0]
    s = csqrt_(det)
    for i in range(2):
        for j in range(2):
            out[i][j] = acc[i][j] / s
    if (out[0][0] + out[1][1]).real < 0:
        for i in range(2):
            for j in range(2):
                out[i][j] = -out[i][j]


def local_lift(lam):
    """SL(2,C) preimage of a near-identity Lorentz matrix (Re tr >= 0 sheet)."""
    cdef double[:, ::1] l = np.ascontiguousarray(lam, dtype=float)
    cdef double[4][4] buf
    cdef double complex[2][2] out
    cdef int i, j
    for i in range(4):
        for j in range(4):
            buf[i][j] = l[i, j]
    local_lift_c(buf, out)
    res = np.empty((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            res[i, j] = out[i][j]
    return res


def spinor_map(a):
    """Lorentz matrix of A: entries 1/2 Re tr(sigma_m A sigma_n A^dagger)."""
    cdef double complex[:, ::1] am = np.ascontiguousarray(a, dtype=complex)
    cdef double complex[2][2] A, Ad, left, right
    cdef double complex tr
    cdef int m, n, i, j, k
    res = np.empty((4, 4))
    cdef double[:, ::1] r = res
    for i in range(2):
        for j in range(2):
            A[i][j] = am[i, j]
            Ad[i][j] = am[j, i].conjugate()
    for n in range(4):
        # right = A sigma_n A^dagger
        for i in range(2):
            for j in range(2):
                left[i][j] = 0
                for k in range(2):
                    left[i][j] += A[i][k] * SIG[n][k][j]
        for i in range(2):
            for j in range(2):
                right[i][j] = 0
                for k in range(2):
                    right[i][j] += left[i][k] * Ad[k][j]
        for m in range(4):
            tr = 0
            for i in range(2):
                for k in range(2):
                    tr += SIG[m][i][k] * right[k][i]
            r[m, n] = 0.5 * tr.real
    return res


def lift_path(lams):
    """Lift a path of Lorentz matrices starting at the identity.

    Returns the SL(2,C) endpoint and the largest sup-norm distance of an
    increment lift from the identity.
    """
    cdef double[:, :, ::1] L = np.ascontiguousarray(lams, dtype=float)
    cdef Py_ssize_t n = L.shape[0], k
    cdef int i, j, p
    cdef double[4][4] inc
    cdef double complex[2][2] step, acc, tmp
    cdef double dist = 0.0, d
    acc[0][0] = 1; acc[0][1] = 0; acc[1][0] = 0; acc[1][1] = 1
    with nogil:
        for k in range(1, n):
            # inc = L[k] @ G L[k-1]^T G
            for i in range(4):
                for j in range(4):
                    inc[i][j] = 0.0
                    for p in range(4):
                        inc[i][j] += L[k, i, p] * GD[p] * L[k - 1, j, p]
                    inc[i][j] *= GD[j]
            local_lift_c(inc, step)
            for i in range(2):
                for j in range(2):
                    d = hypot((step[i][j] - (1.0 if i == j else 0.0)).real, step[i][j].imag)
                    if d > dist:
                        dist = d
            for i in range(2):
                for j in range(2):
                    tmp[i][j] = step[i][0] * acc[0][j] + step[i][1] * acc[1][j]
            for i in range(2):
                for j in range(2):
                    acc[i][j] = tmp[i][j]
    res = np.empty((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            res[i, j] = acc[i][j]
    return res, dist

# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Cyclic Jacobi sweeps for dense real symmetric matrices.

Hot kernel: the weight optimizer calls the eigensolver once per trial
point, so the sweep loop is compiled. `_jacobi_py` is the pure-Python
twin with identical semantics.
"""

from libc.math cimport sqrt, fabs


def jacobi_cyclic(double[:, ::1] a, double[:, ::1] v, double off_target,
                  int max_sweeps, bint want_vectors):
    """Diagonalize symmetric `a` in place by cyclic Jacobi rotations.

    Accumulates rotations into `v` when want_vectors is set. Returns
    (sweeps_used, final_off_norm); the caller checks convergence.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef int sweep
    cdef double app, aqq, apq, phi, t, c, s, aip, aiq, off

    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                off += 2.0 * a[p, q] * a[p, q]
        off = sqrt(off)
        if off <= off_target:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                phi = (aqq - app) / (2.0 * apq)
                t = 1.0 / (fabs(phi) + sqrt(phi * phi + 1.0))
                if phi < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                # A <- A G  (columns p, q)
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                # A <- G^T A  (rows p, q)
                for i in range(n):
                    aip = a[p, i]
                    aiq = a[q, i]
                    a[p, i] = c * aip - s * aiq
                    a[q, i] = s * aip + c * aiq
                if want_vectors:
                    for i in range(n):
                        aip = v[i, p]
                        aiq = v[i, q]
                        v[i, p] = c * aip - s * aiq
                        v[i, q] = s * aip + c * aiq

    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            off += 2.0 * a[p, q] * a[p, q]
    return max_sweeps, sqrt(off)

"""Pure-Python twin of the compiled Jacobi kernel (same interface).

Used when the Cython extension is unavailable or when
CHROMABOUND_PURE_PYTHON=1 forces the fallback. Rotations are applied
with numpy row/column updates, so it is slower but numerically
identical in structure.
"""

import math

import numpy as np


def jacobi_cyclic(a, v, off_target, max_sweeps, want_vectors):
    """Diagonalize symmetric `a` in place by cyclic Jacobi rotations.

    Accumulates rotations into `v` when want_vectors is set. Returns
    (sweeps_used, final_off_norm); the caller checks convergence.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = math.sqrt(2.0) * np.linalg.norm(a[np.triu_indices(n, k=1)])
        if off <= off_target:
            return sweep, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                phi = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(phi) + math.sqrt(phi * phi + 1.0))
                if phi < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                if want_vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - s * vq
                    v[:, q] = s * vp + c * vq
    off = math.sqrt(2.0) * np.linalg.norm(a[np.triu_indices(n, k=1)])
    return max_sweeps, off

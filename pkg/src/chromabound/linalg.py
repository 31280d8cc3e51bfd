"""Dense Hermitian matrix helpers and the Jacobi eigensolver.

The eigensolver runs cyclic Jacobi sweeps on real symmetric matrices.
Complex Hermitian input H = X + iY is embedded into the 2n x 2n real
symmetric [[X, -Y], [Y, X]], whose spectrum is that of H with every
eigenvalue doubled in multiplicity; we deduplicate by taking every
second value of the sorted vector.

The sweep kernel is compiled (Cython) when available; set
CHROMABOUND_PURE_PYTHON=1 to force the pure-Python fallback.
"""

from __future__ import annotations

import math
import os

import numpy as np

if os.environ.get("CHROMABOUND_PURE_PYTHON") == "1":
    from . import _jacobi_py as _kernel

    KERNEL = "python"
else:
    try:
        from . import _jacobi as _kernel  # type: ignore[attr-defined]

        KERNEL = "cython"
    except ImportError:
        from . import _jacobi_py as _kernel

        KERNEL = "python"

MAX_SWEEPS = 100
OFF_NORM_RTOL = 1e-12  # stop when off-diagonal Frobenius norm <= rtol * ||M||_F
PAIR_RTOL = 1e-8  # embedding eigenvalue pairing tolerance, relative to ||M||_F
UNITARY_TOL = 1e-10


class ConvergenceError(RuntimeError):
    """Jacobi sweeps did not reach the off-diagonal target within the cap."""

    def __init__(self, off_norm, target):
        super().__init__(
            f"eigensolver did not converge: off-diagonal norm {off_norm:.3e} "
            f"above target {target:.3e} after {MAX_SWEEPS} sweeps"
        )
        self.off_norm = off_norm
        self.target = target


def check_finite(m):
    if not np.all(np.isfinite(np.asarray(m))):
        raise ValueError("matrix has non-finite entries")


def hermitize(m):
    """Symmetrize to an exactly Hermitian array; reject gross asymmetry."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    check_finite(m)
    dev = np.linalg.norm(m - m.conj().T)
    if dev > 1e-8 * max(1.0, np.linalg.norm(m)):
        raise ValueError(f"matrix is not Hermitian (deviation {dev:.3e})")
    return (m + m.conj().T) / 2.0


def hadamard_product(x, y):
    """Entrywise product; Hermitian whenever one factor is real symmetric."""
    x = np.asarray(x)
    y = np.asarray(y)
    if x.shape != y.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {y.shape}")
    return x * y


def _real_eigh(a, want_vectors):
    """Eigen-decompose a real symmetric array (copied, not mutated)."""
    a = np.array(a, dtype=float, order="C")
    n = a.shape[0]
    fro = np.linalg.norm(a)
    target = OFF_NORM_RTOL * fro
    v = np.eye(n) if want_vectors else np.zeros((1, 1))
    if fro > 0.0:
        _sweeps, off = _kernel.jacobi_cyclic(a, v, target, MAX_SWEEPS, want_vectors)
        if off > target:
            raise ConvergenceError(off, target)
    w = np.diagonal(a).copy()
    order = np.argsort(-w, kind="stable")
    w = w[order]
    if want_vectors:
        v = np.asarray(v)[:, order]
    return w, v


def eigh(m, want_vectors=True):
    """Full spectrum (sorted non-increasing) and eigenvectors as columns.

    Input must be Hermitian; eigenvalues are real by construction.
    """
    m = np.asarray(m)
    check_finite(m)
    if np.iscomplexobj(m) and np.any(m.imag != 0.0):
        h = hermitize(m)
        n = h.shape[0]
        x, y = h.real, h.imag
        big = np.block([[x, -y], [y, x]])
        w2, v2 = _real_eigh(big, want_vectors)
        fro = np.linalg.norm(h)
        gaps = np.abs(w2[0::2] - w2[1::2])
        if np.any(gaps > PAIR_RTOL * max(1.0, fro)):
            raise ConvergenceError(float(gaps.max()), PAIR_RTOL * max(1.0, fro))
        w = w2[0::2]
        if not want_vectors:
            return w, None
        vecs = np.empty((n, n), dtype=complex)
        for k in range(n):
            col = v2[:, 2 * k]
            z = col[:n] + 1j * col[n:]
            vecs[:, k] = z / np.linalg.norm(z)
        return w, vecs
    else:
        a = np.real(m).astype(float)
        dev = np.linalg.norm(a - a.T)
        if dev > 1e-8 * max(1.0, np.linalg.norm(a)):
            raise ValueError(f"matrix is not symmetric (deviation {dev:.3e})")
        a = (a + a.T) / 2.0
        w, v = _real_eigh(a, want_vectors)
        return w, (v if want_vectors else None)


def spectrum(m) -> np.ndarray:
    """Eigenvalues of a Hermitian matrix, sorted non-increasing."""
    w, _ = eigh(m, want_vectors=False)
    return w


def min_eigenvalue(m) -> float:
    return float(spectrum(m)[-1])


def eigen_residuals(m, w, v):
    """Per-eigenpair residuals ||M v_k - w_k v_k||_2 (verification mode)."""
    m = np.asarray(m, dtype=complex)
    r = m @ v - v * w[np.newaxis, :]
    return np.linalg.norm(r, axis=0)


def check_unitary(u, tol=UNITARY_TOL):
    u = np.asarray(u, dtype=complex)
    dev = np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]))
    if dev > tol:
        raise ValueError(f"matrix is not unitary (||U^H U - I||_F = {dev:.3e})")
    return u


def conjugate(m, u):
    """U^{-1} M U = U^H M U for unitary U; preserves the spectrum."""
    m = np.asarray(m, dtype=complex)
    u = check_unitary(u)
    if u.shape != m.shape:
        raise ValueError(f"shape mismatch: {m.shape} vs {u.shape}")
    out = u.conj().T @ m @ u
    return (out + out.conj().T) / 2.0


def random_hermitian(n, seed, complex_entries=True):
    """Seeded random Hermitian matrix (Gaussian entries, symmetrized)."""
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n))
    if complex_entries:
        a = a + 1j * rng.standard_normal((n, n))
    return (a + a.conj().T) / 2.0


def random_unitary(n, seed):
    """Seeded Haar-ish random unitary via QR of a complex Gaussian matrix."""
    rng = np.random.default_rng(seed)
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    q, r = np.linalg.qr(a)
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def is_traceless(m, tol=1e-9):
    m = np.asarray(m)
    return abs(np.trace(m)) <= tol * max(1.0, np.linalg.norm(m))

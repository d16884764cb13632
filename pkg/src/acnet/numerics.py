"""Dense matrix kernels: Jacobi eigensolver, complex LU solve, Schur complement.

Matrices are plain numpy arrays (complex128 or float64).  Every public
function checks shapes and finiteness on entry and returns fresh arrays.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import ConvergenceError, NonFiniteError, ShapeError, SingularMatrixError, SymmetryError


def max_norm(x):
    x = np.asarray(x)
    return float(np.max(np.abs(x))) if x.size else 0.0


def as_matrix(x, dtype=complex, name="matrix"):
    m = np.array(x, dtype=dtype)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ShapeError(f"{name} must be a non-empty 2-D array, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonFiniteError(f"{name} has non-finite entries")
    return m


def _as_square(x, dtype, name):
    m = as_matrix(x, dtype, name)
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"{name} must be square, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class SpectralData:
    """Ascending eigenvalues and matching orthonormal eigenvectors (as columns)."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @property
    def size(self):
        return len(self.eigenvalues)

    def reconstruct(self):
        u = self.eigenvectors
        return (u * self.eigenvalues) @ u.T


def _canonical_sign(u, rel=1e-8):
    # First entry whose magnitude is significant (relative to the column max) is made positive.
    u = u.copy()
    for k in range(u.shape[1]):
        col = u[:, k]
        big = np.max(np.abs(col))
        idx = int(np.argmax(np.abs(col) > rel * big))
        if col[idx] < 0:
            u[:, k] = -col
    return u


def _off_diagonal_max(a):
    off = np.abs(a - np.diag(np.diag(a)))
    return float(off.max())


def symmetric_eigendecomposition(s, tolerances=DEFAULT_TOLERANCES):
    """Cyclic Jacobi eigendecomposition of a real symmetric matrix.

    Pairs are swept in row-major order; a sweep rotates every off-diagonal
    entry that is not negligible against both diagonal entries.  Iteration
    stops once the largest off-diagonal magnitude is at most
    ``jacobi_offdiag * |S|_max``.
    """
    a = _as_square(s, float, "S")
    scale = max_norm(a)
    if max_norm(a - a.T) > tolerances.symmetry * (1.0 + scale):
        raise SymmetryError(f"S is not symmetric (|S - S^T|_max = {max_norm(a - a.T):.3e})")
    a = 0.5 * (a + a.T)
    size = a.shape[0]
    v = np.eye(size)
    threshold = tolerances.jacobi_offdiag * scale

    sweeps = 0
    off = _off_diagonal_max(a) if size > 1 else 0.0
    while off > threshold:
        if sweeps >= tolerances.jacobi_max_sweeps:
            raise ConvergenceError(
                f"Jacobi iteration did not converge in {sweeps} sweeps", off
            )
        for p in range(size - 1):
            for q in range(p + 1, size):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app, aqq = a[p, p], a[q, q]
                if abs(app) + 100.0 * abs(apq) == abs(app) and abs(aqq) + 100.0 * abs(apq) == abs(aqq):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + np.sqrt(1.0 + theta * theta))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(1.0 + t * t)
                sn = t * c
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - sn * col_q
                a[:, q] = sn * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sn * row_q
                a[q, :] = sn * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - sn * vq
                v[:, q] = sn * vp + c * vq
        sweeps += 1
        off = _off_diagonal_max(a)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return SpectralData(eigenvalues[order], _canonical_sign(v[:, order]))


def lu_factor(c, tolerances=DEFAULT_TOLERANCES):
    """LU with partial pivoting: returns ``(lu, perm)`` with ``c[perm] = L @ U``.

    Raises SingularMatrixError when a pivot falls below
    ``lu_pivot * max|c_ij|``.
    """
    lu = _as_square(c, complex, "C")
    size = lu.shape[0]
    perm = np.arange(size)
    threshold = tolerances.lu_pivot * max_norm(lu)
    for k in range(size):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        mag = abs(lu[piv, k])
        if mag <= threshold or mag == 0.0:
            raise SingularMatrixError(k, mag)
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            perm[[k, piv]] = perm[[piv, k]]
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, perm


def lu_solve(lu, perm, rhs):
    x = np.array(rhs, dtype=complex)[perm]
    size = lu.shape[0]
    for k in range(1, size):
        x[k] -= lu[k, :k] @ x[:k]
    for k in range(size - 1, -1, -1):
        x[k] = (x[k] - lu[k, k + 1:] @ x[k + 1:]) / lu[k, k]
    return x


def solve_complex(c, rhs, tolerances=DEFAULT_TOLERANCES):
    """Solve ``c @ x = rhs``; ``rhs`` may be a vector or a matrix."""
    lu, perm = lu_factor(c, tolerances)
    b = np.array(rhs, dtype=complex)
    if b.ndim not in (1, 2) or b.shape[0] != lu.shape[0]:
        raise ShapeError(f"right-hand side shape {b.shape} does not match system size {lu.shape[0]}")
    if not np.all(np.isfinite(b)):
        raise NonFiniteError("right-hand side has non-finite entries")
    return lu_solve(lu, perm, b)


def schur_complement(a, b, c, tolerances=DEFAULT_TOLERANCES):
    """Return ``A - B C^{-1} B^T`` (plain transpose: the blocks are complex symmetric)."""
    a = _as_square(a, complex, "A")
    b = as_matrix(b, complex, "B")
    c = _as_square(c, complex, "C")
    if b.shape != (a.shape[0], c.shape[0]):
        raise ShapeError(
            f"block shapes A {a.shape}, B {b.shape}, C {c.shape} are inconsistent"
        )
    return a - b @ solve_complex(c, b.T, tolerances)

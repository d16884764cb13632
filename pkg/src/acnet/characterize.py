"""Admissibility test for response matrices.

A complex symmetric ``b x b`` matrix ``Lambda = S + iT`` is the response
matrix of a connected AC network exactly when its rows sum to zero, ``S``
is positive semidefinite, and the kernel of ``S`` is the constant vectors.
"""

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import GeneratorError, InadmissibleError, ShapeError
from .numerics import SpectralData, as_matrix, max_norm, symmetric_eigendecomposition


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    residual: float
    threshold: float


@dataclass(frozen=True)
class ValidationVerdict:
    symmetry: ConditionResult
    row_sums: ConditionResult
    positive_semidefinite: ConditionResult
    kernel: ConditionResult
    eigenvalues: np.ndarray | None = None

    @property
    def conditions(self):
        return (self.symmetry, self.row_sums, self.positive_semidefinite, self.kernel)

    @property
    def admissible(self):
        return all(c.passed for c in self.conditions)

    def failed_conditions(self):
        return [c.name for c in self.conditions if not c.passed]


@dataclass(frozen=True)
class ResponseMatrix:
    """An admissible response matrix together with the spectrum of its real part."""

    matrix: np.ndarray
    spectrum: SpectralData

    @property
    def size(self):
        return self.matrix.shape[0]

    @property
    def real(self):
        return self.matrix.real

    @property
    def imag(self):
        return self.matrix.imag

    @property
    def lambda2(self):
        return float(self.spectrum.eigenvalues[1])


def _check(m, tolerances):
    b = m.shape[0]
    scale = 1.0 + max_norm(m)
    sym_res = max_norm(m - m.T)
    symmetry = ConditionResult("symmetry", sym_res <= tolerances.rel_tol * scale,
                               sym_res, tolerances.rel_tol * scale)
    row_res = max_norm(m.sum(axis=1))
    row_sums = ConditionResult("row sums", row_res <= tolerances.rel_tol * scale,
                               row_res, tolerances.rel_tol * scale)

    s = m.real
    s = 0.5 * (s + s.T)
    spectrum = symmetric_eigendecomposition(s, tolerances)
    lam = spectrum.eigenvalues
    eig_scale = max(1.0, float(lam[-1]))
    eig_tol = tolerances.rel_tol * eig_scale
    psd = ConditionResult("positive semidefinite", lam[0] >= -eig_tol, float(-lam[0]), eig_tol)

    # kernel = constants: the all-ones vector is annihilated and lambda_2 clears the zero band
    ones_res = max_norm(s @ np.ones(b)) / np.sqrt(b)
    kernel_ok = ones_res <= tolerances.rel_tol * scale and abs(lam[0]) <= eig_tol and lam[1] > eig_tol
    kernel = ConditionResult("kernel is constants", bool(kernel_ok), float(lam[1]), eig_tol)
    verdict = ValidationVerdict(symmetry, row_sums, psd, kernel, lam.copy())
    return verdict, spectrum


def kernel_dimension(verdict):
    """Number of eigenvalues of the real part inside the zero band."""
    thr = verdict.kernel.threshold
    return int(np.sum(np.abs(verdict.eigenvalues) <= thr))


def validate_response(m, tolerances=DEFAULT_TOLERANCES):
    """Check the three admissibility conditions (plus symmetry).

    Returns ``(verdict, response)`` where ``response`` is a ResponseMatrix
    when the matrix is admissible and None otherwise.
    """
    m = as_matrix(m, complex, "response matrix")
    if m.shape[0] != m.shape[1]:
        raise ShapeError(f"response matrix must be square, got shape {m.shape}")
    if m.shape[0] < 2:
        raise ShapeError("response matrix needs at least 2 boundary nodes")
    verdict, spectrum = _check(m, tolerances)
    rm = ResponseMatrix(m, spectrum) if verdict.admissible else None
    return verdict, rm


def as_response(m, tolerances=DEFAULT_TOLERANCES):
    if isinstance(m, ResponseMatrix):
        return m
    verdict, rm = validate_response(m, tolerances)
    if rm is None:
        raise InadmissibleError(verdict)
    return rm


def random_admissible(b, seed, tolerances=DEFAULT_TOLERANCES, max_draws=100):
    """Deterministic random admissible matrix of size ``b``."""
    if b < 2:
        raise ShapeError("need b >= 2")
    rng = np.random.default_rng(seed)
    q = np.eye(b) - np.full((b, b), 1.0 / b)
    for _ in range(max_draws):
        g = q @ rng.standard_normal((b, b - 1))
        s = g @ g.T
        s = 0.5 * (s + s.T)
        t0 = rng.standard_normal((b, b))
        t = q @ (0.5 * (t0 + t0.T)) @ q
        t = 0.5 * (t + t.T)
        if symmetric_eigendecomposition(s, tolerances).eigenvalues[1] <= 1e-6:
            continue
        verdict, rm = validate_response(s + 1j * t, tolerances)
        if rm is not None:
            return rm
    raise GeneratorError(f"no admissible matrix of size {b} after {max_draws} draws")

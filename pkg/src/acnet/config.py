"""Numerical tolerances shared by every module."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    # eigensolver
    symmetry: float = 1e-10
    jacobi_offdiag: float = 1e-12
    jacobi_max_sweeps: int = 100
    # complex LU: pivot below this fraction of the largest input entry is singular
    lu_pivot: float = 1e-13
    # Laplace matrix <-> network conversion
    structural_zero: float = 1e-12
    laplace_rowsum: float = 1e-10
    # admissibility checks, relative to (1 + |M|_max) or max(1, lambda_max)
    rel_tol: float = 1e-9
    # minimize_interior drops W columns with lambda_k - lambda_2 <= drop_tol * lambda_max
    drop_tol: float = 1e-9
    # synthesized response vs target, relative to |Lambda|_max
    roundtrip: float = 1e-8

    def __post_init__(self):
        for name in ("symmetry", "jacobi_offdiag", "lu_pivot", "structural_zero",
                     "laplace_rowsum", "rel_tol", "drop_tol", "roundtrip"):
            if not getattr(self, name) > 0:
                raise ValueError(f"tolerance {name} must be positive")
        if self.jacobi_max_sweeps < 1:
            raise ValueError("jacobi_max_sweeps must be at least 1")

    def with_relative(self, tol):
        """Override every relative check at once, keeping the default 10x roundtrip slack."""
        return replace(self, rel_tol=tol, drop_tol=tol, roundtrip=10 * tol)


DEFAULT_TOLERANCES = Tolerances()

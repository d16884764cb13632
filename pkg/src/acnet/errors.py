"""Exception hierarchy."""


class ACNetError(Exception):
    pass


class ShapeError(ACNetError, ValueError):
    pass


class SymmetryError(ACNetError, ValueError):
    pass


class NonFiniteError(ACNetError, ValueError):
    pass


class ConvergenceError(ACNetError, ArithmeticError):
    def __init__(self, message, off_diagonal_norm):
        super().__init__(f"{message} (off-diagonal norm {off_diagonal_norm:.3e})")
        self.off_diagonal_norm = off_diagonal_norm


class SingularMatrixError(ACNetError, ArithmeticError):
    def __init__(self, pivot_index, pivot_magnitude):
        super().__init__(
            f"matrix is singular to working precision at pivot {pivot_index} "
            f"(|pivot| = {pivot_magnitude:.3e})"
        )
        self.pivot_index = pivot_index
        self.pivot_magnitude = pivot_magnitude


class InvalidNetworkError(ACNetError, ValueError):
    def __init__(self, report):
        super().__init__("invalid network: " + "; ".join(report))
        self.report = list(report)


class NotALaplaceError(ACNetError, ValueError):
    pass


class DisconnectedError(ACNetError, ValueError):
    pass


class DegenerateInteriorError(ACNetError, ArithmeticError):
    pass


class InadmissibleError(ACNetError, ValueError):
    def __init__(self, verdict):
        failed = ", ".join(verdict.failed_conditions()) or "none"
        super().__init__(f"matrix is not an admissible response matrix (failed: {failed})")
        self.verdict = verdict


class GeneratorError(ACNetError, RuntimeError):
    pass


class InternalConsistencyError(ACNetError, RuntimeError):
    pass


class SynthesisVerificationError(ACNetError, RuntimeError):
    def __init__(self, residual, threshold):
        super().__init__(
            f"synthesized network misses the target response: residual {residual:.3e} "
            f"exceeds {threshold:.3e}"
        )
        self.residual = residual
        self.threshold = threshold


class FileFormatError(ACNetError, ValueError):
    """Parse or schema failure; ``position`` is ``line:col`` or a JSON path."""

    def __init__(self, path, position, reason):
        super().__init__(f"{path}: {position}: {reason}")
        self.path = path
        self.position = position
        self.reason = reason

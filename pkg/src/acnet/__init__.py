"""Response maps of alternating-current networks and their synthesis."""

from .config import Tolerances, DEFAULT_TOLERANCES
from .errors import (
    ACNetError,
    ConvergenceError,
    DegenerateInteriorError,
    DisconnectedError,
    FileFormatError,
    GeneratorError,
    InadmissibleError,
    InternalConsistencyError,
    InvalidNetworkError,
    NonFiniteError,
    NotALaplaceError,
    ShapeError,
    SingularMatrixError,
    SymmetryError,
    SynthesisVerificationError,
)
from .numerics import SpectralData, schur_complement, solve_complex, symmetric_eigendecomposition
from .network import (
    Edge,
    LaplaceBlocks,
    Network,
    build_laplace,
    network_from_laplace,
    random_network,
    validate_network,
)
from .response import (
    boundary_currents,
    response_matrix,
    response_matrix_oracle,
    solve_network,
)
from .characterize import ResponseMatrix, ValidationVerdict, random_admissible, validate_response
from .synthesize import (
    RoundtripReport,
    SynthesisPlan,
    SynthesisResult,
    assemble_laplace,
    build_plan,
    synthesize_network,
    verify_roundtrip,
)

__version__ = "0.1.0"

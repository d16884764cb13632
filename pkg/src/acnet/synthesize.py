"""Construct a network whose response matrix is a given admissible matrix.

For ``b >= 3`` the real part ``S`` is shifted to ``S' = S - l2 I + l2 J/b``
(``J`` all-ones, ``l2`` the smallest positive eigenvalue), factored as
``S' = W W^T`` with ``W^T 1 = 0``, and each column of ``W`` becomes an
interior node joined to every boundary node.  Boundary-boundary edges carry
a fixed real part ``l2/2b`` and an imaginary part ``F`` that absorbs the
imaginary part of the target.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .characterize import as_response
from .errors import InternalConsistencyError, SynthesisVerificationError
from .network import Edge, Network, network_from_laplace, validate_network
from .numerics import max_norm
from .response import response_matrix


@dataclass(frozen=True)
class SynthesisPlan:
    b: int
    n: int
    lambda2: float
    W: np.ndarray
    delta: float | None
    epsilon: float | None
    F: np.ndarray
    S_prime: np.ndarray


def build_plan(rm, minimize_interior=False, tolerances=DEFAULT_TOLERANCES):
    rm = as_response(rm, tolerances)
    b = rm.size
    if b < 3:
        raise ValueError("the interior-node construction needs b >= 3; b = 2 is a single edge")
    lam = rm.spectrum.eigenvalues
    u = rm.spectrum.eigenvectors
    l2 = float(lam[1])
    lam_max = float(lam[-1])
    slack = tolerances.rel_tol * max(1.0, lam_max)

    cols = []
    for k in range(2, b):
        gap = float(lam[k]) - l2
        if gap < -slack:
            raise InternalConsistencyError(f"eigenvalue {k} lies below lambda_2 by {-gap:.3e}")
        gap = max(gap, 0.0)
        if minimize_interior and gap <= tolerances.drop_tol * lam_max:
            continue
        cols.append(math.sqrt(gap) * u[:, k])
    n = len(cols)
    w = np.column_stack(cols) if cols else np.zeros((b, 0))

    s = rm.real
    ones = np.ones((b, b))
    s_prime = s - l2 * np.eye(b) + l2 * ones / b
    t = rm.imag
    if n == 0:
        return SynthesisPlan(b, 0, l2, w, None, None, t.copy(), s_prime)
    delta = l2 / (2 * n)
    epsilon = math.sqrt(b * delta)
    row = w.sum(axis=1)
    f = t - math.sqrt(delta / b) * (row[:, None] + row[None, :])
    return SynthesisPlan(b, n, l2, w, delta, epsilon, f, s_prime)


def assemble_laplace(plan):
    """Laplace matrix of the synthesized network, boundary nodes first."""
    b, n = plan.b, plan.n
    if n < 1:
        raise ValueError("plan has no interior nodes; the target itself is the Laplace matrix")
    top_left = plan.lambda2 * np.eye(b) - plan.lambda2 / (2 * b) * np.ones((b, b)) + 1j * plan.F
    top_right = -plan.delta * np.ones((b, n)) + 1j * plan.epsilon * plan.W
    bottom_right = plan.delta * b * np.eye(n, dtype=complex)
    return np.block([[top_left, top_right], [top_right.T, bottom_right]])


@dataclass(frozen=True)
class RoundtripReport:
    residual: float
    relative_residual: float
    min_real_part: float
    all_positive: bool
    boundary_count_matches: bool
    interior_count: int
    edge_count: int

    def ok(self, threshold):
        return self.all_positive and self.boundary_count_matches and self.relative_residual <= threshold


def verify_roundtrip(rm, net, tolerances=DEFAULT_TOLERANCES):
    """Compare the response of ``net`` with the target matrix."""
    target = rm.matrix if hasattr(rm, "matrix") else np.asarray(rm, dtype=complex)
    reals = [complex(e.conductance).real for e in net.edges]
    min_re = min(reals) if reals else math.inf
    b_ok = net.boundary_count == target.shape[0]
    if b_ok:
        residual = max_norm(response_matrix(net, tolerances) - target)
    else:
        residual = math.inf
    scale = max_norm(target)
    rel = residual / scale if scale > 0 else residual
    return RoundtripReport(residual, rel, min_re, min_re > 0, b_ok,
                           net.interior_count, len(net.edges))


@dataclass(frozen=True)
class SynthesisResult:
    network: Network
    plan: SynthesisPlan | None
    report: RoundtripReport


def synthesize_network(rm, minimize_interior=False, tolerances=DEFAULT_TOLERANCES):
    """Network realizing ``rm``; verified by recomputing its response matrix.

    ``rm`` may be a ResponseMatrix or a raw matrix (validated first).
    Default mode uses ``b - 2`` interior nodes; ``minimize_interior`` drops
    interior nodes whose ``W`` column vanishes.
    """
    rm = as_response(rm, tolerances)
    m = rm.matrix
    b = rm.size
    plan = None
    if b == 2:
        c = complex(m[0, 0])
        net = Network(2, 0, (Edge(0, 1, c),))
    else:
        plan = build_plan(rm, minimize_interior, tolerances)
        lap = m if plan.n == 0 else assemble_laplace(plan)
        # first b row sums of L inherit whatever residual the admitted target carries
        atol = max_norm(m.sum(axis=1)) + tolerances.laplace_rowsum * (1.0 + max_norm(lap))
        net = network_from_laplace(lap, b, tolerances, rowsum_atol=atol)
    problems = validate_network(net)
    if problems:
        raise InternalConsistencyError("synthesized network is invalid: " + "; ".join(problems))
    report = verify_roundtrip(rm, net, tolerances)
    if not report.ok(tolerances.roundtrip):
        raise SynthesisVerificationError(report.relative_residual, tolerances.roundtrip)
    return SynthesisResult(net, plan, report)

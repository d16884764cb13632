"""Forward problem: interior voltages, boundary currents, response matrix."""

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import DegenerateInteriorError, ShapeError, SingularMatrixError
from .network import build_laplace
from .numerics import schur_complement, solve_complex


def _vector(x, length, name):
    v = np.asarray(x, dtype=complex)
    if v.shape != (length,):
        raise ShapeError(f"{name} must have length {length}, got shape {v.shape}")
    return v


def solve_network(net, boundary_voltages, tolerances=DEFAULT_TOLERANCES):
    """Full voltage vector (boundary then interior) extending the given boundary values.

    The interior part ``x`` solves ``C x = -B^T v``, i.e. the equilibrium
    condition at every interior node.
    """
    blocks = build_laplace(net)
    v = _vector(boundary_voltages, net.boundary_count, "boundary_voltages")
    if net.interior_count == 0:
        return v.copy()
    try:
        x = solve_complex(blocks.C, -blocks.B.T @ v, tolerances)
    except SingularMatrixError as exc:
        raise DegenerateInteriorError(f"interior block is singular: {exc}") from exc
    return np.concatenate([v, x])


def boundary_currents(net, full_voltages):
    """Current flowing into the network at each boundary node, summed edge by edge."""
    volts = _vector(full_voltages, net.node_count, "full_voltages")
    b = net.boundary_count
    currents = np.zeros(b, dtype=complex)
    for e in net.edges:
        c = complex(e.conductance)
        if e.u < b:
            currents[e.u] += c * (volts[e.u] - volts[e.v])
        if e.v < b:
            currents[e.v] += c * (volts[e.v] - volts[e.u])
    return currents


def response_matrix(net, tolerances=DEFAULT_TOLERANCES):
    """Response matrix via the Schur complement of the interior block."""
    blocks = build_laplace(net)
    if net.interior_count == 0:
        return blocks.A
    try:
        return schur_complement(blocks.A, blocks.B, blocks.C, tolerances)
    except SingularMatrixError as exc:
        raise DegenerateInteriorError(f"interior block is singular: {exc}") from exc


def response_matrix_oracle(net, tolerances=DEFAULT_TOLERANCES):
    """Response matrix assembled column by column from unit boundary voltages."""
    b = net.boundary_count
    cols = [
        boundary_currents(net, solve_network(net, np.eye(b, dtype=complex)[u], tolerances))
        for u in range(b)
    ]
    return np.column_stack(cols)

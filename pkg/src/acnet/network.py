"""AC networks and their Laplace (Kirchhoff) matrices.

Nodes ``0 .. b-1`` are boundary nodes and ``b .. b+n-1`` are interior
nodes.  The Laplace matrix has ``-c_uv`` off the diagonal and diagonal
entries chosen so that every row sums to zero.
"""

import math
from dataclasses import dataclass

import numpy as np

from .config import DEFAULT_TOLERANCES
from .errors import DisconnectedError, InvalidNetworkError, NotALaplaceError, ShapeError
from .numerics import as_matrix, max_norm


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    conductance: complex

    def key(self):
        return (min(self.u, self.v), max(self.u, self.v))


@dataclass(frozen=True)
class Network:
    boundary_count: int
    interior_count: int
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(self.edges))

    @property
    def node_count(self):
        return self.boundary_count + self.interior_count

    @classmethod
    def from_edges(cls, boundary_count, interior_count, edges):
        """Build a network from ``(u, v, c)`` triples or Edges, summing parallel edges."""
        return cls(boundary_count, interior_count, merge_parallel(edges))

    def canonical(self):
        """Same network with every edge stored as ``u < v`` and edges sorted by ``(u, v)``."""
        edges = sorted((Edge(*e.key(), complex(e.conductance)) for e in self.edges), key=Edge.key)
        return Network(self.boundary_count, self.interior_count, edges)


def _to_edge(e):
    if isinstance(e, Edge):
        return e
    u, v, c = e
    return Edge(int(u), int(v), complex(c))


def merge_parallel(edges):
    """Sum conductances of edges joining the same unordered pair; result sorted by ``(u, v)``."""
    total = {}
    for e in map(_to_edge, edges):
        k = e.key()
        total[k] = total.get(k, 0j) + complex(e.conductance)
    return tuple(Edge(u, v, c) for (u, v), c in sorted(total.items()))


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[max(rx, ry)] = min(rx, ry)


def is_connected(node_count, pairs):
    if node_count <= 1:
        return True
    uf = _UnionFind(node_count)
    for u, v in pairs:
        uf.union(u, v)
    root = uf.find(0)
    return all(uf.find(x) == root for x in range(node_count))


def validate_network(net):
    """Return a list of human-readable violations; empty means the network is valid."""
    report = []
    b, n = net.boundary_count, net.interior_count
    if b < 2:
        report.append(f"boundary count {b} < 2")
    if n < 0:
        report.append(f"negative interior count {n}")
    size = b + max(n, 0)
    seen = set()
    in_range = []
    for e in net.edges:
        c = complex(e.conductance)
        where = f"edge ({e.u}, {e.v})"
        if not (0 <= e.u < size and 0 <= e.v < size):
            report.append(f"{where}: node index out of range")
            continue
        in_range.append((e.u, e.v))
        if e.u == e.v:
            report.append(f"{where}: loop")
        if not (math.isfinite(c.real) and math.isfinite(c.imag)):
            report.append(f"{where}: non-finite conductance")
        elif c == 0:
            report.append(f"{where}: zero conductance")
        elif c.real <= 0:
            report.append(f"{where}: nonpositive real part")
        if e.key() in seen:
            report.append(f"{where}: duplicate edge")
        seen.add(e.key())
    if size >= 1 and not is_connected(size, in_range):
        report.append("disconnected")
    return report


@dataclass(frozen=True)
class LaplaceBlocks:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray

    @property
    def boundary_count(self):
        return self.A.shape[0]

    @property
    def interior_count(self):
        return self.C.shape[0]

    def assemble(self):
        return np.block([[self.A, self.B], [self.B.T, self.C]])


def laplace_matrix(net):
    report = validate_network(net)
    if report:
        raise InvalidNetworkError(report)
    size = net.node_count
    lap = np.zeros((size, size), dtype=complex)
    for e in net.edges:
        c = complex(e.conductance)
        lap[e.u, e.v] -= c
        lap[e.v, e.u] -= c
        lap[e.u, e.u] += c
        lap[e.v, e.v] += c
    return lap


def build_laplace(net):
    lap = laplace_matrix(net)
    b = net.boundary_count
    return LaplaceBlocks(lap[:b, :b].copy(), lap[:b, b:].copy(), lap[b:, b:].copy())


def network_from_laplace(lap, boundary_count, tolerances=DEFAULT_TOLERANCES, rowsum_atol=None):
    """Read the network off a Laplace matrix.

    Off-diagonal entries with magnitude at most ``structural_zero * |L|_max``
    are treated as absent edges; all others must have real part at most
    ``-structural_zero * |L|_max``.  Row sums must vanish to within
    ``rowsum_atol`` (default ``laplace_rowsum * (1 + |L|_max)``).
    """
    lap = as_matrix(lap, complex, "L")
    size = lap.shape[0]
    if lap.shape[1] != size:
        raise ShapeError(f"L must be square, got shape {lap.shape}")
    b = int(boundary_count)
    if not 2 <= b <= size:
        raise ShapeError(f"boundary count {b} must lie in [2, {size}]")
    scale = max_norm(lap)
    sym = max_norm(lap - lap.T)
    if sym > tolerances.laplace_rowsum * (1.0 + scale):
        raise NotALaplaceError(f"L is not complex symmetric (|L - L^T|_max = {sym:.3e})")
    if rowsum_atol is None:
        rowsum_atol = tolerances.laplace_rowsum * (1.0 + scale)
    rowsums = np.abs(lap.sum(axis=1))
    worst = int(np.argmax(rowsums))
    if rowsums[worst] > rowsum_atol:
        raise NotALaplaceError(f"row {worst} of L sums to {rowsums[worst]:.3e}, not zero")

    zero = tolerances.structural_zero * scale
    edges = []
    for u in range(size):
        for v in range(u + 1, size):
            x = 0.5 * (lap[u, v] + lap[v, u])
            if abs(x) <= zero:
                continue
            if x.real > -zero:
                raise NotALaplaceError(
                    f"off-diagonal entry ({u}, {v}) = {x} does not have negative real part"
                )
            edges.append(Edge(u, v, complex(-x)))
    if not is_connected(size, [(e.u, e.v) for e in edges]):
        raise DisconnectedError("the graph encoded by L is disconnected")
    return Network(b, size - b, edges)


def random_network(rng, boundary_count, interior_count, edge_probability=0.5, max_tries=1000):
    """Erdos-Renyi style random network, redrawn until connected.

    Conductances have real part uniform in [0.1, 10] and imaginary part
    uniform in [-10, 10].
    """
    size = boundary_count + interior_count
    pairs = [(u, v) for u in range(size) for v in range(u + 1, size)]
    for _ in range(max_tries):
        keep = rng.random(len(pairs)) < edge_probability
        chosen = [p for p, k in zip(pairs, keep) if k]
        if not is_connected(size, chosen):
            continue
        re = rng.uniform(0.1, 10.0, len(chosen))
        im = rng.uniform(-10.0, 10.0, len(chosen))
        edges = [Edge(u, v, complex(x, y)) for (u, v), x, y in zip(chosen, re, im)]
        return Network(boundary_count, interior_count, edges)
    raise RuntimeError(f"no connected graph drawn in {max_tries} tries")

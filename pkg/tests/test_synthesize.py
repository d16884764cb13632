import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from acnet import (
    Edge,
    InadmissibleError,
    Network,
    assemble_laplace,
    build_plan,
    random_admissible,
    response_matrix,
    synthesize_network,
    validate_response,
    verify_roundtrip,
)
from acnet.numerics import max_norm
from acnet.synthesize import SynthesisPlan

seeds = st.integers(0, 2**32 - 1)


class TestBuildPlan:
    def test_paper(self, paper_lambda):
        plan = build_plan(paper_lambda)
        assert plan.n == 1
        np.testing.assert_allclose(plan.W[:, 0], 2 / math.sqrt(3) * np.array([1, 1, -2]), atol=1e-14)
        assert abs(plan.delta - 0.5) <= 1e-15
        assert abs(plan.epsilon - math.sqrt(1.5)) <= 1e-15

    def test_degenerate_lambda2(self):
        b = 5
        m = 2.0 * (np.eye(b) - np.ones((b, b)) / b)
        plan = build_plan(m, minimize_interior=True)
        assert plan.n == 0 and plan.W.shape == (b, 0)
        assert build_plan(m).n == b - 2

    @given(seeds, st.integers(3, 10))
    def test_invariants(self, seed, b):
        rm = random_admissible(b, seed)
        plan = build_plan(rm)
        assert plan.n == b - 2
        assert max_norm(plan.W.T @ np.ones(b)) <= 1e-10
        expected = rm.real - rm.lambda2 * np.eye(b) + rm.lambda2 * np.ones((b, b)) / b
        assert max_norm(plan.W @ plan.W.T - expected) <= 1e-9 * max(1, max_norm(expected))
        assert max_norm(plan.S_prime - expected) <= 1e-15 * max(1, max_norm(expected))
        assert abs(plan.delta * plan.n - rm.lambda2 / 2) <= 1e-15 * rm.lambda2

    def test_b2_rejected(self):
        with pytest.raises(ValueError):
            build_plan(np.array([[1, -1], [-1, 1]]))


class TestAssembleLaplace:
    def test_paper(self, paper_lambda, paper_laplace):
        assert max_norm(assemble_laplace(build_plan(paper_lambda)) - paper_laplace) <= 1e-12

    def test_structural(self):
        b, n = 4, 2
        plan = SynthesisPlan(b, n, 1.0, np.zeros((b, n)), 0.25, 1.0, np.zeros((b, b)), np.zeros((b, b)))
        lap = assemble_laplace(plan)
        assert np.all(lap.imag == 0)
        assert max_norm(lap.sum(axis=1)) <= 1e-15

    @given(seeds, st.integers(3, 10))
    def test_block_structure(self, seed, b):
        rm = random_admissible(b, seed)
        plan = build_plan(rm)
        lap = assemble_laplace(plan)
        n = plan.n
        assert np.array_equal(lap, lap.T)
        assert max_norm(lap.sum(axis=1)) <= 1e-10 * (1 + max_norm(lap))
        assert max_norm(lap[b:].sum(axis=1)) <= 1e-12 * (1 + max_norm(lap))
        bb = lap[:b, :b][~np.eye(b, dtype=bool)]
        np.testing.assert_allclose(bb.real, -rm.lambda2 / (2 * b), rtol=1e-14)
        np.testing.assert_allclose(lap[:b, b:].real, -plan.delta, rtol=1e-14)
        ii = lap[b:, b:][~np.eye(n, dtype=bool)]
        assert np.all(ii == 0)


class TestSynthesize:
    def test_paper(self, paper_lambda, paper_laplace):
        result = synthesize_network(paper_lambda)
        net = result.network
        assert (net.boundary_count, net.interior_count, len(net.edges)) == (3, 1, 6)
        for e in net.edges:
            assert abs(e.conductance + paper_laplace[e.u, e.v]) <= 1e-12
        assert result.report.residual <= 1e-12

    def test_two_node(self):
        c = 1 + 1j
        result = synthesize_network(np.array([[c, -c], [-c, c]]))
        assert result.network == Network(2, 0, (Edge(0, 1, c),))
        assert result.plan is None

    def test_inadmissible(self):
        with pytest.raises(InadmissibleError):
            synthesize_network(np.eye(3))

    def test_minimize_interior_direct_path(self):
        b = 4
        rng = np.random.default_rng(3)
        q = np.eye(b) - np.ones((b, b)) / b
        t0 = rng.standard_normal((b, b))
        m = 1.5 * q + 1j * (q @ (t0 + t0.T) @ q)
        result = synthesize_network(m, minimize_interior=True)
        assert result.network.interior_count == 0
        for e in result.network.edges:
            assert abs(e.conductance.real - 1.5 / b) <= 1e-12
        assert result.report.relative_residual <= 1e-12

    @given(seeds, st.integers(2, 12))
    def test_soundness(self, seed, b):
        rm = random_admissible(b, seed)
        result = synthesize_network(rm)
        net = result.network
        assert net.interior_count == max(0, b - 2)
        assert all(e.conductance.real > 0 for e in net.edges)
        residual = max_norm(response_matrix(net) - rm.matrix)
        assert residual <= 1e-8 * max_norm(rm.matrix)

    @given(seeds, st.integers(3, 9))
    def test_edge_real_parts(self, seed, b):
        rm = random_admissible(b, seed)
        result = synthesize_network(rm)
        plan = result.plan
        for e in result.network.edges:
            if e.v < b:
                assert abs(e.conductance.real - rm.lambda2 / (2 * b)) <= 1e-12 * (1 + rm.lambda2)
            else:
                assert e.u < b
                assert abs(e.conductance.real - plan.delta) <= 1e-12 * (1 + rm.lambda2)

    @given(seeds, st.integers(3, 8))
    def test_imaginary_part_independence(self, seed, b):
        rm = random_admissible(b, seed)
        other = random_admissible(b, seed + 1)
        swapped = rm.real + 1j * other.imag
        a = synthesize_network(rm)
        c = synthesize_network(swapped)
        assert [e.conductance.real for e in a.network.edges] == pytest.approx(
            [e.conductance.real for e in c.network.edges], abs=1e-13)
        np.testing.assert_allclose(a.plan.W, c.plan.W, atol=1e-13)
        assert max_norm(a.plan.F - rm.imag - (c.plan.F - other.imag)) <= 1e-12


class TestVerifyRoundtrip:
    def test_paper(self, paper_lambda, paper_network):
        report = verify_roundtrip(validate_response(paper_lambda)[1], paper_network)
        assert report.residual <= 1e-12
        assert report.all_positive and report.boundary_count_matches
        assert report.interior_count == 1

    def test_mismatch_measures_difference(self):
        a = random_admissible(5, 1)
        b = random_admissible(5, 2)
        net = synthesize_network(b).network
        report = verify_roundtrip(a, net)
        assert report.residual == pytest.approx(max_norm(a.matrix - b.matrix), abs=1e-9)

    def test_boundary_mismatch(self, paper_network):
        report = verify_roundtrip(random_admissible(4, 0), paper_network)
        assert not report.boundary_count_matches

    def test_batch(self):
        for seed in range(100):
            b = 3 + seed % 8
            rm = random_admissible(b, seed)
            report = synthesize_network(rm).report
            assert report.relative_residual <= 1e-8


def test_one_interior_node_warm_up():
    # star network: b boundary nodes joined to one interior node with conductance delta + i w_u
    rng = np.random.default_rng(8)
    b, delta = 5, 0.05
    w = rng.uniform(-1, 1, b)
    w -= w.mean()
    net = Network(b, 1, [Edge(u, b, complex(delta, w[u])) for u in range(b)])
    r = response_matrix(net)
    expected = (np.outer(w, w) - delta**2) / (delta * b)
    off = ~np.eye(b, dtype=bool)
    assert max_norm(r.real[off] - expected[off]) <= 1e-10

"""Synthesize a network for the 3x3 worked example and print every intermediate."""

import numpy as np

from acnet import assemble_laplace, build_plan, response_matrix, synthesize_network, validate_response

np.set_printoptions(precision=6, suppress=True, linewidth=120)

LAMBDA = np.array([[2, 1, -3], [1, 2, -3], [-3, -3, 6]], dtype=complex)


def main():
    verdict, rm = validate_response(LAMBDA)
    print("admissible:", verdict.admissible)
    print("eigenvalues of S:", rm.spectrum.eigenvalues)
    plan = build_plan(rm)
    print("W =", plan.W.ravel())
    print("delta =", plan.delta, " epsilon =", plan.epsilon)
    print("F =\n", plan.F)
    print("L =\n", assemble_laplace(plan))
    result = synthesize_network(rm)
    for e in result.network.edges:
        print(f"  edge {e.u}-{e.v}: conductance {e.conductance:.6f}")
    print("response of synthesized network =\n", response_matrix(result.network))
    print("residual:", result.report.residual)


if __name__ == "__main__":
    main()

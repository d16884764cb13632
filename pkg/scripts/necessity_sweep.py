"""Check that response matrices of random networks satisfy the admissibility conditions."""

import argparse

import numpy as np

from acnet import random_network, response_matrix, validate_response


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=500)
    parser.add_argument("--max-nodes", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = np.random.default_rng(args.seed)
    failures = 0
    gaps = []
    for _ in range(args.count):
        b = int(rng.integers(2, args.max_nodes // 2 + 1))
        n = int(rng.integers(0, args.max_nodes - b + 1))
        verdict, rm = validate_response(response_matrix(random_network(rng, b, n)))
        if rm is None:
            failures += 1
        else:
            gaps.append(rm.lambda2 / rm.spectrum.eigenvalues[-1])
    print(f"{args.count} networks, {failures} inadmissible responses")
    if gaps:
        print(f"lambda_2 / lambda_max: min {min(gaps):.2e}, median {np.median(gaps):.2e}")


if __name__ == "__main__":
    main()

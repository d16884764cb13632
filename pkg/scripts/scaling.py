"""Time validation + synthesis + round trip against boundary size."""

import argparse
import time

from acnet import random_admissible, synthesize_network


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[3, 5, 10, 20, 30, 50, 80])
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    print(f"{'b':>4} {'interior':>8} {'edges':>6} {'seconds':>8} {'rel. residual':>14}")
    for b in args.sizes:
        m = random_admissible(b, args.seed).matrix
        start = time.perf_counter()
        result = synthesize_network(m)
        elapsed = time.perf_counter() - start
        net = result.network
        print(f"{b:>4} {net.interior_count:>8} {len(net.edges):>6} {elapsed:>8.3f} "
              f"{result.report.relative_residual:>14.2e}")


if __name__ == "__main__":
    main()

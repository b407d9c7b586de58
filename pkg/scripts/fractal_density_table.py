#!/usr/bin/env python3
"""Print dimensions, weight, and density across the recursive matrix family."""

import argparse

from isofractal import fractal_matrix


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-max", type=int, default=8)
    parser.add_argument("--ell-max", type=int, default=8)
    args = parser.parse_args()

    print(f"{'k':>3} {'ell':>4} {'rows':>8} {'cols':>8} {'ones':>8} {'density':>10}")
    for k in range(1, args.k_max + 1):
        for ell in range(1, args.ell_max + 1):
            m = fractal_matrix(k, ell)
            print(f"{k:>3} {ell:>4} {m.rows:>8} {m.cols:>8} {m.weight:>8} {m.density:>10.5f}")


if __name__ == "__main__":
    main()

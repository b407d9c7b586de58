#!/usr/bin/env python3
"""Survey the block structure of the linear system across a parameter grid.

For each (n, k) the connected blocks of the coefficient matrix support are
matched against the recursive family; the census, the zero-column count, and
any divergence from the pair-indexed census baseline are printed.
"""

import argparse
import time

from isofractal import decompose


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    args = parser.parse_args()

    for n in range(2, args.n_max + 1):
        for k in range(2, n + 1):
            started = time.perf_counter()
            report = decompose(n, k)
            elapsed = time.perf_counter() - started
            census = ", ".join(
                f"{count} x A({a},{b})"
                for (a, b), count in sorted(report.block_census().items())
            )
            print(f"(n={n}, k={k})  {census}; {len(report.zero_columns)} zero columns"
                  f"  [{elapsed:.2f}s]")
            for flag in report.flags:
                print(f"    flag: {flag}")


if __name__ == "__main__":
    main()

"""The recursive self-similar matrix family A(k, ell).

A(k, ell) is the (0,1)-matrix with k ones per row, ell per column, and
dimensions C(k+ell-1, ell-1) x C(k+ell-1, ell).  It is built here by two
independent routes that must agree bit for bit:

* the paste route: A(k, 1) is the 1 x k all-ones row, and A(k, ell) pastes
  the identity-stacked A(j, ell-1) for j = k down to 1 side by side,
* the block route: the 2x2 recursion with A(k, ell-1) on top, an identity
  block bottom-left, and A(k-1, ell) bottom-right.

Keeping both routes alive makes their agreement a meaningful structural test;
``verify_fractal`` runs that test along with the dimension, weight, and block
recovery laws.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bitmatrix import BinaryMatrix, paste_right, stack_identity_below

# Binomial dimensions must stay within exact 64-bit range; anything bigger is
# far outside desk scale anyway.
_DIMENSION_GUARD = 2**63


@dataclass(frozen=True)
class FractalParams:
    """Row weight k and column weight ell of one family member."""

    k: int
    ell: int

    def __post_init__(self) -> None:
        if self.k < 1 or self.ell < 1:
            raise ValueError(f"need k >= 1 and ell >= 1, got k={self.k}, ell={self.ell}")

    @property
    def shape(self) -> tuple[int, int]:
        n = self.k + self.ell - 1
        return math.comb(n, self.ell - 1), math.comb(n, self.ell)


def _check_params(k: int, ell: int) -> None:
    if k < 1 or ell < 1:
        raise ValueError(f"need k >= 1 and ell >= 1, got k={k}, ell={ell}")
    if math.comb(k + ell - 1, ell) >= _DIMENSION_GUARD:
        raise ValueError(f"dimensions of A({k}, {ell}) exceed the 64-bit guard")


@lru_cache(maxsize=None)
def fractal_matrix(k: int, ell: int) -> BinaryMatrix:
    """Build A(k, ell) by the paste route.  Memoized; results are immutable."""
    _check_params(k, ell)
    if ell == 1:
        return BinaryMatrix.all_ones(1, k)
    parts = [stack_identity_below(fractal_matrix(j, ell - 1)) for j in range(k, 0, -1)]
    return paste_right(parts)


@lru_cache(maxsize=None)
def fractal_matrix_blockwise(k: int, ell: int) -> BinaryMatrix:
    """Build A(k, ell) by the 2x2 block recursion.  Independent of the paste route."""
    _check_params(k, ell)
    if ell == 1:
        return BinaryMatrix.all_ones(1, k)
    if k == 1:
        return BinaryMatrix.all_ones(ell, 1)
    top = fractal_matrix_blockwise(k, ell - 1)
    right = fractal_matrix_blockwise(k - 1, ell)
    ident = math.comb(k + ell - 2, ell - 1)
    coords = set(top.ones)
    coords.update((top.rows + i, i) for i in range(ident))
    coords.update((top.rows + r, top.cols + c) for r, c in right.ones)
    return BinaryMatrix(top.rows + right.rows, top.cols + right.cols, frozenset(coords))


def _block_recovery_ok(m: BinaryMatrix, k: int, ell: int) -> bool:
    """Check the four blocks of the recursion are recoverable as submatrices."""
    r1 = math.comb(k + ell - 2, ell - 2)
    c1 = math.comb(k + ell - 2, ell - 1)
    top_left = m.submatrix(range(r1), range(c1))
    top_right = m.submatrix(range(r1), range(c1, m.cols))
    bot_left = m.submatrix(range(r1, m.rows), range(c1))
    bot_right = m.submatrix(range(r1, m.rows), range(c1, m.cols))
    return (
        top_left == fractal_matrix(k, ell - 1)
        and top_right.weight == 0
        and bot_left == BinaryMatrix.identity(c1)
        and bot_right == fractal_matrix(k - 1, ell)
    )


def verify_fractal(k_max: int, ell_max: int) -> dict:
    """Check construction laws for all 1 <= k <= k_max, 1 <= ell <= ell_max.

    Per parameter pair: both routes agree bit-exactly, dimensions follow the
    binomial law (cross-checked through the Pascal identity), every row weight
    is k and every column weight is ell, and for k, ell >= 2 the four blocks
    of the recursion are recoverable.  Failures are report entries, not
    exceptions.
    """
    if k_max < 1 or ell_max < 1:
        raise ValueError("bounds must be positive")
    checks = []
    for k in range(1, k_max + 1):
        for ell in range(1, ell_max + 1):
            a = fractal_matrix(k, ell)
            b = fractal_matrix_blockwise(k, ell)
            n = k + ell - 1
            expected_shape = (math.comb(n, ell - 1), math.comb(n, ell))
            pascal_ok = True
            if k >= 2 and ell >= 2:
                pascal_ok = (
                    math.comb(n - 1, ell - 2) + math.comb(n - 1, ell - 1)
                    == math.comb(n, ell - 1)
                )
            entry = {
                "k": k,
                "ell": ell,
                "routes_agree": a == b,
                "shape_ok": (a.rows, a.cols) == expected_shape and pascal_ok,
                "row_weights_ok": all(w == k for w in a.row_weights()),
                "col_weights_ok": all(w == ell for w in a.col_weights()),
                "blocks_ok": _block_recovery_ok(a, k, ell) if (k >= 2 and ell >= 2) else True,
                "ones": a.weight,
                "density": float(Fraction(a.weight, a.rows * a.cols)),
            }
            entry["passed"] = all(
                entry[key]
                for key in ("routes_agree", "shape_ok", "row_weights_ok",
                            "col_weights_ok", "blocks_ok")
            )
            checks.append(entry)
    return {
        "k_max": k_max,
        "ell_max": ell_max,
        "passed": all(c["passed"] for c in checks),
        "checks": checks,
    }

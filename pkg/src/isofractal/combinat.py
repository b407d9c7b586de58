"""Strictly increasing index tuples and the symplectic pair bookkeeping built on them.

An index tuple is a plain ``tuple[int, ...]`` of strictly increasing 1-based
entries bounded by some ``m``; the empty tuple is a first-class value.  Since
the entries are sorted, two tuples are equal exactly when their supports are
equal.  These tuples index matrix rows, matrix columns, and wedge coordinates
throughout the package, always in lexicographic order so that ranks are stable
across runs.

On top of the raw tuples this module provides the pair set of a symplectic
basis (the n index pairs (i, 2n+1-i) of [2n]), insertion of a whole pair into
a tuple together with the wedge reordering sign, and the partition of tuples
by the pair-free part of their support.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

IndexTuple = tuple[int, ...]


def validate_index_tuple(t: IndexTuple, m: int) -> None:
    """Raise ``ValueError`` unless ``t`` is strictly increasing within [1, m]."""
    if m < 0:
        raise ValueError(f"bound must be nonnegative, got {m}")
    for i, e in enumerate(t):
        if not 1 <= e <= m:
            raise ValueError(f"entry {e} outside [1, {m}] in {t}")
        if i and t[i - 1] >= e:
            raise ValueError(f"entries not strictly increasing in {t}")


def index_tuples(s: int, m: int) -> list[IndexTuple]:
    """All strictly increasing s-tuples over [1, m], in lexicographic order.

    ``s == 0`` yields the single empty tuple.
    """
    if s < 0 or s > m:
        raise ValueError(f"need 0 <= s <= m, got s={s}, m={m}")
    return list(combinations(range(1, m + 1), s))


def rank(t: IndexTuple, m: int) -> int:
    """Lexicographic position of ``t`` among the tuples of its length over [1, m]."""
    validate_index_tuple(t, m)
    s = len(t)
    r = 0
    prev = 0
    for i, e in enumerate(t):
        for v in range(prev + 1, e):
            r += math.comb(m - v, s - i - 1)
        prev = e
    return r


def unrank(r: int, s: int, m: int) -> IndexTuple:
    """Inverse of :func:`rank`: the tuple at lexicographic position ``r``."""
    if s < 0 or s > m:
        raise ValueError(f"need 0 <= s <= m, got s={s}, m={m}")
    if not 0 <= r < math.comb(m, s):
        raise ValueError(f"rank {r} outside [0, {math.comb(m, s)}) for s={s}, m={m}")
    out: list[int] = []
    prev = 0
    for i in range(s):
        v = prev + 1
        while True:
            block = math.comb(m - v, s - i - 1)
            if r < block:
                break
            r -= block
            v += 1
        out.append(v)
        prev = v
    return tuple(out)


def partner(e: int, n: int) -> int:
    """The index paired with ``e`` in [2n]: the one summing with it to 2n+1."""
    if not 1 <= e <= 2 * n:
        raise ValueError(f"index {e} outside [1, {2 * n}]")
    return 2 * n + 1 - e


@dataclass(frozen=True)
class PairSet:
    """The n pairs (i, 2n+1-i) whose members partition [2n]."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1, got {self.n}")

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, partner(i, self.n)) for i in range(1, self.n + 1))

    def pair_index_of(self, e: int) -> int:
        """The pair number containing index ``e``."""
        return min(e, partner(e, self.n))


def insert_pair_with_sign(
    base: IndexTuple, i: int, n: int
) -> tuple[IndexTuple, int] | None:
    """Insert the pair (i, 2n+1-i) into ``base`` and report the reordering sign.

    Returns ``None`` when either pair member already occurs in ``base``
    (the corresponding wedge coordinate vanishes).  Otherwise returns the
    sorted union tuple together with (-1)**(a+b), where a and b count the
    entries of ``base`` below each inserted member: the sign with which the
    sorted coordinate appears when the pair is contracted out of the wedge.
    """
    validate_index_tuple(base, 2 * n)
    if not 1 <= i <= n:
        raise ValueError(f"pair index {i} outside [1, {n}]")
    lo, hi = i, partner(i, n)
    supp = set(base)
    if lo in supp or hi in supp:
        return None
    merged = tuple(sorted(base + (lo, hi)))
    a = sum(1 for e in base if e < lo)
    b = sum(1 for e in base if e < hi)
    return merged, (-1 if (a + b) % 2 else 1)


def pair_free_part(t: IndexTuple, n: int) -> IndexTuple:
    """Entries of ``t`` whose pair partner is absent from ``t``."""
    supp = set(t)
    return tuple(e for e in t if partner(e, n) not in supp)


def whole_pair_indices(t: IndexTuple, n: int) -> IndexTuple:
    """Pair numbers i with both members of (i, 2n+1-i) inside ``t``."""
    supp = set(t)
    return tuple(i for i in range(1, n + 1) if i in supp and partner(i, n) in supp)


@dataclass(frozen=True)
class Cell:
    """One class of the pair-free-support partition: a label and its tuples."""

    label: IndexTuple
    members: tuple[IndexTuple, ...]


@dataclass(frozen=True)
class RowPartition:
    """Partition of I(k-2, 2n) by the pair-free part of each tuple's support."""

    parity: str  # "even" or "odd", the parity of k
    cells: tuple[Cell, ...]

    def cell_for(self, label: IndexTuple) -> Cell:
        for cell in self.cells:
            if cell.label == label:
                return cell
        raise KeyError(label)


def row_partition(n: int, k: int) -> RowPartition:
    """Group the (k-2)-tuples over [2n] by the pair-free part of their support.

    A tuple lands in the cell labeled by its entries whose partner is absent;
    the remaining entries always form whole pairs.  Cells are ordered by label
    size and then lexicographically, so cells sharing a free-entry count are
    grouped together.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    cells: dict[IndexTuple, list[IndexTuple]] = {}
    for t in index_tuples(k - 2, 2 * n):
        cells.setdefault(pair_free_part(t, n), []).append(t)
    ordered = sorted(cells, key=lambda lab: (len(lab), lab))
    return RowPartition(
        parity="even" if k % 2 == 0 else "odd",
        cells=tuple(Cell(label=lab, members=tuple(cells[lab])) for lab in ordered),
    )

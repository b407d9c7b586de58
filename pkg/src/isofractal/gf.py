"""Exact linear algebra over prime fields.

Reduced row echelon form with deterministic pivoting (first nonzero entry,
columns scanned left to right), rank, nullspace bases, and exactly-once
streaming of projective representatives of a spanned subspace.

GF(2) matrices take a bit-packed path: each row is one Python int, so a row
update is a single arbitrary-width XOR.  Other primes use plain residue rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class PrimeField:
    """GF(p) for a prime p; primality is checked by trial division."""

    p: int

    def __post_init__(self) -> None:
        p = self.p
        if p < 2:
            raise ValueError(f"modulus {p} is not prime")
        d = 2
        while d * d <= p:
            if p % d == 0:
                raise ValueError(f"modulus {p} is not prime")
            d += 1

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p


FieldVector = tuple[int, ...]


class FieldMatrix:
    """An immutable matrix of residues over a prime field."""

    __slots__ = ("field", "nrows", "ncols", "entries")

    def __init__(self, field: PrimeField, rows: Sequence[Sequence[int]], ncols: int | None = None):
        self.field = field
        reduced = tuple(tuple(v % field.p for v in row) for row in rows)
        if ncols is None:
            ncols = len(reduced[0]) if reduced else 0
        for i, row in enumerate(reduced):
            if len(row) != ncols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {ncols}")
        self.entries = reduced
        self.nrows = len(reduced)
        self.ncols = ncols

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldMatrix)
            and self.field == other.field
            and self.entries == other.entries
            and self.ncols == other.ncols
        )

    def __hash__(self) -> int:
        return hash((self.field, self.entries, self.ncols))

    def __repr__(self) -> str:
        return f"FieldMatrix(GF({self.field.p}), {self.nrows}x{self.ncols})"

    def mul_vector(self, v: Sequence[int]) -> FieldVector:
        if len(v) != self.ncols:
            raise ValueError(f"vector length {len(v)} != {self.ncols} columns")
        p = self.field.p
        return tuple(sum(a * b for a, b in zip(row, v)) % p for row in self.entries)


@dataclass(frozen=True)
class EchelonResult:
    matrix: FieldMatrix
    rank: int
    pivots: tuple[int, ...]


def rref(m: FieldMatrix) -> EchelonResult:
    """Reduced row echelon form, rank, and pivot columns."""
    if m.field.p == 2:
        return _rref_gf2(m)
    return _rref_generic(m)


def _rref_gf2(m: FieldMatrix) -> EchelonResult:
    packed = [sum(1 << j for j, v in enumerate(row) if v) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        if r == len(packed):
            break
        mask = 1 << c
        pivot_row = next((i for i in range(r, len(packed)) if packed[i] & mask), None)
        if pivot_row is None:
            continue
        packed[r], packed[pivot_row] = packed[pivot_row], packed[r]
        row = packed[r]
        for i in range(len(packed)):
            if i != r and packed[i] & mask:
                packed[i] ^= row
        pivots.append(c)
        r += 1
    rows = [[(word >> j) & 1 for j in range(m.ncols)] for word in packed]
    return EchelonResult(FieldMatrix(m.field, rows, m.ncols), len(pivots), tuple(pivots))


def _rref_generic(m: FieldMatrix) -> EchelonResult:
    p = m.field.p
    rows = [list(row) for row in m.entries]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        if r == len(rows):
            break
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = m.field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [(v * inv) % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return EchelonResult(FieldMatrix(m.field, rows, m.ncols), len(pivots), tuple(pivots))


def kernel_basis(m: FieldMatrix) -> list[FieldVector]:
    """A deterministic basis of the right nullspace, one vector per free column.

    Free columns are taken in ascending order; each basis vector has a 1 at
    its free column and back-substituted pivot entries elsewhere.
    """
    result = rref(m)
    p = m.field.p
    pivot_set = set(result.pivots)
    reduced = result.matrix.entries
    basis: list[FieldVector] = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        v = [0] * m.ncols
        v[free] = 1
        for i, pc in enumerate(result.pivots):
            v[pc] = (-reduced[i][free]) % p
        basis.append(tuple(v))
    return basis


def projective_count(d: int, p: int) -> int:
    """Number of projective classes in a d-dimensional space over GF(p)."""
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    return 0 if d == 0 else (p**d - 1) // (p - 1)


def normalize_projective(v: Sequence[int], field: PrimeField) -> FieldVector:
    """Scale so the first nonzero coordinate is 1; rejects the zero vector."""
    p = field.p
    reduced = [x % p for x in v]
    lead = next((x for x in reduced if x), None)
    if lead is None:
        raise ValueError("the zero vector has no projective representative")
    if lead == 1:
        return tuple(reduced)
    inv = field.inv(lead)
    return tuple((x * inv) % p for x in reduced)


def enumerate_projective(
    basis: Sequence[FieldVector],
    field: PrimeField,
    *,
    start: int = 0,
    stop: int | None = None,
) -> Iterator[FieldVector]:
    """Stream one normalized vector per projective class of the span.

    Classes are indexed by coefficient tuples whose first nonzero entry is 1:
    the leading position runs from 0 to d-1, and the trailing coefficients
    count through GF(p)^t most-significant digit first.  ``start``/``stop``
    slice that global order, so disjoint slices over several workers cover
    every class exactly once.  Requires a linearly independent basis.
    """
    p = field.p
    d = len(basis)
    n = len(basis[0]) if d else 0
    for vec in basis:
        if len(vec) != n:
            raise ValueError("basis vectors have mixed lengths")
    total = projective_count(d, p)
    stop = total if stop is None else min(stop, total)
    if not 0 <= start <= total:
        raise ValueError(f"start {start} outside [0, {total}]")

    idx = start
    while idx < stop:
        # locate the leading-one block containing idx
        lead = 0
        offset = idx
        while offset >= p ** (d - 1 - lead):
            offset -= p ** (d - 1 - lead)
            lead += 1
        tail_len = d - 1 - lead
        digits = []
        rem = offset
        for pos in range(tail_len):
            power = p ** (tail_len - 1 - pos)
            digits.append(rem // power)
            rem %= power
        v = list(basis[lead])
        for pos, coeff in enumerate(digits):
            if coeff:
                bvec = basis[lead + 1 + pos]
                v = [(a + coeff * b) % p for a, b in zip(v, bvec)]
        yield normalize_projective(v, field)
        idx += 1

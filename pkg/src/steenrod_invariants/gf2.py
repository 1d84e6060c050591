"""Dense bit-packed linear algebra over GF(2).

Each row (and each vector) is one Python int; bit ``j`` is column ``j``.
CPython stores ints as arrays of machine digits, so XOR of two rows is a
word-level loop in C.  Pivots are always the lowest set bit of a row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits set beyond vector length")

    @classmethod
    def from_list(cls, values: Sequence) -> "BitVector":
        bits = 0
        for j, v in enumerate(values):
            if v:
                bits |= 1 << j
        return cls(len(values), bits)

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def support(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def weight(self) -> int:
        return bin(self.bits).count("1")


@dataclass
class BitMatrix:
    rows: int
    cols: int
    data: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.data:
            self.data = [0] * self.rows
        if len(self.data) != self.rows:
            raise ValueError("row count does not match storage")
        for r in self.data:
            if r < 0 or r >> self.cols:
                raise ValueError("bits set beyond column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, [0] * rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_dense(cls, dense) -> "BitMatrix":
        """From a nested sequence or 2-d array of 0/1 entries."""
        rows = [list(r) for r in dense]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, [BitVector.from_list(r).bits for r in rows])

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.data[i] >> j) & 1


def _reduce_rows(rows: Iterable[int]) -> dict[int, int]:
    """Fully reduced echelon form as ``{pivot column: row}``."""
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            col = (r & -r).bit_length() - 1
            p = pivots.get(col)
            if p is None:
                pivots[col] = r
                break
            r ^= p
    for col in sorted(pivots):
        bit = 1 << col
        prow = pivots[col]
        for other, r in pivots.items():
            if other != col and r & bit:
                pivots[other] = r ^ prow
    return pivots


def rref(m: BitMatrix) -> list[int]:
    """Nonzero rows of the reduced row echelon form, ordered by pivot column."""
    pivots = _reduce_rows(m.data)
    return [pivots[c] for c in sorted(pivots)]


def rank(m: BitMatrix) -> int:
    return len(_reduce_rows(m.data))


def nullspace_bits(rows: Iterable[int], ncols: int) -> list[int]:
    """Kernel basis as ints; one vector per free column, ascending.

    Each vector's highest set bit is its free column and no other vector has
    that bit, so the basis is reduced with respect to the highest bit.
    """
    pivots = _reduce_rows(rows)
    out = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = 1 << f
        for col, r in pivots.items():
            if (r >> f) & 1:
                v |= 1 << col
        out.append(v)
    return out


def nullspace(m: BitMatrix) -> list[BitVector]:
    return [BitVector(m.cols, v) for v in nullspace_bits(m.data, m.cols)]


def mat_vec(m: BitMatrix, v: BitVector) -> BitVector:
    if v.length != m.cols:
        raise ValueError(f"dimension mismatch: {m.rows}x{m.cols} matrix, vector of length {v.length}")
    out = 0
    for i, r in enumerate(m.data):
        if bin(r & v.bits).count("1") & 1:
            out |= 1 << i
    return BitVector(m.rows, out)


def span_contains(basis_rows: Iterable[int], v: int) -> bool:
    pivots = _reduce_rows(basis_rows)
    while v:
        col = (v & -v).bit_length() - 1
        p = pivots.get(col)
        if p is None:
            return False
        v ^= p
    return True

"""Dense bit-packed linear algebra over GF(2).

Rows (and vectors) are stored as Python integers: bit ``j`` holds column
``j``.  Elimination is plain XOR on whole rows, so a row of a few thousand
columns costs a handful of machine words per operation.

Pivoting is deterministic: columns are scanned left to right and the
lowest-indexed unused row carrying the bit becomes the pivot.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GF2Vector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits exceed vector length")

    @classmethod
    def from_list(cls, values: Iterable[int]) -> "GF2Vector":
        values = list(values)
        bits = 0
        for j, v in enumerate(values):
            if v & 1:
                bits |= 1 << j
        return cls(len(values), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "GF2Vector":
        bits = 0
        for j in support:
            if not 0 <= j < length:
                raise IndexError(j)
            bits ^= 1 << j
        return cls(length, bits)

    def __getitem__(self, j: int) -> int:
        if not 0 <= j < self.length:
            raise IndexError(j)
        return (self.bits >> j) & 1

    def __add__(self, other: "GF2Vector") -> "GF2Vector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return GF2Vector(self.length, self.bits ^ other.bits)

    def __len__(self) -> int:
        return self.length

    def to_list(self) -> list[int]:
        return [(self.bits >> j) & 1 for j in range(self.length)]

    def support(self) -> list[int]:
        return _bit_positions(self.bits)

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def is_zero(self) -> bool:
        return self.bits == 0


@dataclass(frozen=True)
class GF2Matrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        limit = 1 << self.cols
        for r in self.data:
            if r < 0 or r >= limit:
                raise ValueError("row bits exceed column count")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "GF2Matrix":
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> "GF2Matrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "GF2Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for row in rows:
            if len(row) != cols:
                raise ValueError("ragged rows")
            data.append(GF2Vector.from_list(row).bits)
        return cls(len(data), cols, tuple(data))

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[Iterable[int]]) -> "GF2Matrix":
        """Build from column supports (each an iterable of row indices, mod 2)."""
        data = [0] * rows
        for j, support in enumerate(columns):
            bit = 1 << j
            for i in support:
                data[i] ^= bit
        return cls(rows, len(columns), tuple(data))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return (self.data[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.cols)] for r in self.data]

    def transpose(self) -> "GF2Matrix":
        out = [0] * self.cols
        for i, r in enumerate(self.data):
            bit = 1 << i
            while r:
                low = r & -r
                out[low.bit_length() - 1] |= bit
                r ^= low
        return GF2Matrix(self.cols, self.rows, tuple(out))

    def column(self, j: int) -> GF2Vector:
        bits = 0
        for i, r in enumerate(self.data):
            if (r >> j) & 1:
                bits |= 1 << i
        return GF2Vector(self.rows, bits)

    def matvec(self, x: GF2Vector) -> GF2Vector:
        if x.length != self.cols:
            raise ValueError(f"vector length {x.length} != cols {self.cols}")
        bits = 0
        for i, r in enumerate(self.data):
            if _parity(r & x.bits):
                bits |= 1 << i
        return GF2Vector(self.rows, bits)

    def matmul(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for r in self.data:
            acc = 0
            for k in _bit_positions(r):
                acc ^= other.data[k]
            out.append(acc)
        return GF2Matrix(self.rows, other.cols, tuple(out))

    def hstack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return GF2Matrix(
            self.rows,
            self.cols + other.cols,
            tuple(a | (b << self.cols) for a, b in zip(self.data, other.data)),
        )

    def vstack(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return GF2Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def is_zero(self) -> bool:
        return not any(self.data)


def _parity(x: int) -> int:
    return bin(x).count("1") & 1


def _bit_positions(x: int) -> list[int]:
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def _echelon(rows: list[int], ncols: int) -> tuple[list[int], list[int], list[int]]:
    """Reduced row echelon form of ``rows`` restricted to the first ``ncols`` bits.

    Returns ``(reduced, pivot_rows, pivot_cols)``: ``reduced`` is the fully
    reduced copy of every input row, ``reduced[pivot_rows[i]]`` is the pivot
    row for ``pivot_cols[i]``.  Non-pivot rows end with no bits below
    ``ncols``.
    """
    rows = list(rows)
    used = [False] * len(rows)
    pivot_rows: list[int] = []
    pivot_cols: list[int] = []
    for col in range(ncols):
        bit = 1 << col
        piv = -1
        for i, r in enumerate(rows):
            if not used[i] and r & bit:
                piv = i
                break
        if piv < 0:
            continue
        used[piv] = True
        prow = rows[piv]
        for i, r in enumerate(rows):
            if i != piv and r & bit:
                rows[i] = r ^ prow
        pivot_rows.append(piv)
        pivot_cols.append(col)
    return rows, pivot_rows, pivot_cols


def rank(M: GF2Matrix) -> int:
    """Rank over GF(2)."""
    reducer = _Reducer()
    return sum(1 for r in M.data if r and reducer.add(r))


def solve(M: GF2Matrix, b: GF2Vector) -> GF2Vector | None:
    """Some ``x`` with ``M x = b``, or ``None`` if the system is inconsistent.

    Free variables are set to zero, which makes the answer canonical for the
    fixed pivot order.
    """
    if b.length != M.rows:
        raise ValueError(f"rhs length {b.length} != rows {M.rows}")
    aug_bit = 1 << M.cols
    rows = [r | (aug_bit if (b.bits >> i) & 1 else 0) for i, r in enumerate(M.data)]
    reduced, pivot_rows, pivot_cols = _echelon(rows, M.cols)
    pivots = set(pivot_rows)
    for i, r in enumerate(reduced):
        if i not in pivots and r:
            return None
    x = 0
    for i, c in zip(pivot_rows, pivot_cols):
        if reduced[i] & aug_bit:
            x |= 1 << c
    return GF2Vector(M.cols, x)


def kernel_basis(M: GF2Matrix) -> list[GF2Vector]:
    """Basis of the null space, one vector per free column in increasing order."""
    reduced, pivot_rows, pivot_cols = _echelon(list(M.data), M.cols)
    pivot_set = set(pivot_cols)
    basis = []
    for f in range(M.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for i, c in zip(pivot_rows, pivot_cols):
            if (reduced[i] >> f) & 1:
                bits |= 1 << c
        basis.append(GF2Vector(M.cols, bits))
    return basis


def in_span(basis: Sequence[GF2Vector], v: GF2Vector) -> bool:
    """Whether ``v`` is a GF(2) combination of ``basis``."""
    reducer = _Reducer()
    for b in basis:
        reducer.add(b.bits)
    return reducer.reduce(v.bits) == 0


class _Reducer:
    """Incremental span tracker keyed by leading bit."""

    def __init__(self):
        self.basis: dict[int, int] = {}

    def reduce(self, r: int) -> int:
        while r:
            lead = r.bit_length() - 1
            p = self.basis.get(lead)
            if p is None:
                return r
            r ^= p
        return 0

    def add(self, r: int) -> bool:
        r = self.reduce(r)
        if r:
            self.basis[r.bit_length() - 1] = r
            return True
        return False


def independent_modulo(span: Sequence[GF2Vector], candidates: Sequence[GF2Vector]) -> list[int]:
    """Indices of ``candidates`` kept by a greedy pass that extends ``span``.

    The selected candidates are independent modulo ``span``; earlier
    candidates win ties, so the choice is deterministic.
    """
    reducer = _Reducer()
    for v in span:
        reducer.add(v.bits)
    kept = []
    for i, v in enumerate(candidates):
        if reducer.add(v.bits):
            kept.append(i)
    return kept

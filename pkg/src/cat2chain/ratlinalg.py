"""Exact rational linear algebra over numpy object arrays."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

Rational = Fraction
Vector = tuple[Fraction, ...]


def parse_rational(value: object) -> Fraction:
    """Parse ``"p/q"`` strings, integers or fractions into a canonical Fraction."""
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"Not a rational number: {value!r}") from exc
    raise ValueError(f"Not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Format as ``p/q``, omitting ``q`` when it is 1."""
    return str(Fraction(value))


def vector(values: Iterable[object]) -> Vector:
    return tuple(parse_rational(v) for v in values)


def format_vector(values: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


@dataclass(frozen=True)
class Matrix:
    """Dense immutable matrix of exact rationals, stored row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("Matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"Matrix entries length {len(self.entries)} != {self.rows}x{self.cols}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
        n_rows = len(rows)
        if n_rows == 0:
            return cls(0, cols or 0, ())
        n_cols = len(rows[0])
        if any(len(row) != n_cols for row in rows):
            raise ValueError("Matrix rows must all have the same length")
        return cls(n_rows, n_cols, tuple(parse_rational(v) for row in rows for v in row))

    @classmethod
    def from_array(cls, array: np.ndarray) -> Matrix:
        rows, cols = array.shape
        return cls(rows, cols, tuple(Fraction(v) for v in array.reshape(-1)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(
            n, n, tuple(Fraction(1 if r == c else 0) for r in range(n) for c in range(n))
        )

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[object]], rows: int) -> Matrix:
        """Assemble a ``rows x len(columns)`` matrix from column vectors."""
        if any(len(col) != rows for col in columns):
            raise ValueError("Column vectors must all have length equal to rows")
        return cls(
            rows,
            len(columns),
            tuple(parse_rational(columns[c][r]) for r in range(rows) for c in range(len(columns))),
        )

    @classmethod
    def selection(cls, indices: Sequence[int], size: int) -> Matrix:
        """0/1 matrix picking coordinates ``indices`` out of a ``size``-vector."""
        out = [[0] * size for _ in indices]
        for row, index in enumerate(indices):
            out[row][index] = 1
        return cls.from_rows(out, cols=size)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        r, c = key
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> Vector:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def column(self, c: int) -> Vector:
        return tuple(self.entries[r * self.cols + c] for r in range(self.rows))

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def to_array(self) -> np.ndarray:
        array = np.empty((self.rows, self.cols), dtype=object)
        for index, value in enumerate(self.entries):
            array[index // self.cols, index % self.cols] = value
        return array

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[r * self.cols + c] for c in range(self.cols) for r in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return not any(self.entries)

    def nonzero_count(self) -> int:
        return sum(1 for v in self.entries if v)

    def apply(self, vec: Sequence[Fraction]) -> Vector:
        if len(vec) != self.cols:
            raise ValueError(f"Dimension mismatch: matrix has {self.cols} columns, vector {len(vec)}")
        return tuple(
            sum((self.entries[r * self.cols + c] * vec[c] for c in range(self.cols)), Fraction(0))
            for r in range(self.rows)
        )

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"Dimension mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries, strict=True)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries, strict=True)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, factor: object) -> Matrix:
        k = parse_rational(factor)
        return Matrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def __matmul__(self, other: Matrix) -> Matrix:
        return matmul(self, other)

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            raise ValueError(f"Dimension mismatch: {self.rows} rows vs {other.rows} rows")
        return Matrix.from_rows(
            [list(self.row(r)) + list(other.row(r)) for r in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            raise ValueError(f"Dimension mismatch: {self.cols} cols vs {other.cols} cols")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)


def _common_denominator(entries: Iterable[Fraction]) -> int:
    return math.lcm(1, *(v.denominator for v in entries))


def _integral_array(m: Matrix, scale: int) -> np.ndarray:
    array = np.empty((m.rows, m.cols), dtype=object)
    for index, value in enumerate(m.entries):
        array[index // m.cols, index % m.cols] = int(value * scale)
    return array


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Exact product; denominators are cleared so numpy multiplies Python ints."""
    if a.cols != b.rows:
        raise ValueError(f"Dimension mismatch: {a.shape} @ {b.shape}")
    if a.rows == 0 or b.cols == 0 or a.cols == 0:
        return Matrix.zeros(a.rows, b.cols)
    da = _common_denominator(a.entries)
    db = _common_denominator(b.entries)
    product = _integral_array(a, da).dot(_integral_array(b, db))
    denom = da * db
    return Matrix(
        a.rows, b.cols, tuple(Fraction(int(v), denom) for v in product.reshape(-1))
    )


def _row_reduce(m: Matrix) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan elimination with partial pivoting on |entry|.

    Returns the reduced row-echelon form and the pivot columns.
    """
    work = m.to_array()
    pivots: list[int] = []
    row = 0
    for col in range(m.cols):
        if row >= m.rows:
            break
        candidates = [r for r in range(row, m.rows) if work[r, col] != 0]
        if not candidates:
            continue
        pivot_row = max(candidates, key=lambda r: (abs(work[r, col]), -r))
        if pivot_row != row:
            work[[row, pivot_row]] = work[[pivot_row, row]]
        work[row] = work[row] / work[row, col]
        for r in range(m.rows):
            if r != row and work[r, col] != 0:
                work[r] = work[r] - work[r, col] * work[row]
        pivots.append(col)
        row += 1
    return work, pivots


def rank(m: Matrix) -> int:
    """Rank over Q; eliminates along the shorter dimension."""
    if m.rows == 0 or m.cols == 0:
        return 0
    target = m.transpose() if m.cols > m.rows else m
    _, pivots = _row_reduce(target)
    return len(pivots)


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of ker(m), one vector per free column of the reduced form."""
    if m.rows == 0:
        return [tuple(Fraction(int(r == c)) for r in range(m.cols)) for c in range(m.cols)]
    reduced, pivots = _row_reduce(m)
    pivot_set = set(pivots)
    basis: list[Vector] = []
    for free in range(m.cols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * m.cols
        vec[free] = Fraction(1)
        for pivot_row, pivot_col in enumerate(pivots):
            vec[pivot_col] = -Fraction(reduced[pivot_row, free])
        basis.append(tuple(vec))
    return basis


class SolutionKind(Enum):
    UNIQUE = "Unique"
    NONE = "None"
    AFFINE = "Affine"


@dataclass(frozen=True)
class AffineSolution:
    """Classification of the solution set of a linear system.

    ``solution`` is the unique solution for UNIQUE, a particular solution for
    AFFINE, and ``None`` when the system is inconsistent. ``dimension`` is the
    dimension of the affine solution space.
    """

    kind: SolutionKind
    solution: Vector | None
    dimension: int

    def __str__(self) -> str:
        if self.kind is SolutionKind.AFFINE:
            return f"Affine({self.dimension})"
        return self.kind.value


Constraint = tuple[Matrix, Sequence[object]]


def solve_affine(constraints: Sequence[Constraint], unknowns: int | None = None) -> AffineSolution:
    """Stack ``A x = b`` constraints over one unknown vector and classify the solutions."""
    if unknowns is None:
        if not constraints:
            raise ValueError("unknowns is required when there are no constraints")
        unknowns = constraints[0][0].cols
    rows: list[list[Fraction]] = []
    for matrix, rhs in constraints:
        if matrix.cols != unknowns:
            raise ValueError(f"Constraint has {matrix.cols} unknowns, expected {unknowns}")
        if len(rhs) != matrix.rows:
            raise ValueError(f"Right-hand side length {len(rhs)} != {matrix.rows}")
        for r in range(matrix.rows):
            rows.append(list(matrix.row(r)) + [parse_rational(rhs[r])])
    if not rows:
        return AffineSolution(SolutionKind.AFFINE if unknowns else SolutionKind.UNIQUE,
                              (Fraction(0),) * unknowns, unknowns)

    augmented = Matrix.from_rows(rows, cols=unknowns + 1)
    reduced, pivots = _row_reduce(augmented)
    if unknowns in pivots:
        return AffineSolution(SolutionKind.NONE, None, 0)

    particular = [Fraction(0)] * unknowns
    for pivot_row, pivot_col in enumerate(pivots):
        particular[pivot_col] = Fraction(reduced[pivot_row, unknowns])
    dimension = unknowns - len(pivots)
    kind = SolutionKind.UNIQUE if dimension == 0 else SolutionKind.AFFINE
    return AffineSolution(kind, tuple(particular), dimension)

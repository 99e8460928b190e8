"""Exact-rational vectors and matrices.

Thin immutable wrappers over tuples of ``Fraction``: just enough linear
algebra for the lattice calculus (vector arithmetic, matrix application
and products, span membership via Gaussian elimination) and nothing
more.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import DimensionError
from .rational import ZERO, to_fraction


class Vec:
    """Immutable vector with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable):
        self.coords = tuple(to_fraction(c) for c in coords)
        if not self.coords:
            raise ValueError("empty vector")

    @classmethod
    def _wrap(cls, coords: tuple) -> "Vec":
        v = object.__new__(cls)
        v.coords = coords
        return v

    @classmethod
    def zero(cls, dim: int) -> "Vec":
        return cls._wrap((ZERO,) * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> "Vec":
        """Standard basis vector; ``index`` is 1-based to match handle supports."""
        if not 1 <= index <= dim:
            raise ValueError(f"unit index {index} outside 1..{dim}")
        return cls._wrap(tuple(Fraction(1 if i == index - 1 else 0) for i in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def support(self) -> frozenset[int]:
        """1-based indices of the nonzero coordinates."""
        return frozenset(i + 1 for i, c in enumerate(self.coords) if c != 0)

    def _same_dim(self, other: "Vec") -> None:
        if len(self.coords) != len(other.coords):
            raise DimensionError(
                f"vector dimensions differ: {len(self.coords)} vs {len(other.coords)}"
            )

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __add__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec._wrap(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec._wrap(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Vec":
        return Vec._wrap(tuple(-a for a in self.coords))

    def __mul__(self, scalar) -> "Vec":
        q = to_fraction(scalar)
        return Vec._wrap(tuple(a * q for a in self.coords))

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Vec":
        q = to_fraction(scalar)
        return Vec._wrap(tuple(a / q for a in self.coords))

    def __repr__(self):
        return f"Vec({', '.join(str(c) for c in self.coords)})"

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data) -> "Vec":
        return cls(data)


class Matrix:
    """Immutable matrix of exact rationals (row-major)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(to_fraction(c) for c in row) for row in rows)
        if not self.rows:
            raise ValueError("empty matrix")
        widths = {len(r) for r in self.rows}
        if len(widths) != 1 or 0 in widths:
            raise ValueError("matrix rows must be nonempty and of equal length")

    @classmethod
    def _wrap(cls, rows: tuple) -> "Matrix":
        m = object.__new__(cls)
        m.rows = rows
        return m

    @classmethod
    def identity(cls, dim: int) -> "Matrix":
        return cls._wrap(
            tuple(tuple(Fraction(1 if i == j else 0) for j in range(dim)) for i in range(dim))
        )

    @classmethod
    def zeros(cls, dim: int) -> "Matrix":
        return cls._wrap(tuple((ZERO,) * dim for _ in range(dim)))

    @classmethod
    def mask(cls, dim: int, support: Iterable[int]) -> "Matrix":
        """Diagonal 0/1 matrix that keeps the (1-based) ``support`` coordinates."""
        keep = set(support)
        return cls._wrap(
            tuple(
                tuple(Fraction(1 if i == j and (i + 1) in keep else 0) for j in range(dim))
                for i in range(dim)
            )
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]))

    @property
    def dim(self) -> int:
        n_rows, n_cols = self.shape
        if n_rows != n_cols:
            raise DimensionError("matrix is not square")
        return n_rows

    def apply(self, v: Vec) -> Vec:
        if len(v.coords) != self.shape[1]:
            raise DimensionError(
                f"matrix of shape {self.shape} cannot act on a {len(v.coords)}-vector"
            )
        return Vec._wrap(
            tuple(sum(a * b for a, b in zip(row, v.coords)) for row in self.rows)
        )

    def __matmul__(self, other):
        if isinstance(other, Vec):
            return self.apply(other)
        if isinstance(other, Matrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = tuple(zip(*other.rows))
            return Matrix._wrap(
                tuple(
                    tuple(sum(a * b for a, b in zip(row, col)) for col in cols)
                    for row in self.rows
                )
            )
        return NotImplemented

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")
        return Matrix._wrap(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows))
        )

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(-a for a in row) for row in self.rows))

    def __mul__(self, scalar) -> "Matrix":
        q = to_fraction(scalar)
        return Matrix._wrap(tuple(tuple(a * q for a in row) for row in self.rows))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_idempotent(self) -> bool:
        n_rows, n_cols = self.shape
        return n_rows == n_cols and (self @ self) == self

    def columns(self) -> list[Vec]:
        return [Vec._wrap(col) for col in zip(*self.rows)]

    def __repr__(self):
        body = "; ".join("[" + ", ".join(str(c) for c in row) + "]" for row in self.rows)
        return f"Matrix({body})"

    def to_json(self) -> list[str]:
        """Flat row-major list of rational strings."""
        return [str(c) for row in self.rows for c in row]

    @classmethod
    def from_json(cls, data, dim: int | None = None) -> "Matrix":
        if data and isinstance(data[0], (list, tuple)):
            return cls(data)
        if dim is None:
            raise ValueError("flat matrix data needs an explicit dimension")
        if len(data) != dim * dim:
            raise ValueError(f"expected {dim * dim} entries for a {dim}x{dim} matrix")
        return cls([data[i * dim : (i + 1) * dim] for i in range(dim)])


def _eliminate(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """In-place Gauss-Jordan elimination; returns the reduced rows."""
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(n_cols):
        pivot = next((r for r in range(pivot_row, n_rows) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        lead = rows[pivot_row][col]
        rows[pivot_row] = [c / lead for c in rows[pivot_row]]
        for r in range(n_rows):
            if r != pivot_row and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        if pivot_row == n_rows:
            break
    return rows


def rref(vectors: list[Vec]) -> list[Vec]:
    """Nonzero rows of the reduced row echelon form of the given vectors."""
    if not vectors:
        return []
    rows = _eliminate([list(v.coords) for v in vectors])
    return [Vec(row) for row in rows if any(c != 0 for c in row)]


def rank(vectors: list[Vec]) -> int:
    return len(rref(vectors))


def in_span(basis: list[Vec], target: Vec) -> list[Fraction] | None:
    """Exact coefficients expressing ``target`` in ``basis``, or None.

    Solves the linear system by Gauss-Jordan elimination over Fractions;
    free variables are set to zero.
    """
    if not basis:
        return [] if target.is_zero() else None
    dim = basis[0].dim
    if target.dim != dim or any(b.dim != dim for b in basis):
        raise DimensionError("span test needs vectors of equal dimension")
    k = len(basis)
    rows = [[b.coords[r] for b in basis] + [target.coords[r]] for r in range(dim)]
    rows = _eliminate(rows)
    coeffs = [ZERO] * k
    for row in rows:
        lead = next((j for j in range(k) if row[j] != 0), None)
        if lead is None:
            if row[k] != 0:
                return None
            continue
        coeffs[lead] = row[k]
    # elimination may leave non-pivot contributions; verify exactly
    combo = Vec.zero(dim)
    for c, b in zip(coeffs, basis):
        combo = combo + c * b
    return coeffs if combo == target else None

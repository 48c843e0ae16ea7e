"""Exact integer matrices and finitely generated abelian groups.

Relation matrices follow one convention throughout the package: generators
are columns, relations are rows, so a matrix ``R`` presents ``Z^cols / rowspan(R)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import InvalidInputError


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major. Entries are Python ints."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidInputError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise InvalidInputError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> IntMatrix:
        data = [list(r) for r in rows]
        if cols is None:
            cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != cols:
                raise InvalidInputError("ragged rows")
        return cls(len(data), cols, tuple(x for r in data for x in r))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], rows: int | None = None) -> IntMatrix:
        return cls.from_rows(list(columns), rows).T

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise InvalidInputError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for i in range(self.rows):
            r = self.row(i)
            out.extend(sum(a * b for a, b in zip(r, c)) for c in cols)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __add__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise InvalidInputError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        if self.shape != other.shape:
            raise InvalidInputError("shape mismatch")
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def apply(self, vector: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        if len(vector) != self.cols:
            raise InvalidInputError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(self.row(i), vector)) for i in range(self.rows))

    def __pow__(self, p: int) -> IntMatrix:
        if self.rows != self.cols:
            raise InvalidInputError("power of a non-square matrix")
        if p < 0:
            raise InvalidInputError("negative powers are not supported on IntMatrix")
        result, base = IntMatrix.identity(self.rows), self
        while p:
            if p & 1:
                result = result @ base
            base = base @ base
            p >>= 1
        return result

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise InvalidInputError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def is_diagonal(self) -> bool:
        return all(
            self.entries[i * self.cols + j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + i] for i in range(min(self.rows, self.cols)))


@dataclass(frozen=True)
class AbelianInvariants:
    """Isomorphism class ``Z^free_rank + Z/d_1 + ... + Z/d_r`` with ``d_1 | d_2 | ...``."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise InvalidInputError("free rank must be non-negative")
        if any(d < 2 for d in self.torsion):
            raise InvalidInputError("torsion coefficients must be >= 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise InvalidInputError("torsion coefficients must form a divisibility chain")

    @classmethod
    def trivial(cls) -> AbelianInvariants:
        return cls(0, ())

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> AbelianInvariants:
        return cls(int(data["free_rank"]), tuple(data.get("torsion", ())))

    def __str__(self) -> str:
        parts = (["Z"] if self.free_rank == 1 else [f"Z^{self.free_rank}"] if self.free_rank else [])
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class _Reducer:
    """Mutable working state for the Smith reduction ``U @ M @ V == A``."""

    def __init__(self, m: IntMatrix):
        self.r, self.c = m.shape
        self.a = m.to_rows()
        self.u = IntMatrix.identity(self.r).to_rows()
        self.v = IntMatrix.identity(self.c).to_rows()

    # row operations act on A and U; column operations on A and V

    def swap_rows(self, i, j):
        for mat in (self.a, self.u):
            mat[i], mat[j] = mat[j], mat[i]

    def swap_cols(self, i, j):
        for mat in (self.a, self.v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def mix_rows(self, i, j, p, q, s, t):
        # (row_i, row_j) <- (p*row_i + q*row_j, s*row_i + t*row_j), p*t - q*s == 1
        for mat in (self.a, self.u):
            ri, rj = mat[i], mat[j]
            mat[i] = [p * x + q * y for x, y in zip(ri, rj)]
            mat[j] = [s * x + t * y for x, y in zip(ri, rj)]

    def mix_cols(self, i, j, p, q, s, t):
        for mat in (self.a, self.v):
            for row in mat:
                x, y = row[i], row[j]
                row[i], row[j] = p * x + q * y, s * x + t * y

    def clear_column(self, k) -> bool:
        changed = False
        a = self.a
        for i in range(k + 1, self.r):
            if a[i][k] == 0:
                continue
            changed = True
            x, y = a[k][k], a[i][k]
            if y % x == 0:
                self.mix_rows(k, i, 1, 0, -(y // x), 1)
            else:
                g, p, q = _xgcd(x, y)
                self.mix_rows(k, i, p, q, -(y // g), x // g)
        return changed

    def clear_row(self, k) -> bool:
        changed = False
        a = self.a
        for j in range(k + 1, self.c):
            if a[k][j] == 0:
                continue
            changed = True
            x, y = a[k][k], a[k][j]
            if y % x == 0:
                self.mix_cols(k, j, 1, 0, -(y // x), 1)
            else:
                g, p, q = _xgcd(x, y)
                self.mix_cols(k, j, p, q, -(y // g), x // g)
        return changed


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(D, U, V)`` with ``U @ m @ V == D`` in Smith normal form.

    ``U`` and ``V`` are unimodular; the diagonal of ``D`` is non-negative and
    each entry divides the next. Pivots are combined through extended gcd
    steps rather than repeated subtraction, which keeps entry growth modest.
    """
    red = _Reducer(m)
    a = red.a
    for k in range(min(red.r, red.c)):
        nonzero = [(abs(a[i][j]), i, j) for i in range(k, red.r) for j in range(k, red.c) if a[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        red.swap_rows(k, i)
        red.swap_cols(k, j)
        while True:
            while red.clear_column(k) | red.clear_row(k):
                pass
            pivot = a[k][k]
            bad = next(
                (i for i in range(k + 1, red.r) for j in range(k + 1, red.c) if a[i][j] % pivot),
                None,
            )
            if bad is None:
                break
            # pull the offending row into the pivot row and reduce again
            red.mix_rows(k, bad, 1, 1, 0, 1)
        if a[k][k] < 0:
            _negate_row(red, k)
    d = IntMatrix.from_rows(a, red.c)
    return d, IntMatrix.from_rows(red.u, red.r), IntMatrix.from_rows(red.v, red.c)


def _negate_row(red: _Reducer, k: int) -> None:
    for mat in (red.a, red.u):
        mat[k] = [-x for x in mat[k]]


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    """Nonzero diagonal entries of the Smith form, including any 1s."""
    d, _, _ = smith_normal_form(m)
    return tuple(x for x in d.diagonal() if x)


def cokernel_invariants(relations: IntMatrix) -> AbelianInvariants:
    """Invariants of ``Z^cols`` modulo the span of the rows of ``relations``."""
    factors = invariant_factors(relations)
    return AbelianInvariants(relations.cols - len(factors), tuple(d for d in factors if d > 1))


def groups_isomorphic(a: AbelianInvariants, b: AbelianInvariants) -> bool:
    return a.free_rank == b.free_rank and a.torsion == b.torsion


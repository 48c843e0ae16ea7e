"""Middle homology of the A_m Milnor fiber and its Dehn-twist transvections.

The fiber has real dimension 4n-2; its middle homology H_{2n-1} is free on the
matching-cycle classes e_1..e_m with the antisymmetric pairing
``<e_i, e_{i+1}> = 1``. A Dehn twist along a sphere of class ``b`` acts by

    c  ->  c + s <c, b> b,        s = (-1)^(n(2n+1)) = (-1)^n.

Matrices act on coordinate columns: column j of a matrix is the image of e_j.
Braid letters act leftmost-first, so for a word g_1 ... g_r,
``rho_matrix = M(g_r) @ ... @ M(g_1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import IntMatrix
from .braid import BraidWord
from .exceptions import IndexRangeError, InvalidInputError, LatticeMismatchError, StrandMismatchError


def epsilon(n: int) -> int:
    """Exponent of -1 in the Picard-Lefschetz formula for fiber dimension 4n-2."""
    return 2 * n * (2 * n + 1) // 2


@dataclass(frozen=True)
class MilnorLattice:
    """H_{2n-1}(V_m; Z) with its intersection form.

    ``sign`` defaults to ``(-1)^epsilon(n)``. Passing it explicitly is allowed
    so the opposite sign can be exercised against the same ``n``.
    """

    m: int
    n: int = 2
    sign: int | None = None

    def __post_init__(self):
        if self.m < 1:
            raise InvalidInputError("lattice rank must be positive")
        if self.n < 2:
            raise InvalidInputError("dimension parameter n must be >= 2")
        if self.sign is None:
            object.__setattr__(self, "sign", (-1) ** epsilon(self.n))
        if self.sign not in (1, -1):
            raise InvalidInputError("sign must be +1 or -1")

    @property
    def rank(self) -> int:
        return self.m

    @property
    def form(self) -> IntMatrix:
        m = self.m
        return IntMatrix(m, m, tuple(
            1 if j == i + 1 else -1 if i == j + 1 else 0 for i in range(m) for j in range(m)
        ))

    def basis(self, j: int) -> HomologyClass:
        if not 1 <= j <= self.m:
            raise IndexRangeError(f"basis index {j} outside 1..{self.m}")
        return HomologyClass(self, tuple(int(i == j - 1) for i in range(self.m)))

    def vector(self, coords: Sequence[int]) -> HomologyClass:
        return HomologyClass(self, tuple(coords))

    def zero(self) -> HomologyClass:
        return HomologyClass(self, (0,) * self.m)


@dataclass(frozen=True)
class HomologyClass:
    lattice: MilnorLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(x) for x in self.coords))
        if len(self.coords) != self.lattice.m:
            raise InvalidInputError(f"expected {self.lattice.m} coordinates, got {len(self.coords)}")

    def _check(self, other: HomologyClass) -> None:
        if self.lattice != other.lattice:
            raise LatticeMismatchError("classes live in different lattices")

    def __add__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.lattice, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        self._check(other)
        return HomologyClass(self.lattice, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(self.lattice, tuple(-a for a in self.coords))

    def __rmul__(self, k: int) -> HomologyClass:
        return HomologyClass(self.lattice, tuple(k * a for a in self.coords))

    def transform(self, matrix: IntMatrix) -> HomologyClass:
        return HomologyClass(self.lattice, matrix.apply(self.coords))


def intersection(c: HomologyClass, d: HomologyClass) -> int:
    c._check(d)
    x, y = c.coords, d.coords
    # c^T Omega d for the tridiagonal A_m form
    return sum(x[i] * y[i + 1] - x[i + 1] * y[i] for i in range(len(x) - 1))


def class_twist_apply(c: HomologyClass, b: HomologyClass, power: int = 1) -> HomologyClass:
    """Image of ``c`` under the ``power``-th Dehn twist along a sphere of class ``b``."""
    c._check(b)
    t = power * c.lattice.sign * intersection(c, b)
    return HomologyClass(c.lattice, tuple(x + t * y for x, y in zip(c.coords, b.coords)))


def transvection_matrix(b: HomologyClass, power: int = 1) -> IntMatrix:
    lat = b.lattice
    cols = [class_twist_apply(lat.basis(j), b, power).coords for j in range(1, lat.m + 1)]
    return IntMatrix.from_columns(cols, lat.m)


def dehn_twist_matrix(j: int, lattice: MilnorLattice, power: int = 1) -> IntMatrix:
    """Matrix of the twist along the j-th matching cycle (1-based)."""
    return transvection_matrix(lattice.basis(j), power)


def rho_matrix(w: BraidWord, lattice: MilnorLattice) -> IntMatrix:
    """Homology action of a braid in B_{m+1}; leftmost letter applied first."""
    if w.strands != lattice.m + 1:
        raise StrandMismatchError(f"B_{w.strands} does not act on a rank-{lattice.m} lattice")
    twists = {}
    result = IntMatrix.identity(lattice.m)
    for x in w.letters:
        if x not in twists:
            twists[x] = dehn_twist_matrix(abs(x), lattice, 1 if x > 0 else -1)
        result = twists[x] @ result
    return result


def monodromy_of_classes(cycles: Sequence[HomologyClass], lattice: MilnorLattice | None = None) -> IntMatrix:
    """Composite twist along ``cycles``, first cycle applied first."""
    if lattice is None:
        if not cycles:
            raise InvalidInputError("empty cycle list needs an explicit lattice")
        lattice = cycles[0].lattice
    result = IntMatrix.identity(lattice.m)
    for c in cycles:
        if c.lattice != lattice:
            raise LatticeMismatchError("cycle from a different lattice")
        result = transvection_matrix(c) @ result
    return result


def preserves_form(matrix: IntMatrix, lattice: MilnorLattice) -> bool:
    omega = lattice.form
    return matrix.T @ omega @ matrix == omega

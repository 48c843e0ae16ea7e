"""Middle homology of Lefschetz fillings and of open-book boundaries.

Only degree 2n-1 is computed. For an A_m fiber:

* filling:  H = Z^m / <vanishing cycle classes>
* boundary: H = coker(phi_* - id), valid when the fiber boundary
  Sigma(2, ..., 2, m+1) is a homotopy sphere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Sequence

import networkx as nx

from .abelian import AbelianInvariants, IntMatrix, cokernel_invariants
from .braid import Factorization, quasipositive_split
from .exceptions import (
    FormulaNotEstablishedError,
    InvalidInputError,
    LatticeMismatchError,
    NotQuasipositiveError,
    StrandMismatchError,
)
from .milnor import HomologyClass, MilnorLattice, monodromy_of_classes, preserves_form, rho_matrix


@dataclass(frozen=True)
class LefschetzModel:
    lattice: MilnorLattice
    cycles: tuple[HomologyClass, ...] = ()
    source: Factorization | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(self.cycles))
        for c in self.cycles:
            if c.lattice != self.lattice:
                raise LatticeMismatchError("vanishing cycle from a different lattice")

    @property
    def monodromy(self) -> IntMatrix:
        return monodromy_of_classes(self.cycles, self.lattice)

    def open_book(self) -> OpenBookModel:
        return OpenBookModel(self.lattice, self.monodromy)


@dataclass(frozen=True)
class OpenBookModel:
    lattice: MilnorLattice
    monodromy: IntMatrix

    def __post_init__(self):
        if self.monodromy.shape != (self.lattice.m, self.lattice.m):
            raise LatticeMismatchError("monodromy shape does not match the lattice rank")
        if not preserves_form(self.monodromy, self.lattice) or self.monodromy.det() != 1:
            raise InvalidInputError("monodromy must preserve the intersection form and have det 1")

    @classmethod
    def from_cycles(cls, cycles: Sequence[HomologyClass], lattice: MilnorLattice) -> OpenBookModel:
        return cls(lattice, monodromy_of_classes(cycles, lattice))


def filling_homology(model: LefschetzModel) -> AbelianInvariants:
    rel = IntMatrix.from_rows([c.coords for c in model.cycles], model.lattice.m)
    return cokernel_invariants(rel)


def boundary_homology(model: OpenBookModel) -> AbelianInvariants:
    """H_{2n-1} of the open book, refusing fibers whose boundary is not known to be a homotopy sphere."""
    lat = model.lattice
    exps = fiber_boundary_exponents(lat)
    if is_homotopy_sphere(exps) is not SphereVerdict.YES:
        raise FormulaNotEstablishedError(
            f"boundary of the A_{lat.m} fiber, Sigma{exps.a}, is not known to be a homotopy sphere"
        )
    rel = model.monodromy - IntMatrix.identity(lat.m)
    # column j of phi_* - id is the relation phi_*(e_j) - e_j
    return cokernel_invariants(rel.T)


# --- Brieskorn spheres --------------------------------------------------------


@dataclass(frozen=True)
class BrieskornExponents:
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if len(self.a) < 2:
            raise InvalidInputError("need at least two exponents")
        if any(x < 2 for x in self.a):
            raise InvalidInputError("exponents must be >= 2")


class SphereVerdict(str, enum.Enum):
    YES = "yes"
    UNKNOWN = "unknown"


def fiber_boundary_exponents(lattice: MilnorLattice) -> BrieskornExponents:
    return BrieskornExponents((2,) * (2 * lattice.n - 1) + (lattice.m + 1,))


def _as_exponents(a) -> BrieskornExponents:
    return a if isinstance(a, BrieskornExponents) else BrieskornExponents(tuple(a))


def brieskorn_graph(a: BrieskornExponents | Sequence[int]) -> nx.Graph:
    """Vertices 0..N-1 labelled by exponent; edge iff the exponents share a factor."""
    a = _as_exponents(a)
    g = nx.Graph()
    g.add_nodes_from((i, {"label": x}) for i, x in enumerate(a.a))
    g.add_edges_from((i, j) for i, j in combinations(range(len(a.a)), 2) if gcd(a.a[i], a.a[j]) > 1)
    return g


def is_homotopy_sphere(a: BrieskornExponents | Sequence[int]) -> SphereVerdict:
    """Brieskorn's graph criterion. A sufficient condition only, so never answers "no".

    YES when the graph has two isolated vertices, or one isolated vertex plus
    another component with an odd number of vertices whose labels pairwise
    have gcd exactly 2.
    """
    a = _as_exponents(a)
    if len(a.a) < 4:
        raise InvalidInputError("the criterion is stated for at least 4 exponents")
    g = brieskorn_graph(a)
    isolated = [v for v in g if g.degree(v) == 0]
    if len(isolated) >= 2:
        return SphereVerdict.YES
    if isolated:
        for comp in nx.connected_components(g):
            if isolated[0] in comp or len(comp) % 2 == 0:
                continue
            if all(gcd(a.a[i], a.a[j]) == 2 for i, j in combinations(comp, 2)):
                return SphereVerdict.YES
    return SphereVerdict.UNKNOWN


# --- from braid data ----------------------------------------------------------


def cycle_of_entry(entry, lattice: MilnorLattice) -> HomologyClass:
    """Class of the vanishing cycle of ``gamma^-1 sigma_i gamma``: ``rho(gamma) e_i``."""
    split = quasipositive_split(entry)
    if split is None:
        raise NotQuasipositiveError(f"entry '{entry}' is not of the form gamma^-1 sigma_i gamma")
    gamma, i = split
    return lattice.basis(i).transform(rho_matrix(gamma, lattice))


def model_from_factorization(f: Factorization, lattice: MilnorLattice) -> LefschetzModel:
    if f.strands != lattice.m + 1:
        raise StrandMismatchError(f"B_{f.strands} factorization on a rank-{lattice.m} lattice")
    return LefschetzModel(lattice, tuple(cycle_of_entry(e, lattice) for e in f.entries), source=f)

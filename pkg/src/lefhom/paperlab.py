"""The families W_{k,l} (Stein fillings) and M_l (their common contact boundary).

``expected_*`` functions are closed-form targets written out by hand; they
never call the computation path, so a sign or ordering slip in the engine
shows up as a mismatch instead of validating itself.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .abelian import AbelianInvariants, groups_isomorphic
from .braid import BraidWord, beta_generators, beta_kl, braids_equal, concat, product
from .fibration import LefschetzModel, OpenBookModel, boundary_homology, filling_homology
from .milnor import (
    HomologyClass,
    MilnorLattice,
    class_twist_apply,
    monodromy_of_classes,
    rho_matrix,
)


# --- closed forms -------------------------------------------------------------


def expected_b_classes(k: int, s: int) -> tuple[tuple[int, ...], ...]:
    return (
        (-s, 1, (k + 2) * s, 0),
        (0, 1, k * s, 0),
        (s, 1, (k - 2) * s, 0),
    )


def expected_monodromy_columns(l: int, s: int) -> tuple[tuple[int, ...], ...]:
    """Images of e_1..e_4 under the k = 0 monodromy."""
    return (
        (1, s * l, 0, 0),
        (3 * s, 9 * l + 1, -6 * s, -6),
        (0, -l * s, 1, s),
        (-2 * s, -6 * l, 4 * s, 5),
    )


def expected_filling(k: int) -> AbelianInvariants:
    return AbelianInvariants(1) if k == 0 else AbelianInvariants(0, (k,) if k > 1 else ())


def expected_boundary(l: int) -> AbelianInvariants:
    return AbelianInvariants(1, (l,) if l > 1 else ())


# --- constructions ------------------------------------------------------------


def lattice_for(n: int, sign: int | None = None) -> MilnorLattice:
    return MilnorLattice(4, n, sign)


def b_classes(k: int, lattice: MilnorLattice) -> tuple[HomologyClass, HomologyClass, HomologyClass]:
    """Classes of B_{1,k}, B_{2,k}, B_{3,k}: images of L_2 under T3^(k+2) T1, T3^k, T3^(k-2) T1^-1."""
    e1, e2, e3 = lattice.basis(1), lattice.basis(2), lattice.basis(3)
    b1 = class_twist_apply(class_twist_apply(e2, e1, 1), e3, k + 2)
    b2 = class_twist_apply(e2, e3, k)
    b3 = class_twist_apply(class_twist_apply(e2, e1, -1), e3, k - 2)
    return b1, b2, b3


def _w_cycles(k: int, l: int, lattice: MilnorLattice) -> tuple[HomologyClass, ...]:
    return b_classes(k, lattice) + (lattice.basis(2),) * l + (lattice.basis(4),)


def build_W(k: int, l: int, n: int = 2, sign: int | None = None) -> LefschetzModel:
    if k < 0 or l < 1 or n < 2:
        warnings.warn(f"W_{{{k},{l}}} with n={n} is outside k >= 0, l >= 1, n >= 2", stacklevel=2)
    lattice = lattice_for(n, sign)
    return LefschetzModel(lattice, _w_cycles(k, l, lattice))


def build_M(l: int, n: int = 2, sign: int | None = None) -> OpenBookModel:
    if l < 1:
        warnings.warn(f"M_{l} is outside l >= 1", stacklevel=2)
    lattice = lattice_for(n, sign)
    return OpenBookModel(lattice, monodromy_of_classes(_w_cycles(0, l, lattice), lattice))


def w_braid_word(k: int, l: int) -> BraidWord:
    """``beta_{k,l} sigma_4`` in B_5."""
    return concat(product(beta_kl(k, l)).lift(5), BraidWord(5, (4,)))


def consistency_rho_vs_classes(k: int, l: int, n: int = 2, sign: int | None = None) -> bool:
    """The braid route and the vanishing-cycle route give the same monodromy matrix."""
    model = build_W(k, l, n, sign)
    return rho_matrix(w_braid_word(k, l), model.lattice) == model.monodromy


def centralizer_certificate() -> bool:
    b1, b2, b3, b = beta_generators()
    triple = concat(concat(b1, b2), b3)
    return braids_equal(concat(b, triple), concat(triple, b))


@lru_cache(maxsize=None)
def _beta_product_matches(k: int, l: int) -> bool:
    return braids_equal(product(beta_kl(k, l)), product(beta_kl(0, l)))


# --- report -------------------------------------------------------------------


@dataclass
class Cell:
    k: int
    l: int
    n: int
    sign: int
    filling: AbelianInvariants
    filling_expected: AbelianInvariants
    boundary: AbelianInvariants
    boundary_expected: AbelianInvariants
    b_classes_ok: bool
    monodromy_rows_ok: bool
    rho_consistent: bool
    braid_product_ok: bool

    @property
    def passed(self) -> bool:
        return (
            groups_isomorphic(self.filling, self.filling_expected)
            and groups_isomorphic(self.boundary, self.boundary_expected)
            and self.b_classes_ok
            and self.monodromy_rows_ok
            and self.rho_consistent
            and self.braid_product_ok
        )

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "sign": self.sign,
            "filling": self.filling.to_json(),
            "filling_expected": self.filling_expected.to_json(),
            "boundary": self.boundary.to_json(),
            "boundary_expected": self.boundary_expected.to_json(),
            "b_classes_ok": self.b_classes_ok,
            "monodromy_rows_ok": self.monodromy_rows_ok,
            "rho_consistent": self.rho_consistent,
            "braid_product_ok": self.braid_product_ok,
            "pass": self.passed,
        }


@dataclass
class PaperReport:
    k_values: tuple[int, ...]
    l_values: tuple[int, ...]
    n_values: tuple[int, ...]
    cells: list[Cell] = field(default_factory=list)
    centralizer_ok: bool = False
    fillings_distinct_in_k: bool = False
    boundaries_distinct_in_l: bool = False

    @property
    def passed(self) -> bool:
        return (
            all(c.passed for c in self.cells)
            and self.centralizer_ok
            and self.fillings_distinct_in_k
            and self.boundaries_distinct_in_l
        )

    def to_json(self) -> dict:
        return {
            "grid": {"k": list(self.k_values), "l": list(self.l_values), "n": list(self.n_values)},
            "centralizer_ok": self.centralizer_ok,
            "fillings_distinct_in_k": self.fillings_distinct_in_k,
            "boundaries_distinct_in_l": self.boundaries_distinct_in_l,
            "cells": [c.to_json() for c in self.cells],
            "pass": self.passed,
        }


def _cell(k: int, l: int, n: int) -> Cell:
    w = build_W(k, l, n)
    s = w.lattice.sign
    m = build_M(l, n)
    cols = tuple(m.monodromy.column(j) for j in range(4))
    return Cell(
        k=k, l=l, n=n, sign=s,
        filling=filling_homology(w),
        filling_expected=expected_filling(k),
        boundary=boundary_homology(m),
        boundary_expected=expected_boundary(l),
        b_classes_ok=tuple(c.coords for c in w.cycles[:3]) == expected_b_classes(k, s),
        monodromy_rows_ok=cols == expected_monodromy_columns(l, s),
        rho_consistent=rho_matrix(w_braid_word(k, l), w.lattice) == w.monodromy,
        braid_product_ok=_beta_product_matches(k, l),
    )


def verify_paper(
    k_max: int = 20, l_max: int = 20, n_set: Iterable[int] = (2, 3), k_min: int = 0
) -> PaperReport:
    """Evaluate every (k, l, n) cell of the grid. Never stops at the first failure."""
    ks = tuple(range(k_min, k_max + 1))
    ls = tuple(range(1, l_max + 1))
    ns = tuple(sorted(set(n_set)))
    report = PaperReport(ks, ls, ns)
    report.cells = [_cell(k, l, n) for k in ks for l in ls for n in ns]
    report.cells.sort(key=lambda c: (c.k, c.l, c.n))
    report.centralizer_ok = centralizer_certificate()

    def distinct(groups) -> bool:
        return len(set(groups)) == len(groups)

    report.fillings_distinct_in_k = all(
        distinct([c.filling for c in report.cells if c.l == l and c.n == n]) for l in ls for n in ns
    )
    report.boundaries_distinct_in_l = all(
        distinct([c.boundary for c in report.cells if c.k == ks[0] and c.n == n]) for n in ns
    )
    return report


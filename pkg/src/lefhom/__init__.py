"""Homology of Weinstein Lefschetz fibrations and contact open books over A_m Milnor fibers."""

from .abelian import AbelianInvariants, IntMatrix, cokernel_invariants, groups_isomorphic, smith_normal_form
from .braid import BraidWord, Factorization, braids_equal
from .fibration import (
    LefschetzModel,
    OpenBookModel,
    boundary_homology,
    filling_homology,
    is_homotopy_sphere,
    model_from_factorization,
)
from .milnor import HomologyClass, MilnorLattice, rho_matrix

__version__ = "0.1.0"

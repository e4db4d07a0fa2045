"""Exact Hochschild and Harrison (co)homology of finite-dimensional commutative algebras over Q."""

__version__ = "0.1.0"

from .algebras import StructureAlgebra, SymmetricModule, builtin, multiply, validate
from .complexes import (
    Chain,
    Cochain,
    barr_decomposition_check,
    chain_boundary,
    coboundary,
    cohomology,
    harrison_project,
    homology,
    is_harrison,
    shuffle_product_chains,
)
from .deform import (
    StarTruncation,
    extend_deformation,
    gerstenhaber_bracket,
    gerstenhaber_circ,
    maurer_cartan_check,
    obstruction,
    order_associator,
)
from .symgrp import GroupAlgebraElement, Permutation, eulerian_idempotent

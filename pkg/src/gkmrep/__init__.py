"""Exact GKM cohomology of moment graphs, Weyl group actions and induced characters."""

from .actions import action_on_ordinary, degree_characters, total_character, vertex_permutation_character
from .filtration import build_filtration, check_graded_iso, find_regular_point
from .gkm import betti, gkm_piece, ordinary_basis
from .graph import MomentGraph, SymmetryError, bruhat_graph, hessenberg_graph, schubert_graph, validate
from .reps import CharacterVector, decompose, induced_trivial, irreducible_character
from .springer import SpringerInstance, springer_character
from .weyl import Permutation, YoungSubgroup

__all__ = [
    "CharacterVector",
    "MomentGraph",
    "Permutation",
    "SpringerInstance",
    "SymmetryError",
    "YoungSubgroup",
    "action_on_ordinary",
    "betti",
    "bruhat_graph",
    "build_filtration",
    "check_graded_iso",
    "decompose",
    "degree_characters",
    "find_regular_point",
    "gkm_piece",
    "hessenberg_graph",
    "induced_trivial",
    "irreducible_character",
    "ordinary_basis",
    "schubert_graph",
    "springer_character",
    "total_character",
    "validate",
    "vertex_permutation_character",
]

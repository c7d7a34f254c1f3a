"""Decorated cycle-free partial orders, their automorphism groups and a small group logic."""

from .decompose import Decomposition, DecompositionError, classify_components, decompose, suggest_candidates
from .decoration import DecoratedPoset, Provenance, decorate, is_join_rich, skeleton_of
from .groups import (GroupTooLarge, Perm, PermGroup, automorphism_group, find_isomorphism, group_isomorphic,
                     naive_automorphisms, orbits, orbits_report, stabilizer, subgroup_enumerate)
from .logic import (ActionStructure, BudgetExceeded, check_reconstruction, classify_subgroups, eval_formula,
                    extract_skeleton, function_part, indec_pd, meets_x, primitive_preds, rep_point)
from .order import ChainedTree, OrderError, Poset, adjacent_pairs, boundary, build_poset, components, is_cfpo, path
from .wreath import WreathProduct, verify_wreath_iso, wreath_group, wreath_to_aut

__version__ = "0.1.0"

__all__ = [
    "ActionStructure", "BudgetExceeded", "ChainedTree", "DecoratedPoset", "Decomposition",
    "DecompositionError", "GroupTooLarge", "OrderError", "Perm", "PermGroup", "Poset", "Provenance",
    "WreathProduct", "adjacent_pairs", "automorphism_group", "boundary", "build_poset",
    "check_reconstruction", "classify_components", "classify_subgroups", "components", "decompose",
    "decorate", "eval_formula", "extract_skeleton", "find_isomorphism", "function_part",
    "group_isomorphic", "indec_pd", "is_cfpo", "is_join_rich", "meets_x", "naive_automorphisms",
    "orbits", "orbits_report", "path", "primitive_preds", "rep_point", "skeleton_of", "stabilizer",
    "subgroup_enumerate", "suggest_candidates", "verify_wreath_iso", "wreath_group", "wreath_to_aut",
]

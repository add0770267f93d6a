"""β(1,0)-trees, their two composition algebras and the involution h."""

from .core import (
    EDGE,
    LEAF,
    Tree,
    TreeError,
    decompose_dual,
    decompose_sum,
    gamma,
    lambda_,
    obslash,
    oplus,
    parse,
    render,
    root_label,
    rpath_length,
    validate,
)
from .enumeration import FamilySpec, count_levels, generate, oracle_enumerate, trees
from .involution import h
from .labeled import LabeledTree, canonical_labeling, labeled_h, words
from .stats import StatTuple, dist_table, stats

__version__ = "0.1.0"

__all__ = [
    "EDGE",
    "LEAF",
    "Tree",
    "TreeError",
    "decompose_dual",
    "decompose_sum",
    "gamma",
    "lambda_",
    "obslash",
    "oplus",
    "parse",
    "render",
    "root_label",
    "rpath_length",
    "validate",
    "FamilySpec",
    "count_levels",
    "generate",
    "oracle_enumerate",
    "trees",
    "h",
    "LabeledTree",
    "canonical_labeling",
    "labeled_h",
    "words",
    "StatTuple",
    "dist_table",
    "stats",
]

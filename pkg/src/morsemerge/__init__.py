"""Discrete Morse functions on paths and trees, and their merge trees.

The library realizes both directions of the correspondence: inducing the
chiral merge tree of a dMf, realizing any merge tree as an index-ordered or
sublevel-connected dMf on a path, and deciding shuffle, symmetry, and
component-merge equivalence.  An exhaustive small-instance oracle recheckes
the underlying theorems.
"""

from .complexes import (
    ComplexError,
    OrientedPath,
    SimplicialTree,
    Subcomplex,
    connected_component,
)
from .curry import (
    CMlTree,
    PLFunction,
    dmf_to_pl,
    induced_cml_tree,
    js_quotient,
    o_js,
    pl_to_dmf,
    reflect_subtree,
)
from .dmf import (
    CriticalData,
    DiscreteMorseFunction,
    DmfError,
    MatchingViolation,
    MultiplicityViolation,
    WeaklyIncreasingViolation,
    is_index_ordered,
    is_sublevel_connected,
    min_simplex,
    sublevel_complex,
    validate,
)
from .equiv import (
    EquivalenceWitness,
    SublevelAutomorphism,
    UnsupportedRegime,
    cm_equivalent,
    cm_to_path,
    ml_isomorphic,
    ml_shuffle_equivalent,
    mo_isomorphic,
    shuffle_equivalent,
    sublevel_orbit,
    symmetry_equivalent,
)
from .induce import MlTree, induced_merge_tree, induced_ml_tree
from .mergetree import MergeTree, TreeError, isomorphic, parse_merge_tree
from .oracle import (
    EnumerationReport,
    enumerate_crit_dmfs,
    enumerate_merge_trees,
    verify_theorems,
)
from .orders import (
    MorseLabeling,
    MorseOrder,
    index_morse_order,
    is_morse_labeling,
    is_morse_order,
    labeling_from_order,
    order_from_labeling,
    order_isomorphism,
    simplex_order_path,
    simplex_order_tree,
    sublevel_connected_morse_order,
)
from .realize import (
    StepRecord,
    build_index_ordered_dmf,
    build_sublevel_connected_dmf,
    induced_dmf,
    step_by_step_dmf,
    step_by_step_trace,
)

__version__ = "0.1.0"

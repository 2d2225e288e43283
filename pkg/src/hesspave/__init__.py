"""Exact computations with affine pavings of ideal fibers.

The package builds exceptional root systems and Weyl groups over exact
integer arithmetic, constructs Chevalley bases with verified structure
constants, and studies nilpotent elements through two complementary
lenses: affine pavings of their fibers over ideals of positive roots,
and the graded Weyl-group action on regular nilpotent Hessenberg
cohomology that those pavings determine.
"""

from .chevalley import ChevalleyBasis, Sl2Triple, chevalley_basis, regular_nilpotent_sl2
from .errors import (
    ComputationError,
    ConfigError,
    HesspaveError,
    InfeasibleSolveError,
    InvalidIdealError,
    InvalidRootError,
    InvalidTypeError,
    InvalidWordError,
    UnknownOrbitError,
    UnsupportedLeviError,
    UnsupportedZeroSetError,
)
from .hessfibers import (
    FiberCell,
    FiberPaving,
    Ideal,
    Quintuple,
    ZeroSet,
    classify_quintuples,
    classify_zero_set,
    enumerate_ideals,
    fiber_paving,
    ideal_by_slug,
    ideal_slugs,
    membership_expansion,
    render_zero_set,
)
from .orbitctx import OrbitContext, orbit_context, orbit_slugs, orbits_for_type
from .poly import Poly
from .reptheory import (
    CharacterTable,
    DotActionTable,
    RegularPaving,
    dot_action_remainder,
    dot_action_table,
    fiber_local_systems,
    format_class_function,
    g2_characters,
    ic_contributions,
    max_nonempty_orbit,
    regular_hessenberg_betti,
    regular_hessenberg_paving,
    s3_characters,
)
from .rootcore import RootSystem, root_system
from .weylgrp import WeylGroup, weyl_group

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ChevalleyBasis",
    "Sl2Triple",
    "chevalley_basis",
    "regular_nilpotent_sl2",
    "HesspaveError",
    "ConfigError",
    "ComputationError",
    "InvalidTypeError",
    "InvalidRootError",
    "InvalidWordError",
    "InvalidIdealError",
    "UnknownOrbitError",
    "UnsupportedLeviError",
    "UnsupportedZeroSetError",
    "InfeasibleSolveError",
    "Ideal",
    "FiberCell",
    "FiberPaving",
    "Quintuple",
    "ZeroSet",
    "classify_quintuples",
    "classify_zero_set",
    "enumerate_ideals",
    "fiber_paving",
    "ideal_by_slug",
    "ideal_slugs",
    "membership_expansion",
    "render_zero_set",
    "OrbitContext",
    "orbit_context",
    "orbit_slugs",
    "orbits_for_type",
    "Poly",
    "CharacterTable",
    "DotActionTable",
    "RegularPaving",
    "dot_action_remainder",
    "dot_action_table",
    "fiber_local_systems",
    "format_class_function",
    "g2_characters",
    "ic_contributions",
    "max_nonempty_orbit",
    "regular_hessenberg_betti",
    "regular_hessenberg_paving",
    "s3_characters",
    "RootSystem",
    "root_system",
    "WeylGroup",
    "weyl_group",
]

"""Exact arc combinatorics, cluster variables, and unimodular tilings.

The package models indecomposable objects as integer arcs, cluster tilting
subcategories as (possibly infinite) triangulations, and computes cluster
variables two independent ways: a Ptolemy exchange recursion that works on
the infinite families, and a direct submodule-counting formula on finite
polygon models.  Reduction to polygons, split K-theory bookkeeping, and
tiling generation tie the routes together with exact integer arithmetic.
"""

from .arcs import Arc, Edge, arc, crosses, seg, shift, spans
from .errors import (
    ExactnessFailure,
    FlipTargetNotMember,
    InfccError,
    InfiniteCrossers,
    NonAdmissibleFrontier,
    NotAMember,
    NotLocallyFinite,
    SupportMeetsU,
    Unreachable,
    UnknownFamily,
)
from .exchange import CCSession, ReachabilityVerdict, cc, cc_multiset, is_reachable
from .laurent import LaurentPoly, format_fraction
from .cc_direct import cc_direct
from .ktheory import ModClass, SplitK0Class, coindex, index, kappa_embed, theta, theta_simple
from .modules import StringModule, count_submodules, g_module, submodule_classes
from .reduction import ReducedModel, USpec, cc_bar, perp, pi_star, reduce, u_of
from .tilings import (
    Frontier,
    TilingWindow,
    extend_frontier,
    frontier_to_triangulation,
    q_overlap_fill,
    tiling_window,
    verify_sl2,
)
from .triangulation import (
    Classification,
    Diagnosis,
    FlipResult,
    Quiver,
    Triangulation,
    all_polygon_triangulations,
    build,
    fountain,
    nested_zigzag,
    polygon,
    polygon_diagonals,
    random_polygon_triangulation,
    staircase,
)

__version__ = "1.0.0"

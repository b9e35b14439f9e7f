"""Exact-arithmetic classification of non-loose Legendrian rational
unknots in lens spaces, built on a Farey-graph calculus for tight
contact structures."""

from .farey import INFINITY, ZERO, FareyError, SignedVector, Slope, cross, cw_between, dot, farey_diff, farey_sum, has_edge, iterated_sum
from .cfrac import ContinuedFraction, FareyPath, ancestor, block_structure, expand, minimal_path, successor, value
from .decorated import (
    Context,
    DecoratedPath,
    DecorationError,
    Lens,
    LowerSolidTorus,
    ShuffleClass,
    Sign,
    ThickenedTorus,
    UpperSolidTorus,
    canonicalize,
    count_tight,
    enumerate_tight,
    euler_on_disk,
    is_tight,
    relative_euler,
    shorten_once,
)
from .unknots import (
    ClassificationError,
    Existence,
    Flavor,
    K0,
    K1,
    KnotId,
    LensSpace,
    MountainRange,
    NonLooseClass,
    RangeCounts,
    RangeKind,
    TopologyFacts,
    admits_nonloose,
    classes_at_slope,
    classify,
    measured_counts,
    range_counts,
    slope_k,
    smooth_knot_classes,
    stabilize,
)
from .cables import (
    CableError,
    CableSpec,
    FamilyInvariants,
    LegendrianInvariants,
    cable_rot,
    divide_cable_tb,
    negative_cable_tb,
    positive_cable,
    ruling_cable_tb,
    seestab_count,
    self_linking,
    stab_count_relation,
    transnonsimple_family,
)

__version__ = "0.1.0"

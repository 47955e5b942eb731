"""Discreteness of two-generator Kleinian groups with real parameters.

A pair (f, g) in PSL(2, C) is described by beta = tr^2 f - 4, beta' = tr^2 g - 4
and gamma = tr[f, g] - 2. When all three are real the group is an RP group and
this package decides discreteness for the truly spatial ones with an elliptic
generator, by table lookup and by building explicit witness elements.
"""

from .config import DEFAULT_CAPS, DEFAULT_TOLERANCES, EnumCaps, Settings, Tolerances, load_settings
from .errors import *  # noqa: F401,F403
from .geometry import (
    AxisRelation,
    Geodesic,
    RelationKind,
    MIN_DISTANCE_TABLE,
    axes_relation,
    axis_of,
    lines_disjoint_after_pivot,
    min_distance,
    pivot_bound,
    min_distance_discrepancies,
    triangle_ray_disjoint,
)
from .moebius import (
    ElementClass,
    GeneratorPair,
    Kind,
    MoebiusMap,
    ParamTriple,
    classify_beta,
    classify_element,
    commutator,
    construct_generators,
    elliptic_kth_roots,
    evaluate_word,
    normalize_primitive,
    params_of,
    parse_word,
    primitive_power,
    recognize_fraction,
    sqrt_in_psl,
)
from .oracle import ClauseResult, DiscretenessVerdict, Status, check_theorem_a, decide
from .orbifold353 import Gamma353Report, verify_353
from .table import ROWS, TableMatch, enumerate_row, get_row, match_table
from .taxonomy import GroupSpaceClass, SpaceClass, classify_pair, is_truly_spatial
from .witnesses import WitnessSet, build_h1, build_h2, build_h3, build_h4, build_witnesses, relation_residuals

__version__ = "0.1.0"

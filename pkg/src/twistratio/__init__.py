"""Exact ratio certificates for pseudo-Anosov twist words on filling pairs.

Words in the free group on two high twist powers map to exact integer
matrices; the package computes their stretch factors, bounds their
curve-graph translation lengths through the splitting-tree syllable
calculus, and certifies the ratio of the two translation lengths
against a log bound in the pair's intersection number.
"""

from .matrices import (
    Dilatation,
    EllipticError,
    IntMatrix2,
    NotHyperbolicError,
    ParabolicError,
    dilatation,
    evaluate,
    is_hyperbolic,
    pair_norm_trace_bound_check,
    sharp_trace_bound_check,
    teich_translation,
    trace_bound_check,
    twist_matrices,
)
from .reports import (
    DEFAULT_M,
    Config,
    RatioReport,
    enumerate_ratio_optimizers,
    johnson_report,
    johnson_word,
    pointpush_report,
    ratio_report,
    separating_config,
    standard_config,
)
from .surfaces import (
    DEFAULT_SEEDS,
    IntersectionValue,
    SeparatingSeeds,
    SurfaceParams,
    UnsupportedSurfaceError,
    complexity,
    filling_table,
    min_filling_intersection,
    pointpush_intersection_bound,
    separating_pair_bound,
    twist_intersection_bounds,
)
from .tree import (
    BASE_A,
    BASE_B,
    DistanceInterval,
    InconclusiveRadiusError,
    TreeVertex,
    brute_force_translation,
    curve_distance_interval,
    curve_translation_interval,
    translation_length,
    tree_distance,
)
from .words import (
    CyclicWord,
    Syllable,
    Word,
    WordParseError,
    commutator,
    cyclic_reduce,
    enumerate_optimizer_words,
    is_conjugate,
    parse_word,
    primitive_root,
    reduce_letters,
    same_maximal_cyclic,
)

__version__ = "0.1.0"

"""Canonical naming of row-periodic matrices and its matching applications.

The package classifies matrices whose rows are all periodic by the
numerically smallest conjugate of their horizontal repetition, answers
horizontal suffix-prefix queries between classified matrices in constant
time, and performs multi-pattern 2D dictionary matching with arithmetic
verification.
"""

from .classify import (
    ClassifiedMatrix,
    MatrixClassKey,
    classify_matrix,
    conjugacy_shift,
    longest_suffix_prefix,
    summarize_matrix,
)
from .dictmatch import (
    DictionaryIndex,
    Occurrence,
    PatternGroup,
    brute_search,
    build_index,
    search_text,
    verify_candidate,
)
from .errors import (
    CapExceeded,
    InvalidInput,
    InvalidQuery,
    LyndonError,
    NoInverse,
    NotLyndon,
    NotPrimitive,
    NotSufficientlyPeriodic,
)
from .lw2d import (
    DEFAULT_CAP,
    OpCounter,
    SummaryColumn,
    TwoDLWBuilder,
    TwoDLyndonWord,
    alg1_2dlw,
    alg2_2dlw,
    conjugate_offsets,
    lcm_prefixes,
    materialize_lcm_matrix,
    mod_inverse,
    naive_2dlw,
)
from .strings1d import (
    NameRegistry,
    RowSummary,
    border_array,
    compute_period,
    is_lyndon,
    is_primitive,
    least_rotation,
    summarize_row,
)

__all__ = [
    "CapExceeded",
    "ClassifiedMatrix",
    "DEFAULT_CAP",
    "DictionaryIndex",
    "InvalidInput",
    "InvalidQuery",
    "LyndonError",
    "MatrixClassKey",
    "NameRegistry",
    "NoInverse",
    "NotLyndon",
    "NotPrimitive",
    "NotSufficientlyPeriodic",
    "Occurrence",
    "OpCounter",
    "PatternGroup",
    "RowSummary",
    "SummaryColumn",
    "TwoDLWBuilder",
    "TwoDLyndonWord",
    "alg1_2dlw",
    "alg2_2dlw",
    "border_array",
    "brute_search",
    "build_index",
    "classify_matrix",
    "compute_period",
    "conjugacy_shift",
    "conjugate_offsets",
    "is_lyndon",
    "is_primitive",
    "lcm_prefixes",
    "least_rotation",
    "longest_suffix_prefix",
    "materialize_lcm_matrix",
    "mod_inverse",
    "naive_2dlw",
    "search_text",
    "summarize_matrix",
    "summarize_row",
    "verify_candidate",
]

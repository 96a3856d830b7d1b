from .characters import (
    NegativeCoefficient,
    NonIntegralBurnside,
    NonPalindromic,
    SignViolation,
    burnside_average,
    chi_closed,
    chi_open,
    chi_to_compact_support,
    chi_to_poincare_closed,
    chi_to_poincare_open,
    compact_to_ordinary,
)
from .counting import exact_degree_count, fixed_configurations, mobius, trace_open
from .trees import (
    CapExceeded,
    StableTree,
    cycle_type_of,
    enumerate_stable_trees,
    permutation_of_type,
    trace_closed,
    trace_closed_type,
)

"""sumsetlab: exact generalized sumsets, their bounds, and checkers.

The library computes h^(r)A, the set of sums of h elements of A with
each element used at most r times, over the integers and over Z/pZ for
prime p, together with the closed-form cardinality bounds, the greedy
rewriting into restricted-sumset parts, and exhaustive verification
tooling (an independent brute-force oracle, identity checkers, and
equality-set scans).
"""

from .core import (
    GroundSet,
    SetLiteralWarning,
    SumParams,
    SumsetResult,
    bound_cauchy_davenport,
    bound_direct_integers,
    bound_direct_mod_p,
    bound_erdos_heilbronn,
    classical_sumset,
    extremes_closed_form,
    generalized_sumset,
    is_prime,
    parse_ground_set,
    restricted_sumset,
    split_h,
)
from .decompose import (
    Decomposition,
    FactorizationReport,
    GreedyStep,
    MultiplicityVector,
    check_sumset_factorization,
    greedy_decompose,
)
from .errors import DomainError, InvariantViolationError, ResourceCapError
from .scan import (
    DEFAULT_CAP,
    ScanReport,
    parse_manifest,
    scan_extremal_integers,
    scan_inverse_eh_mod_p,
)
from .verify import (
    BoundReport,
    CheckItem,
    ComplementReport,
    WitnessReport,
    brute_force_sumset,
    check_complement_identity,
    check_direct_bound,
    check_inclusions_and_witnesses,
    is_arithmetic_progression,
)

__version__ = "0.1.0"

__all__ = [
    "GroundSet",
    "SumParams",
    "SumsetResult",
    "SetLiteralWarning",
    "MultiplicityVector",
    "Decomposition",
    "GreedyStep",
    "FactorizationReport",
    "BoundReport",
    "ComplementReport",
    "WitnessReport",
    "CheckItem",
    "ScanReport",
    "DomainError",
    "InvariantViolationError",
    "ResourceCapError",
    "split_h",
    "parse_ground_set",
    "generalized_sumset",
    "classical_sumset",
    "restricted_sumset",
    "bound_direct_integers",
    "bound_direct_mod_p",
    "bound_cauchy_davenport",
    "bound_erdos_heilbronn",
    "extremes_closed_form",
    "is_prime",
    "greedy_decompose",
    "check_sumset_factorization",
    "brute_force_sumset",
    "check_direct_bound",
    "check_complement_identity",
    "check_inclusions_and_witnesses",
    "is_arithmetic_progression",
    "scan_extremal_integers",
    "scan_inverse_eh_mod_p",
    "parse_manifest",
    "DEFAULT_CAP",
]

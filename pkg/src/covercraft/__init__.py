"""Exact classification of quadruple Galois canonical covers of surfaces of minimal degree."""

from .algebra import (
    BidoubleAlgebraData,
    CoverCandidate,
    GaloisGroup,
    Z4AlgebraData,
    construction_plan,
    cover_canonical_class,
    is_simple_cyclic,
    make_candidate,
    pushforward_summands,
    validate_bidouble,
    validate_z4,
)
from .classifier import (
    classify_p2,
    classify_scroll,
    classify_veronese,
    check_simple_cyclic_nonexistence,
    diff_against_builtin,
    z4_no_simple_cyclic_property,
)
from .invariants import InvariantSet, geometric_genus, invariant_set, irregularity
from .surfaces import (
    CohomologyDims,
    DivisorClass,
    MinimalDegreeSurface,
    cohomology,
    p2,
    scroll,
    veronese,
)

__version__ = "0.1.0"

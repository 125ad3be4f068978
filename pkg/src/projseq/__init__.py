"""Binary sequence families of length 2^n + 1 over GF(2^n).

The q+1 points of the projective line over GF(q), q = 2^n, form a single
cycle under a fractional-linear map of order q+1 attached to a primitive
quadratic modulus.  Evaluating the trace of selected rational functions
along that cycle yields q-1 sequences of odd length q+1 whose peak
cyclic auto/cross-correlation is bounded by the largest odd integer not
exceeding 2*sqrt(q).  This package builds such families, measures their
exact correlation spectra (packed popcount fast path with a compiled
kernel plus pure-Python fallback, proven against a naive oracle), and
provides Gold-family baselines for comparison.
"""

from .correlation import (
    BACKEND,
    CorrelationReport,
    PackedSequence,
    analyze_sequences,
    autocorrelation,
    backend_name,
    balance,
    balanced_count,
    crosscorrelation,
    family_correlation,
)
from .errors import ValidationError, VerificationError
from .family import (
    BinarySequence,
    SequenceFamily,
    build_family,
    emit_sequence,
    theoretical_bound,
)
from .gf2n import GF2n, field_make
from .gold import GoldFamily, LfsrSpec, gold_family, gold_max_correlation, m_sequence
from .lqspace import (
    EquivClassSet,
    SigmaMatrix,
    enumerate_classes,
    evaluate_v,
    lq_action_matrix,
    sigma_orbit_of,
)
from .mobius import INFINITY, MobiusMap, compose, place_orbit, power_step, sigma_from_modulus
from .quadratic import (
    QuadraticModulus,
    find_primitive_quadratic,
    fq2_mul,
    fq2_pow,
    is_irreducible,
    is_primitive,
)
from .serialization import dump_family, load_family

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BinarySequence",
    "CorrelationReport",
    "EquivClassSet",
    "GF2n",
    "GoldFamily",
    "INFINITY",
    "LfsrSpec",
    "MobiusMap",
    "PackedSequence",
    "QuadraticModulus",
    "SequenceFamily",
    "SigmaMatrix",
    "ValidationError",
    "VerificationError",
    "analyze_sequences",
    "autocorrelation",
    "backend_name",
    "balance",
    "balanced_count",
    "build_family",
    "compose",
    "crosscorrelation",
    "dump_family",
    "emit_sequence",
    "enumerate_classes",
    "evaluate_v",
    "family_correlation",
    "field_make",
    "find_primitive_quadratic",
    "fq2_mul",
    "fq2_pow",
    "gold_family",
    "gold_max_correlation",
    "is_irreducible",
    "is_primitive",
    "load_family",
    "lq_action_matrix",
    "m_sequence",
    "place_orbit",
    "power_step",
    "sigma_from_modulus",
    "sigma_orbit_of",
    "theoretical_bound",
]

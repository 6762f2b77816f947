"""powsym: elementary symmetric polynomials as rational functions of
power sums, exact in any characteristic.

Over a field of characteristic zero the Newton identities invert
directly; over characteristic r > 0 the index k is not always a unit,
yet e_k is still a fraction of power sums, synthesized here from a
sign-decorated Hankel system and certified by exact substitution.
Applications: recovering characteristic polynomials from trace data
over finite fields, and brute-force exploration of the subalgebra the
power sums generate.
"""

from ._accel import backend_name
from .charpoly import (
    CharPoly,
    TraceSequence,
    charpoly_direct,
    charpoly_from_traces,
    determinant_condition,
    required_traces,
    simulate_traces,
)
from .ebasis import (
    EExpansion,
    decompose,
    expand,
    h_to_e,
    newton_e_determinant,
    newton_e_from_p_invertible,
    p_to_e,
    p_to_e_closed,
    p_to_e_recursive,
)
from .engine import (
    EFormula,
    HankelSpec,
    build_system,
    denominator_test,
    express_e,
    hankel_det_mpoly,
    hankel_matrix,
    soundness_sweep,
    verify_formula,
)
from .errors import (
    DenominatorVanishes,
    DivisionByNonUnit,
    DivisionByZeroFraction,
    Indeterminate,
    InsufficientTraces,
    InvalidRange,
    MixedContext,
    MixedRings,
    NonInvertible,
    NotDivisible,
    NotSymmetric,
    PowsymError,
    SingularBlock,
    UnsupportedRing,
)
from .multipoly import (
    MPoly,
    complete_homogeneous,
    determinant,
    elementary,
    power_sum,
)
from .prational import PPoly, PRat, bareiss_forward, solve_reduce
from .rings import GF, QQ, ZZ, Coeff, RingSpec, is_invertible_int
from .subalgebra import (
    MembershipAnswer,
    MembershipQuery,
    chain_gap_check,
    coprime_part_check,
    membership,
    witness_coefficient,
)

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "CharPoly", "TraceSequence", "charpoly_direct", "charpoly_from_traces",
    "determinant_condition", "required_traces", "simulate_traces",
    "EExpansion", "decompose", "expand", "h_to_e", "newton_e_determinant",
    "newton_e_from_p_invertible", "p_to_e", "p_to_e_closed", "p_to_e_recursive",
    "EFormula", "HankelSpec", "build_system", "denominator_test", "express_e",
    "hankel_det_mpoly", "hankel_matrix", "soundness_sweep", "verify_formula",
    "DenominatorVanishes", "DivisionByNonUnit", "DivisionByZeroFraction",
    "Indeterminate", "InsufficientTraces", "InvalidRange", "MixedContext",
    "MixedRings", "NonInvertible", "NotDivisible", "NotSymmetric",
    "PowsymError", "SingularBlock", "UnsupportedRing",
    "MPoly", "complete_homogeneous", "determinant", "elementary", "power_sum",
    "PPoly", "PRat", "bareiss_forward", "solve_reduce",
    "GF", "QQ", "ZZ", "Coeff", "RingSpec", "is_invertible_int",
    "MembershipAnswer", "MembershipQuery", "chain_gap_check",
    "coprime_part_check", "membership", "witness_coefficient",
]

"""Exact computer algebra for finite quantum sets.

Hereditarily finite sets with their serial codec, the Grassmann algebra over
associations, the Clifford operator algebra of the duplex space, additive
quantification, and Palev bivector statistics.
"""
from .errors import (
    ClosureViolation,
    DimensionMismatch,
    NotInSeed,
    ParseError,
    QsetError,
    RankGuard,
    SizeGuard,
)
from .hfs import (
    EMPTY,
    Hfs,
    HyperbinaryDigits,
    enumerate_rank,
    factor_by_tiers,
    hexp,
    rank,
    serial_decode,
    serial_encode,
    tier_range,
)
from .grassmann import (
    ONE,
    ZERO,
    Element,
    derive,
    dual_pair,
    e,
    grade_op,
    grade_project,
    iota,
    normalize,
    truncate_to_rank,
    wedge,
)
from .clifford import (
    CliffordElement,
    DuplexVector,
    SeedSpace,
    berezin_top,
    beta_chevalley,
    beta_literal,
    clifford_mul,
    duplex_norm,
    reversal,
    spinor_apply,
)
from .quantify import (
    FockOperator,
    OneBodyOperator,
    lift_rank,
    multiquantify,
    occupation,
    quantify,
)
from .palev import (
    StructureTensor,
    bivector_basis,
    closure_check,
    contraction_residual,
    pair_import,
)
from .expr import parse, parse_element, print_canonical

__version__ = "0.1.0"

__all__ = [
    "berezin_top",
    "beta_chevalley",
    "beta_literal",
    "bivector_basis",
    "clifford_mul",
    "CliffordElement",
    "closure_check",
    "ClosureViolation",
    "contraction_residual",
    "derive",
    "DimensionMismatch",
    "dual_pair",
    "duplex_norm",
    "DuplexVector",
    "e",
    "Element",
    "EMPTY",
    "enumerate_rank",
    "factor_by_tiers",
    "FockOperator",
    "grade_op",
    "grade_project",
    "hexp",
    "Hfs",
    "HyperbinaryDigits",
    "iota",
    "lift_rank",
    "multiquantify",
    "normalize",
    "NotInSeed",
    "occupation",
    "ONE",
    "OneBodyOperator",
    "pair_import",
    "parse",
    "parse_element",
    "ParseError",
    "print_canonical",
    "QsetError",
    "quantify",
    "rank",
    "RankGuard",
    "reversal",
    "SeedSpace",
    "serial_decode",
    "serial_encode",
    "SizeGuard",
    "spinor_apply",
    "StructureTensor",
    "tier_range",
    "truncate_to_rank",
    "wedge",
    "ZERO",
]

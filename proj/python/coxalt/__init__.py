from ._coxalt import (
    CoxalError,
    Group,
    affine_series,
    classify,
    closed_type_a_plus,
    derive_prime,
    q_bracket,
    q_factorial,
    serialize,
    verify,
)

__all__ = [
    "CoxalError",
    "Group",
    "affine_series",
    "classify",
    "closed_type_a_plus",
    "derive_prime",
    "q_bracket",
    "q_factorial",
    "serialize",
    "verify",
]

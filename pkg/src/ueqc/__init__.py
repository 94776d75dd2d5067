"""ueqc: exact unbounded-error query complexity of small Boolean functions.

Core pieces: exact-rational LPs over sign-representing polynomials (with
optimality certificates), a state-vector simulator for the quantum query
model, classical one-query randomized algorithms with exact bias profiles,
and analytic lower-bound utilities.
"""

__version__ = "0.1.0"

from .boolfn import BooleanFunction, FSInstance, average_sensitivity, make_function
from .poly import (
    L1,
    SUP,
    FourierPolynomial,
    LevelPolynomial,
    SignRepresentation,
    UnivariatePolynomial,
    bias_of,
    normalize_l1,
    symmetrize,
)

__all__ = [
    "BooleanFunction",
    "FSInstance",
    "FourierPolynomial",
    "LevelPolynomial",
    "SignRepresentation",
    "UnivariatePolynomial",
    "L1",
    "SUP",
    "average_sensitivity",
    "bias_of",
    "make_function",
    "normalize_l1",
    "symmetrize",
    "__version__",
]

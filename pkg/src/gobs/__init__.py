"""Exact Gröbner bases, syzygy obstruction modules and weight degenerations."""

from .errors import IncompatibleWeightError, InconsistencyError
from .ring import GF, QQ, Polynomial, PolynomialRing, TermOrder, divide, lm_ideal
from .freemod import ModuleElement, SchreyerOrder, module_buchberger, module_divide
from .syzygy import leading_sets, lm_syzygy_generators, syzygy_basis
from .signatures import (
    is_groebner, minimum_obstruction, signature, spolynomial, standard_spairs,
)
from .sba import buchberger, reduced_gb, run_sba
from .obstruct import gobs, hilbert_series, minimal_resolution
from .degen import compatible_weight, degeneration_check

__all__ = [
    "IncompatibleWeightError", "InconsistencyError",
    "GF", "QQ", "Polynomial", "PolynomialRing", "TermOrder", "divide", "lm_ideal",
    "ModuleElement", "SchreyerOrder", "module_buchberger", "module_divide",
    "leading_sets", "lm_syzygy_generators", "syzygy_basis",
    "is_groebner", "minimum_obstruction", "signature", "spolynomial", "standard_spairs",
    "buchberger", "reduced_gb", "run_sba",
    "gobs", "hilbert_series", "minimal_resolution",
    "compatible_weight", "degeneration_check",
]
__version__ = "0.1.0"

"""Exact integration of polynomials over rational simplices."""

from .arith import Rational, format_rational, parse_rational
from .clique import Graph, brute_force_clique, clique_estimate, integrate_form_power, motzkin_straus_form
from .errors import (
    CapExceeded,
    DegenerateSimplex,
    InputError,
    SimplexIntError,
)
from .integrate import MethodChoice, PowerOfLinearForm, count_primitive_forms, integrate
from .polynomial import LinearForm, SparsePolynomial
from .simplex import Simplex, canonical_simplex
from .slp import parse_expression

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "DegenerateSimplex",
    "Graph",
    "InputError",
    "LinearForm",
    "MethodChoice",
    "PowerOfLinearForm",
    "Rational",
    "Simplex",
    "SimplexIntError",
    "SparsePolynomial",
    "brute_force_clique",
    "canonical_simplex",
    "clique_estimate",
    "count_primitive_forms",
    "format_rational",
    "integrate",
    "integrate_form_power",
    "motzkin_straus_form",
    "parse_expression",
    "parse_rational",
]

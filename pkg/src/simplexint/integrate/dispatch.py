"""Front end: accept any polynomial representation and pick a method."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from ..errors import InputError
from ..polynomial import SparsePolynomial, detect_power_of_linear_form, effective_variables
from ..simplex import Simplex
from ..slp import Constant, Product, Sum, Variable, expand_slp, formal_degree, parse_expression
from .duality import integrate_via_duality
from .laurent import integrate_via_laurent
from .linear import (
    PowerOfLinearForm,
    integrate_linear_power,
    integrate_linear_power_bigsum,
    integrate_polynomial_bigsum,
    is_regular,
)
from .polarization import integrate_via_polarization
from .waring import integrate_via_waring


class MethodChoice(str, enum.Enum):
    BIGSUM = "bigsum"
    BRION_REGULAR = "brion-regular"
    RESIDUE = "residue"
    WARING = "waring"
    DUALITY = "duality"
    LAURENT = "laurent"
    POLARIZATION = "polarization"
    AUTO = "auto"


PolynomialInput = Union[SparsePolynomial, PowerOfLinearForm, str, Constant, Variable, Sum, Product]

# auto prefers iterated Laurent for few effective variables or small ambient dimension
AUTO_LAURENT_MAX_EFFECTIVE = 3
AUTO_LAURENT_MAX_DIMENSION = 5


def as_sparse(f: PolynomialInput, nvars: int) -> SparsePolynomial:
    if isinstance(f, SparsePolynomial):
        if f.nvars != nvars:
            raise InputError(f"polynomial has {f.nvars} variables, simplex lives in Q^{nvars}")
        return f
    if isinstance(f, PowerOfLinearForm):
        return f.expand()
    if isinstance(f, str):
        f = parse_expression(f, nvars)
    if isinstance(f, (Constant, Variable, Sum, Product)):
        return expand_slp(f, formal_degree(f), nvars)
    raise TypeError(f"unsupported polynomial input {type(f).__name__}")


def resolve_auto(simplex: Simplex, f: SparsePolynomial) -> MethodChoice:
    if not f.is_zero() and detect_power_of_linear_form(f) is not None:
        return MethodChoice.BRION_REGULAR if _is_regular_power(simplex, f) else MethodChoice.RESIDUE
    few = all(len(effective_variables(e)) <= AUTO_LAURENT_MAX_EFFECTIVE for e in f.terms)
    if few or simplex.ambient_dimension <= AUTO_LAURENT_MAX_DIMENSION:
        return MethodChoice.LAURENT if simplex.is_full_dimensional else MethodChoice.DUALITY
    return MethodChoice.WARING


def _is_regular_power(simplex: Simplex, f: SparsePolynomial) -> bool:
    form, _ = detect_power_of_linear_form(f)
    return is_regular(simplex, form)


def integrate(simplex: Simplex, f: PolynomialInput, method: MethodChoice | str = MethodChoice.AUTO,
              **caps) -> tuple[Fraction, str]:
    """Exact integral of f over the simplex and the concrete method that produced it.

    ``caps`` are forwarded to the method: ``limit`` (bigsum) and ``cap``
    (duality, polarization).
    """
    method = MethodChoice(method)
    n = simplex.ambient_dimension

    if isinstance(f, PowerOfLinearForm) and method in (
        MethodChoice.AUTO, MethodChoice.BRION_REGULAR, MethodChoice.RESIDUE, MethodChoice.BIGSUM
    ):
        if f.form.dimension != n:
            raise InputError(f"linear form has {f.form.dimension} entries, simplex lives in Q^{n}")
        if method == MethodChoice.BIGSUM:
            value = integrate_linear_power_bigsum(simplex, f.form, f.exponent, **caps)
            return f.coefficient * value, method.value
        if method == MethodChoice.AUTO:
            method = MethodChoice.BRION_REGULAR if is_regular(simplex, f.form) else MethodChoice.RESIDUE
        value = integrate_linear_power(simplex, f.form, f.exponent, method=method.value)
        return f.coefficient * value, method.value

    sparse = as_sparse(f, n)
    if method == MethodChoice.AUTO:
        method = resolve_auto(simplex, sparse)

    if method in (MethodChoice.BRION_REGULAR, MethodChoice.RESIDUE):
        if sparse.is_zero():
            return Fraction(0), method.value
        found = detect_power_of_linear_form(sparse)
        if found is None:
            raise InputError(f"method {method.value} needs a power of a linear form")
        form, M = found
        return integrate_linear_power(simplex, form, M, method=method.value), method.value
    if method == MethodChoice.BIGSUM:
        return integrate_polynomial_bigsum(simplex, sparse, **caps), method.value
    if method == MethodChoice.WARING:
        return integrate_via_waring(simplex, sparse), method.value
    if method == MethodChoice.DUALITY:
        return integrate_via_duality(simplex, sparse, **caps), method.value
    if method == MethodChoice.LAURENT:
        return integrate_via_laurent(simplex, sparse), method.value
    if method == MethodChoice.POLARIZATION:
        return integrate_via_polarization(simplex, sparse, **caps), method.value
    raise AssertionError(method)

from .dispatch import MethodChoice, as_sparse, integrate, resolve_auto
from .duality import (
    integrate_monomial_canonical,
    integrate_product_linear_powers_duality,
    integrate_via_duality,
)
from .laurent import integrate_via_laurent
from .linear import (
    PowerOfLinearForm,
    integrate_linear_power,
    integrate_linear_power_bigsum,
    integrate_polynomial_bigsum,
    is_regular,
)
from .polarization import integrate_via_polarization, polarize
from .waring import collect_powers, count_primitive_forms, decompose_monomial, integrate_via_waring

__all__ = [
    "MethodChoice",
    "PowerOfLinearForm",
    "as_sparse",
    "collect_powers",
    "count_primitive_forms",
    "decompose_monomial",
    "integrate",
    "integrate_linear_power",
    "integrate_linear_power_bigsum",
    "integrate_monomial_canonical",
    "integrate_polynomial_bigsum",
    "integrate_product_linear_powers_duality",
    "integrate_via_duality",
    "integrate_via_laurent",
    "integrate_via_polarization",
    "integrate_via_waring",
    "is_regular",
    "polarize",
    "resolve_auto",
]

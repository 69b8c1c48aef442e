"""Integration of products of linear-form powers by Taylor coefficient extraction.

The t^M coefficient of 1 / prod_i (1 - sum_j t_j <l_j, s_i>) equals
(|M|+d)! / (d! vol) * integral(prod_j l_j^{M_j} / M_j!).  The product of the
d+1 affine factors is formed with truncated series, inverted once, and
read off.  Truncation is by total degree |M| and by the box M, since no term
with an exponent above M_j can reach t^M.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from ..errors import EffectiveVariableCapExceeded
from ..polynomial import LinearForm, SparsePolynomial, effective_variables
from ..series import TruncatedSeries, coefficient, product_truncated, series_reciprocal
from ..simplex import Simplex, vertex_values

DEFAULT_DUALITY_CAP = 8


def integrate_product_linear_powers_duality(simplex: Simplex, forms: Sequence[LinearForm],
                                            exponents: Sequence[int],
                                            cap: int = DEFAULT_DUALITY_CAP) -> Fraction:
    if len(forms) != len(exponents):
        raise ValueError("one exponent per linear form is required")
    pairs = [(f, m) for f, m in zip(forms, exponents) if m]
    if len(pairs) > cap:
        raise EffectiveVariableCapExceeded("duality effective-variable cap", len(pairs), cap)
    d = simplex.dimension
    if not pairs:
        return simplex.volume
    ms = tuple(m for _, m in pairs)
    total = sum(ms)
    values = [vertex_values(simplex, f) for f, _ in pairs]  # values[j][i] = <l_j, s_i>
    factors = [
        TruncatedSeries.affine(1, [-values[j][i] for j in range(len(pairs))], total, box=ms)
        for i in range(d + 1)
    ]
    denom = product_truncated(factors, total)
    coef = coefficient(series_reciprocal(denom), ms)
    scale = Fraction(math.factorial(d) * math.prod(math.factorial(m) for m in ms), math.factorial(total + d))
    return coef * scale * simplex.volume


def integrate_via_duality(simplex: Simplex, f: SparsePolynomial, cap: int = DEFAULT_DUALITY_CAP) -> Fraction:
    """Each monomial is a product of powers of the coordinates it uses."""
    n = simplex.ambient_dimension
    if f.nvars != n:
        raise ValueError("polynomial and simplex live in different dimensions")
    total = Fraction(0)
    for exps, c in f.terms.items():
        eff = effective_variables(exps)
        if len(eff) > cap:
            raise EffectiveVariableCapExceeded("duality effective-variable cap", len(eff), cap)
        forms = [LinearForm(int(j == k) for j in range(1, n + 1)) for k in eff]
        total += c * integrate_product_linear_powers_duality(simplex, forms, [exps[k - 1] for k in eff], cap)
    return total


def integrate_monomial_canonical(n: int, exponents: Sequence[int]) -> Fraction:
    """prod m_i! / (|m| + n - 1)!: x^m over conv(e_1..e_n) under the integral measure."""
    if n < 1 or len(exponents) != n:
        raise ValueError("need n >= 1 and one exponent per coordinate")
    return Fraction(math.prod(math.factorial(m) for m in exponents), math.factorial(sum(exponents) + n - 1))

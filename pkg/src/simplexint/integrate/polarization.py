"""Integration of homogeneous components through their polarization.

For f homogeneous of degree M with polar form H_f,

    integral f dm = vol / C(M+d, M) * sum_{i_1 <= ... <= i_M} H_f(s_{i_1}, ..., s_{i_M})

and H_f is evaluated with the signed sum over eps in {+1,-1}^M.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Sequence

from ..arith import binomial
from ..errors import NotHomogeneous, PolarizationCapExceeded
from ..polynomial import SparsePolynomial
from ..simplex import Simplex

DEFAULT_POLARIZATION_CAP = 8


def _check(f: SparsePolynomial, cap: int) -> int:
    if not f.is_homogeneous():
        raise NotHomogeneous("polarization needs a homogeneous polynomial")
    M = max(f.degree, 0)
    if M > cap:
        raise PolarizationCapExceeded("polarization degree cap", M, cap)
    return M


def polarize(f: SparsePolynomial, cap: int = DEFAULT_POLARIZATION_CAP) -> Callable[..., Fraction]:
    """Return H_f, the symmetric multilinear form with H_f(x, ..., x) == f(x)."""
    M = _check(f, cap)
    norm = Fraction(1, 2**M * math.factorial(M))

    def H(*points: Sequence) -> Fraction:
        if len(points) != M:
            raise ValueError(f"the polar form of a degree-{M} polynomial takes {M} points")
        if M == 0:
            return f(()) if f.nvars == 0 else f([0] * f.nvars)
        total = Fraction(0)
        for eps in itertools.product((1, -1), repeat=M):
            x = [sum(e * Fraction(p[k]) for e, p in zip(eps, points)) for k in range(f.nvars)]
            total += math.prod(eps) * f(x)
        return total * norm

    return H


def _signed_sum(terms, points: list[list[int]], M: int) -> int:
    """sum over eps with eps_1 = +1 of prod(eps) * F(sum eps_k points_k), F integer-coefficient."""
    n = len(points[0])
    x = [sum(p[k] for p in points) for k in range(n)]
    sign = 1

    def F(x):
        acc = 0
        for exps, c in terms:
            v = c
            for xi, e in zip(x, exps):
                if e:
                    v *= xi**e
                    if not v:
                        break
            acc += v
        return acc

    total = F(x)
    # Gray code over eps_2..eps_M
    flipped = [False] * M
    for step in range(1, 2 ** (M - 1)):
        k = (step & -step).bit_length()  # flip eps_{k+1} (index k, k >= 1)
        p = points[k]
        if flipped[k]:
            x = [a + 2 * b for a, b in zip(x, p)]
        else:
            x = [a - 2 * b for a, b in zip(x, p)]
        flipped[k] = not flipped[k]
        sign = -sign
        total += sign * F(x)
    return total


def integrate_via_polarization(simplex: Simplex, f: SparsePolynomial, cap: int = DEFAULT_POLARIZATION_CAP) -> Fraction:
    if f.nvars != simplex.ambient_dimension:
        raise ValueError("polynomial and simplex live in different dimensions")
    d = simplex.dimension
    den = 1
    for v in simplex.vertices:
        for x in v:
            den = math.lcm(den, x.denominator)
    pts = [[int(x * den) for x in v] for v in simplex.vertices]
    total = Fraction(0)
    for M, part in f.homogeneous_components().items():
        _check(part, cap)
        if M == 0:
            total += part.coefficient((0,) * f.nvars) * simplex.volume
            continue
        cden = 1
        for c in part.terms.values():
            cden = math.lcm(cden, c.denominator)
        terms = [(e, int(c * cden)) for e, c in part.terms.items()]
        acc = 0
        for idx in itertools.combinations_with_replacement(range(d + 1), M):
            acc += _signed_sum(terms, [pts[i] for i in idx], M)
        # the eps_1 = +1 half counts once; the other half is identical by homogeneity
        acc *= 2
        polar_sum = Fraction(acc, cden * den**M * 2**M * math.factorial(M))
        total += simplex.volume * polar_sum / binomial(M + d, M)
    return total

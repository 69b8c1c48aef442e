"""Integration through decomposition into powers of linear forms.

Each monomial x^M is rewritten with the alternating-binomial identity

    x^M = 1/|M|! * sum_{0 <= p <= M} (-1)^{|M|-|p|} prod_i C(M_i, p_i) <p, x>^{|M|}

after which every summand is a single power integrated by Brion/residues.
Proportional forms are merged onto their primitive representative.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from fractions import Fraction
from typing import Sequence

from ..arith import binomial, moebius
from ..polynomial import LinearForm, SparsePolynomial
from ..simplex import Simplex
from .linear import PowerOfLinearForm, integrate_linear_power


def _decompose_grouped(exponents: Sequence[int]) -> dict[tuple[int, ...], Fraction]:
    n = len(exponents)
    total = sum(exponents)
    support = [k for k, e in enumerate(exponents) if e]
    inv = Fraction(1, math.factorial(total))
    grouped: dict[tuple[int, ...], Fraction] = defaultdict(Fraction)
    for ps in itertools.product(*(range(exponents[k] + 1) for k in support)):
        s = sum(ps)
        if s == 0:
            continue
        weight = 1
        for k, p in zip(support, ps):
            weight *= binomial(exponents[k], p)
        if (total - s) % 2:
            weight = -weight
        g = 0
        for p in ps:
            g = math.gcd(g, p)
        form = [0] * n
        for k, p in zip(support, ps):
            form[k] = p // g
        grouped[tuple(form)] += weight * inv * g**total
    return grouped


def decompose_monomial(exponents: Sequence[int]) -> list[PowerOfLinearForm]:
    """Powers of primitive linear forms summing exactly to x^exponents (|exponents| >= 1)."""
    total = sum(exponents)
    if total < 1:
        raise ValueError("decompose_monomial needs a monomial of positive degree")
    return [
        PowerOfLinearForm(LinearForm(form), total, c)
        for form, c in sorted(_decompose_grouped(exponents).items())
        if c
    ]


def count_primitive_forms(n: int, M: int) -> int:
    """Number of primitive p in N^n with 1 <= |p| <= M, by Moebius inversion."""
    if n < 1 or M < 1:
        raise ValueError("n and M must be positive")
    return sum(moebius(d) * (binomial(n + M // d, n) - 1) for d in range(1, M + 1))


def collect_powers(f: SparsePolynomial) -> tuple[Fraction, dict[tuple[tuple[int, ...], int], Fraction]]:
    """(constant term, {(primitive form, exponent): merged coefficient})."""
    constant = Fraction(0)
    merged: dict[tuple[tuple[int, ...], int], Fraction] = defaultdict(Fraction)
    for exps, c in f.terms.items():
        M = sum(exps)
        if M == 0:
            constant += c
            continue
        for form, w in _decompose_grouped(exps).items():
            merged[(form, M)] += c * w
    return constant, {k: v for k, v in merged.items() if v}


def integrate_via_waring(simplex: Simplex, f: SparsePolynomial) -> Fraction:
    if f.nvars != simplex.ambient_dimension:
        raise ValueError("polynomial and simplex live in different dimensions")
    constant, merged = collect_powers(f)
    total = constant * simplex.volume
    for (form, M), c in merged.items():
        total += c * integrate_linear_power(simplex, LinearForm(form), M)
    return total

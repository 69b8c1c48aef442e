"""Monomial integration by iterated Laurent expansion of Brion's exponential formula.

For a full-dimensional simplex in Q^d,

    integral x^m = d! vol m! / (|m|+d)! * sum_i [y^m] <y,s_i>^{|m|+d} / prod_{j!=i} <y, s_i - s_j>.

Each summand is a homogeneous rational function with poles; the poles cancel
in the sum.  Fix the order y_1 >> y_2 >> ... >> y_d.  A nonzero linear form
L = c_l y_l + sum_{j>l} c_j y_j then expands as

    1/L = (1/c_l) sum_r y_l^{-1-r} sum_{|a|=r} r!/a! prod_{j>l} (-c_j/c_l)^{a_j} y_j^{a_j},

so every variable after the leading one carries a nonnegative exponent and
the leading one is fixed by homogeneity.  Extracting [y^m] is therefore a
finite sum: sweep the variables from y_d down to y_1, at each one splitting
the available exponent budget between the numerator and the forms whose
leading variable comes earlier.  No truncation window is needed.

Lower-dimensional simplices are handled in lattice coordinates of their
affine hull, where the integral Lebesgue measure is the standard one.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from ..polynomial import SparsePolynomial
from ..simplex import Simplex, lattice_coordinates


def _brion_term_coefficient(point: Sequence[int], forms: Sequence[Sequence[int]],
                            target: Sequence[int]) -> Fraction:
    """[y^target] <y,point>^{|target|+len(forms)} / prod_k <y, forms[k]> as iterated Laurent series.

    Integer input.  The state is the vector r of total expansion orders, one
    per form; the multinomials r_k!/prod_j a_kj! and N!/prod_j b_j! are built
    up as products of binomials so every weight stays an integer, and the
    leading coefficients are divided out once at the end.
    """
    d = len(target)
    nforms = len(forms)
    lead = [next(j for j, x in enumerate(c) if x) for c in forms]
    comb = math.comb

    states: dict[tuple[int, ...], int] = {(0,) * nforms: 1}
    suffix_m = 0
    for j in range(d - 1, -1, -1):
        suffix_m += target[j]
        closing = [k for k in range(nforms) if lead[k] == j]
        free = [k for k in range(nforms) if lead[k] < j and forms[k][j]]
        # numerator exponent used in y_j..y_d: every form spent total degree -1 there
        # once closed, and r_k so far while open
        ndone = sum(1 for k in range(nforms) if lead[k] >= j)
        still_open = [k for k in range(nforms) if lead[k] < j]
        sj = point[j]

        partial: dict[tuple[tuple[int, ...], int], int] = {}
        for r, w in states.items():
            budget = target[j] + sum(1 + r[k] for k in closing)
            key = (r, budget)
            partial[key] = partial.get(key, 0) + w
        for k in free:
            q = -forms[k][j]
            nxt: dict[tuple[tuple[int, ...], int], int] = {}
            for (r, left), w in partial.items():
                rk = r[k]
                qa = 1
                for a in range(left + 1):
                    if a:
                        qa *= q
                        key = (r[:k] + (rk + a,) + r[k + 1:], left - a)
                    else:
                        key = (r, left)
                    nxt[key] = nxt.get(key, 0) + w * comb(rk + a, a) * qa
            partial = nxt

        new_states: dict[tuple[int, ...], int] = {}
        for (r, b), w in partial.items():
            if b and not sj:
                continue
            B = suffix_m + ndone - sum(r[k] for k in still_open)
            v = w * comb(B, b) * sj**b if b else w
            if v:
                new_states[r] = new_states.get(r, 0) + v
        states = new_states
        if not states:
            return Fraction(0)

    lead_coef = [forms[k][lead[k]] for k in range(nforms)]
    top = [max(r[k] for r in states) for k in range(nforms)]
    acc = 0
    for r, w in states.items():
        for k in range(nforms):
            w *= lead_coef[k] ** (top[k] - r[k])
        acc += w
    return Fraction(acc, math.prod(c ** (t + 1) for c, t in zip(lead_coef, top)))


def _integral_vertices(vertices: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    den = 1
    for v in vertices:
        for x in v:
            den = math.lcm(den, Fraction(x).denominator)
    return [[int(x * den) for x in v] for v in vertices], den


def _monomial_full_dimensional(vertices: Sequence[Sequence[Fraction]], vol: Fraction, m: Sequence[int]) -> Fraction:
    d = len(m)
    # the vertex sum is homogeneous of degree |m| in the vertices
    vertices, den = _integral_vertices(vertices)
    acc = Fraction(0)
    for i, si in enumerate(vertices):
        forms = [[a - b for a, b in zip(si, sj)] for j, sj in enumerate(vertices) if j != i]
        acc += _brion_term_coefficient(si, forms, m)
    total = sum(m)
    scale = Fraction(math.factorial(d) * math.prod(math.factorial(e) for e in m), math.factorial(total + d))
    return acc * scale * vol / den ** total


def integrate_via_laurent(simplex: Simplex, f: SparsePolynomial) -> Fraction:
    if f.nvars != simplex.ambient_dimension:
        raise ValueError("polynomial and simplex live in different dimensions")
    if f.is_zero():
        return Fraction(0)
    if simplex.dimension == 0:
        return f(simplex.vertices[0])
    if simplex.is_full_dimensional:
        vertices, g = simplex.vertices, f
    else:
        origin, basis, vertices = lattice_coordinates(simplex)
        d = simplex.dimension
        images = []
        for k in range(simplex.ambient_dimension):
            terms = {(0,) * d: origin[k]}
            for j in range(d):
                if basis[j][k]:
                    e = [0] * d
                    e[j] = 1
                    terms[tuple(e)] = basis[j][k]
            images.append(SparsePolynomial(d, terms))
        g = f.substitute(images)
    total = Fraction(0)
    for exps, c in g.terms.items():
        total += c * _monomial_full_dimensional(vertices, simplex.volume, exps)
    return total

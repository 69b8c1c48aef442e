"""Integrals of powers of one linear form: the big-sum oracle, Brion, residues."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..arith import binomial, compositions
from ..errors import EnumerationLimitExceeded, SimplexIntError
from ..polynomial import LinearForm, SparsePolynomial, effective_variables
from ..series import TruncatedSeries, coefficient, series_mul, series_reciprocal
from ..simplex import Simplex, pole_structure, vertex_values

DEFAULT_ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class PowerOfLinearForm:
    """coefficient * form**exponent."""

    form: LinearForm
    exponent: int
    coefficient: Fraction = Fraction(1)

    def expand(self) -> SparsePolynomial:
        return SparsePolynomial.linear_power(self.form, self.exponent) * self.coefficient


def _prefactor(simplex: Simplex, M: int) -> Fraction:
    # d! vol M! / (M+d)!
    d = simplex.dimension
    return simplex.volume * Fraction(math.factorial(d) * math.factorial(M), math.factorial(M + d))


def integrate_linear_power_bigsum(simplex: Simplex, form: LinearForm, M: int,
                                  limit: int = DEFAULT_ENUMERATION_LIMIT) -> Fraction:
    """Reference value by summing prod <l,s_j>^{k_j} over every |k| = M.

    Exponential in M and d; a test oracle only.
    """
    d = simplex.dimension
    count = binomial(M + d, d)
    if count > limit:
        raise EnumerationLimitExceeded("big-sum enumeration limit", count, limit)
    vals = vertex_values(simplex, form)
    powers = [[v**k for k in range(M + 1)] for v in vals]
    total = Fraction(0)
    for k in compositions(M, d + 1):
        term = Fraction(1)
        for j, kj in enumerate(k):
            if kj:
                term *= powers[j][kj]
                if not term:
                    break
        total += term
    return _prefactor(simplex, M) * total


def _residue_sum(vals: list[Fraction], M: int, d: int) -> Fraction:
    """sum over poles of Res_{eps=0} (eps+a_k)^{M+d} / (eps^{m_k} prod_{i!=k} (eps + a_k - a_i)^{m_i})."""
    poles = pole_structure(vals)
    N = M + d
    total = Fraction(0)
    for _, ak, mk in poles:
        cap = mk - 1
        numer = TruncatedSeries(1, cap, {(j,): binomial(N, j) * ak ** (N - j) for j in range(min(cap, N) + 1)})
        denom = TruncatedSeries.one(1, cap)
        for _, ai, mi in poles:
            if ai == ak:
                continue
            lin = TruncatedSeries.affine(ak - ai, [1], cap)
            for _ in range(mi):
                denom = series_mul(denom, lin)
        total += coefficient(series_mul(numer, series_reciprocal(denom)), (cap,))
    return total


def _brion_sum(vals: list[Fraction], M: int, d: int) -> Fraction:
    N = M + d
    total = Fraction(0)
    for i, vi in enumerate(vals):
        den = Fraction(1)
        for j, vj in enumerate(vals):
            if j != i:
                den *= vi - vj
        total += vi**N / den
    return total


def is_regular(simplex: Simplex, form: LinearForm) -> bool:
    vals = vertex_values(simplex, form)
    return len(set(vals)) == len(vals)


def integrate_linear_power(simplex: Simplex, form: LinearForm, M: int, *, method: str = "auto") -> Fraction:
    """Exact integral of <l,x>^M over the simplex.

    ``method`` is ``"auto"`` (Brion's short formula when l takes distinct
    values at the vertices, residues otherwise), ``"brion-regular"`` (refuses
    a non-regular l) or ``"residue"`` (residue formula even when regular).
    """
    if M < 0:
        raise ValueError("exponent must be non-negative")
    d = simplex.dimension
    vals = vertex_values(simplex, form)
    regular = len(set(vals)) == len(vals)
    if method == "brion-regular" and not regular:
        raise SimplexIntError("brion-regular needs a linear form with distinct vertex values")
    if method not in ("auto", "brion-regular", "residue"):
        raise ValueError(f"unknown linear-power method {method!r}")
    if regular and method != "residue":
        s = _brion_sum(vals, M, d)
    else:
        s = _residue_sum(vals, M, d)
    return _prefactor(simplex, M) * s


def monomial_bigsum_count(exponents, d: int) -> int:
    """Upper bound on the work of the factored big-sum for x^m on a d-simplex.

    Column j pairs at most C(P + d, d) partial row-sum states (P the degree
    handled so far) with C(m_j + d, d) compositions of m_j.
    """
    work, done = 0, 0
    for m in exponents:
        if m:
            work += binomial(done + d, d) * binomial(m + d, d)
            done += m
    return max(work, 1)


def integrate_polynomial_bigsum(simplex: Simplex, f: SparsePolynomial,
                                limit: int = DEFAULT_ENUMERATION_LIMIT) -> Fraction:
    """Reference value for a polynomial from the big-sum over vertex exponent matrices.

    For x^m the coefficient of t^m in prod_i 1/(1 - sum_j t_j s_{i,j}) is the
    sum, over nonnegative (d+1) x D matrices A with column sums m, of
    prod_i multinomial(A_i) * prod_j s_{i,j}^{A_ij}.  Since
    prod_i multinomial(A_i) = prod_i a_i! / prod_ij A_ij! with a the row sums,
    the sum is accumulated column by column keyed on the partial row sums.
    """
    d = simplex.dimension
    total = Fraction(0)
    for exps, c in f.terms.items():
        eff = effective_variables(exps)
        ms = [exps[k - 1] for k in eff]
        count = monomial_bigsum_count(ms, d)
        if count > limit:
            raise EnumerationLimitExceeded("big-sum enumeration limit", count, limit)
        if not eff:
            total += c * simplex.volume
            continue
        vals = [[v[k - 1] for k in eff] for v in simplex.vertices]
        states: dict[tuple[int, ...], Fraction] = {(0,) * (d + 1): Fraction(1)}
        for j, m in enumerate(ms):
            column = []
            for col in compositions(m, d + 1):
                w = Fraction(1)
                for i, a in enumerate(col):
                    if a:
                        w *= vals[i][j] ** a / math.factorial(a)
                if w:
                    column.append((col, w))
            nxt: dict[tuple[int, ...], Fraction] = {}
            for rows, w in states.items():
                for col, cw in column:
                    key = tuple(r + a for r, a in zip(rows, col))
                    nxt[key] = nxt.get(key, 0) + w * cw
            states = nxt
        coef = sum((w * math.prod(math.factorial(a) for a in rows) for rows, w in states.items()), Fraction(0))
        M = sum(ms)
        scale = math.prod(math.factorial(m) for m in ms)
        total += c * coef * scale * simplex.volume * Fraction(math.factorial(d), math.factorial(M + d))
    return total

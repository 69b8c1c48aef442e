"""Truncated multivariate power series over Q in a small number of variables.

A series keeps only terms of total degree <= ``cap``.  An optional ``box``
additionally drops terms whose exponent in variable j exceeds ``box[j]``;
both truncations are down-closed, so products and reciprocals stay exact on
the retained terms.  Coefficient extraction at t^M only needs the box M.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import to_rational
from .errors import ZeroConstantTerm

Exponents = tuple[int, ...]


class TruncatedSeries:
    __slots__ = ("nvars", "cap", "box", "terms")

    def __init__(self, nvars: int, cap: int, terms: Mapping | Iterable = (), box: Sequence[int] | None = None):
        if cap < 0:
            raise ValueError("cap must be non-negative")
        self.nvars = nvars
        self.cap = cap
        self.box = tuple(box) if box is not None else None
        if self.box is not None and len(self.box) != nvars:
            raise ValueError("box length must equal the variable count")
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Exponents, Fraction] = {}
        for e, c in items:
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError(f"exponent vector {e} has the wrong length")
            if not self._keeps(e):
                continue
            v = store.get(e, 0) + to_rational(c)
            if v:
                store[e] = v
            else:
                store.pop(e, None)
        self.terms = store

    def _keeps(self, e: Exponents) -> bool:
        if sum(e) > self.cap:
            return False
        return self.box is None or all(a <= b for a, b in zip(e, self.box))

    @classmethod
    def _raw(cls, nvars, cap, box, terms):
        obj = cls.__new__(cls)
        obj.nvars, obj.cap, obj.box, obj.terms = nvars, cap, box, terms
        return obj

    @classmethod
    def one(cls, nvars: int, cap: int, box=None) -> "TruncatedSeries":
        return cls(nvars, cap, {(0,) * nvars: 1}, box)

    @classmethod
    def affine(cls, constant, linear: Sequence, cap: int, box=None) -> "TruncatedSeries":
        """constant + sum_j linear[j] * t_j."""
        D = len(linear)
        terms = {(0,) * D: constant}
        for j, c in enumerate(linear):
            e = [0] * D
            e[j] = 1
            terms[tuple(e)] = c
        return cls(D, cap, terms, box)

    def truncate(self, cap: int) -> "TruncatedSeries":
        cap = min(cap, self.cap)
        return TruncatedSeries._raw(
            self.nvars, cap, self.box, {e: c for e, c in self.terms.items() if sum(e) <= cap}
        )

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.nvars == other.nvars and self.cap == other.cap and self.terms == other.terms

    def __repr__(self):
        return f"TruncatedSeries(nvars={self.nvars}, cap={self.cap}, terms={self.terms})"

    def __mul__(self, other):
        return series_mul(self, other)


def _common_box(a: TruncatedSeries, b: TruncatedSeries):
    if a.box is None:
        return b.box
    if b.box is None:
        return a.box
    return tuple(min(x, y) for x, y in zip(a.box, b.box))


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product with every term above the shared cap discarded."""
    if a.nvars != b.nvars:
        raise ValueError(f"variable count mismatch: {a.nvars} vs {b.nvars}")
    if a.cap != b.cap:
        raise ValueError(f"cap mismatch: {a.cap} vs {b.cap}")
    cap = a.cap
    box = _common_box(a, b)
    out: dict[Exponents, Fraction] = {}
    bterms = sorted(b.terms.items(), key=lambda kv: sum(kv[0]))
    for e1, c1 in a.terms.items():
        room = cap - sum(e1)
        for e2, c2 in bterms:
            if sum(e2) > room:
                break
            e = tuple(x + y for x, y in zip(e1, e2))
            if box is not None and any(x > y for x, y in zip(e, box)):
                continue
            out[e] = out.get(e, 0) + c1 * c2
    return TruncatedSeries._raw(a.nvars, cap, box, {e: c for e, c in out.items() if c})


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """1/a up to the cap, by the graded recursion b_k = -(1/a_0) sum_{0<j<=k} a_j b_{k-j}."""
    zero = (0,) * a.nvars
    a0 = a.terms.get(zero, 0)
    if not a0:
        raise ZeroConstantTerm("series has a zero constant term")
    inv0 = 1 / Fraction(a0)
    rest = [(e, c) for e, c in a.terms.items() if e != zero]
    box = a.box
    b: dict[Exponents, Fraction] = {zero: inv0}
    by_degree: list[list[Exponents]] = [[zero]]
    for k in range(1, a.cap + 1):
        acc: dict[Exponents, Fraction] = {}
        for ea, ca in rest:
            da = sum(ea)
            if da > k:
                continue
            for eb in by_degree[k - da]:
                e = tuple(x + y for x, y in zip(ea, eb))
                if box is not None and any(x > y for x, y in zip(e, box)):
                    continue
                acc[e] = acc.get(e, 0) + ca * b[eb]
        level = []
        for e, s in acc.items():
            if s:
                b[e] = -inv0 * s
                level.append(e)
        by_degree.append(level)
    return TruncatedSeries._raw(a.nvars, a.cap, box, b)


def product_truncated(factors: Sequence[TruncatedSeries], cap: int, nvars: int | None = None, box=None) -> TruncatedSeries:
    """Left fold of series_mul, truncating after every step."""
    if not factors:
        if nvars is None:
            raise ValueError("nvars is required for an empty product")
        return TruncatedSeries.one(nvars, cap, box)
    D = factors[0].nvars
    acc = TruncatedSeries.one(D, cap, box)
    for f in factors:
        if f.cap != cap or f.box != acc.box:
            f = TruncatedSeries(f.nvars, cap, f.terms, acc.box if acc.box is not None else f.box)
        acc = series_mul(acc, f)
    return acc


def coefficient(a: TruncatedSeries, exponents: Sequence[int]) -> Fraction:
    e = tuple(exponents)
    if sum(e) > a.cap:
        raise ValueError(f"exponent {e} lies above the truncation cap {a.cap}")
    if a.box is not None and any(x > y for x, y in zip(e, a.box)):
        raise ValueError(f"exponent {e} lies outside the truncation box {a.box}")
    return Fraction(a.terms.get(e, 0))

"""Rational simplices and their volume under the integral Lebesgue measure.

The integral Lebesgue measure on a rational affine subspace gives the
fundamental domain of the intersected lattice volume 1.  For a full
dimensional simplex this is the usual volume; for a lower dimensional one the
difference vectors are rewritten in a lattice basis of lin(simplex) & Z^n
(found through the Hermite normal form) and the determinant is taken there.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .arith import format_rational, to_rational
from .errors import DegenerateSimplex, InputError
from .linalg import integer_kernel, rank, rational_determinant, solve_in_basis
from .polynomial import LinearForm, evaluate_linear_form

Point = tuple[Fraction, ...]


def lattice_basis(directions: Sequence[Sequence[Fraction]], n: int) -> list[list[int]]:
    """Integer basis (as columns) of span(directions) & Z^n."""
    if not directions:
        return []
    den = 1
    for v in directions:
        for x in v:
            den = math.lcm(den, x.denominator)
    w = [[int(x * den) for x in v] for v in directions]  # rows = scaled directions
    normals = integer_kernel(w, n)
    return integer_kernel(normals, n) if normals else [[int(i == j) for j in range(n)] for i in range(n)]


class Simplex:
    """conv(s_1, ..., s_{d+1}) in Q^n with affinely independent vertices."""

    __slots__ = ("vertices", "ambient_dimension", "dimension", "volume")

    def __init__(self, vertices: Sequence[Sequence]):
        pts = tuple(tuple(to_rational(x) for x in v) for v in vertices)
        if not pts:
            raise InputError("a simplex needs at least one vertex")
        n = len(pts[0])
        if n < 1:
            raise InputError("ambient dimension must be positive")
        if any(len(p) != n for p in pts):
            raise InputError("vertices have inconsistent dimensions")
        d = len(pts) - 1
        if d > n:
            raise DegenerateSimplex(f"{d + 1} vertices cannot be affinely independent in Q^{n}")
        self.vertices: tuple[Point, ...] = pts
        self.ambient_dimension = n
        self.dimension = d
        self.volume: Fraction = _volume(pts, n, d)

    @property
    def is_full_dimensional(self) -> bool:
        return self.dimension == self.ambient_dimension

    def difference_vectors(self) -> list[list[Fraction]]:
        base = self.vertices[-1]
        return [[a - b for a, b in zip(v, base)] for v in self.vertices[:-1]]

    def vertex_values(self, form: LinearForm) -> list[Fraction]:
        return vertex_values(self, form)

    def to_json(self) -> list:
        return [[format_rational(x) for x in v] for v in self.vertices]

    def __repr__(self):
        return f"Simplex({self.to_json()})"

    def __eq__(self, other):
        return isinstance(other, Simplex) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)


def _volume(pts, n: int, d: int) -> Fraction:
    if d == 0:
        return Fraction(1)
    base = pts[-1]
    diffs = [[a - b for a, b in zip(v, base)] for v in pts[:-1]]
    if d == n:
        det = rational_determinant(diffs)
        if det == 0:
            raise DegenerateSimplex("difference vectors are linearly dependent")
        return abs(det) / math.factorial(n)
    if rank(diffs) < d:
        raise DegenerateSimplex("difference vectors are linearly dependent")
    basis = lattice_basis(diffs, n)
    coords = [solve_in_basis(basis, v) for v in diffs]
    return abs(rational_determinant(coords)) / math.factorial(d)


def volume(simplex: Simplex) -> Fraction:
    return simplex.volume


def lattice_coordinates(simplex: Simplex) -> tuple[Point, list[list[int]], list[list[Fraction]]]:
    """(origin, basis columns, vertex coordinates) with x = origin + sum_j u_j * basis[j].

    The origin is the last vertex, so its coordinates are all zero.  Under
    this chart the integral Lebesgue measure becomes the standard one on Q^d.
    """
    origin = simplex.vertices[-1]
    diffs = simplex.difference_vectors()
    basis = lattice_basis(diffs, simplex.ambient_dimension)
    coords = [solve_in_basis(basis, v) for v in diffs] + [[Fraction(0)] * simplex.dimension]
    return origin, basis, coords


def canonical_simplex(n: int) -> Simplex:
    """conv(e_1, ..., e_n) in Q^n, the set {x >= 0, sum x = 1}."""
    if n < 1:
        raise ValueError("n must be positive")
    return Simplex([[int(i == j) for j in range(n)] for i in range(n)])


def vertex_values(simplex: Simplex, form: LinearForm) -> list[Fraction]:
    if form.dimension != simplex.ambient_dimension:
        raise ValueError(
            f"dimension mismatch: form has {form.dimension} entries, simplex lives in Q^{simplex.ambient_dimension}"
        )
    return [evaluate_linear_form(form, v) for v in simplex.vertices]


def pole_structure(values: Sequence[Fraction]) -> list[tuple[int, Fraction, int]]:
    """Group equal vertex values: [(representative index, value, multiplicity)].

    Representatives are the first index carrying each value, in order.
    """
    seen: dict[Fraction, int] = {}
    order: list[tuple[int, Fraction]] = []
    for i, v in enumerate(values):
        if v in seen:
            seen[v] += 1
        else:
            seen[v] = 1
            order.append((i, v))
    return [(i, v, seen[v]) for i, v in order]

import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

import oracles
from conftest import integer_simplices
from oracles import apply, random_unimodular
from simplexint.errors import DegenerateSimplex, InputError
from simplexint.linalg import bareiss_determinant, hermite_normal_form, integer_kernel, rank
from simplexint.polynomial import LinearForm
from simplexint.simplex import Simplex, canonical_simplex, lattice_coordinates, pole_structure, vertex_values

TRIANGLE = [[0, 0], [1, 0], [0, 1]]


def test_volume_examples():
    assert Simplex([[0, 0], [1, 1]]).volume == 1
    assert Simplex(TRIANGLE).volume == Fraction(1, 2)
    assert canonical_simplex(3).volume == Fraction(1, 2)


def test_canonical_simplex():
    assert canonical_simplex(2).vertices == ((1, 0), (0, 1))
    point = canonical_simplex(1)
    assert point.dimension == 0 and point.volume == 1


def test_rational_vertices():
    s = Simplex([["0", "0"], ["1/2", "0"], ["0", "1/3"]])
    assert s.volume == Fraction(1, 12)
    seg = Simplex([["1/2", "1/2"], ["3/2", "5/2"]])
    assert seg.volume == 1


def test_degenerate_and_malformed():
    with pytest.raises(DegenerateSimplex):
        Simplex([[0, 0], [1, 1], [2, 2]])
    with pytest.raises(DegenerateSimplex):
        Simplex([[0], [1], [2]])
    with pytest.raises(DegenerateSimplex):
        Simplex([[1, 1], [1, 1]])
    with pytest.raises(InputError):
        Simplex([[0, 0], [1]])
    with pytest.raises(InputError):
        Simplex([])


def test_vertex_values_and_poles():
    s = Simplex(TRIANGLE)
    assert vertex_values(s, LinearForm([1, 0])) == [0, 1, 0]
    assert vertex_values(s, LinearForm([1, 2])) == [0, 1, 2]
    assert vertex_values(s, LinearForm([0, 0])) == [0, 0, 0]
    with pytest.raises(ValueError):
        vertex_values(s, LinearForm([1]))
    assert pole_structure([0, 1, 0]) == [(0, 0, 2), (1, 1, 1)]
    assert [m for _, _, m in pole_structure([0, 1, 2])] == [1, 1, 1]
    c = Fraction(7, 3)
    assert pole_structure([c, c, c]) == [(0, c, 3)]


@given(integer_simplices(max_n=5))
def test_volume_matches_minor_gcd_oracle(pts):
    assert Simplex(pts).volume == oracles.volume(pts)


@given(integer_simplices(max_n=4), st.randoms(use_true_random=False))
def test_volume_invariant_under_permutation_and_translation(pts, rnd):
    base = Simplex(pts).volume
    perm = pts[:]
    rnd.shuffle(perm)
    shift = [Fraction(rnd.randint(-20, 20), rnd.randint(1, 5)) for _ in pts[0]]
    moved = [[x + t for x, t in zip(p, shift)] for p in perm]
    assert Simplex(perm).volume == base
    assert Simplex(moved).volume == base


@given(integer_simplices(max_n=4), st.randoms(use_true_random=False))
def test_volume_invariant_under_unimodular_maps(pts, rnd):
    n = len(pts[0])
    u = random_unimodular(n, rnd)
    assert abs(bareiss_determinant(u)) == 1
    assert Simplex([apply(u, p) for p in pts]).volume == Simplex(pts).volume


@given(integer_simplices(max_n=3, full=True), st.integers(1, 3))
def test_embedding_preserves_volume(pts, extra):
    padded = [p + [0] * extra for p in pts]
    assert Simplex(padded).volume == Simplex(pts).volume


@given(st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=1, max_size=4))
def test_hnf_shape_and_unimodularity(a):
    h, u = hermite_normal_form(a)
    m = len(a)
    assert h == [[sum(u[i][k] * a[k][j] for k in range(m)) for j in range(4)] for i in range(m)]
    assert abs(bareiss_determinant(u)) == 1
    last = -1
    for row in h:
        if not any(row):
            continue
        c = next(j for j, x in enumerate(row) if x)
        assert c > last and row[c] > 0
        last = c
    assert sum(1 for row in h if any(row)) == rank(a)


@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), min_size=1, max_size=3))
def test_integer_kernel(a):
    ker = integer_kernel(a, 4)
    assert len(ker) == 4 - rank(a)
    for v in ker:
        assert all(sum(x * y for x, y in zip(row, v)) == 0 for row in a)


@given(integer_simplices(max_n=4, full=False))
def test_lattice_coordinates_reconstruct_vertices(pts):
    s = Simplex(pts)
    assume(s.dimension >= 1)
    origin, basis, coords = lattice_coordinates(s)
    for v, c in zip(s.vertices, coords):
        assert [o + sum(cj * b[k] for cj, b in zip(c, basis)) for k, o in enumerate(origin)] == list(v)
    # the chart's determinant reproduces the volume
    det = abs(oracles.det([c for c in coords[:-1]]))
    fact = 1
    for k in range(2, s.dimension + 1):
        fact *= k
    assert det / fact == s.volume


def test_bareiss_matches_oracle():
    rnd = random.Random(4)
    for n in range(1, 6):
        m = [[rnd.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        assert bareiss_determinant(m) == oracles.det(m)


def test_pole_multiplicities_sum():
    for vals in itertools.product(range(3), repeat=4):
        assert sum(m for _, _, m in pole_structure(list(vals))) == 4

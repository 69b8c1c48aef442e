"""Seeded random test instances.

The bit source is PCG64 (numpy's implementation, 128-bit state, 64-bit
output) seeded with the user's integer seed.  Bounded integers are taken
from raw 64-bit outputs by rejection: with span s, draws at or above
2^64 - (2^64 mod s) are discarded and the rest reduced mod s.  Everything
downstream only calls ``randint``, so a reimplementation needs just those
two pieces to reproduce instances bit for bit.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .arith import binomial
from .errors import DegenerateSimplex, InputError
from .polynomial import SparsePolynomial
from .simplex import Simplex

DEFAULT_BOX = (-10, 10)
COEFFICIENT_RANGE = (1, 100)
_TWO64 = 1 << 64


class Rng:
    """PCG64 stream.  Extra ``key`` integers select an independent substream
    (numpy SeedSequence entropy [seed, *key])."""

    def __init__(self, seed: int, *key: int):
        if seed < 0 or any(k < 0 for k in key):
            raise InputError("seed must be nonnegative")
        entropy = [seed, *key] if key else seed
        self._bits = np.random.PCG64(np.random.SeedSequence(entropy))

    def next64(self) -> int:
        return int(self._bits.random_raw())

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi]."""
        span = hi - lo + 1
        if span <= 0:
            raise ValueError("empty range")
        bound = _TWO64 - _TWO64 % span
        while True:
            x = self.next64()
            if x < bound:
                return lo + x % span


def random_exponents(rng: Rng, n: int, M: int) -> tuple[int, ...]:
    """Uniform over {m in N^n : |m| = M}, by drawing n-1 bar positions among M+n-1 slots."""
    if n == 1:
        return (M,)
    slots = list(range(M + n - 1))
    # partial Fisher-Yates: the first n-1 entries become a uniform (n-1)-subset
    for i in range(n - 1):
        j = rng.randint(i, len(slots) - 1)
        slots[i], slots[j] = slots[j], slots[i]
    bars = sorted(slots[: n - 1])
    out, prev = [], -1
    for b in bars:
        out.append(b - prev - 1)
        prev = b
    out.append(M + n - 2 - prev)
    return tuple(out)


def random_vertices(rng: Rng, n: int, d: int | None = None, box=DEFAULT_BOX) -> Simplex:
    """d+1 integer points in the box, redrawn until affinely independent."""
    d = n if d is None else d
    if not 0 <= d <= n:
        raise InputError("need 0 <= d <= n")
    lo, hi = box
    while True:
        pts = [[rng.randint(lo, hi) for _ in range(n)] for _ in range(d + 1)]
        try:
            return Simplex(pts)
        except DegenerateSimplex:
            continue


def random_polynomial(rng: Rng, n: int, M: int, generator: str = "monomial",
                      effective: int | None = None) -> SparsePolynomial:
    """Homogeneous polynomial of degree M with coefficients drawn from 1..100.

    generator is "monomial" (one term), "dense-homogeneous" (C(M+n-1, n-1)
    draws; repeated exponents add up, so the term count can be smaller) or
    "few-effective" (one term supported on the first ``effective`` coordinates).
    """
    lo, hi = COEFFICIENT_RANGE
    if generator == "monomial":
        return SparsePolynomial.monomial(random_exponents(rng, n, M), rng.randint(lo, hi))
    if generator == "dense-homogeneous":
        terms: dict[tuple[int, ...], int] = {}
        for _ in range(binomial(M + n - 1, n - 1)):
            e = random_exponents(rng, n, M)
            terms[e] = terms.get(e, 0) + rng.randint(lo, hi)
        return SparsePolynomial(n, terms)
    if generator == "few-effective":
        D = effective if effective is not None else 2
        if not 1 <= D <= n:
            raise InputError("few-effective needs 1 <= D <= n")
        e = random_exponents(rng, D, M) + (0,) * (n - D)
        return SparsePolynomial.monomial(e, rng.randint(lo, hi))
    raise InputError(f"unknown generator {generator!r}")


def parse_generator(spec: str) -> tuple[str, int | None]:
    """'monomial', 'dense-homogeneous' or 'few-effective(D)'."""
    spec = spec.strip()
    if spec.startswith("few-effective"):
        rest = spec[len("few-effective"):]
        if not rest:
            return "few-effective", 2
        if rest.startswith("(") and rest.endswith(")") and rest[1:-1].strip().isdigit():
            return "few-effective", int(rest[1:-1])
        raise InputError(f"bad generator {spec!r}")
    if spec in ("monomial", "dense-homogeneous"):
        return spec, None
    raise InputError(f"unknown generator {spec!r}")


@dataclass
class IntegrationRequest:
    vertices: list
    polynomial: SparsePolynomial | None = None
    expression: str | None = None
    linear_power: dict | None = None
    method: str = "auto"
    meta: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"vertices": [[str(Fraction(x)) for x in v] for v in self.vertices], "method": self.method}
        if self.polynomial is not None:
            out["sparse"] = self.polynomial.to_json()
        if self.expression is not None:
            out["expr"] = self.expression
        if self.linear_power is not None:
            out["linear_power"] = self.linear_power
        if self.meta:
            out["meta"] = self.meta
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def random_instance(seed: int, n: int, M: int, generator: str = "monomial", d: int | None = None,
                    box=DEFAULT_BOX, method: str = "auto") -> IntegrationRequest:
    kind, D = parse_generator(generator)
    rng = Rng(seed)
    simplex = random_vertices(rng, n, d, box)
    f = random_polynomial(rng, n, M, kind, D)
    meta = {"seed": seed, "n": n, "M": M, "generator": generator, "d": simplex.dimension}
    return IntegrationRequest([list(map(int, v)) for v in simplex.vertices], polynomial=f, method=method, meta=meta)

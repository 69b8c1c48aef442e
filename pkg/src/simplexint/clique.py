"""Clique numbers from integrals of powers of the Motzkin-Straus form.

For a graph G on n vertices Q_G = (1/2) sum x_i x_j, one term per edge.  The
edge sum 2 Q_G attains (1/2)(1 - 1/omega(G)) as its maximum over the
canonical simplex, and its p-norms under the probability measure (simplex of
volume 1) converge to that maximum.  So omega is the limit of
ceil(1 / (1 - 2 ||2 Q_G||_p)), which in exact terms is the least K with
integral(Q_G^p) <= ((K-1)/(4K))^p.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .errors import ExpansionLimitExceeded, InputError
from .polynomial import SparsePolynomial

DEFAULT_EXPANSION_LIMIT = 10**6
# e - 1 < 43/25
E_MINUS_ONE_UPPER = Fraction(43, 25)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError("a graph needs at least one vertex")
        norm = set()
        for e in self.edges:
            i, j = e
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge {tuple(e)} has an endpoint outside 1..{self.n}")
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        edges = [tuple(e) for e in edges]
        seen = set()
        for i, j in edges:
            key = (min(i, j), max(i, j))
            if key in seen:
                raise InputError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(edges))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))

    @classmethod
    def from_json(cls, data) -> "Graph":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls.from_edges(int(data["n"]), data.get("edges", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad graph description: {exc}") from exc

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def motzkin_straus_form(g: Graph) -> SparsePolynomial:
    terms = {}
    for i, j in g.edges:
        e = [0] * g.n
        e[i - 1] = e[j - 1] = 1
        terms[tuple(e)] = Fraction(1, 2)
    return SparsePolynomial(g.n, terms)


def expansion_term_count(g: Graph, p: int) -> int:
    """Number of edge-exponent compositions in the multinomial expansion of Q_G^p."""
    m = len(g.edges)
    if m == 0:
        return 0
    return math.comb(p + m - 1, m - 1)


def _check_limit(g: Graph, p: int, limit: int) -> None:
    count = expansion_term_count(g, p)
    if count > limit:
        raise ExpansionLimitExceeded("multinomial term count", count, limit)


def _normalized_integral(q_power: SparsePolynomial) -> Fraction:
    """Integral over the canonical simplex rescaled to volume 1."""
    n = q_power.nvars
    acc = Fraction(0)
    for exps, c in q_power.terms.items():
        acc += c * Fraction(math.prod(math.factorial(e) for e in exps), math.factorial(sum(exps) + n - 1))
    return acc * math.factorial(n - 1)


def integrate_form_power(g: Graph, p: int, limit: int = DEFAULT_EXPANSION_LIMIT) -> Fraction:
    if p < 1:
        raise InputError("p must be a positive integer")
    _check_limit(g, p, limit)
    if not g.edges:
        return Fraction(0)
    return _normalized_integral(motzkin_straus_form(g) ** p)


def _estimate_from_integral(r: Fraction, p: int) -> int:
    # r is the integral of Q_G^p; the edge sum 2 Q_G has integral 2^p r
    K = 1
    while r > Fraction(K - 1, 4 * K) ** p:
        K += 1
    return K


def clique_estimate(g: Graph, p: int, limit: int = DEFAULT_EXPANSION_LIMIT) -> int:
    """Smallest K with integral((2 Q_G)^p) <= ((K-1)/(2K))^p."""
    return _estimate_from_integral(integrate_form_power(g, p, limit), p)


def _ln_upper(x: Fraction, terms: int = 40) -> Fraction:
    """Certified upper bound on ln x for x >= 1."""

    def artanh_bound(y: Fraction) -> Fraction:
        # ln y = 2 sum z^(2i+1)/(2i+1), z = (y-1)/(y+1); tail <= 2 z^(2N+1) / ((2N+1)(1-z^2))
        z = (y - 1) / (y + 1)
        z2 = z * z
        s = Fraction(0)
        zp = z
        for i in range(terms):
            s += zp / (2 * i + 1)
            zp *= z2
        return 2 * s + 2 * zp / ((2 * terms + 1) * (1 - z2))

    if x < 1:
        raise ValueError("x must be at least 1")
    k = 0
    while x >= 2:
        x /= 2
        k += 1
    return k * artanh_bound(Fraction(2)) + artanh_bound(x)


def recommended_p(n: int) -> int:
    """Integer p above which the ceiling formula is guaranteed to give omega(G)."""
    if n < 1:
        raise InputError("n must be positive")
    bound = 4 * E_MINUS_ONE_UPPER * n**3 * _ln_upper(Fraction(32 * n * n))
    return math.ceil(bound)


def brute_force_clique(g: Graph) -> int:
    if g.n > 20:
        raise InputError("exhaustive clique search is limited to 20 vertices")
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    best = 1

    def grow(size: int, candidates: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while candidates:
            if size + bin(candidates).count("1") <= best:
                return
            v = candidates.bit_length() - 1
            candidates &= ~(1 << v)
            grow(size + 1, candidates & adj[v])

    grow(0, (1 << g.n) - 1)
    return best


@dataclass
class SweepResult:
    estimate: int
    p_used: int
    brute_force: int
    match: bool
    history: list = field(default_factory=list)  # (p, estimate) pairs
    stopped_by_limit: bool = False

    def to_json(self) -> dict:
        return {"estimate": self.estimate, "p_used": self.p_used,
                "brute_force": self.brute_force, "match": self.match}


def sweep(g: Graph, max_p: int = 1000, limit: int = DEFAULT_EXPANSION_LIMIT, confirm: int = 3) -> SweepResult:
    """Raise p one step at a time until the estimate reaches omega(G).

    Q_G^p is built incrementally.  After the first match ``confirm`` further
    values of p are checked (as far as the limit allows) so the history also
    shows the estimate staying put.  ``p_used`` is the smallest matching p.
    """
    omega = brute_force_clique(g)
    history: list[tuple[int, int]] = []
    q = motzkin_straus_form(g)
    power = SparsePolynomial.constant(g.n, 1)
    first_match = None
    p = 0
    while p < max_p:
        p += 1
        if expansion_term_count(g, p) > limit:
            p -= 1
            break
        power = power * q
        r = _normalized_integral(power) if g.edges else Fraction(0)
        est = _estimate_from_integral(r, p)
        history.append((p, est))
        if est == omega and first_match is None:
            first_match = p
        if first_match is not None and p - first_match >= confirm:
            break
    if not history:
        raise ExpansionLimitExceeded("multinomial term count", expansion_term_count(g, 1), limit)
    stopped = first_match is None and p < max_p
    if first_match is not None:
        return SweepResult(omega, first_match, omega, True, history, stopped)
    return SweepResult(history[-1][1], history[-1][0], omega, False, history, stopped)

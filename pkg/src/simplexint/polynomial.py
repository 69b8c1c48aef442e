"""Sparse multivariate polynomials over Q and linear forms."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .arith import format_rational, rational_root, to_rational

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class LinearForm:
    """x -> sum(c_k * x_k); coefficients are exact rationals."""

    coefficients: tuple[Fraction, ...]

    def __init__(self, coefficients: Iterable):
        object.__setattr__(self, "coefficients", tuple(to_rational(c) for c in coefficients))

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def __call__(self, point: Sequence) -> Fraction:
        return evaluate_linear_form(self, point)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def primitive(self) -> tuple["LinearForm", Fraction]:
        """Split into (integer coprime form with first nonzero entry positive, scale)."""
        if self.is_zero():
            return self, Fraction(1)
        den = 1
        for c in self.coefficients:
            den = math.lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coefficients]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        first = next(v for v in ints if v)
        if first < 0:
            g = -g
        return LinearForm(v // g for v in ints), Fraction(g, den)

    def __repr__(self):
        return "LinearForm(" + ", ".join(format_rational(c) for c in self.coefficients) + ")"


def evaluate_linear_form(form: LinearForm, point: Sequence) -> Fraction:
    if len(point) != form.dimension:
        raise ValueError(f"dimension mismatch: form has {form.dimension} entries, point has {len(point)}")
    return sum((c * v for c, v in zip(form.coefficients, point) if c), Fraction(0))


class SparsePolynomial:
    """A polynomial in ``nvars`` variables stored as {exponent tuple: coefficient}.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponents, object] | Iterable = ()):
        if nvars < 0:
            raise ValueError("negative variable count")
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else terms
        store: dict[Exponents, Fraction] = {}
        for exps, coef in items:
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have length {nvars}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            c = store.get(exps, Fraction(0)) + to_rational(coef)
            if c:
                store[exps] = c
            else:
                store.pop(exps, None)
        self.terms = store

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "SparsePolynomial":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, nvars: int, value) -> "SparsePolynomial":
        value = to_rational(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "SparsePolynomial":
        """The coordinate x_index (1-based)."""
        if not 1 <= index <= nvars:
            raise ValueError(f"variable index {index} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[index - 1] = 1
        return cls._raw(nvars, {tuple(exps): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coefficient=1) -> "SparsePolynomial":
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def from_linear_form(cls, form: LinearForm, constant=0) -> "SparsePolynomial":
        n = form.dimension
        terms = {}
        for k, c in enumerate(form.coefficients):
            if c:
                e = [0] * n
                e[k] = 1
                terms[tuple(e)] = c
        if constant:
            terms[(0,) * n] = to_rational(constant)
        return cls._raw(n, terms)

    @classmethod
    def linear_power(cls, form: LinearForm, exponent: int) -> "SparsePolynomial":
        return cls.from_linear_form(form) ** exponent

    @classmethod
    def from_json(cls, data: list, nvars: int | None = None) -> "SparsePolynomial":
        """Parse ``[{"coef": "p/q", "exps": [...]}, ...]``."""
        if nvars is None:
            if not data:
                raise ValueError("cannot infer the variable count of an empty term list")
            nvars = len(data[0]["exps"])
        return cls(nvars, [(t["exps"], to_rational(t["coef"])) for t in data])

    def to_json(self) -> list:
        return [{"coef": format_rational(c), "exps": list(e)} for e, c in sorted(self.terms.items())]

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_components(self) -> dict[int, "SparsePolynomial"]:
        parts: dict[int, dict] = {}
        for e, c in self.terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {deg: SparsePolynomial._raw(self.nvars, t) for deg, t in sorted(parts.items())}

    def coefficient(self, exponents: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    # -- arithmetic -----------------------------------------------------
    def _check(self, other: "SparsePolynomial"):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _lift(self, other) -> "SparsePolynomial":
        if isinstance(other, SparsePolynomial):
            self._check(other)
            return other
        return SparsePolynomial.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return SparsePolynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePolynomial._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, SparsePolynomial):
            k = to_rational(other)
            if not k:
                return SparsePolynomial._raw(self.nvars, {})
            return SparsePolynomial._raw(self.nvars, {e: c * k for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = SparsePolynomial.constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, SparsePolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == SparsePolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- evaluation -----------------------------------------------------
    def __call__(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected a point with {self.nvars} coordinates, got {len(point)}")
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                if k:
                    term *= x**k
            total += term
        return total

    def substitute(self, images: Sequence["SparsePolynomial"]) -> "SparsePolynomial":
        """Compose: replace x_k by ``images[k]`` (all in a common ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        if not images:
            return SparsePolynomial._raw(0, dict(self.terms))
        m = images[0].nvars
        powers: list[dict[int, SparsePolynomial]] = [{0: SparsePolynomial.constant(m, 1)} for _ in images]

        def power(k, e):
            cache = powers[k]
            if e not in cache:
                top = max(cache)
                p = cache[top]
                for j in range(top + 1, e + 1):
                    p = p * images[k]
                    cache[j] = p
            return cache[e]

        out = SparsePolynomial._raw(m, {})
        for e, c in self.terms.items():
            term = SparsePolynomial.constant(m, c)
            for k, ek in enumerate(e):
                if ek:
                    term = term * power(k, ek)
            out = out + term
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mon = "*".join(f"x{k + 1}" + (f"^{v}" if v > 1 else "") for k, v in enumerate(e) if v)
            if not mon:
                parts.append(format_rational(c))
            elif c == 1:
                parts.append(mon)
            else:
                parts.append(f"{format_rational(c)}*{mon}")
        return " + ".join(parts)


def effective_variables(exponents: Sequence[int]) -> list[int]:
    """1-based indices of the variables a monomial actually depends on."""
    return [k + 1 for k, e in enumerate(exponents) if e > 0]


def detect_power_of_linear_form(f: SparsePolynomial) -> tuple[LinearForm, int] | None:
    """Return (l, M) with f == l**M, or None.

    For even M the form is normalized so its first nonzero entry is positive.
    For odd M the sign is forced by f itself.  Degree-0 input returns None.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no power decomposition")
    M = f.degree
    if M < 1 or not f.is_homogeneous():
        return None
    n = f.nvars
    pivot = None
    for i in range(n):
        e = [0] * n
        e[i] = M
        c = f.coefficient(e)
        if c:
            pivot = (i, c)
            break
    if pivot is None:
        return None
    i, c = pivot
    li = rational_root(c, M)
    if li is None:
        return None
    scale = M * li ** (M - 1)
    coeffs = []
    for j in range(n):
        if j == i:
            coeffs.append(li)
            continue
        e = [0] * n
        e[i] = M - 1
        e[j] += 1
        coeffs.append(f.coefficient(e) / scale)
    form = LinearForm(coeffs)
    if SparsePolynomial.linear_power(form, M) != f:
        return None
    return form, M

"""Exact rational scalars and the small combinatorial helpers used throughout.

``Rational`` is :class:`fractions.Fraction`: always reduced, denominator
positive, equality is canonical.  The wire format is ``"p/q"`` (``"p"`` when
``q == 1``), sign carried by the numerator, which is exactly ``str(Fraction)``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator

Rational = Fraction

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def to_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected; they would silently import rounding error.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(m)


def binomial(a: int, b: int) -> int:
    """C(a, b), zero when b > a."""
    if b < 0 or a < 0:
        return 0
    return math.comb(a, b)


def multinomial(parts) -> int:
    total = 0
    result = 1
    for k in parts:
        total += k
        result *= math.comb(total, k)
    return result


def moebius(d: int) -> int:
    if d < 1:
        raise ValueError("moebius is defined for positive integers")
    sign = 1
    p = 2
    while p * p <= d:
        if d % p == 0:
            d //= p
            if d % p == 0:
                return 0
            sign = -sign
        p += 1
    if d > 1:
        sign = -sign
    return sign


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Yield every k in N^parts with sum(k) == total, lexicographically.

    >>> list(compositions(2, 2))
    [(0, 2), (1, 1), (2, 0)]
    """
    if parts < 1:
        raise ValueError("parts must be positive")
    if total < 0:
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def count_compositions(total: int, parts: int) -> int:
    return binomial(total + parts - 1, parts - 1)


def integer_root(n: int, k: int) -> int | None:
    """Exact k-th root of a non-negative integer, or None."""
    if n < 0:
        raise ValueError("integer_root of a negative number")
    if n < 2 or k == 1:
        return n
    # float estimate, then correct; exactness checked below
    r = int(round(math.exp(math.log(n) / k))) if n.bit_length() < 1000 else _newton_root(n, k)
    for cand in (r - 1, r, r + 1):
        if cand >= 0 and cand**k == n:
            return cand
    r = _newton_root(n, k)
    return r if r**k == n else None


def _newton_root(n: int, k: int) -> int:
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def rational_root(q: Fraction, k: int) -> Fraction | None:
    """A rational r with r**k == q, choosing r >= 0 when k is even."""
    if k < 1:
        raise ValueError("root order must be positive")
    if q < 0:
        if k % 2 == 0:
            return None
        r = rational_root(-q, k)
        return None if r is None else -r
    num = integer_root(q.numerator, k)
    den = integer_root(q.denominator, k)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def lcm_of_denominators(values) -> int:
    out = 1
    for v in values:
        out = math.lcm(out, Fraction(v).denominator)
    return out

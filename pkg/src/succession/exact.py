"""Exact rational plumbing: coercion, rising factorials, Beta-ratio products,
and fixed-point decimal rendering.

Everything in this module is exact. No floats enter or leave; ``as_rational``
rejects them outright so rounding error cannot sneak into a computation
through a careless literal.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "RationalLike",
    "as_rational",
    "rising",
    "falling",
    "rising_ratio",
    "beta_sequence_marginal",
    "all_success_probability",
    "decimal_string",
]

Rational = Fraction
RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Accepts Fractions, ints, and strings in either ``p/q`` or decimal form
    (``"3/4"``, ``"0.25"``, ``"17"``). Floats are rejected: binary floats
    generally do not equal the decimal the caller had in mind, and this
    package promises exactness end to end.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):  # bool is an int subclass; nonsense here
        raise TypeError("expected a rational number, got a bool")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise TypeError(
            "floats are not exact; pass a string, an int, or a Fraction"
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    raise TypeError(f"expected a rational number, got {type(value).__name__}")


def rising(start: Fraction, count: int) -> Fraction:
    """Rising factorial: ``start * (start+1) * ... * (start+count-1)``.

    ``rising(x, 0)`` is 1 by the empty-product convention.
    """
    if count < 0:
        raise ValueError("rising factorial needs a nonnegative term count")
    out = ONE
    for i in range(count):
        out *= start + i
    return out


def falling(start: int, count: int) -> int:
    """Falling factorial over integers: ``start * (start-1) * ... ``.

    Returns 0 when ``count > start``, which is exactly the convention
    sampling without replacement wants.
    """
    if count < 0:
        raise ValueError("falling factorial needs a nonnegative term count")
    out = 1
    for i in range(count):
        term = start - i
        if term <= 0:
            return 0
        out *= term
    return out


def rising_ratio(num_start: Fraction, den_start: Fraction, count: int) -> Fraction:
    """``rising(num_start, count) / rising(den_start, count)`` without
    materializing either side.

    When the starts differ by an integer d the product telescopes to d
    terms instead of ``count``; that is what makes astronomically long
    blocks affordable. Otherwise the plain ``count``-term product runs.
    """
    if count < 0:
        raise ValueError("ratio needs a nonnegative term count")
    if count == 0 or num_start == den_start:
        return ONE
    gap = den_start - num_start
    if gap.denominator == 1:
        d = int(gap)
        if 0 < d < count:
            # telescoping: Prod (x+i)/(x+d+i) = rising(x, d)/rising(x+count, d)
            return rising(num_start, d) / rising(num_start + count, d)
        if -count < d < 0:
            return rising(den_start + count, -d) / rising(den_start, -d)
    out = ONE
    for i in range(count):
        out *= (num_start + i) / (den_start + i)
    return out


def beta_sequence_marginal(
    alpha: Fraction, beta: Fraction, successes: int, failures: int
) -> Fraction:
    """Probability of one particular ordered outcome sequence with the given
    tallies, under a Beta(alpha, beta) prior on the success chance.

    Equals B(alpha+successes, beta+failures) / B(alpha, beta), computed as a
    ratio of rising factorials. Three algebraically identical routes exist;
    the integer-parameter ones cost O(small side) instead of O(total), so the
    cheapest valid one is chosen. Counts of order 1e18 stay fast as long as
    the opposite parameter is a modest integer.
    """
    a, b = successes, failures
    if a < 0 or b < 0:
        raise ValueError("tallies must be nonnegative")
    if alpha <= 0 or beta <= 0:
        raise ValueError("beta parameters must be positive")
    candidates: list[tuple[int, str]] = [(a + b, "direct")]
    if beta.denominator == 1:
        candidates.append((b + 2 * int(beta) + b, "via_beta"))
    if alpha.denominator == 1:
        candidates.append((a + 2 * int(alpha) + a, "via_alpha"))
    route = min(candidates)[1]
    if route == "via_beta":
        bi = int(beta)
        return rising(beta, b) * rising(alpha, bi) / rising(alpha + a, bi + b)
    if route == "via_alpha":
        ai = int(alpha)
        return rising(alpha, a) * rising(beta, ai) / rising(beta + b, ai + a)
    return rising(alpha, a) * rising(beta, b) / rising(alpha + beta, a + b)


def all_success_probability(a: Fraction, b: Fraction, horizon: int) -> Fraction:
    """Probability that the next ``horizon`` draws all succeed under a
    Beta(a, b) distribution on the success chance.

    This is ``rising(a, horizon) / rising(a+b, horizon)``; the telescoped
    ratio keeps huge horizons cheap when ``b`` is an integer.
    """
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    return rising_ratio(a, a + b, horizon)


def decimal_string(value: Fraction, digits: int) -> str:
    """Render ``value`` as a fixed-point decimal with exactly ``digits``
    digits after the point, rounding to nearest with ties to even.

    The computation is integer-only: scale, divide, inspect the remainder.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    sign = "-" if value < 0 else ""
    num = abs(value.numerator)
    den = value.denominator
    scaled, rem = divmod(num * 10**digits, den)
    double = 2 * rem
    if double > den or (double == den and scaled % 2 == 1):
        scaled += 1
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"

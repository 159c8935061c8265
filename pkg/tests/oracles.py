"""Independent oracles that anchor the test suite.

Every quantity here is computed from ``math.factorial`` alone: Beta and
Dirichlet normalizing constants in closed factorial form, sequence
marginals as ratios of them, and predictive probabilities as ratios of
successive marginals (extend the record by one observation, divide).

None of this shares code with the engine, which evaluates the same
quantities through telescoped rising-factorial products and
posterior-component averaging. Agreement between the two routes is the
backbone of the suite.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from succession import BinaryPrior, SimplexMixturePrior


def beta_function(a: int, b: int) -> Fraction:
    """B(a, b) at positive integers: (a-1)! (b-1)! / (a+b-1)!."""
    if a < 1 or b < 1:
        raise ValueError("positive integers only")
    return Fraction(factorial(a - 1) * factorial(b - 1), factorial(a + b - 1))


def beta_marginal(alpha: int, beta: int, confirms: int, disconfirms: int) -> Fraction:
    """Ordered-sequence probability under Beta(alpha, beta):
    B(alpha+confirms, beta+disconfirms) / B(alpha, beta)."""
    return beta_function(alpha + confirms, beta + disconfirms) / beta_function(
        alpha, beta
    )


def binary_marginal(prior: BinaryPrior, confirms: int, disconfirms: int) -> Fraction:
    """Mixture marginal of one ordered sequence: point masses contribute
    indicator likelihoods, the continuous part its Beta marginal."""
    total = Fraction(0)
    if disconfirms == 0:
        total += prior.mass_theta1
    if confirms == 0:
        total += prior.mass_theta0
    if prior.mass_continuous != 0:
        total += prior.mass_continuous * beta_marginal(
            int(prior.alpha), int(prior.beta), confirms, disconfirms
        )
    return total


def binary_predictive(prior: BinaryPrior, confirms: int, disconfirms: int) -> Fraction:
    """P(next confirms | record), by total evidence: the marginal of the
    record extended by one confirmation over the marginal of the record."""
    return binary_marginal(prior, confirms + 1, disconfirms) / binary_marginal(
        prior, confirms, disconfirms
    )


def binary_block(
    prior: BinaryPrior, confirms: int, disconfirms: int, horizon: int
) -> Fraction:
    """P(next ``horizon`` instances all confirm | record), same route."""
    return binary_marginal(prior, confirms + horizon, disconfirms) / binary_marginal(
        prior, confirms, disconfirms
    )


def dirichlet_marginal(params: tuple[int, ...], counts: tuple[int, ...]) -> Fraction:
    """Ordered-sequence probability under Dirichlet(params), factorial
    form of the Dirichlet integral."""
    if any(k < 1 for k in params):
        raise ValueError("positive integer parameters only")
    total_k = sum(params)
    total_n = sum(counts)
    out = Fraction(factorial(total_k - 1), factorial(total_k + total_n - 1))
    for k, n in zip(params, counts):
        out *= Fraction(factorial(k + n - 1), factorial(k - 1))
    return out


def mixture_marginal(prior: SimplexMixturePrior, counts: tuple[int, ...]) -> Fraction:
    """Mixture marginal over simplex components: vertices give indicator
    likelihoods, faces their Dirichlet marginal restricted to the face."""
    total = Fraction(0)
    for comp in prior.components:
        inside = set(comp.support)
        if any(c > 0 and j not in inside for j, c in enumerate(counts)):
            continue
        if comp.is_vertex:
            total += comp.weight
        else:
            total += comp.weight * dirichlet_marginal(
                tuple(int(p) for p in comp.params),
                tuple(counts[j] for j in comp.support),
            )
    return total


def mixture_predictive(
    prior: SimplexMixturePrior, counts: tuple[int, ...], j: int
) -> Fraction:
    """P(next observation is type j | counts), by total evidence."""
    bumped = list(counts)
    bumped[j] += 1
    return mixture_marginal(prior, tuple(bumped)) / mixture_marginal(prior, counts)

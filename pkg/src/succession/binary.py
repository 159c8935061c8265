"""Predictive probabilities for binary enumerative induction.

The model: instances of a claim arrive one at a time and each either
confirms or disconfirms it. A prior over the confirmation chance theta
has up to three parts,

* a point mass at theta = 1 (the universal generalization: no exceptions,
  ever),
* a point mass at theta = 0 (the dual generalization: nothing confirms),
* a continuous Beta(alpha, beta) component spread over (0, 1).

Everything downstream is exact rational arithmetic. The classical rules
of succession drop out as special cases: a pure Beta(1, 1) prior gives
Laplace's (n+1)/(n+2); half a point at theta=1 plus half Beta(1, 1) gives
1 - 1/(n+2)^2; putting a quarter on each point and half on the continuous
part gives the (n+1)(n+4)/((n+2)(n+3)) rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoContinuousComponent, UGFalsified, ZeroEvidenceProbability
from .exact import (
    ONE,
    ZERO,
    RationalLike,
    all_success_probability,
    as_rational,
    beta_sequence_marginal,
)

__all__ = [
    "Evidence",
    "BinaryPrior",
    "PredictionQuery",
    "marginal_likelihood",
    "posterior_ug",
    "bayes_factor_ug",
    "predict_next",
    "predict_block",
    "exception_probability",
    "prior_odds_adjustment",
    "posterior_theta_params",
]


@dataclass(frozen=True)
class Evidence:
    """A tally of observed instances: ``confirm`` supporting cases and
    ``disconfirm`` counterexamples. Order of arrival is irrelevant
    throughout (all the models here are exchangeable)."""

    confirm: int
    disconfirm: int = 0

    def __post_init__(self) -> None:
        for name in ("confirm", "disconfirm"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer")

    @property
    def total(self) -> int:
        return self.confirm + self.disconfirm


@dataclass(frozen=True)
class PredictionQuery:
    """How far ahead to look: the next ``horizon`` instances, all assumed
    confirmatory."""

    horizon: int

    def __post_init__(self) -> None:
        if not isinstance(self.horizon, int) or isinstance(self.horizon, bool):
            raise ValueError("horizon must be an integer")
        if self.horizon < 1:
            raise ValueError("horizon must be at least 1")


@dataclass(frozen=True)
class BinaryPrior:
    """A three-part prior over the confirmation chance.

    ``mass_theta1``, ``mass_theta0``, and ``mass_continuous`` must be
    nonnegative rationals summing to exactly one; ``alpha`` and ``beta``
    are the positive shape parameters of the continuous Beta part (they
    are validated even when that part carries no mass).
    """

    mass_theta1: Fraction
    mass_theta0: Fraction
    mass_continuous: Fraction
    alpha: Fraction = ONE
    beta: Fraction = ONE

    def __post_init__(self) -> None:
        for name in ("mass_theta1", "mass_theta0", "mass_continuous", "alpha", "beta"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if min(self.mass_theta1, self.mass_theta0, self.mass_continuous) < 0:
            raise ValueError("prior masses must be nonnegative")
        if self.mass_theta1 + self.mass_theta0 + self.mass_continuous != 1:
            raise ValueError("prior masses must sum to exactly 1")
        if self.alpha <= 0 or self.beta <= 0:
            raise ValueError("alpha and beta must be positive")

    @classmethod
    def laplace(cls, alpha: RationalLike = 1, beta: RationalLike = 1) -> "BinaryPrior":
        """All mass on the continuous part: Beta(alpha, beta), no points."""
        return cls(ZERO, ZERO, ONE, as_rational(alpha), as_rational(beta))

    @classmethod
    def haldane(cls, alpha: RationalLike = 1) -> "BinaryPrior":
        """Half a point at theta=1, half Beta(alpha, 1).

        The even split makes 'the generalization holds' and 'it fails
        somewhere' equally credible before any data arrive.
        """
        h = Fraction(1, 2)
        return cls(h, ZERO, h, as_rational(alpha), ONE)

    @classmethod
    def jeffreys_split(cls, alpha: RationalLike = 1) -> "BinaryPrior":
        """A quarter at each of theta=1 and theta=0, half on Beta(alpha, 1):
        the sharp hypotheses jointly tie with the vague one, and neither
        sharp direction is favored."""
        q = Fraction(1, 4)
        return cls(q, q, Fraction(1, 2), as_rational(alpha), ONE)

    @classmethod
    def from_prior_odds(
        cls, odds: RationalLike, alpha: RationalLike = 1
    ) -> "BinaryPrior":
        """Point mass at theta=1 with prior odds ``odds`` against Beta(alpha, 1):
        masses (d/(1+d), 0, 1/(1+d)) for d = odds."""
        d = as_rational(odds)
        if d <= 0:
            raise ValueError("prior odds must be positive")
        return cls(d / (1 + d), ZERO, 1 / (1 + d), as_rational(alpha), ONE)


def _component_likelihoods(
    prior: BinaryPrior, ev: Evidence
) -> tuple[Fraction, Fraction, Fraction]:
    # Likelihood of one particular ordered sequence with ev's tallies,
    # under each prior component in turn.
    like_theta1 = ONE if ev.disconfirm == 0 else ZERO
    like_theta0 = ONE if ev.confirm == 0 else ZERO
    if prior.mass_continuous > 0:
        like_cont = beta_sequence_marginal(
            prior.alpha, prior.beta, ev.confirm, ev.disconfirm
        )
    else:
        like_cont = ZERO
    return like_theta1, like_theta0, like_cont


def marginal_likelihood(prior: BinaryPrior, ev: Evidence) -> Fraction:
    """Prior probability of one particular ordered sequence carrying the
    given tallies: the mass-weighted sum of component likelihoods.

    The point at theta=1 contributes only when there are no counterexamples,
    the point at theta=0 only when nothing confirms, and the continuous part
    contributes B(alpha+confirm, beta+disconfirm) / B(alpha, beta).
    """
    l1, l0, lc = _component_likelihoods(prior, ev)
    return (
        prior.mass_theta1 * l1
        + prior.mass_theta0 * l0
        + prior.mass_continuous * lc
    )


def _posterior_weights(
    prior: BinaryPrior, ev: Evidence
) -> tuple[Fraction, Fraction, Fraction]:
    l1, l0, lc = _component_likelihoods(prior, ev)
    m = (
        prior.mass_theta1 * l1
        + prior.mass_theta0 * l0
        + prior.mass_continuous * lc
    )
    if m == 0:
        raise ZeroEvidenceProbability(
            f"the prior assigns probability 0 to evidence {ev!r}"
        )
    return (
        prior.mass_theta1 * l1 / m,
        prior.mass_theta0 * l0 / m,
        prior.mass_continuous * lc / m,
    )


def posterior_ug(prior: BinaryPrior, ev: Evidence) -> Fraction:
    """Posterior probability that the universal generalization is true,
    i.e. posterior mass of the theta=1 point.

    A single counterexample drives it to exactly 0. Raises
    ZeroEvidenceProbability when the prior gave the evidence no chance
    at all (conditioning undefined).
    """
    w1, _, _ = _posterior_weights(prior, ev)
    return w1


def bayes_factor_ug(ev: Evidence, alpha: RationalLike = 1) -> Fraction:
    """Bayes factor for the universal generalization against a Beta(alpha, 1)
    alternative, given ``ev.confirm`` clean confirmations.

    Equals confirm/alpha + 1: every confirmation adds 1/alpha to the
    evidence ratio. Raises UGFalsified when the record holds a
    counterexample, since the generalization then has likelihood zero.
    """
    a = as_rational(alpha)
    if a <= 0:
        raise ValueError("alpha must be positive")
    if ev.disconfirm > 0:
        raise UGFalsified(
            f"{ev.disconfirm} disconfirming instance(s): the generalization "
            "has likelihood zero"
        )
    return Fraction(ev.confirm) / a + 1


def predict_next(prior: BinaryPrior, ev: Evidence) -> Fraction:
    """Probability that the next instance confirms, averaged over the
    posterior: theta=1 predicts 1, theta=0 predicts 0, the continuous
    part predicts (alpha+confirm) / (alpha+beta+total)."""
    w1, _, wc = _posterior_weights(prior, ev)
    out = w1
    if wc != 0:
        out += wc * (prior.alpha + ev.confirm) / (
            prior.alpha + prior.beta + ev.total
        )
    return out


def predict_block(
    prior: BinaryPrior, ev: Evidence, query: PredictionQuery | int
) -> Fraction:
    """Probability that the next ``horizon`` instances all confirm.

    Under the continuous component this is a ratio of rising factorials
    starting at the posterior shape parameters; the point components
    contribute 1 (theta=1) and 0 (theta=0). Equal, term by term, to the
    product of predict_next over the lengthening record.
    """
    if isinstance(query, int):
        query = PredictionQuery(query)
    w1, _, wc = _posterior_weights(prior, ev)
    out = w1
    if wc != 0:
        out += wc * all_success_probability(
            prior.alpha + ev.confirm,
            prior.beta + ev.disconfirm,
            query.horizon,
        )
    return out


def exception_probability(p_ug: RationalLike, ev: Evidence) -> Fraction:
    """Probability that the next instance is a counterexample, for an
    observer whose prior puts ``p_ug`` on the no-exceptions hypothesis and
    the rest on a uniform continuous part, after ``ev.confirm`` clean
    confirmations.

    Closed form (1 - p) / ((n+2) (n p + 1)) with n = ev.confirm. At p = 0
    this is the Laplacean 1/(n+2); at p = 1 it is exactly 0; at p = 1/2
    it is 1/(n+2)^2, quadratically smaller than the Laplacean rate.
    """
    p = as_rational(p_ug)
    if not 0 <= p <= 1:
        raise ValueError("p_ug must lie in [0, 1]")
    if ev.disconfirm != 0:
        raise ValueError(
            "exception_probability describes an unbroken record; "
            "disconfirm must be 0"
        )
    n = ev.confirm
    return (1 - p) / ((n + 2) * (n * p + 1))


def prior_odds_adjustment(odds: RationalLike, n: int) -> Fraction:
    """Factor by which prior odds ``d`` on the no-exceptions hypothesis
    lift the Laplacean prediction after n clean confirmations:
    (d(n+2) + 1) / (d(n+1) + 1).

    The adjusted next-instance probability is this factor times
    (n+1)/(n+2); at d = 1 the factor is (n+3)/(n+2).
    """
    d = as_rational(odds)
    if d <= 0:
        raise ValueError("prior odds must be positive")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValueError("n must be a nonnegative integer")
    return (d * (n + 2) + 1) / (d * (n + 1) + 1)


def posterior_theta_params(
    prior: BinaryPrior, ev: Evidence
) -> tuple[Fraction, Fraction]:
    """Shape parameters of the continuous part after conditioning:
    (alpha + confirm, beta + disconfirm).

    Raises NoContinuousComponent when the prior has no continuous part to
    update. Conjugacy means no other state ever needs tracking.
    """
    if prior.mass_continuous == 0:
        raise NoContinuousComponent(
            "the prior places no mass on the continuous component"
        )
    return prior.alpha + ev.confirm, prior.beta + ev.disconfirm

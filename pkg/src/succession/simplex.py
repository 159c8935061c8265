"""Predictive inference over t outcome types with mixture-of-Dirichlet priors.

The binary machinery generalizes: observations are counts over t types,
priors are finite mixtures whose components live on faces of the
probability simplex. A component supported on a single vertex is a point
mass (some type occurs with certainty); a component on a larger face is a
Dirichlet over the types that face allows. Components supported on a
proper face assign probability zero to every type outside it, so one
observation of an excluded type kills the component outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .binary import BinaryPrior
from .errors import DimensionMismatch, ZeroEvidenceProbability
from .exact import ONE, ZERO, RationalLike, as_rational, rising

__all__ = [
    "MultinomialCounts",
    "DirichletComponent",
    "SimplexMixturePrior",
    "dirichlet_predictive",
    "carnap_predictive",
    "sequence_marginal",
    "mixture_posterior",
    "mixture_predictive",
    "observed_type_count",
    "from_binary_prior",
]

CountsLike = Union["MultinomialCounts", Sequence[int]]


@dataclass(frozen=True)
class MultinomialCounts:
    """Observed tallies, one nonnegative integer per outcome type."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(self.counts))
        if len(self.counts) == 0:
            raise ValueError("need at least one outcome type")
        for c in self.counts:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError("counts must be nonnegative integers")

    @property
    def t(self) -> int:
        return len(self.counts)

    @property
    def n(self) -> int:
        return sum(self.counts)

    def __getitem__(self, j: int) -> int:
        return self.counts[j]


def _as_counts(value: CountsLike) -> MultinomialCounts:
    if isinstance(value, MultinomialCounts):
        return value
    return MultinomialCounts(tuple(value))


@dataclass(frozen=True)
class DirichletComponent:
    """One mixture component: a distribution over a face of the simplex.

    ``support`` lists the type indices (0-based, strictly increasing) the
    component allows. A singleton support is a vertex point mass and takes
    no parameters; any larger support carries one positive Dirichlet
    parameter per supported type, in support order.
    """

    support: tuple[int, ...]
    params: tuple[Fraction, ...]
    weight: Fraction

    def __post_init__(self) -> None:
        support = tuple(self.support)
        object.__setattr__(self, "support", support)
        object.__setattr__(
            self, "params", tuple(as_rational(p) for p in self.params)
        )
        object.__setattr__(self, "weight", as_rational(self.weight))
        if len(support) == 0:
            raise ValueError("support must be nonempty")
        if any(not isinstance(j, int) or isinstance(j, bool) or j < 0 for j in support):
            raise ValueError("support indices must be nonnegative integers")
        if any(a >= b for a, b in zip(support, support[1:])):
            raise ValueError("support indices must be strictly increasing")
        if len(support) == 1:
            if self.params:
                raise ValueError("a vertex point mass takes no parameters")
        else:
            if len(self.params) != len(support):
                raise DimensionMismatch(
                    "need one Dirichlet parameter per supported type"
                )
            if any(p <= 0 for p in self.params):
                raise ValueError("Dirichlet parameters must be positive")
        if self.weight < 0:
            raise ValueError("component weight must be nonnegative")

    @classmethod
    def vertex(cls, index: int, weight: RationalLike) -> "DirichletComponent":
        """Point mass: type ``index`` occurs with certainty."""
        return cls((index,), (), as_rational(weight))

    @classmethod
    def full(
        cls, params: Sequence[RationalLike], weight: RationalLike
    ) -> "DirichletComponent":
        """Dirichlet over all of 0..len(params)-1."""
        return cls(
            tuple(range(len(params))),
            tuple(as_rational(p) for p in params),
            as_rational(weight),
        )

    @property
    def is_vertex(self) -> bool:
        return len(self.support) == 1


@dataclass(frozen=True)
class SimplexMixturePrior:
    """A finite mixture of simplex components over ``t`` outcome types."""

    t: int
    components: tuple[DirichletComponent, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not isinstance(self.t, int) or isinstance(self.t, bool) or self.t < 2:
            raise ValueError("need at least two outcome types")
        if not self.components:
            raise ValueError("need at least one component")
        for comp in self.components:
            if comp.support[-1] >= self.t:
                raise DimensionMismatch(
                    f"support index {comp.support[-1]} out of range for t={self.t}"
                )
        if sum((c.weight for c in self.components), ZERO) != 1:
            raise ValueError("component weights must sum to exactly 1")

    @classmethod
    def hintikka_default(cls, t: int) -> "SimplexMixturePrior":
        """Half the mass on a flat Dirichlet over the whole simplex, the
        other half split evenly over the t vertices.

        Gives every 'only type j ever occurs' hypothesis a standing chance
        while staying open-minded about genuinely mixed worlds.
        """
        vertex_share = Fraction(1, 2 * t)
        comps = [
            DirichletComponent.full((ONE,) * t, Fraction(1, 2))
        ] + [DirichletComponent.vertex(j, vertex_share) for j in range(t)]
        return cls(t, tuple(comps))


def observed_type_count(counts: CountsLike) -> int:
    """Number of distinct types seen so far."""
    return sum(1 for c in _as_counts(counts).counts if c > 0)


def dirichlet_predictive(
    counts: CountsLike, params: Sequence[RationalLike]
) -> tuple[Fraction, ...]:
    """Next-observation probabilities under a single full-support
    Dirichlet: (n_j + k_j) / (n + k) for each type j, with k the parameter
    total. Exactly the add-k_j smoothing rule."""
    cts = _as_counts(counts)
    ps = tuple(as_rational(p) for p in params)
    if len(ps) != cts.t:
        raise DimensionMismatch(
            f"{len(ps)} parameters for {cts.t} outcome types"
        )
    if any(p <= 0 for p in ps):
        raise ValueError("Dirichlet parameters must be positive")
    denom = cts.n + sum(ps)
    return tuple((cts[j] + ps[j]) / denom for j in range(cts.t))


def carnap_predictive(counts: CountsLike, lam: RationalLike) -> tuple[Fraction, ...]:
    """The lambda continuum: symmetric Dirichlet with every parameter
    lambda/t, so the prediction is (n_j + lambda/t) / (n + lambda).

    lambda -> 0 leans entirely on observed frequencies; large lambda clings
    to the uniform 1/t.
    """
    cts = _as_counts(counts)
    lam = as_rational(lam)
    if lam <= 0:
        raise ValueError("lambda must be positive")
    share = lam / cts.t
    return dirichlet_predictive(cts, (share,) * cts.t)


def sequence_marginal(counts: CountsLike, component: DirichletComponent) -> Fraction:
    """Probability of one particular ordered sequence carrying ``counts``,
    under a single component.

    A vertex gives 1 when nothing outside it was observed, else 0. A face
    component gives 0 as soon as an excluded type shows up; otherwise the
    Dirichlet marginal is the rising-factorial product
    prod_j rising(k_j, n_j) / rising(k, n) over the supported types.
    """
    cts = _as_counts(counts)
    if component.support[-1] >= cts.t:
        raise DimensionMismatch(
            f"component support exceeds t={cts.t}"
        )
    in_support = set(component.support)
    if any(cts[j] > 0 and j not in in_support for j in range(cts.t)):
        return ZERO
    if component.is_vertex:
        return ONE
    num = ONE
    for j, k in zip(component.support, component.params):
        num *= rising(k, cts[j])
    total_param = sum(component.params, ZERO)
    return num / rising(total_param, cts.n)


def mixture_posterior(
    prior: SimplexMixturePrior, counts: CountsLike
) -> tuple[Fraction, ...]:
    """Posterior component weights, aligned with ``prior.components``:
    prior weight times sequence marginal, normalized. Raises
    ZeroEvidenceProbability when every component dies."""
    cts = _as_counts(counts)
    if cts.t != prior.t:
        raise DimensionMismatch(
            f"counts over {cts.t} types against a prior with t={prior.t}"
        )
    raw = tuple(
        comp.weight * sequence_marginal(cts, comp) for comp in prior.components
    )
    total = sum(raw, ZERO)
    if total == 0:
        raise ZeroEvidenceProbability(
            f"the prior assigns probability 0 to counts {cts.counts}"
        )
    return tuple(r / total for r in raw)


def _component_predictive(
    cts: MultinomialCounts, comp: DirichletComponent
) -> tuple[Fraction, ...]:
    out = [ZERO] * cts.t
    if comp.is_vertex:
        out[comp.support[0]] = ONE
        return tuple(out)
    n_in = sum(cts[j] for j in comp.support)
    denom = n_in + sum(comp.params, ZERO)
    for j, k in zip(comp.support, comp.params):
        out[j] = (cts[j] + k) / denom
    return tuple(out)


def mixture_predictive(
    prior: SimplexMixturePrior, counts: CountsLike
) -> tuple[Fraction, ...]:
    """Next-observation probabilities under the whole mixture: the
    posterior-weighted average of component predictives. Types outside a
    component's support get 0 from it, so a sub-simplex component never
    predicts what it cannot produce."""
    cts = _as_counts(counts)
    weights = mixture_posterior(prior, cts)
    out = [ZERO] * cts.t
    for w, comp in zip(weights, prior.components):
        if w == 0:
            continue
        pred = _component_predictive(cts, comp)
        for j in range(cts.t):
            if pred[j] != 0:
                out[j] += w * pred[j]
    return tuple(out)


def from_binary_prior(prior: BinaryPrior) -> SimplexMixturePrior:
    """View a two-outcome prior as a simplex mixture with type 0 the
    confirmatory outcome: the theta=1 point becomes the vertex at type 0,
    the theta=0 point the vertex at type 1, and the continuous part a
    Dirichlet(alpha, beta) over both."""
    comps = (
        DirichletComponent.vertex(0, prior.mass_theta1),
        DirichletComponent.vertex(1, prior.mass_theta0),
        DirichletComponent.full((prior.alpha, prior.beta), prior.mass_continuous),
    )
    return SimplexMixturePrior(2, comps)

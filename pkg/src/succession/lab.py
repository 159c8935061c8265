"""Desk-scale laboratory for exchangeability structure.

Everything here works with complete, exact distributions over all t^length
outcome sequences, so structural claims (exchangeability, positivity of
cylinders, sufficientness of a predictive rule, closeness of a sampling
law to a mixture of iid laws) are checked by inspection rather than
simulation. Tables are capped; the lab is an oracle, not a production
path.

A law built from an exchangeable model is constant on permutation classes
of sequences, and the lab stores such laws by class (count vector ->
per-sequence probability). The dense table the public contract promises
materializes lazily; pairwise operations use the class form when both
operands carry it, which is what makes exhaustive sweeps over urns
affordable.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import Callable, Iterator, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    InvalidRule,
    SampleTooLarge,
    TableTooLarge,
)
from .exact import ONE, ZERO, as_rational, falling

__all__ = [
    "SequenceLaw",
    "UrnComposition",
    "law_from_predictive",
    "is_exchangeable",
    "has_positive_cylinders",
    "satisfies_sufficientness",
    "sufficientness_witness",
    "urn_law",
    "canonical_mixture",
    "variation_distance",
    "df_bound",
    "beta_integral_oracle",
    "admits_exchangeable_extension",
]

# Dense tables above this size are refused (t=2 up to length 20, t=3 up to
# length 12 both fit).
MAX_TABLE_SIZE = 2**20

PredictiveRule = Callable[[tuple[int, ...]], Sequence[Fraction]]


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _multiplicity(counts: tuple[int, ...]) -> int:
    # number of sequences sharing this count vector
    out = math.factorial(sum(counts))
    for c in counts:
        out //= math.factorial(c)
    return out


def _check_shape(t: int, length: int) -> None:
    if not isinstance(t, int) or isinstance(t, bool) or t < 2:
        raise ValueError("need an alphabet of at least two symbols")
    if not isinstance(length, int) or isinstance(length, bool) or length < 1:
        raise ValueError("length must be at least 1")
    if t**length > MAX_TABLE_SIZE:
        raise TableTooLarge(
            f"a table of {t}^{length} sequences exceeds the cap of "
            f"{MAX_TABLE_SIZE} entries"
        )


class SequenceLaw:
    """An exact probability distribution over all ``t**length`` sequences
    of symbols 0..t-1.

    The dense constructor takes one probability per sequence in
    lexicographic order (symbol 0 first, leftmost position most
    significant). Laws known to be constant on permutation classes can be
    built from a per-class table instead via
    :meth:`from_class_probabilities`; they behave identically and the
    dense view is computed on first use.
    """

    __slots__ = ("t", "length", "_dense", "_classes")

    def __init__(self, t: int, length: int, probabilities: Sequence[Fraction]):
        _check_shape(t, length)
        dense = tuple(as_rational(p) for p in probabilities)
        if len(dense) != t**length:
            raise DimensionMismatch(
                f"expected {t**length} probabilities, got {len(dense)}"
            )
        if any(p < 0 for p in dense):
            raise ValueError("probabilities must be nonnegative")
        if sum(dense, ZERO) != 1:
            raise ValueError("probabilities must sum to exactly 1")
        self.t = t
        self.length = length
        self._dense: tuple[Fraction, ...] | None = dense
        self._classes: dict[tuple[int, ...], Fraction] | None = None

    @classmethod
    def from_class_probabilities(
        cls,
        t: int,
        length: int,
        class_probs: Mapping[tuple[int, ...], Fraction],
    ) -> "SequenceLaw":
        """Build a law constant on permutation classes from a complete map
        of count vector -> probability of each single sequence in that
        class."""
        _check_shape(t, length)
        table: dict[tuple[int, ...], Fraction] = {}
        total = ZERO
        expected = math.comb(length + t - 1, t - 1)
        for counts, prob in class_probs.items():
            counts = tuple(counts)
            if len(counts) != t or any(c < 0 for c in counts) or sum(counts) != length:
                raise DimensionMismatch(
                    f"count vector {counts} does not describe {length} draws "
                    f"over {t} types"
                )
            prob = as_rational(prob)
            if prob < 0:
                raise ValueError("probabilities must be nonnegative")
            table[counts] = prob
            total += prob * _multiplicity(counts)
        if len(table) != expected:
            raise DimensionMismatch(
                f"expected {expected} count classes, got {len(table)}"
            )
        if total != 1:
            raise ValueError("probabilities must sum to exactly 1")
        law = cls.__new__(cls)
        law.t = t
        law.length = length
        law._dense = None
        law._classes = table
        return law

    def probability(self, sequence: Sequence[int]) -> Fraction:
        """Probability of one full sequence."""
        seq = tuple(sequence)
        if len(seq) != self.length or any(
            not 0 <= s < self.t for s in seq
        ):
            raise DimensionMismatch(
                f"expected a sequence of {self.length} symbols in 0..{self.t - 1}"
            )
        if self._classes is not None:
            counts = [0] * self.t
            for s in seq:
                counts[s] += 1
            return self._classes[tuple(counts)]
        index = 0
        for s in seq:
            index = index * self.t + s
        assert self._dense is not None
        return self._dense[index]

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        """Dense table in lexicographic sequence order."""
        if self._dense is None:
            assert self._classes is not None
            classes = self._classes
            out: list[Fraction] = []
            counts = [0] * self.t
            append = out.append

            def walk(depth: int) -> None:
                if depth == self.length:
                    append(classes[tuple(counts)])
                    return
                for s in range(self.t):
                    counts[s] += 1
                    walk(depth + 1)
                    counts[s] -= 1

            walk(0)
            self._dense = tuple(out)
        return self._dense

    def sequences(self) -> Iterator[tuple[int, ...]]:
        """All sequences in table order."""
        return itertools.product(range(self.t), repeat=self.length)

    def items(self) -> Iterator[tuple[tuple[int, ...], Fraction]]:
        """(sequence, probability) pairs in table order."""
        if self._classes is not None:
            classes = self._classes
            for seq in self.sequences():
                counts = [0] * self.t
                for s in seq:
                    counts[s] += 1
                yield seq, classes[tuple(counts)]
        else:
            yield from zip(self.sequences(), self.probabilities)

    def class_table(self) -> dict[tuple[int, ...], Fraction] | None:
        """Count vector -> per-sequence probability, when the law is stored
        by permutation class; None for laws built dense."""
        if self._classes is None:
            return None
        return dict(self._classes)

    def count_distribution(self) -> dict[tuple[int, ...], Fraction]:
        """Distribution of the empirical count vector: probability that the
        ``length`` draws realize each composition."""
        if self._classes is not None:
            return {
                c: p * _multiplicity(c) for c, p in self._classes.items()
            }
        out: dict[tuple[int, ...], Fraction] = {
            c: ZERO for c in _compositions(self.length, self.t)
        }
        for seq, p in self.items():
            counts = [0] * self.t
            for s in seq:
                counts[s] += 1
            out[tuple(counts)] += p
        return out

    def __repr__(self) -> str:
        kind = "classes" if self._classes is not None else "dense"
        return f"SequenceLaw(t={self.t}, length={self.length}, {kind})"


def _validated_vector(
    raw: Sequence[Fraction], t: int, rule_name: str
) -> tuple[Fraction, ...]:
    try:
        vec = tuple(as_rational(p) for p in raw)
    except (TypeError, ValueError) as exc:
        raise InvalidRule(f"{rule_name} returned non-rational entries") from exc
    if len(vec) != t:
        raise InvalidRule(
            f"{rule_name} returned {len(vec)} entries for {t} symbols"
        )
    if any(p < 0 for p in vec):
        raise InvalidRule(f"{rule_name} returned a negative probability")
    if sum(vec, ZERO) != 1:
        raise InvalidRule(f"{rule_name} returned entries not summing to 1")
    return vec


def law_from_predictive(
    rule: PredictiveRule, t: int, length: int
) -> SequenceLaw:
    """Chain-rule construction: the probability of a sequence is the
    product, over its positions, of the rule's prediction for the symbol
    actually drawn given the counts so far.

    The rule is any callable from a count vector (tuple of t tallies) to a
    probability vector over the t symbols; it is consulted once per
    distinct reachable count vector. Subtrees below a zero-probability
    prefix are filled with zeros without consulting the rule.
    """
    _check_shape(t, length)
    name = getattr(rule, "__name__", "rule")
    cache: dict[tuple[int, ...], tuple[Fraction, ...]] = {}

    def predictive(counts: tuple[int, ...]) -> tuple[Fraction, ...]:
        vec = cache.get(counts)
        if vec is None:
            vec = _validated_vector(rule(counts), t, name)
            cache[counts] = vec
        return vec

    out: list[Fraction] = []
    counts = [0] * t

    def walk(depth: int, prob: Fraction) -> None:
        if depth == length:
            out.append(prob)
            return
        if prob == 0:
            out.extend([ZERO] * t ** (length - depth))
            return
        vec = predictive(tuple(counts))
        for s in range(t):
            counts[s] += 1
            walk(depth + 1, prob * vec[s])
            counts[s] -= 1

    walk(0, ONE)
    return SequenceLaw(t, length, out)


def is_exchangeable(law: SequenceLaw) -> bool:
    """True iff sequences with equal count vectors get equal probability.

    Class-stored laws satisfy this by construction; dense laws are checked
    sequence by sequence.
    """
    if law.class_table() is not None:
        return True
    seen: dict[tuple[int, ...], Fraction] = {}
    for seq, p in law.items():
        counts = [0] * law.t
        for s in seq:
            counts[s] += 1
        key = tuple(counts)
        prev = seen.setdefault(key, p)
        if prev != p:
            return False
    return True


def has_positive_cylinders(law: SequenceLaw) -> bool:
    """True iff every sequence (hence every cylinder of outcomes) has
    strictly positive probability."""
    table = law.class_table()
    if table is not None:
        return all(p > 0 for p in table.values())
    return all(p > 0 for p in law.probabilities)


def sufficientness_witness(
    rule: PredictiveRule, t: int, max_n: int
) -> tuple[int, tuple[int, ...], tuple[int, ...], Fraction, Fraction] | None:
    """Search all count vectors with at most ``max_n`` observations for a
    violation of the sufficientness property: the predicted probability of
    type j may depend only on (count of j, total count).

    Returns None when the rule passes, otherwise a witness
    (j, counts_a, counts_b, prediction_a, prediction_b) with the two count
    vectors agreeing in type-j tally and total yet predicting differently.
    """
    if not isinstance(t, int) or isinstance(t, bool) or t < 2:
        raise ValueError("need an alphabet of at least two symbols")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    name = getattr(rule, "__name__", "rule")
    seen: dict[
        tuple[int, int, int], tuple[tuple[int, ...], Fraction]
    ] = {}
    for n in range(max_n + 1):
        for counts in _compositions(n, t):
            vec = _validated_vector(rule(counts), t, name)
            for j in range(t):
                key = (j, counts[j], n)
                if key in seen:
                    counts_a, val_a = seen[key]
                    if val_a != vec[j]:
                        return j, counts_a, counts, val_a, vec[j]
                else:
                    seen[key] = (counts, vec[j])
    return None


def satisfies_sufficientness(rule: PredictiveRule, t: int, max_n: int) -> bool:
    """True iff no witness against sufficientness exists up to ``max_n``
    observations (see :func:`sufficientness_witness`)."""
    return sufficientness_witness(rule, t, max_n) is None


class UrnComposition:
    """An urn described by how many balls of each of t >= 2 colors it
    holds. Draws are without replacement."""

    __slots__ = ("colors",)

    def __init__(self, colors: Sequence[int]):
        colors = tuple(colors)
        if len(colors) < 2:
            raise ValueError("an urn needs at least two colors")
        if any(
            not isinstance(c, int) or isinstance(c, bool) or c < 0 for c in colors
        ):
            raise ValueError("ball counts must be nonnegative integers")
        if sum(colors) < 1:
            raise ValueError("the urn must hold at least one ball")
        self.colors = colors

    @property
    def t(self) -> int:
        return len(self.colors)

    @property
    def total(self) -> int:
        return sum(self.colors)

    def __repr__(self) -> str:
        return f"UrnComposition({list(self.colors)})"


def urn_law(urn: UrnComposition, k: int) -> SequenceLaw:
    """Law of k ordered draws without replacement: a sequence with count
    vector c has probability prod_j falling(colors_j, c_j) / falling(N, k),
    the multivariate hypergeometric sampling law. Exchangeable by
    construction; raises SampleTooLarge when k exceeds the urn."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError("k must be at least 1")
    if k > urn.total:
        raise SampleTooLarge(
            f"asked for {k} draws from an urn of {urn.total} balls"
        )
    denom = falling(urn.total, k)
    table: dict[tuple[int, ...], Fraction] = {}
    for counts in _compositions(k, urn.t):
        num = 1
        for balls, c in zip(urn.colors, counts):
            num *= falling(balls, c)
            if num == 0:
                break
        table[counts] = Fraction(num, denom)
    return SequenceLaw.from_class_probabilities(urn.t, k, table)


def canonical_mixture(law: SequenceLaw, k: int) -> SequenceLaw:
    """The finite mixture-of-iid approximation built from a law of length
    n: mix iid draws from theta = (empirical frequencies) using the law's
    own count distribution as the mixing measure, then look at the first
    k coordinates.

    The result is exchangeable and extends to any length; its distance
    from the original law's k-draw restriction is what the finite
    representation bound controls.
    """
    if not isinstance(k, int) or isinstance(k, bool) or not 1 <= k <= law.length:
        raise ValueError("k must satisfy 1 <= k <= law.length")
    n = law.length
    mixing = [
        (m, weight) for m, weight in law.count_distribution().items() if weight != 0
    ]
    table: dict[tuple[int, ...], Fraction] = {}
    for counts in _compositions(k, law.t):
        total = ZERO
        for m, weight in mixing:
            term = weight
            for m_j, c_j in zip(m, counts):
                if c_j == 0:
                    continue
                if m_j == 0:
                    term = ZERO
                    break
                term *= Fraction(m_j, n) ** c_j
            total += term
        table[counts] = total
    return SequenceLaw.from_class_probabilities(law.t, k, table)


def variation_distance(a: SequenceLaw, b: SequenceLaw) -> Fraction:
    """Sum over all sequences of |P_a - P_b| (twice the largest difference
    in probability any event can get)."""
    if a.t != b.t or a.length != b.length:
        raise DimensionMismatch(
            f"laws of shape ({a.t}, {a.length}) and ({b.t}, {b.length})"
        )
    ta, tb = a.class_table(), b.class_table()
    if ta is not None and tb is not None:
        return sum(
            (_multiplicity(c) * abs(ta[c] - tb[c]) for c in ta),
            ZERO,
        )
    return sum(
        (abs(pa - pb) for pa, pb in zip(a.probabilities, b.probabilities)),
        ZERO,
    )


def df_bound(t: int, k: int, n: int) -> Fraction:
    """Distance bound 2*t*k/n for a k-draw restriction of an n-extendable
    exchangeable law against its canonical finite mixture (4k/n when
    t = 2)."""
    if not isinstance(t, int) or isinstance(t, bool) or t < 2:
        raise ValueError("need at least two types")
    if not isinstance(k, int) or not isinstance(n, int) or k < 1 or n < k:
        raise ValueError("need draws 1 <= k <= n")
    return Fraction(2 * t * k, n)


def beta_integral_oracle(a: int, b: int) -> Fraction:
    """Exact Beta function at positive integers from factorials alone:
    B(a, b) = (a-1)! (b-1)! / (a+b-1)!. Independent of the engine's
    rising-factorial routes, which is the point: it anchors the tests."""
    if not isinstance(a, int) or not isinstance(b, int) or a < 1 or b < 1:
        raise ValueError("the factorial form needs positive integers")
    return Fraction(
        math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1)
    )


def admits_exchangeable_extension(law: SequenceLaw) -> bool:
    """Whether a binary exchangeable law of length L is the L-marginal of
    some exchangeable law of length L+1.

    Candidate extensions form a one-parameter family: writing q_j for the
    per-sequence probability of the class with j ones, any extension must
    satisfy q'_j + q'_{j+1} = q_j, so choosing q'_0 determines the rest.
    Each nonnegativity constraint is a half-line in q'_0; the family
    contains a valid law iff the intersection of all of them is nonempty,
    which this checks exactly.
    """
    if law.t != 2:
        raise ValueError("extension analysis is implemented for t = 2 only")
    if not is_exchangeable(law):
        raise ValueError("the law must be exchangeable")
    L = law.length
    q = [
        law.probability((1,) * j + (0,) * (L - j)) for j in range(L + 1)
    ]
    # q'_j = (-1)^j x + c_j with c_0 = 0 and c_{j+1} = q_j - c_j
    lower = ZERO  # from j = 0: x >= 0
    upper: Fraction | None = None
    c = ZERO
    for j in range(L + 1):
        c = q[j] - c
        if (j + 1) % 2 == 0:
            lower = max(lower, -c)
        else:
            upper = c if upper is None else min(upper, c)
    assert upper is not None
    return lower <= upper

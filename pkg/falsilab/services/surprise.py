"""
Exact surprise measures along a sample prefix.

mu_{f,n}(H) = |H restricted to f([n])| / 2^n, S = 1 - mu, S^co(H) = S(H^c).
Every value is a Fraction; nothing here touches floating point.
"""

from fractions import Fraction
from itertools import combinations
from typing import Optional, Tuple, Union

from falsilab.constants import ERROR_MESSAGES
from falsilab.core.bitset import to_string
from falsilab.core.model import (GroundSet, HypothesisClass, PartialAssignment, SamplePrefix,
                                 parse_pattern)
from falsilab.core.operations import (PatternCounter, complement_pattern_count, conditioned_class,
                                      intersection, pattern_count, restrict, union)
from falsilab.exceptions import BadParameter, ZeroCondition
from falsilab.families import describe, make_family
from falsilab.schemas.results import SevereVerdict, SurpriseReport
from falsilab.services.dimensions import growth_value
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)

Rational = Union[Fraction, int, str]


def as_epsilon(epsilon: Rational) -> Fraction:
    """Parse epsilon exactly and require 0 < epsilon < 1."""
    try:
        value = Fraction(epsilon)
    except (ValueError, TypeError, ZeroDivisionError):
        raise BadParameter(ERROR_MESSAGES["epsilon"].format(epsilon))
    if not 0 < value < 1:
        raise BadParameter(ERROR_MESSAGES["epsilon"].format(epsilon))
    return value


def _window(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Tuple[int, ...]:
    prefix.check(hclass.ground)
    return prefix.window(n)


def semi_measure(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Fraction:
    """
    Frequency semi-measure mu_{f,n}(H).

    Raises:
        BadPrefix: If n exceeds the prefix or the prefix is invalid for the ground
    """
    window = _window(hclass, prefix, n)
    return Fraction(pattern_count(hclass, window), 1 << n)


def surprise(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Fraction:
    """S(H, f, n) = 1 - mu_{f,n}(H); positive exactly when a crucial experiment exists at stage n."""
    return 1 - semi_measure(hclass, prefix, n)


def co_surprise(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Fraction:
    """S^co(H, f, n) = S(H^c, f, n), counted from H's fibres."""
    window = _window(hclass, prefix, n)
    return 1 - Fraction(complement_pattern_count(hclass, window), 1 << n)


def surprise_report(
    hclass: HypothesisClass,
    prefix: SamplePrefix,
    n: int,
    epsilon: Optional[Rational] = None,
    observed: Optional[str] = None,
) -> SurpriseReport:
    """mu, S and S^co at stage n; with epsilon and observed data also the severe-surprise verdict."""
    mu = semi_measure(hclass, prefix, n)
    severe = None
    if epsilon is not None and observed is not None:
        severe = severe_surprise(hclass, prefix, n, epsilon, observed)
    return SurpriseReport(
        n=n,
        mu=mu,
        surprise=1 - mu,
        co_surprise=co_surprise(hclass, prefix, n),
        crucial_experiment=mu < 1,
        severe=severe,
    )


def crucial_experiment(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Optional[str]:
    """Smallest outcome pattern on f([n]) that refutes H, or None when H fits every outcome."""
    window = _window(hclass, prefix, n)
    patterns = restrict(hclass, window).patterns
    for pattern in range(len(patterns) + 1):
        if pattern >= 1 << n:
            break
        if pattern not in patterns:
            return to_string(pattern, n)
    return None


def severe_surprise(
    hclass: HypothesisClass, prefix: SamplePrefix, n: int, epsilon: Rational, observed: str
) -> SevereVerdict:
    """
    Severe-surprise verdict at level epsilon for observed data on f([n]).

    Passes iff the data is compatible with H, S(H) > 1 - epsilon and S(H) > S(H^c).

    Raises:
        BadPattern: If observed does not have width n
        BadParameter: If epsilon is outside (0, 1)
    """
    epsilon = as_epsilon(epsilon)
    window = _window(hclass, prefix, n)
    pattern = parse_pattern(observed, n)
    value = surprise(hclass, prefix, n)
    complement_value = co_surprise(hclass, prefix, n)
    return SevereVerdict(
        epsilon=epsilon,
        observed=observed,
        observed_compatible=pattern in restrict(hclass, window).patterns,
        exceeds_threshold=value > 1 - epsilon,
        dominates_complement=value > complement_value,
        surprise=value,
        complement_surprise=complement_value,
    )


def cylinder_class(ground: GroundSet, prefix: SamplePrefix, n: int, pattern: str) -> HypothesisClass:
    """J_s: every trace extending the pattern s on f([n])."""
    prefix.check(ground)
    window = prefix.window(n)
    bits = parse_pattern(pattern, n)
    assign = PartialAssignment(entries=tuple((element, (bits >> j) & 1) for j, element in enumerate(window)))
    return conditioned_class(make_family(describe("full", ground.size)), assign)


def cylinder_co_surprise(ground: GroundSet, pattern: str, prefix: SamplePrefix, n: int) -> Fraction:
    """S^co(J_s, f, n); equals 1/2^n on every atom of the cylinder algebra."""
    return co_surprise(cylinder_class(ground, prefix, n, pattern), prefix, n)


def conditional_co_surprise(
    hclass: HypothesisClass, condition: HypothesisClass, prefix: SamplePrefix, n: int
) -> Fraction:
    """
    S^co(H and J) / S^co(J).

    Raises:
        ZeroCondition: If S^co(J) = 0
    """
    denominator = co_surprise(condition, prefix, n)
    if denominator == 0:
        raise ZeroCondition(ERROR_MESSAGES["zero_condition"])
    return co_surprise(intersection(hclass, condition), prefix, n) / denominator


def surprise_ratio(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> Optional[Fraction]:
    """S(H^c)/S(H), or None when S(H) = 0."""
    value = surprise(hclass, prefix, n)
    if value == 0:
        return None
    return co_surprise(hclass, prefix, n) / value


def measure_defect(first: HypothesisClass, second: HypothesisClass, prefix: SamplePrefix, n: int) -> Fraction:
    """mu(H1) + mu(H2) - mu(H1 union H2); never negative."""
    joined = union(first, second)
    return semi_measure(first, prefix, n) + semi_measure(second, prefix, n) - semi_measure(joined, prefix, n)


def restriction_overlap(first: HypothesisClass, second: HypothesisClass, prefix: SamplePrefix, n: int) -> Fraction:
    """|H1|f([n]) intersect H2|f([n])| / 2^n."""
    window = _window(first, prefix, n)
    shared = restrict(first, window).patterns & restrict(second, window).patterns
    return Fraction(len(shared), 1 << n)


def dense_codense_on(hclass: HypothesisClass, prefix: SamplePrefix, n: int) -> bool:
    """Both H and H^c realize every pattern on f([n])."""
    window = _window(hclass, prefix, n)
    full = 1 << n
    return pattern_count(hclass, window) == full and complement_pattern_count(hclass, window) == full


def worst_case_semi_measure(hclass: HypothesisClass, m: int) -> Fraction:
    """Largest mu over all samples of length m: tau_H(m) / 2^m."""
    tau, _ = growth_value(hclass, m)
    return Fraction(tau, 1 << m)


def epsilon_sample_bound(hclass: HypothesisClass, epsilon: Rational) -> Optional[int]:
    """
    Least m >= 1 with tau_H(m)/2^m <= epsilon, so every sample has S(H, f, m) >= 1 - epsilon.

    mu depends only on the set f([m]), so the worst case over samples is the growth function.
    Returns None when no m within the ground qualifies.
    """
    epsilon = as_epsilon(epsilon)
    for m in range(1, hclass.n + 1):
        if worst_case_semi_measure(hclass, m) <= epsilon:
            return m
    logger.debug(f"No sample length within ground {hclass.n} reaches epsilon={epsilon}")
    return None


def _severe_on_every_window(hclass: HypothesisClass, m: int, epsilon: Fraction) -> bool:
    counter = PatternCounter(hclass)
    threshold = 1 - epsilon
    for window in combinations(range(hclass.n), m):
        value = 1 - Fraction(counter.count(window), 1 << m)
        if value <= threshold:
            return False
        if value <= 1 - Fraction(complement_pattern_count(hclass, window), 1 << m):
            return False
    return True


def severe_horizon(hclass: HypothesisClass, epsilon: Rational) -> Optional[int]:
    """
    Least n such that for every length m from n up to the ground size and every
    sample, compatible data makes H severely surprising at level epsilon.

    Returns None when even the full ground does not qualify.
    """
    epsilon = as_epsilon(epsilon)
    horizon = None
    for m in range(hclass.n, 0, -1):
        if not _severe_on_every_window(hclass, m, epsilon):
            break
        horizon = m
    return horizon

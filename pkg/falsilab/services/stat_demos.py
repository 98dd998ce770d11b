"""
Bernoulli likelihood demos: non-unique and non-existent maximum likelihood
estimators, and the tails-probability threshold.

Unlike the rest of the package these quantities are floats.
"""

from typing import Union

import numpy as np

from config.settings import get_settings
from falsilab.constants import ERROR_MESSAGES
from falsilab.exceptions import BadParameter, EmptyParameterSet
from falsilab.schemas.statistics import CoinData, FiniteParameterSet, IntervalParameterSet, MLEResult
from falsilab.utils.logger import setup_logger

logger = setup_logger(__name__)

ParameterSet = Union[FiniteParameterSet, IntervalParameterSet]


def likelihood(theta: float, data: CoinData) -> float:
    """theta^S * (1 - theta)^(n - S)."""
    if not 0.0 <= theta <= 1.0:
        raise BadParameter(ERROR_MESSAGES["probability"].format("theta", theta))
    return float(theta**data.heads * (1.0 - theta) ** (data.n - data.heads))


def _grid_likelihood(grid: np.ndarray, data: CoinData) -> np.ndarray:
    return grid**data.heads * (1.0 - grid) ** (data.n - data.heads)


def _grid(params: IntervalParameterSet) -> np.ndarray:
    count = int(np.floor((params.hi - params.lo) / params.step + 1e-9)) + 1
    grid = params.lo + params.step * np.arange(count)
    if grid[-1] < params.hi:
        grid = np.append(grid, params.hi)
    grid = np.clip(grid, params.lo, params.hi)
    if params.excluded:
        tolerance = params.step * 1e-6
        keep = ~np.isclose(grid[:, None], np.asarray(params.excluded)[None, :], rtol=0.0, atol=tolerance).any(axis=1)
        grid = grid[keep]
    return grid


def _is_excluded(point: float, params: IntervalParameterSet) -> bool:
    return any(abs(point - excluded) <= params.step * 1e-6 for excluded in params.excluded)


def _search_finite(params: FiniteParameterSet, data: CoinData) -> MLEResult:
    if not params.points:
        raise EmptyParameterSet(ERROR_MESSAGES["empty_parameter_set"])
    values = [likelihood(theta, data) for theta in params.points]
    best = max(values)
    return MLEResult(
        supremum=best,
        attained=True,
        argmax=[theta for theta, value in zip(params.points, values) if value == best],
    )


def _search_interval(params: IntervalParameterSet, data: CoinData) -> MLEResult:
    grid = _grid(params)
    if grid.size == 0:
        raise EmptyParameterSet(ERROR_MESSAGES["empty_parameter_set"])
    values = _grid_likelihood(grid, data)
    best = int(np.argmax(values))

    if data.n == 0:
        # Constant likelihood 1: every admissible point is a maximizer
        maximizer, excluded = None, False
    else:
        maximizer = float(np.clip(data.heads / data.n, params.lo, params.hi))
        excluded = _is_excluded(maximizer, params)
    adjacent = any(abs(grid[best] - point) <= params.step * 1.5 for point in params.excluded)
    attained = not excluded

    supremum = float(values[best])
    if attained and maximizer is not None:
        # S/n may fall between grid points
        argmax = [maximizer]
        supremum = max(supremum, likelihood(maximizer, data))
    elif attained:
        argmax = [float(grid[0])]
    else:
        argmax = None
        logger.debug(f"Supremum approached only at excluded point {maximizer}")
    return MLEResult(
        supremum=supremum,
        attained=attained,
        argmax=argmax,
        grid_supremum=float(values[best]),
        grid_infimum=float(values.min()),
        analytic_maximizer=maximizer,
        analytic_excluded=excluded,
        grid_max_adjacent_to_exclusion=adjacent,
    )


def mle_search(params: ParameterSet, data: CoinData) -> MLEResult:
    """
    Maximize the likelihood over a parameter set.

    Finite sets are searched exactly and report every maximizer. Intervals are
    searched on a grid; attainment is decided by whether the analytic maximizer
    S/n (clipped to the interval) is excluded, since the likelihood is unimodal.

    Raises:
        EmptyParameterSet: If no admissible point remains
    """
    if isinstance(params, FiniteParameterSet):
        return _search_finite(params, data)
    return _search_interval(params, data)


def interval_parameters(lo: float = 0.0, hi: float = 1.0, excluded=(), step=None) -> IntervalParameterSet:
    """IntervalParameterSet with the configured grid step as default."""
    step = get_settings().grid_step if step is None else step
    return IntervalParameterSet(lo=lo, hi=hi, excluded=tuple(excluded), step=step)


def _check_tails(epsilon: float, n: int) -> None:
    if not 0.0 < epsilon < 1.0:
        raise BadParameter(ERROR_MESSAGES["epsilon"].format(epsilon))
    if n < 1:
        raise BadParameter(ERROR_MESSAGES["tails_n"].format(n))


def tails_threshold(epsilon: float, n: int) -> float:
    """(1 - epsilon)^(1/n): any heads-probability above it gives P(at least one tails) < epsilon."""
    _check_tails(epsilon, n)
    return float((1.0 - epsilon) ** (1.0 / n))


def tails_probability(p: float, n: int) -> float:
    """Probability of at least one tails in n flips with heads-probability p."""
    if not 0.0 <= p <= 1.0:
        raise BadParameter(ERROR_MESSAGES["probability"].format("p", p))
    if n < 1:
        raise BadParameter(ERROR_MESSAGES["tails_n"].format(n))
    return 1.0 - p**n

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from falsilab.exceptions import BadParameter, EmptyParameterSet
from falsilab.schemas.statistics import CoinData, FiniteParameterSet, IntervalParameterSet
from falsilab.services.stat_demos import (interval_parameters, likelihood, mle_search, tails_probability,
                                          tails_threshold)


def test_coin_data():
    """Test flips are normalized and counted."""
    data = CoinData(flips="hth")
    assert (data.flips, data.n, data.heads) == ("HTH", 3, 2)
    with pytest.raises(BadParameter):
        CoinData(flips="HX")


def test_likelihood_values():
    """Test the Bernoulli likelihood on the worked values."""
    assert likelihood(0.5, CoinData(flips="HT")) == 0.25
    assert likelihood(0.0, CoinData(flips="HT")) == 0.0
    assert likelihood(1.0, CoinData(flips="HH")) == 1.0
    assert likelihood(0.3, CoinData()) == 1.0
    with pytest.raises(BadParameter):
        likelihood(1.5, CoinData(flips="H"))


def test_mle_not_unique():
    """Test both endpoints maximize the likelihood of one head and one tail."""
    result = mle_search(FiniteParameterSet(points=(1.0, 0.0)), CoinData(flips="HT"))
    assert result.supremum == 0.0
    assert result.attained
    assert result.argmax == [0.0, 1.0]


def test_mle_single_point():
    """Test a one-point parameter set."""
    result = mle_search(FiniteParameterSet(points=(0.5,)), CoinData(flips="HT"))
    assert (result.supremum, result.attained, result.argmax) == (0.25, True, [0.5])


def test_mle_does_not_exist():
    """Test excluding S/n leaves a supremum that is approached but never attained."""
    params = IntervalParameterSet(lo=0.0, hi=1.0, excluded=(0.5,), step=1e-4)
    result = mle_search(params, CoinData(flips="HT"))
    assert not result.attained
    assert result.argmax is None
    assert result.analytic_excluded
    assert result.analytic_maximizer == 0.5
    assert result.grid_max_adjacent_to_exclusion
    assert 0.25 - 1e-4 <= result.supremum < 0.25
    assert result.grid_infimum == 0.0


def test_mle_interval_attained():
    """Test an interval keeping S/n attains its maximum there."""
    result = mle_search(interval_parameters(0.0, 1.0, excluded=(0.25,)), CoinData(flips="HHHT"))
    assert result.attained
    assert result.argmax == [0.75]
    assert result.supremum == pytest.approx(0.75**3 * 0.25, abs=1e-8)


def test_mle_maximizer_between_grid_points():
    """Test the supremum is the likelihood at S/n when S/n is not a grid point."""
    data = CoinData(flips="HTT")
    result = mle_search(interval_parameters(0.0, 1.0), data)
    assert result.attained
    assert result.argmax == [pytest.approx(1 / 3)]
    assert result.supremum == likelihood(1 / 3, data)
    assert result.supremum >= result.grid_supremum
    assert result.grid_supremum < likelihood(1 / 3, data)


def test_mle_clipped_maximizer():
    """Test a maximizer outside the interval is clipped to the nearest bound."""
    result = mle_search(IntervalParameterSet(lo=0.6, hi=0.9, step=0.01), CoinData(flips="HT"))
    assert result.analytic_maximizer == 0.6
    assert result.attained
    excluded = mle_search(IntervalParameterSet(lo=0.6, hi=0.9, excluded=(0.6,), step=0.01), CoinData(flips="HT"))
    assert not excluded.attained


def test_mle_empty_parameter_sets():
    """Test parameter sets without admissible points."""
    with pytest.raises(EmptyParameterSet):
        mle_search(FiniteParameterSet(points=()), CoinData(flips="H"))
    with pytest.raises(EmptyParameterSet):
        mle_search(IntervalParameterSet(lo=0.5, hi=0.5, excluded=(0.5,)), CoinData(flips="H"))
    with pytest.raises(BadParameter):
        IntervalParameterSet(lo=0.7, hi=0.2)
    with pytest.raises(BadParameter):
        IntervalParameterSet(step=0.0)


def test_tails_threshold_values():
    """Test the tails threshold on worked values."""
    assert tails_threshold(0.19, 1) == pytest.approx(0.81)
    assert tails_threshold(0.05, 100) == pytest.approx(0.999487, abs=1e-6)
    with pytest.raises(BadParameter):
        tails_threshold(0.0, 3)
    with pytest.raises(BadParameter):
        tails_threshold(0.1, 0)


@given(epsilon=st.floats(min_value=0.01, max_value=0.99), n=st.integers(min_value=1, max_value=200))
def test_tails_threshold_is_sharp(epsilon, n):
    """Test heads-probabilities just above the threshold keep P(tails) below epsilon, and just below do not."""
    threshold = tails_threshold(epsilon, n)
    assert 1 - min(threshold + 1e-9, 1.0) ** n < epsilon
    assert 1 - (threshold - 1e-9) ** n > epsilon


def test_tails_probability():
    """Test P(at least one tails)."""
    assert tails_probability(0.5, 2) == 0.75
    assert tails_probability(1.0, 10) == 0.0
    with pytest.raises(BadParameter):
        tails_probability(0.5, 0)


@given(
    flips=st.text(alphabet="HT", min_size=1, max_size=12),
    theta=st.floats(min_value=0.0, max_value=1.0),
)
def test_analytic_maximizer_dominates(flips, theta):
    """Test S/n maximizes the likelihood."""
    data = CoinData(flips=flips)
    assert 0.0 <= likelihood(theta, data) <= 1.0
    assert likelihood(data.heads / data.n, data) >= likelihood(theta, data) * (1 - 1e-12)


def test_non_existence_detection():
    """Test every interior S/n excluded from [0, 1] is reported unattained."""
    rng = np.random.default_rng(0)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        heads = int(rng.integers(1, n))
        data = CoinData(flips="H" * heads + "T" * (n - heads))
        params = IntervalParameterSet(excluded=(heads / n,), step=1e-3)
        assert not mle_search(params, data).attained

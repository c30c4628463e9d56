import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from sectorts.association import CrossCorrelogram, ccf, cor_test, pearson_r
from sectorts.decomposition import decompose
from sectorts.errors import LagExceedsDataError, ZeroVarianceError
from sectorts.series import AlignedPair, align


def _pair(x, y):
    return AlignedPair.from_arrays(np.asarray(x, float), np.asarray(y, float))


def _exact_r2(x, y):
    xs, ys = [Fraction(v) for v in x], [Fraction(v) for v in y]
    mx, my = sum(xs) / len(xs), sum(ys) / len(ys)
    sxy = sum((a - mx) * (b - my) for a, b in zip(xs, ys))
    sxx = sum((a - mx) ** 2 for a in xs)
    syy = sum((b - my) ** 2 for b in ys)
    return sxy * sxy / (sxx * syy), sxy


def test_small_example_exact():
    r2, sxy = _exact_r2([1, 2, 4], [2, 2, 5])
    assert r2 == Fraction(25, 28)
    r = pearson_r(_pair([1, 2, 4], [2, 2, 5]))
    assert r == pytest.approx(math.sqrt(25 / 28), abs=1e-15)
    assert r == pytest.approx(0.944911182523068, abs=1e-15)


vectors = st.lists(st.integers(-10_000, 10_000), min_size=3, max_size=40)


@settings(max_examples=80)
@given(vectors, st.data())
def test_r_matches_exact_oracle(x, data):
    y = data.draw(st.lists(st.integers(-10_000, 10_000), min_size=len(x), max_size=len(x)))
    if len(set(x)) < 2 or len(set(y)) < 2:
        return
    r2, sxy = _exact_r2(x, y)
    expected = math.copysign(math.sqrt(float(r2)), float(sxy))
    assert abs(pearson_r(_pair(x, y)) - expected) <= 1e-12


def test_self_correlation(bundled):
    s = bundled["it"]
    assert pearson_r(align(s, s)) == pytest.approx(1.0, abs=1e-15)


@settings(max_examples=60)
@given(st.lists(st.floats(-1e3, 1e3), min_size=5, max_size=30, unique=True),
       st.floats(0.01, 100), st.floats(-1e3, 1e3), st.booleans())
def test_affine_invariance(x, a, b, flip):
    x = np.asarray(x)
    y = np.sin(x) + 0.1 * x
    if np.ptp(y) < 1e-6:
        return
    sign = -1.0 if flip else 1.0
    r1 = pearson_r(_pair(x, y))
    r2 = pearson_r(_pair(sign * a * x + b, y))
    assert abs(r2 - sign * r1) <= 1e-9


def test_zero_correlation_test():
    test = cor_test(_pair([1, 2, 3, 4, 5], [1, -1, 0, -1, 1]))
    assert test.r == 0.0 and test.t == 0.0 and test.p == pytest.approx(1.0)
    assert test.df == 3


def test_perfect_line_is_degenerate():
    test = cor_test(_pair([1, 2, 3, 4], [3, 5, 7, 9]))
    assert test.degenerate and test.r == 1.0
    assert test.t == math.inf and test.p == 0.0
    assert test.p_display() == "< 2.2e-16"


def test_constant_input():
    with pytest.raises(ZeroVarianceError):
        pearson_r(_pair([1, 1, 1], [1, 2, 3]))


def test_p_display():
    test = cor_test(_pair([1, 2, 3, 4, 5, 6], [2, 1, 4, 3, 6, 5]))
    assert test.p_display() == f"{test.p:.4g}"


@settings(max_examples=60)
@given(st.lists(st.floats(-1e4, 1e4), min_size=10, max_size=50), st.integers(0, 7))
def test_ccf_antisymmetry_and_bounds(x, max_lag):
    x = np.asarray(x)
    y = np.roll(x, 3) + np.cos(np.arange(x.size))
    if np.ptp(x) < 1e-100 or np.ptp(y) < 1e-100:
        return
    fwd = ccf(_pair(x, y), max_lag)
    back = ccf(_pair(y, x), max_lag)
    for k in fwd.lags:
        assert fwd[int(k)] == back[-int(k)]
    assert np.all(np.abs(fwd.values) <= 1 + 1e-12)


def test_ccf_lag_zero_is_pearson(bundled):
    pair = align(bundled["it"], bundled["djia"])
    assert ccf(pair)[0] == pytest.approx(pearson_r(pair), abs=1e-14)


def test_ccf_detects_shift():
    t = np.arange(60)
    y = np.sin(2 * np.pi * t / 17) + 0.01 * t
    x = np.roll(y, 4)  # x[t] = y[t-4], so x[t+4] lines up with y[t]
    cg = ccf(_pair(x, y), 8)
    assert cg.argmax() == 4


def test_seasonal_lag(bundled):
    a = decompose(bundled["it"]).seasonal_series()
    b = decompose(bundled["djia"]).seasonal_series()
    cg = ccf(align(a, b), 24)
    assert abs(cg.argmax()) == 3
    assert cg.lag_year_fraction(3) == 0.25


def test_lag_exceeds_data():
    with pytest.raises(LagExceedsDataError):
        ccf(_pair(range(10), [1, 3, 2, 5, 4, 6, 8, 7, 9, 10]), 8)


def test_correlogram_ties_prefer_small_lag():
    cg = CrossCorrelogram(2, [0.5, 0.1, 0.2, 0.1, 0.5])
    assert cg.argmax() in (-2, 2)
    cg = CrossCorrelogram(1, [0.3, -0.3, 0.3])
    assert cg.argmax_abs() == 0
    with pytest.raises(KeyError):
        cg[2]


def test_underflowing_variance_is_zero_variance():
    with pytest.raises(ZeroVarianceError):
        pearson_r(_pair([0, 0, 1e-244], [1, 2, 3]))
    with pytest.raises(ZeroVarianceError):
        ccf(_pair([0.0] * 9 + [1e-244], range(10)), 0)

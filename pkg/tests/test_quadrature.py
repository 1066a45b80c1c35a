import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from qentropy.quadrature import (
    Interval,
    NonConvergent,
    integrate,
    integrate_oscillatory_tail,
    integrate_panels,
    periodic_product_tail,
)


def test_gaussian_whole_line():
    r = integrate(lambda x: np.exp(-x * x), (-math.inf, math.inf))
    assert r.value == pytest.approx(math.sqrt(math.pi), rel=1e-12)
    assert r.abs_error_estimate <= 1e-10 * r.value


def test_cauchy_heavy_tail():
    r = integrate(lambda x: 1.0 / (1.0 + x * x), (0.0, math.inf))
    assert r.value == pytest.approx(math.pi / 2, rel=1e-10)


@given(st.floats(0.3, 5.0), st.floats(0.5, 3.0))
def test_power_exponential_against_gamma(p, lam):
    # int_0^inf x^(p-1) e^(-lam x) = Gamma(p) / lam^p
    r = integrate(lambda x: x ** (p - 1) * np.exp(-lam * x), (0.0, math.inf), rel_tol=1e-10)
    assert r.value == pytest.approx(math.gamma(p) / lam ** p, rel=1e-8)


def test_interior_cusp_breakpoint():
    f = lambda x: np.abs(x - 0.3) ** 0.5
    exact = (2 / 3) * (0.3 ** 1.5 + 0.7 ** 1.5)
    r = integrate(f, (0.0, 1.0), points=(0.3,))
    assert r.value == pytest.approx(exact, rel=1e-11)


def test_log_endpoint_singularity():
    r = integrate(lambda x: np.log(x), (0.0, 1.0))
    assert r.value == pytest.approx(-1.0, rel=1e-10)


def test_nonconvergent_carries_best_estimate():
    with pytest.raises(NonConvergent) as info:
        integrate(lambda x: np.sin(1.0 / x) / x, (1e-6, 1.0), rel_tol=1e-12, max_subdivisions=20)
    assert math.isfinite(info.value.best.value)


def test_rejects_bad_tolerance_and_interval():
    with pytest.raises(ValueError):
        integrate(lambda x: x, (0.0, 1.0), rel_tol=1e-16)
    with pytest.raises(ValueError):
        Interval(1.0, 0.0)


def test_panels_polynomial_exact():
    r = integrate_panels(lambda x: 3 * x ** 2, 0.0, 2.0, 7)
    assert r.value == pytest.approx(8.0, rel=1e-14)


def test_oscillatory_tail_levin():
    # int_pi^inf sin^2(x)/x^2 = pi/2 - int_0^pi sin^2(x)/x^2
    f = lambda x: np.sin(x) ** 2 / (x * x)
    head = integrate(lambda x: np.sinc(x / math.pi) ** 2, (0.0, math.pi)).value
    r = integrate_oscillatory_tail(f, math.pi, math.pi, rel_tol=1e-9)
    assert r.value == pytest.approx(math.pi / 2 - head, rel=1e-8)


def test_oscillatory_tail_with_model():
    f = lambda x: np.sin(0.5 * x) ** 2 / (x * x)
    model = periodic_product_tail(
        [(lambda u: np.sin(0.5 * u) ** 2, lambda u: 1.0 / (u * u), lambda z: 1.0 / z)],
        2 * math.pi, 0.0)
    r = integrate_oscillatory_tail(f, 2 * math.pi, 2 * math.pi, rel_tol=1e-10, tail_model=model)
    # int_0^inf sin^2(x/2)/x^2 = pi/4
    head = integrate(f, (0.0, 2 * math.pi)).value
    assert r.value + head == pytest.approx(math.pi / 4, rel=1e-9)


def test_oscillatory_tail_bad_period():
    with pytest.raises(ValueError):
        integrate_oscillatory_tail(lambda x: x, 0.0, 1.0)

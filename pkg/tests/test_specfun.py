"""Special-function evaluation and quadrature against independent oracles."""

import math

import mpmath
import numpy as np
import pytest
import scipy.special
from hypothesis import given, settings
from hypothesis import strategies as st

from dunkl_oscillator.errors import DomainError
from dunkl_oscillator.profiles import DeformationParams
from dunkl_oscillator.specfun import (
    angular_inner_product,
    default_rmax,
    gauss_legendre,
    jacobi,
    jacobi_derivative,
    laguerre,
    laguerre_all,
    laguerre_derivative,
    log_gamma,
    radial_inner_product,
)


# --- polynomial evaluation ---------------------------------------------------


@pytest.mark.parametrize("n", [0, 1, 2, 5, 9])
@pytest.mark.parametrize("alpha", [-0.5, 0.0, 0.7, 2.0, 3.8])
def test_laguerre_matches_scipy(n, alpha):
    x = np.linspace(0.0, 25.0, 40)
    expected = scipy.special.eval_genlaguerre(n, alpha, x)
    np.testing.assert_allclose(laguerre(n, alpha, x), expected, rtol=1e-12, atol=1e-12)


def test_laguerre_matches_mpmath_high_precision():
    mpmath.mp.dps = 40
    for n, alpha, x in [(3, 0.4, 1.7), (7, -0.3, 9.2), (12, 2.5, 0.3)]:
        expected = float(mpmath.laguerre(n, alpha, x))
        assert laguerre(n, alpha, x) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_laguerre_scalar_in_scalar_out():
    out = laguerre(4, 1.0, 2.0)
    assert np.ndim(out) == 0
    assert isinstance(float(out), float)


def test_laguerre_all_consistent_with_single():
    x = np.linspace(0.0, 12.0, 15)
    table = laguerre_all(6, 0.8, x)
    assert table.shape == (7, 15)
    for n in range(7):
        np.testing.assert_allclose(table[n], laguerre(n, 0.8, x), rtol=1e-14, atol=1e-14)


def test_laguerre_derivative_is_shifted_polynomial():
    x = np.linspace(0.0, 10.0, 25)
    for n, alpha in [(1, 0.0), (4, 1.3), (6, -0.2)]:
        expected = -scipy.special.eval_genlaguerre(n - 1, alpha + 1.0, x)
        np.testing.assert_allclose(
            laguerre_derivative(n, alpha, x), expected, rtol=1e-12, atol=1e-12
        )
    np.testing.assert_allclose(laguerre_derivative(0, 0.5, x), np.zeros_like(x))


@pytest.mark.parametrize("n", [0, 1, 3, 6, 10])
@pytest.mark.parametrize("ab", [(-0.5, -0.5), (0.0, 0.0), (1.2, -0.3), (2.0, 3.5)])
def test_jacobi_matches_scipy(n, ab):
    alpha, beta = ab
    x = np.linspace(-1.0, 1.0, 33)
    expected = scipy.special.eval_jacobi(n, alpha, beta, x)
    np.testing.assert_allclose(jacobi(n, alpha, beta, x), expected, rtol=1e-11, atol=1e-12)


def test_jacobi_matches_mpmath_high_precision():
    mpmath.mp.dps = 40
    for n, a, b, x in [(2, 0.3, 1.1, -0.4), (8, -0.45, 0.2, 0.9), (5, 2.0, 2.0, 0.1)]:
        expected = float(mpmath.jacobi(n, a, b, x))
        assert jacobi(n, a, b, x) == pytest.approx(expected, rel=1e-12, abs=1e-13)


def test_jacobi_derivative_matches_scipy_identity():
    x = np.linspace(-0.95, 0.95, 21)
    for n, a, b in [(1, 0.0, 0.0), (4, 1.3, -0.2), (7, 0.5, 2.1)]:
        expected = 0.5 * (n + a + b + 1.0) * scipy.special.eval_jacobi(
            n - 1, a + 1.0, b + 1.0, x
        )
        np.testing.assert_allclose(
            jacobi_derivative(n, a, b, x), expected, rtol=1e-11, atol=1e-12
        )
    np.testing.assert_allclose(jacobi_derivative(0, 0.7, 0.7, x), np.zeros_like(x))


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=12),
    alpha=st.floats(min_value=-0.9, max_value=3.0),
    x=st.floats(min_value=0.0, max_value=30.0),
)
def test_laguerre_random_inputs_match_scipy(n, alpha, x):
    expected = scipy.special.eval_genlaguerre(n, alpha, x)
    assert laguerre(n, alpha, x) == pytest.approx(expected, rel=1e-10, abs=1e-10)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=0, max_value=10),
    alpha=st.floats(min_value=-0.9, max_value=2.5),
    beta=st.floats(min_value=-0.9, max_value=2.5),
    x=st.floats(min_value=-1.0, max_value=1.0),
)
def test_jacobi_random_inputs_match_scipy(n, alpha, beta, x):
    expected = scipy.special.eval_jacobi(n, alpha, beta, x)
    assert jacobi(n, alpha, beta, x) == pytest.approx(expected, rel=1e-9, abs=1e-10)


def test_polynomial_domain_errors():
    with pytest.raises(DomainError):
        laguerre(-1, 0.0, 1.0)
    with pytest.raises(DomainError):
        laguerre(2, -1.0, 1.0)
    with pytest.raises(DomainError):
        jacobi(3, -1.2, 0.0, 0.5)
    with pytest.raises(DomainError):
        jacobi(-2, 0.0, 0.0, 0.5)


# --- log-gamma ---------------------------------------------------------------


def test_log_gamma_matches_mpmath():
    mpmath.mp.dps = 50
    for x in [1e-3, 0.1, 0.5, 1.0, 1.7, 4.2, 11.0, 87.5, 400.0]:
        expected = float(mpmath.loggamma(x))
        assert log_gamma(x) == pytest.approx(expected, rel=1e-13, abs=1e-13)


def test_log_gamma_functional_equation():
    for x in [0.3, 1.9, 7.7]:
        assert log_gamma(x + 1.0) == pytest.approx(log_gamma(x) + math.log(x), rel=1e-14)


def test_log_gamma_rejects_nonpositive():
    with pytest.raises(DomainError):
        log_gamma(0.0)
    with pytest.raises(DomainError):
        log_gamma(-2.5)


# --- quadrature --------------------------------------------------------------


def test_gauss_legendre_exact_for_polynomials():
    rule = gauss_legendre(8, 0.5, 3.0)
    for degree in range(16):
        exact = (3.0 ** (degree + 1) - 0.5 ** (degree + 1)) / (degree + 1)
        got = rule.integrate(lambda x: x**degree)
        assert got == pytest.approx(exact, rel=1e-13)


def test_gauss_legendre_node_count_and_domain():
    rule = gauss_legendre(12, -2.0, 5.0)
    assert rule.nodes.shape == (12,)
    assert np.all(rule.nodes > -2.0) and np.all(rule.nodes < 5.0)
    assert rule.weights.sum() == pytest.approx(7.0, rel=1e-14)


def test_radial_inner_product_against_gamma_integrals():
    mpmath.mp.dps = 30
    for mu_pair, a, b in [((0.0, 0.0), 0.0, 2.0), ((0.5, 0.5), 1.0, 3.0), ((0.3, 1.2), 0.5, 0.5)]:
        mu = DeformationParams(*mu_pair)

        def f(r, a=a):
            return r**a * np.exp(-0.5 * r * r)

        def g(r, b=b):
            return r**b * np.exp(-0.5 * r * r)

        # integral of r^(a+b+1+2 mu_s) e^(-r^2) dr = Gamma((a+b+2+2 mu_s)/2) / 2
        exact = float(0.5 * mpmath.gamma(0.5 * (a + b + 2.0 + 2.0 * mu.total)))
        assert radial_inner_product(f, g, mu) == pytest.approx(exact, rel=1e-12)


def test_angular_inner_product_against_beta_integrals():
    mpmath.mp.dps = 30
    for mu_pair in [(0.0, 0.0), (0.5, 0.5), (0.3, 1.2), (1.1, 0.2)]:
        mu = DeformationParams(*mu_pair)
        one = lambda phi: np.ones_like(phi)
        # full-circle weight integral: 2 Gamma(mu1+1/2) Gamma(mu2+1/2) / Gamma(mu1+mu2+1)
        exact = float(
            2.0
            * mpmath.gamma(mu.mu1 + 0.5)
            * mpmath.gamma(mu.mu2 + 0.5)
            / mpmath.gamma(mu.total + 1.0)
        )
        assert angular_inner_product(one, one, mu) == pytest.approx(exact, rel=1e-11)


def test_angular_inner_product_cosine_moment():
    mpmath.mp.dps = 30
    mu = DeformationParams(0.7, 0.25)
    cos2 = lambda phi: np.cos(phi) ** 2
    one = lambda phi: np.ones_like(phi)
    exact = float(
        2.0
        * mpmath.gamma(mu.mu1 + 1.5)
        * mpmath.gamma(mu.mu2 + 0.5)
        / mpmath.gamma(mu.total + 2.0)
    )
    assert angular_inner_product(cos2, one, mu) == pytest.approx(exact, rel=1e-11)


def test_inner_product_complex_values_pass_through():
    mu = DeformationParams(0.5, 0.5)
    f = lambda r: (1.0 + 2.0j) * np.exp(-0.5 * r * r)
    g = lambda r: np.exp(-0.5 * r * r)
    val = radial_inner_product(f, g, mu)
    assert isinstance(val, complex)
    assert val.imag == pytest.approx(2.0 * val.real / 1.0, rel=1e-12)


def test_inner_product_domain_errors():
    with pytest.raises(DomainError):
        radial_inner_product(lambda r: r, lambda r: r, DeformationParams(0.5, 0.5), rmax=-1.0)
    with pytest.raises(DomainError):
        radial_inner_product(lambda r: r, lambda r: r, DeformationParams(0.5, 0.5), npoints=4)
    with pytest.raises(DomainError):
        angular_inner_product(
            lambda p: p, lambda p: p, DeformationParams(0.5, 0.5), npoints=8
        )


def test_default_rmax_floor_and_growth():
    assert default_rmax(3.0) == pytest.approx(12.0)
    assert default_rmax(200.0) > default_rmax(50.0) > 12.0

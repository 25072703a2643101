"""Named self-verification checks over the whole library.

Each check computes a single residual (smaller is better) and compares it to a
named tolerance.  Checks are grouped into suites (angular, radial, algebra,
coherent); ``run_checks`` executes a suite deterministically — randomized
inputs derive from per-check seeds — and optionally in a thread pool whose
width is capped by the DUNKL_OSC_THREADS environment variable.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import coherent as co
from . import su11
from .basis import (
    AngularQuantum,
    RadialQuantum,
    angular_norm,
    angular_wavefunction,
    energy,
    enumerate_states,
    radial_sturmian,
    separation_constant,
    substitute_u,
)
from .dunkl_ops import apply_angular_operator, apply_hamiltonian, apply_radial_hamiltonian
from .errors import DomainError
from .profiles import (
    DeformationParams,
    GaussLaguerreSum,
    PlaneFunction,
    angular_grid,
    residual_grid,
)
from .specfun import angular_inner_product, radial_inner_product

__all__ = ["CheckResult", "VerifyContext", "SUITES", "available_checks", "run_checks"]

SUITES = ("angular", "radial", "algebra", "coherent")


@dataclass(frozen=True)
class VerifyContext:
    """Configuration shared by all checks in one run."""

    mu: DeformationParams
    seed: int = 0


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check."""

    name: str
    suite: str
    residual: float
    tolerance: float
    passed: bool
    error: str | None = None


@dataclass(frozen=True)
class _Check:
    name: str
    suite: str
    tolerance: float
    fn: Callable[[VerifyContext], float]


_REGISTRY: list[_Check] = []


def _register(name: str, suite: str, tolerance: float):
    def wrap(fn):
        _REGISTRY.append(_Check(name=name, suite=suite, tolerance=tolerance, fn=fn))
        return fn

    return wrap


def _sector_labels(mmax: Fraction, mu: DeformationParams) -> list[AngularQuantum]:
    """All angular labels with m <= mmax, across the four parity sectors."""
    out = []
    for s1, s2 in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        if (s1, s2) == (1, 1):
            m = Fraction(0)
        elif (s1, s2) == (-1, -1):
            m = Fraction(1)
        else:
            m = Fraction(1, 2)
        while m <= mmax:
            out.append(AngularQuantum.build(s1, s2, m, mu))
            m += 1
    return out


_MU_PAIRS = ((0.0, 0.0), (0.5, 0.5), (0.3, 1.2))


@_register("angular_gram_identity", "angular", 1e-9)
def _check_angular_gram(ctx: VerifyContext) -> float:
    worst = 0.0
    mu_pairs = _MU_PAIRS + ((ctx.mu.mu1, ctx.mu.mu2),)
    for pair in mu_pairs:
        mu = DeformationParams(*pair)
        labels = _sector_labels(Fraction(4), mu)
        fns = [angular_wavefunction(q, mu) for q in labels]
        for i, f in enumerate(fns):
            for j in range(i, len(fns)):
                val = angular_inner_product(f, fns[j], mu)
                expect = 1.0 if i == j else 0.0
                worst = max(worst, abs(val - expect))
    return worst


@_register("angular_ground_norm_limit", "angular", 1e-10)
def _check_angular_ground_norm(ctx: VerifyContext) -> float:
    # The m = 0 constant must hit 1/sqrt(2 pi) exactly at mu = 0 and stay
    # smooth arbitrarily close to it (no 0 * Gamma(0) indeterminacy).
    target = 1.0 / math.sqrt(2.0 * math.pi)
    worst = abs(angular_norm(0, 0, 0, DeformationParams(0.0, 0.0)) - target)
    for eps in (1e-12, 1e-13):
        near = angular_norm(0, 0, 0, DeformationParams(eps, eps))
        worst = max(worst, abs(near - target))
    return worst


@_register("angular_eigen_residual", "angular", 1e-8)
def _check_angular_eigen(ctx: VerifyContext) -> float:
    grid = angular_grid(64)
    worst = 0.0
    mu_pairs = _MU_PAIRS + ((ctx.mu.mu1, ctx.mu.mu2),)
    for pair in mu_pairs:
        mu = DeformationParams(*pair)
        for q in _sector_labels(Fraction(3), mu):
            phi_fn = angular_wavefunction(q, mu)
            image = apply_angular_operator(phi_fn, mu)
            resid = image(grid) - 0.5 * q.l2 * phi_fn(grid)
            worst = max(worst, float(np.max(np.abs(resid))))
    return worst


@_register("angular_reflection_parity", "angular", 1e-12)
def _check_angular_parity(ctx: VerifyContext) -> float:
    grid = angular_grid(64)
    worst = 0.0
    for q in _sector_labels(Fraction(3), ctx.mu):
        phi_fn = angular_wavefunction(q, ctx.mu)
        base = phi_fn(grid)
        worst = max(worst, float(np.max(np.abs(phi_fn(np.pi - grid) - q.s1 * base))))
        worst = max(worst, float(np.max(np.abs(phi_fn(-grid) - q.s2 * base))))
    return worst


_M_SAMPLES = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2))


@_register("radial_gram_identity", "radial", 1e-9)
def _check_radial_gram(ctx: VerifyContext) -> float:
    worst = 0.0
    mu_pairs = ((0.0, 0.0), (0.5, 0.5), (ctx.mu.mu1, ctx.mu.mu2))
    for pair in mu_pairs:
        mu = DeformationParams(*pair)
        for m in _M_SAMPLES:
            fns = [radial_sturmian(RadialQuantum.from_m(n, m, mu), mu) for n in range(7)]
            for i, f in enumerate(fns):
                for j in range(i, len(fns)):
                    val = radial_inner_product(f, fns[j], mu)
                    expect = 1.0 if i == j else 0.0
                    worst = max(worst, abs(val - expect))
    return worst


@_register("radial_eigen_residual", "radial", 1e-8)
def _check_radial_eigen(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    mu_pairs = ((0.0, 0.0), (ctx.mu.mu1, ctx.mu.mu2))
    for pair in mu_pairs:
        mu = DeformationParams(*pair)
        for m in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(3)):
            l2 = separation_constant(m, mu)
            for n in range(7):
                R = radial_sturmian(RadialQuantum.from_m(n, m, mu), mu)
                image = apply_radial_hamiltonian(R, mu, l2)
                E = energy(n, m, mu)
                resid = image(grid) - E * R(grid)
                worst = max(worst, float(np.max(np.abs(resid))))
    return worst


@_register("radial_substitution_roundtrip", "radial", 1e-12)
def _check_substitution_roundtrip(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        R = radial_sturmian(RadialQuantum.from_m(1, m, ctx.mu), ctx.mu)
        back = substitute_u(substitute_u(R, ctx.mu, "r_to_u"), ctx.mu, "u_to_r")
        worst = max(worst, float(np.max(np.abs(back(grid) - R(grid)))))
    return worst


@_register("radial_flat_picture_eigen", "radial", 1e-9)
def _check_flat_picture(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in range(4):
            R = radial_sturmian(RadialQuantum.from_m(n, m, ctx.mu), ctx.mu)
            U = substitute_u(R, ctx.mu, "r_to_u")
            image = su11.apply_B0(U, l2, ctx.mu)
            E = energy(n, m, ctx.mu)
            worst = max(worst, float(np.max(np.abs(image(grid) - 0.5 * E * U(grid)))))
    return worst


@_register("spectrum_energy_values", "radial", 1e-12)
def _check_energy_values(ctx: VerifyContext) -> float:
    worst = abs(energy(0, 0, DeformationParams(0.0, 0.0)) - 1.0)
    worst = max(worst, abs(energy(2, 1, DeformationParams(0.25, 0.75)) - 8.0))
    worst = max(worst, abs(energy(0, Fraction(1, 2), DeformationParams(0.0, 0.0)) - 2.0))
    for nr in (1, 2, 3):
        for m in (Fraction(0), Fraction(1, 2), Fraction(3)):
            worst = max(
                worst, abs(energy(nr, m, ctx.mu) - energy(nr - 1, m + 1, ctx.mu))
            )
    return worst


@_register("spectrum_degeneracy", "radial", 0.5)
def _check_degeneracy(ctx: VerifyContext) -> float:
    mu0 = DeformationParams(0.0, 0.0)
    states = enumerate_states(3.0, mu0)
    energies = sorted(st.energy for st in states)
    level3 = sum(1 for st in states if abs(st.energy - 3.0) < 1e-9)
    bad = 0.0
    if energies != [1.0, 2.0, 2.0, 3.0, 3.0, 3.0]:
        bad = 1.0
    if level3 != 3:
        bad = 1.0
    if enumerate_states(0.5, mu0):
        bad = 1.0
    return bad


def _plain_laguerre(n: int, alpha_int: int, x: np.ndarray) -> np.ndarray:
    """Integer-coefficient Laguerre polynomial by its explicit binomial series."""
    out = np.zeros_like(x)
    for i in range(n + 1):
        out = out + (-1) ** i * math.comb(n + alpha_int, n - i) * x**i / math.factorial(i)
    return out


@_register("mu_zero_reduction", "radial", 1e-12)
def _check_mu_zero_reduction(ctx: VerifyContext) -> float:
    mu0 = DeformationParams(0.0, 0.0)
    grid = residual_grid(50, 0.05, 8.0)
    worst = 0.0
    for m in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
        ell = int(2 * m)
        for n in range(5):
            R = radial_sturmian(RadialQuantum.from_m(n, m, mu0), mu0)
            norm = math.sqrt(2.0 * math.factorial(n) / math.factorial(n + ell))
            ref = norm * grid**ell * np.exp(-0.5 * grid * grid) * _plain_laguerre(
                n, ell, grid * grid
            )
            worst = max(worst, float(np.max(np.abs(R(grid) - ref))))
    return worst


_CARTESIAN_STATES = (
    (1, 1, Fraction(0), 0),
    (1, 1, Fraction(1), 1),
    (-1, -1, Fraction(1), 0),
    (1, -1, Fraction(1, 2), 1),
    (-1, 1, Fraction(3, 2), 0),
)


@_register("hamiltonian_cartesian_residual", "radial", 1e-6)
def _check_cartesian_hamiltonian(ctx: VerifyContext) -> float:
    pts = np.array([0.31, 0.77, 1.43, 2.1])
    xs, ys = np.meshgrid(pts, pts * 0.83 + 0.11)
    xs = np.concatenate([xs.ravel(), -xs.ravel()])
    ys = np.concatenate([ys.ravel(), ys.ravel()])
    worst = 0.0
    for s1, s2, m, nr in _CARTESIAN_STATES:
        q = AngularQuantum.build(s1, s2, m, ctx.mu)
        R = radial_sturmian(RadialQuantum.from_m(nr, m, ctx.mu), ctx.mu)
        phi_fn = angular_wavefunction(q, ctx.mu)

        def fn(x, y, R=R, phi_fn=phi_fn):
            r = np.hypot(x, y)
            return R(r) * phi_fn(np.arctan2(y, x))

        f = PlaneFunction(fn=fn, parity=(s1, s2))
        image = apply_hamiltonian(f, ctx.mu)
        E = energy(nr, m, ctx.mu)
        resid = image(xs, ys) - E * f(xs, ys)
        worst = max(worst, float(np.max(np.abs(resid))))
    return worst


@_register("ladder_raise", "algebra", 1e-7)
def _check_ladder_raise(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in range(5):
            low = RadialQuantum.from_m(n, m, ctx.mu)
            high = RadialQuantum.from_m(n + 1, m, ctx.mu)
            coeff = su11.ladder_coefficients(su11.AlgebraState(low.k, n), "+")
            image = su11.apply_A(radial_sturmian(low, ctx.mu), "+", ctx.mu, l2)
            target = coeff * radial_sturmian(high, ctx.mu)(grid)
            worst = max(worst, float(np.max(np.abs(image(grid) - target))))
    return worst


@_register("ladder_lower", "algebra", 1e-7)
def _check_ladder_lower(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in range(1, 6):
            high = RadialQuantum.from_m(n, m, ctx.mu)
            low = RadialQuantum.from_m(n - 1, m, ctx.mu)
            coeff = su11.ladder_coefficients(su11.AlgebraState(high.k, n), "-")
            image = su11.apply_A(radial_sturmian(high, ctx.mu), "-", ctx.mu, l2)
            target = coeff * radial_sturmian(low, ctx.mu)(grid)
            worst = max(worst, float(np.max(np.abs(image(grid) - target))))
    return worst


@_register("ladder_diagonal", "algebra", 1e-7)
def _check_ladder_diagonal(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in range(5):
            q = RadialQuantum.from_m(n, m, ctx.mu)
            R = radial_sturmian(q, ctx.mu)
            image = su11.apply_A(R, "0", ctx.mu, l2)
            coeff = su11.ladder_coefficients(su11.AlgebraState(q.k, n), "0")
            worst = max(worst, float(np.max(np.abs(image(grid) - coeff * R(grid)))))
    return worst


@_register("lowest_weight_annihilation", "algebra", 1e-9)
def _check_lowest_weight(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        R = radial_sturmian(RadialQuantum.from_m(0, m, ctx.mu), ctx.mu)
        image = su11.apply_A(R, "-", ctx.mu, l2)
        scale = float(np.max(np.abs(R(grid))))
        worst = max(worst, float(np.max(np.abs(image(grid)))) / scale)
    return worst


def _random_profiles(seed_parts: tuple[int, ...], count: int) -> list[GaussLaguerreSum]:
    rng = np.random.default_rng(seed_parts)
    out = []
    for _ in range(count):
        coeffs = rng.uniform(-1.0, 1.0, size=rng.integers(3, 7))
        out.append(GaussLaguerreSum.gaussian_polynomial(coeffs))
    return out


@_register("commutator_closure", "algebra", 1e-6)
def _check_commutators(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for idx, profile in enumerate(_random_profiles((ctx.seed, 101), 10)):
        l2 = float(idx % 3)
        for pair in ("0+", "0-", "-+"):
            worst = max(
                worst, su11.commutator_residual(pair, profile, ctx.mu, l2, grid)
            )
    return worst


@_register("casimir_scalar", "algebra", 1e-7)
def _check_casimir(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in (0, 2):
            q = RadialQuantum.from_m(n, m, ctx.mu)
            R = radial_sturmian(q, ctx.mu)
            worst = max(worst, su11.casimir_check(R, q.k, ctx.mu, l2, grid))
    return worst


@_register("half_hamiltonian_identity", "algebra", 1e-12)
def _check_half_hamiltonian(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for idx, profile in enumerate(_random_profiles((ctx.seed, 202), 6)):
        l2 = float((idx % 3) + idx * 0.25)
        diag = su11.apply_A(profile, "0", ctx.mu, l2)
        halfh = apply_radial_hamiltonian(profile, ctx.mu, l2)
        worst = max(worst, float(np.max(np.abs(diag(grid) - 0.5 * halfh(grid)))))
    return worst


@_register("factorization_identity", "algebra", 1e-8)
def _check_factorization(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in range(4):
            R = radial_sturmian(RadialQuantum.from_m(n, m, ctx.mu), ctx.mu)
            U = substitute_u(R, ctx.mu, "r_to_u")
            E = energy(n, m, ctx.mu)
            for branch in ("upper", "lower"):
                worst = max(
                    worst,
                    su11.factorization_residual(U, E, l2, ctx.mu, branch, grid),
                )
    return worst


@_register("factorization_constants", "algebra", 1e-12)
def _check_factorization_constants(ctx: VerifyContext) -> float:
    mu0 = DeformationParams(0.0, 0.0)
    consts = su11.schrodinger_factorize(1.0, 0.0, mu0, "upper")
    worst = abs(consts.g - (-3.5))
    val = su11.factorization_product_eigenvalue(3.0, 0.0, mu0, "upper")
    worst = max(worst, abs(val - 4.0))
    return worst


@_register("flat_weighted_conjugation", "algebra", 1e-10)
def _check_conjugation(ctx: VerifyContext) -> float:
    grid = residual_grid()
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        for n in (0, 3):
            R = radial_sturmian(RadialQuantum.from_m(n, m, ctx.mu), ctx.mu)
            U = substitute_u(R, ctx.mu, "r_to_u")
            via_flat = su11.apply_B0(U, l2, ctx.mu)
            via_weighted = substitute_u(
                su11.apply_A(R, "0", ctx.mu, l2), ctx.mu, "r_to_u"
            )
            worst = max(worst, float(np.max(np.abs(via_flat(grid) - via_weighted(grid)))))
    return worst


@_register("bargmann_roots", "algebra", 1e-12)
def _check_bargmann(ctx: VerifyContext) -> float:
    worst = 0.0
    for m in _M_SAMPLES:
        l2 = separation_constant(m, ctx.mu)
        target = 0.25 * (ctx.mu.total**2 + l2 - 1.0)
        k_plus, k_minus = su11.bargmann_index(m, ctx.mu)
        worst = max(worst, abs(k_plus * (k_plus - 1.0) - target))
        worst = max(worst, abs(k_minus * (k_minus - 1.0) - target))
        if not k_plus > 0.0:
            worst = max(worst, 1.0)
    return worst


_XI_SAMPLES = (0.5 + 0.0j, -0.8 + 0.0j, 0.3 + 0.4j, complex(0.7 * np.exp(2.2j)), -0.2 - 0.55j)
_K_SAMPLES = (0.5, 1.0, 1.5, 2.7)


@_register("coherent_series_vs_closed", "coherent", 1e-10)
def _check_series_vs_closed(ctx: VerifyContext) -> float:
    grid = np.linspace(0.05, 3.0, 40)
    worst = 0.0
    for xi in _XI_SAMPLES:
        for k in _K_SAMPLES:
            p = co.CoherentParams(xi=xi, k=k)
            series = co.coherent_series(grid, p, ctx.mu)
            closed = co.coherent_closed(grid, p, ctx.mu)
            worst = max(worst, float(np.max(np.abs(series - closed))))
    return worst


@_register("coherent_branch_sampling", "coherent", 1e-10)
def _check_branch_sampling(ctx: VerifyContext) -> float:
    grid = np.array([0.4, 1.3, 2.2])
    worst = 0.0
    for angle in np.linspace(0.0, 2.0 * np.pi, 25, endpoint=False):
        p = co.CoherentParams(xi=0.8 * complex(np.exp(1j * angle)), k=2.7)
        series = co.coherent_series(grid, p, ctx.mu)
        closed = co.coherent_closed(grid, p, ctx.mu)
        worst = max(worst, float(np.max(np.abs(series - closed))))
    return worst


@_register("coherent_unit_norm", "coherent", 1e-9)
def _check_unit_norm(ctx: VerifyContext) -> float:
    worst = 0.0
    for xi in (0.0 + 0.0j, 0.5 + 0.0j, -0.8 + 0.0j, 0.48 + 0.6j):
        for k in (0.5, 1.0, 2.7):
            p = co.CoherentParams(xi=xi, k=k)
            rmax, npoints = co.suggested_norm_quadrature(p)

            def density(r, p=p):
                return np.abs(co.coherent_closed(r, p, ctx.mu)) ** 2

            norm = radial_inner_product(
                density, lambda r: np.ones_like(r), ctx.mu, rmax=rmax, npoints=npoints
            )
            worst = max(worst, abs(norm - 1.0))
    return worst


@_register("coherent_normal_form", "coherent", 1e-14)
def _check_normal_form(ctx: VerifyContext) -> float:
    worst = 0.0
    for xi in _XI_SAMPLES:
        p = co.CoherentParams(xi=xi, k=1.0)
        form = co.normal_form(p)
        axi = abs(xi)
        worst = max(worst, abs(abs(form.zeta) - math.tanh(axi)))
        worst = max(worst, abs(form.eta + 2.0 * math.log(math.cosh(axi))))
        if not abs(form.zeta) < 1.0:
            worst = max(worst, 1.0)
    return worst


@_register("laguerre_generating_function", "coherent", 1e-10)
def _check_generating_function(ctx: VerifyContext) -> float:
    from .specfun import laguerre_all

    x = np.linspace(0.0, 3.0, 30)
    worst = 0.0
    for alpha in (-0.3, 0.0, 1.7):
        for t in (0.4, -0.6):
            polys = laguerre_all(80, alpha, x)
            powers = t ** np.arange(81)
            series = (powers[:, None] * polys).sum(axis=0)
            closed = (1.0 - t) ** (-alpha - 1.0) * np.exp(-x * t / (1.0 - t))
            worst = max(worst, float(np.max(np.abs(series - closed))))
    return worst


def _evolution_sector(ctx: VerifyContext) -> tuple[Fraction, float]:
    m = Fraction(1, 2)
    k = float(m) + 0.5 * (ctx.mu.total + 1.0)
    return m, k


@_register("evolution_crosscheck", "coherent", 1e-9)
def _check_evolution_crosscheck(ctx: VerifyContext) -> float:
    m, k = _evolution_sector(ctx)
    p = co.CoherentParams(xi=0.5, k=k)
    worst = 0.0
    for tau in (0.7, 2.0):
        worst = max(
            worst,
            co.series_evolution_crosscheck(p, co.EvolutionParams(tau), m, ctx.mu, nterms=300),
        )
    return worst


@_register("evolution_norm_conservation", "coherent", 1e-9)
def _check_evolution_norm(ctx: VerifyContext) -> float:
    m, k = _evolution_sector(ctx)
    p = co.CoherentParams(xi=0.48 + 0.6j, k=k)
    rmax, npoints = co.suggested_norm_quadrature(p)
    worst = 0.0
    for tau in (0.3, 1.1, 2.9):
        t = co.EvolutionParams(tau)

        def density(r, t=t):
            return np.abs(co.coherent_evolved(r, p, t, m, ctx.mu)) ** 2

        norm = radial_inner_product(
            density, lambda r: np.ones_like(r), ctx.mu, rmax=rmax, npoints=npoints
        )
        worst = max(worst, abs(norm - 1.0))
    return worst


@_register("evolution_periodicity", "coherent", 1e-12)
def _check_evolution_period(ctx: VerifyContext) -> float:
    m, k = _evolution_sector(ctx)
    p = co.CoherentParams(xi=-0.35 + 0.2j, k=k)
    grid = np.linspace(0.1, 4.0, 25)
    worst = 0.0
    for tau in (0.0, 0.9):
        base = co.coherent_evolved(grid, p, co.EvolutionParams(tau), m, ctx.mu)
        shifted = co.coherent_evolved(
            grid, p, co.EvolutionParams(tau + math.pi), m, ctx.mu
        )
        phase = complex(np.exp(-2j * math.pi * k))
        worst = max(worst, float(np.max(np.abs(shifted - phase * base))))
        worst = max(worst, float(np.max(np.abs(np.abs(shifted) - np.abs(base)))))
    return worst


@_register("evolution_additivity", "coherent", 1e-12)
def _check_evolution_additivity(ctx: VerifyContext) -> float:
    m, k = _evolution_sector(ctx)
    p = co.CoherentParams(xi=0.3 - 0.44j, k=k)
    tau1, tau2 = 0.37, 1.21
    xi_mid, phase_mid = co.evolve_parameter(p, co.EvolutionParams(tau1))
    p_mid = co.CoherentParams(xi=xi_mid, k=k)
    xi_two, phase_two = co.evolve_parameter(p_mid, co.EvolutionParams(tau2))
    xi_direct, phase_direct = co.evolve_parameter(p, co.EvolutionParams(tau1 + tau2))
    worst = abs(xi_two - xi_direct)
    worst = max(worst, abs(phase_mid * phase_two - phase_direct))
    grid = np.linspace(0.1, 4.0, 25)
    stepped = phase_mid * co.coherent_evolved(grid, p_mid, co.EvolutionParams(tau2), m, ctx.mu)
    direct = co.coherent_evolved(grid, p, co.EvolutionParams(tau1 + tau2), m, ctx.mu)
    return max(worst, float(np.max(np.abs(stepped - direct))))


def available_checks(suite: str = "all") -> list[str]:
    """Names of the checks in a suite, in registry order."""
    if suite != "all" and suite not in SUITES:
        raise DomainError(f"suite must be one of {('all',) + SUITES}, got {suite!r}")
    return [c.name for c in _REGISTRY if suite == "all" or c.suite == suite]


def _worker_count() -> int:
    env = os.environ.get("DUNKL_OSC_THREADS")
    if env is not None:
        try:
            width = int(env)
        except ValueError as exc:
            raise DomainError(f"DUNKL_OSC_THREADS must be an integer, got {env!r}") from exc
        if width < 1:
            raise DomainError(f"DUNKL_OSC_THREADS must be >= 1, got {width}")
        return width
    return min(8, os.cpu_count() or 1)


def run_checks(
    suite: str = "all",
    mu: DeformationParams | None = None,
    seed: int = 0,
    tol_overrides: dict[str, float] | None = None,
    max_workers: int | None = None,
) -> list[CheckResult]:
    """Run a suite of checks and return results sorted by check name."""
    if mu is None:
        mu = DeformationParams(0.5, 0.5)
    elif not isinstance(mu, DeformationParams):
        mu = DeformationParams(*mu)
    overrides = dict(tol_overrides or {})
    known = {c.name for c in _REGISTRY}
    for name in overrides:
        if name not in known:
            raise DomainError(f"unknown check name in tolerance override: {name!r}")
    selected = [c for c in _REGISTRY if suite == "all" or c.suite == suite]
    if not selected:
        raise DomainError(f"suite must be one of {('all',) + SUITES}, got {suite!r}")
    ctx = VerifyContext(mu=mu, seed=seed)
    workers = _worker_count() if max_workers is None else max_workers
    if workers < 1:
        raise DomainError(f"max_workers must be >= 1, got {workers}")

    def run_one(check: _Check) -> CheckResult:
        tolerance = overrides.get(check.name, check.tolerance)
        try:
            residual = float(check.fn(ctx))
            error = None
        except Exception as exc:  # surface as a failed check, not a crash
            residual = float("inf")
            error = f"{type(exc).__name__}: {exc}"
        return CheckResult(
            name=check.name,
            suite=check.suite,
            residual=residual,
            tolerance=tolerance,
            passed=(error is None and residual <= tolerance),
            error=error,
        )

    if workers == 1 or len(selected) == 1:
        results = [run_one(c) for c in selected]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run_one, selected))
    return sorted(results, key=lambda res: res.name)

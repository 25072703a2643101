"""Orthogonal polynomials, log-gamma, and weighted quadrature rules.

Polynomial evaluation uses forward three-term recurrences in the degree, which
are stable for the parameter ranges that occur here (alpha, beta > -1).  The
inner products integrate against the deformed plane measure split into its
radial part r^(1+2*mu1+2*mu2) dr and angular part |cos|^(2*mu1)|sin|^(2*mu2) dphi;
both use composite Gauss-Legendre panels graded geometrically toward the branch
points of the weight so that fractional powers cost no accuracy.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = [
    "QuadratureRule",
    "gauss_legendre",
    "laguerre",
    "laguerre_all",
    "laguerre_derivative",
    "jacobi",
    "jacobi_derivative",
    "log_gamma",
    "radial_inner_product",
    "angular_inner_product",
    "default_rmax",
]

_PANEL_POINTS = 16
_GRADING_RATIO = 0.2


def _as_array(x):
    arr = np.asarray(x)
    return arr, arr.ndim == 0


def _check_degree(n: int) -> None:
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"polynomial degree must be a non-negative integer, got {n!r}")


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^alpha(x), scalar or elementwise."""
    _check_degree(n)
    if alpha <= -1.0:
        raise DomainError(f"Laguerre parameter alpha must exceed -1, got {alpha}")
    arr, scalar = _as_array(x)
    p_prev = np.ones_like(arr)
    if n == 0:
        return p_prev.item() if scalar else p_prev
    p = 1.0 + alpha - arr
    for k in range(1, n):
        p, p_prev = ((2.0 * k + 1.0 + alpha - arr) * p - (k + alpha) * p_prev) / (k + 1.0), p
    return p.item() if scalar else p


def laguerre_all(nmax: int, alpha: float, x) -> np.ndarray:
    """All of L_0^alpha .. L_nmax^alpha at x in one recurrence sweep, shape (nmax+1, ...)."""
    _check_degree(nmax)
    if alpha <= -1.0:
        raise DomainError(f"Laguerre parameter alpha must exceed -1, got {alpha}")
    arr = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.empty((nmax + 1,) + arr.shape)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + alpha - arr
    for k in range(1, nmax):
        out[k + 1] = ((2.0 * k + 1.0 + alpha - arr) * out[k] - (k + alpha) * out[k - 1]) / (k + 1.0)
    return out


def laguerre_derivative(n: int, alpha: float, x):
    """d/dx L_n^alpha(x) via the shift identity; zero for n = 0."""
    _check_degree(n)
    if n == 0:
        arr, scalar = _as_array(x)
        zeros = np.zeros_like(arr)
        return zeros.item() if scalar else zeros
    return -laguerre(n - 1, alpha + 1.0, x)


def jacobi(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha,beta)(x), scalar or elementwise."""
    _check_degree(n)
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError(f"Jacobi parameters must exceed -1, got alpha={alpha}, beta={beta}")
    arr, scalar = _as_array(x)
    p_prev = np.ones_like(arr)
    if n == 0:
        return p_prev.item() if scalar else p_prev
    p = 0.5 * ((alpha + beta + 2.0) * arr + (alpha - beta))
    for m in range(2, n + 1):
        s = 2.0 * m + alpha + beta
        c1 = 2.0 * m * (m + alpha + beta) * (s - 2.0)
        c2 = (s - 1.0) * (alpha * alpha - beta * beta)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (m + alpha - 1.0) * (m + beta - 1.0) * s
        p, p_prev = ((c2 + c3 * arr) * p - c4 * p_prev) / c1, p
    return p.item() if scalar else p


def jacobi_derivative(n: int, alpha: float, beta: float, x):
    """d/dx P_n^(alpha,beta)(x) via the parameter-shift identity; zero for n = 0."""
    _check_degree(n)
    if n == 0:
        arr, scalar = _as_array(x)
        zeros = np.zeros_like(arr)
        return zeros.item() if scalar else zeros
    return 0.5 * (n + alpha + beta + 1.0) * jacobi(n - 1, alpha + 1.0, beta + 1.0, x)


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if x <= 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x}")
    return math.lgamma(x)


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and weights approximating an integral over ``domain``."""

    nodes: np.ndarray
    weights: np.ndarray
    domain: tuple[float, float]

    def integrate(self, fn: Callable) -> float | complex:
        vals = np.asarray(fn(self.nodes))
        total = np.sum(self.weights * vals)
        return complex(total) if np.iscomplexobj(vals) else float(total)


def gauss_legendre(npoints: int, a: float = -1.0, b: float = 1.0) -> QuadratureRule:
    """Gauss-Legendre rule with ``npoints`` nodes mapped to [a, b]."""
    if npoints < 1:
        raise DomainError(f"a quadrature rule needs at least one node, got {npoints}")
    if not a < b:
        raise DomainError(f"empty or reversed interval [{a}, {b}]")
    x, w = np.polynomial.legendre.leggauss(npoints)
    half = 0.5 * (b - a)
    return QuadratureRule(nodes=a + half * (x + 1.0), weights=half * w, domain=(a, b))


def _graded_edges(a: float, b: float, levels: int, toward_lower: bool) -> np.ndarray:
    """Panel edges on [a, b] clustered geometrically toward one endpoint."""
    fracs = _GRADING_RATIO ** np.arange(levels - 1, 0, -1)
    if toward_lower:
        rel = np.concatenate([[0.0], fracs, [1.0]])
    else:
        rel = np.concatenate([[0.0], 1.0 - fracs[::-1], [1.0]])
    return a + (b - a) * rel


def _composite(edges: np.ndarray, per_panel: int) -> QuadratureRule:
    base_x, base_w = np.polynomial.legendre.leggauss(per_panel)
    nodes, weights = [], []
    for lo, hi in zip(edges[:-1], edges[1:]):
        half = 0.5 * (hi - lo)
        nodes.append(lo + half * (base_x + 1.0))
        weights.append(half * base_w)
    return QuadratureRule(
        nodes=np.concatenate(nodes),
        weights=np.concatenate(weights),
        domain=(float(edges[0]), float(edges[-1])),
    )


@functools.lru_cache(maxsize=64)
def _radial_rule(rmax: float, npoints: int) -> QuadratureRule:
    n_panels = max(2, int(round(npoints / _PANEL_POINTS)))
    graded = min(6, n_panels // 3)
    bulk_edges = np.linspace(0.0, rmax, n_panels - graded + 1)
    inner = bulk_edges[1] * _GRADING_RATIO ** np.arange(graded, 0, -1)
    edges = np.concatenate([[0.0], inner, bulk_edges[1:]])
    return _composite(edges, _PANEL_POINTS)


@functools.lru_cache(maxsize=16)
def _angular_rule(npoints_per_quadrant: int) -> QuadratureRule:
    levels = max(2, npoints_per_quadrant // (2 * _PANEL_POINTS))
    nodes, weights = [], []
    half_pi = 0.5 * math.pi
    for q in range(4):
        lo, mid, hi = q * half_pi, (q + 0.5) * half_pi, (q + 1) * half_pi
        for edges in (
            _graded_edges(lo, mid, levels, toward_lower=True),
            _graded_edges(mid, hi, levels, toward_lower=False),
        ):
            rule = _composite(edges, _PANEL_POINTS)
            nodes.append(rule.nodes)
            weights.append(rule.weights)
    return QuadratureRule(
        nodes=np.concatenate(nodes), weights=np.concatenate(weights), domain=(0.0, 2.0 * math.pi)
    )


def _mu_values(mu) -> tuple[float, float]:
    try:
        return float(mu.mu1), float(mu.mu2)
    except AttributeError:
        mu1, mu2 = mu
        return float(mu1), float(mu2)


def default_rmax(emax: float) -> float:
    """Radial truncation radius large enough for states up to energy ``emax``."""
    if emax <= 0.0:
        return 12.0
    return max(12.0, math.sqrt(2.0 * emax) + 6.0)


def radial_inner_product(f, g, mu, rmax: float = 12.0, npoints: int = 400):
    """Integral of f*g against r^(1+2*mu1+2*mu2) dr over [0, rmax]."""
    mu1, mu2 = _mu_values(mu)
    if mu1 + mu2 <= -1.0:
        raise DomainError(f"radial weight is non-integrable for mu1+mu2 <= -1, got {mu1 + mu2}")
    if rmax <= 0.0:
        raise DomainError(f"rmax must be positive, got {rmax}")
    if npoints < _PANEL_POINTS:
        raise DomainError(f"npoints must be at least {_PANEL_POINTS}, got {npoints}")
    rule = _radial_rule(float(rmax), int(npoints))
    r = rule.nodes
    vals = np.asarray(f(r)) * np.asarray(g(r)) * r ** (1.0 + 2.0 * (mu1 + mu2))
    total = np.sum(rule.weights * vals)
    return complex(total) if np.iscomplexobj(vals) else float(total)


def angular_inner_product(f, g, mu, npoints: int = 256):
    """Integral of f*g against |cos|^(2*mu1) |sin|^(2*mu2) dphi over [0, 2*pi)."""
    mu1, mu2 = _mu_values(mu)
    if mu1 <= -0.5 or mu2 <= -0.5:
        raise DomainError(f"angular weight is non-integrable for mu <= -1/2, got ({mu1}, {mu2})")
    if npoints < 2 * _PANEL_POINTS:
        raise DomainError(f"npoints per quadrant must be at least {2 * _PANEL_POINTS}, got {npoints}")
    rule = _angular_rule(int(npoints))
    phi = rule.nodes
    weight = np.abs(np.cos(phi)) ** (2.0 * mu1) * np.abs(np.sin(phi)) ** (2.0 * mu2)
    vals = np.asarray(f(phi)) * np.asarray(g(phi)) * weight
    total = np.sum(rule.weights * vals)
    return complex(total) if np.iscomplexobj(vals) else float(total)

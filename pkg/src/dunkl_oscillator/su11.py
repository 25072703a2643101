"""Raising/lowering structure of the radial eigenproblem.

Three operators A0, A+, A- act on radial profiles in the weighted picture
(measure r^(1 + 2 mu1 + 2 mu2) dr) and close into

    [A0, A+-] = +-A+-,     [A-, A+] = 2 A0,

with A0 equal to half the radial Hamiltonian.  On the orthonormal basis
attached to a representation parameter k > 0, the matrix elements are

    A+ |k, n> = sqrt((n+1)(n+2k)) |k, n+1>,
    A- |k, n> = sqrt(n(n+2k-1))   |k, n-1>,
    A0 |k, n> = (k+n)             |k, n>,

and the Casimir -A+A- + A0(A0 - 1) is the scalar k(k-1), which equals
(mu1 + mu2)^2/4 + l^2/4 - 1/4 for the sector's angular eigenvalue l^2.

A second pair J+- acts in the flat-measure picture (on U = r^(1/2 + mu1 + mu2) R)
and factorizes the eigenequation: at energy E the shifted products

    (J- - 1/2)(J+ - 1/2) U = [(E+1)^2 - l^2 - (mu1+mu2)^2] / 4 * U   ("upper")
    (J+ + 1/2)(J- + 1/2) U = [(E-1)^2 - l^2 - (mu1+mu2)^2] / 4 * U   ("lower")

are diagonal on eigenprofiles.  ``schrodinger_factorize`` reports the raw
coefficient set of the quadratic rearrangement at energy E, while
``factorization_residual`` verifies the diagonal identity itself.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import as_quantum_m
from .errors import DomainError, RepresentationError
from .profiles import DeformationParams, RadialProfile, derivative_of, residual_grid

__all__ = [
    "AlgebraState",
    "FactorizationConstants",
    "ladder_coefficients",
    "apply_A",
    "apply_B0",
    "apply_J",
    "schrodinger_factorize",
    "factorization_product_eigenvalue",
    "factorization_residual",
    "casimir_check",
    "commutator_residual",
    "bargmann_index",
]


@dataclass(frozen=True)
class AlgebraState:
    """Basis label |k, n> of a positive-discrete-series representation."""

    k: float
    n: int

    def __post_init__(self):
        if not self.k > 0.0:
            raise RepresentationError(f"k must be positive, got {self.k}")
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"n must be a non-negative integer, got {self.n}")


def ladder_coefficients(state: AlgebraState, which: str) -> float:
    """Matrix element of A0, A+ or A- on |k, n>."""
    k, n = state.k, state.n
    if which == "0":
        return k + n
    if which == "+":
        return math.sqrt((n + 1.0) * (n + 2.0 * k))
    if which == "-":
        return math.sqrt(n * (n + 2.0 * k - 1.0))
    raise DomainError(f"which must be '0', '+' or '-', got {which!r}")


def _check_l2(l2: float) -> float:
    if l2 < 0.0:
        raise DomainError(f"angular eigenvalue l2 must be non-negative, got {l2}")
    return float(l2)


def apply_A(R: RadialProfile, which: str, mu: DeformationParams, l2: float) -> RadialProfile:
    """Apply A0, A+ or A- (weighted picture, sector with angular eigenvalue l2)."""
    _check_l2(l2)
    if which not in ("0", "+", "-"):
        raise DomainError(f"which must be '0', '+' or '-', got {which!r}")
    d1 = derivative_of(R, 1)
    if which == "0":
        d2 = derivative_of(R, 2)
        out = (-0.25) * d2 + 0.25 * R.times_rpower(2)
        c1 = -0.25 * (1.0 + 2.0 * mu.total)
        if c1 != 0.0:
            out = out + c1 * d1.times_rpower(-1)
        if l2 != 0.0:
            out = out + (0.25 * l2) * R.times_rpower(-2)
        return out
    sign = 1.0 if which == "+" else -1.0
    return (
        (0.5 * sign) * d1.times_rpower(1)
        + (-0.5) * R.times_rpower(2)
        + apply_A(R, "0", mu, l2)
        + (0.5 * sign * (1.0 + mu.total)) * R
    )


def apply_B0(U: RadialProfile, l2: float, mu: DeformationParams) -> RadialProfile:
    """Apply the flat-measure diagonal operator; on eigen-U its value is E/2."""
    _check_l2(l2)
    d2 = derivative_of(U, 2)
    out = (-0.25) * d2 + 0.25 * U.times_rpower(2)
    coeff = l2 - 0.25 + mu.total * mu.total
    if coeff != 0.0:
        out = out + (0.25 * coeff) * U.times_rpower(-2)
    return out


def apply_J(U: RadialProfile, E: float, sign: int) -> RadialProfile:
    """Apply J+ (sign=+1) or J- (sign=-1) at energy E in the flat-measure picture."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    d1 = derivative_of(U, 1)
    return (
        (-0.5 * sign) * d1.times_rpower(1)
        + 0.5 * U.times_rpower(2)
        + (0.5 * (0.5 * sign - E)) * U
    )


@dataclass(frozen=True)
class FactorizationConstants:
    """Raw coefficient set of the ladder-product rearrangement at energy E."""

    a: float
    b: float
    c: float
    f: float
    g: float
    branch: str


def _branch_sign(branch: str) -> float:
    if branch == "upper":
        return 1.0
    if branch == "lower":
        return -1.0
    raise DomainError(f"branch must be 'upper' or 'lower', got {branch!r}")


def schrodinger_factorize(
    E: float, l2: float, mu: DeformationParams, branch: str = "upper"
) -> FactorizationConstants:
    """Coefficient set of the quadratic rearrangement of the eigenproblem at E."""
    sign = _branch_sign(branch)
    _check_l2(l2)
    return FactorizationConstants(
        a=sign,
        b=-sign * E - 1.5,
        c=sign,
        f=-sign * E - 0.5,
        g=-l2 - mu.total * mu.total - (E + sign) ** 2 + 0.5,
        branch=branch,
    )


def factorization_product_eigenvalue(
    E: float, l2: float, mu: DeformationParams, branch: str = "upper"
) -> float:
    """Eigenvalue of the shifted ladder product on an eigenprofile of energy E."""
    sign = _branch_sign(branch)
    _check_l2(l2)
    return 0.25 * ((E + sign) ** 2 - l2 - mu.total * mu.total)


def factorization_residual(
    U: RadialProfile,
    E: float,
    l2: float,
    mu: DeformationParams,
    branch: str = "upper",
    grid: np.ndarray | None = None,
) -> float:
    """Sup-norm defect of the shifted-product identity on the given profile."""
    sign = _branch_sign(branch)
    if grid is None:
        grid = residual_grid()
    shift = -0.5 * sign
    V = apply_J(U, E, int(sign)) + shift * U
    Z = apply_J(V, E, -int(sign)) + shift * V
    lam = factorization_product_eigenvalue(E, l2, mu, branch)
    return float(np.max(np.abs(Z(grid) - lam * U(grid))))


def casimir_check(
    R: RadialProfile,
    k: float,
    mu: DeformationParams,
    l2: float,
    grid: np.ndarray | None = None,
) -> float:
    """Defect of the Casimir identity -A+A- + A0(A0-1) = k(k-1) on R.

    Returns the larger of the operator residual on the grid and the mismatch
    between k(k-1) and its closed form ((mu1+mu2)^2 + l2 - 1)/4.
    """
    if not k > 0.0:
        raise RepresentationError(f"k must be positive, got {k}")
    if grid is None:
        grid = residual_grid()
    lowered = apply_A(R, "-", mu, l2)
    product = apply_A(lowered, "+", mu, l2)
    diag = apply_A(R, "0", mu, l2)
    diag2 = apply_A(diag, "0", mu, l2)
    casimir = (-1.0) * product + diag2 + (-1.0) * diag
    target = k * (k - 1.0)
    scalar = 0.25 * (mu.total * mu.total + l2 - 1.0)
    residual = float(np.max(np.abs(casimir(grid) - target * R(grid))))
    return max(residual, abs(scalar - target))


def commutator_residual(
    pair: str,
    R: RadialProfile,
    mu: DeformationParams,
    l2: float,
    grid: np.ndarray | None = None,
) -> float:
    """Sup-norm defect of a bracket relation ([A0,A+], [A0,A-] or [A-,A+]) on R."""
    if grid is None:
        grid = residual_grid()
    if pair == "0+":
        raised = apply_A(R, "+", mu, l2)
        lhs = apply_A(raised, "0", mu, l2) + (-1.0) * apply_A(
            apply_A(R, "0", mu, l2), "+", mu, l2
        )
        rhs = raised
    elif pair == "0-":
        lowered = apply_A(R, "-", mu, l2)
        lhs = apply_A(lowered, "0", mu, l2) + (-1.0) * apply_A(
            apply_A(R, "0", mu, l2), "-", mu, l2
        )
        rhs = (-1.0) * lowered
    elif pair == "-+":
        lhs = apply_A(apply_A(R, "+", mu, l2), "-", mu, l2) + (-1.0) * apply_A(
            apply_A(R, "-", mu, l2), "+", mu, l2
        )
        rhs = 2.0 * apply_A(R, "0", mu, l2)
    else:
        raise DomainError(f"pair must be '0+', '0-' or '-+', got {pair!r}")
    return float(np.max(np.abs(lhs(grid) - rhs(grid))))


def bargmann_index(m, mu: DeformationParams) -> tuple[float, float]:
    """Both roots (k+, k-) of k(k-1) = ((mu1+mu2)^2 + l^2 - 1)/4 for quantum number m.

    Only k+ = m + (mu1 + mu2 + 1)/2 is positive and labels the realized
    representation; k- = -m - (mu1 + mu2 - 1)/2 is the discarded root.
    """
    frac = as_quantum_m(m)
    k_plus = float(frac) + 0.5 * (mu.total + 1.0)
    k_minus = -float(frac) - 0.5 * (mu.total - 1.0)
    return (k_plus, k_minus)

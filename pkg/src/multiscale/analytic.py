"""Logarithmic integral, the sigmoid weight psi and the density threshold."""
from __future__ import annotations

import math
from dataclasses import dataclass

from scipy import integrate

from .errors import ConfigurationError, DomainError


@dataclass(frozen=True)
class EstimatorConfig:
    tolerance: float = 1e-10
    psi_exponent: float = 0.06

    def __post_init__(self):
        if not 0 < self.tolerance <= 1e-6:
            raise ConfigurationError(f"tolerance must be in (0, 1e-6], got {self.tolerance}")
        if self.psi_exponent <= 0:
            raise ConfigurationError(f"psi_exponent must be > 0, got {self.psi_exponent}")


DEFAULT = EstimatorConfig()


def _exp_over_u(u):
    return math.exp(u) / u


def li(x: float, config: EstimatorConfig = DEFAULT) -> float:
    """Principal-value logarithmic integral ``PV int_0^x dt / ln t``.

    With ``t = e**u`` the integrand becomes ``e**u / u`` on ``(-inf, ln x]``.
    The pole at ``u = 0`` is handled by a Cauchy-weighted rule on ``[-1, c]``
    and the two smooth tails by ordinary adaptive quadrature.
    """
    x = float(x)
    if not x > 1:
        raise DomainError(f"li is evaluated for x > 1 only, got {x}")
    upper = math.log(x)
    eps = config.tolerance
    left, _ = integrate.quad(_exp_over_u, -math.inf, -1.0, epsabs=0, epsrel=eps, limit=200)
    pole_end = min(upper, 1.0)
    middle, _ = integrate.quad(math.exp, -1.0, pole_end, weight="cauchy", wvar=0.0,
                               epsabs=0, epsrel=eps, limit=200)
    right = 0.0
    if upper > 1.0:
        right, _ = integrate.quad(_exp_over_u, 1.0, upper, epsabs=0, epsrel=eps, limit=200)
    return left + middle + right


def psi(x: float, config: EstimatorConfig = DEFAULT) -> float:
    """``x**a / (1 + x**a)`` with ``a = config.psi_exponent``."""
    if not x > 0:
        raise DomainError(f"psi is evaluated for x > 0 only, got {x}")
    # 1 / (1 + x**-a) avoids overflow of x**a for huge x
    return 1.0 / (1.0 + float(x) ** -config.psi_exponent)


def density_threshold(k: int, t: int = 3) -> float:
    """Natural log of the interval end beyond which level-``k`` blocks cannot all hold a prime.

    The threshold itself is ``exp(B**k)``; only its logarithm ``B**k`` is
    returned because ``exp(64)`` already exceeds float precision needs.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    return float((1 << t) ** k)

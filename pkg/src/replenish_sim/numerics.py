"""Small numeric helpers shared across the package.

Money is carried internally as integer cents so that episode cost
breakdowns sum exactly; the normal quantile is a rational approximation
(Acklam) so policy code has a testable error bound and no dependency on
scipy.
"""

from __future__ import annotations

import math


def round_half_up(x: float) -> int:
    """Round to the nearest integer, halves away from zero ties going up."""
    return int(math.floor(x + 0.5))


def to_cents(amount: float) -> int:
    """Convert a currency amount to integer cents (amount must be >= 0)."""
    if amount < 0:
        raise ValueError(f"currency amount must be >= 0, got {amount}")
    return int(math.floor(amount * 100.0 + 0.5))


def is_cent_exact(amount: float, tol: float = 1e-6) -> bool:
    """True when the amount is representable in whole cents."""
    scaled = amount * 100.0
    return abs(scaled - round(scaled)) <= tol


def norm_pdf(x: float) -> float:
    return math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)


def norm_cdf(x: float) -> float:
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


# Coefficients for Acklam's rational approximation of the inverse normal
# CDF.  Max absolute error below 1.2e-8 over (0, 1), well inside the 1e-4
# bound the policy layer promises (checked in tests against bisection on
# norm_cdf).
_PPF_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
          1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_PPF_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
          6.680131188771972e+01, -1.328068155288572e+01)
_PPF_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
          -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_PPF_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
          3.754408661907416e+00)

_PPF_LOW = 0.02425


def norm_ppf(p: float) -> float:
    """Inverse standard normal CDF via Acklam's rational approximation."""
    if not 0.0 < p < 1.0:
        raise ValueError(f"quantile probability must be in (0, 1), got {p}")
    a, b, c, d = _PPF_A, _PPF_B, _PPF_C, _PPF_D
    if p < _PPF_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / \
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0)
    if p > 1.0 - _PPF_LOW:
        q = math.sqrt(-2.0 * math.log(1.0 - p))
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) / \
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0)
    q = p - 0.5
    r = q * q
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q / \
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0)


def normal_loss(mean: float, std: float, level: float) -> float:
    """E[(D - level)+] for D ~ Normal(mean, std); std == 0 degenerates cleanly."""
    if std <= 0.0:
        return max(0.0, mean - level)
    u = (mean - level) / std
    return (mean - level) * norm_cdf(u) + std * norm_pdf(u)


_MASK64 = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def derive_seed(master_seed: int, label: str) -> int:
    """Deterministic per-label child seed: FNV-1a of the label avalanched
    into the master seed with splitmix64. Distinct labels give independent
    streams; Python's randomized str hash is deliberately avoided."""
    return _splitmix64((master_seed & _MASK64) ^ _fnv1a64(label.encode("utf-8")))

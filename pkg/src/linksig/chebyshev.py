"""Chebyshev polynomials of the first and second kind.

Evaluation goes through the defining trigonometric identities
T_m(cos psi) = cos(m psi) and U_m(cos psi) sin(psi) = sin((m+1) psi)
rather than the three-term recurrence: the downstream transversality
computation divides by sqrt(1 - T^2) near its double roots, where
recurrence cancellation is at its worst.
"""

from __future__ import annotations

import math

MAX_DEGREE = 10**6


def _check_degree(m: int) -> None:
    if not isinstance(m, int):
        raise TypeError("degree must be an integer")
    if m < 0:
        raise ValueError("degree must be non-negative")
    if m > MAX_DEGREE:
        raise ValueError(f"degree {m} exceeds guard limit {MAX_DEGREE}")


def eval_T(m: int, x: float) -> float:
    """T_m(x), the degree-m Chebyshev polynomial of the first kind."""
    _check_degree(m)
    if -1.0 <= x <= 1.0:
        return math.cos(m * math.acos(x))
    if x > 1.0:
        return math.cosh(m * math.acosh(x))
    value = math.cosh(m * math.acosh(-x))
    return value if m % 2 == 0 else -value


def eval_U(m: int, x: float) -> float:
    """U_m(x), the degree-m Chebyshev polynomial of the second kind.

    The removable singularities at x = +/-1 are filled with the limit
    values +/-(m+1).
    """
    _check_degree(m)
    if x == 1.0:
        return float(m + 1)
    if x == -1.0:
        return float(m + 1) if m % 2 == 0 else -float(m + 1)
    if -1.0 < x < 1.0:
        psi = math.acos(x)
        return math.sin((m + 1) * psi) / math.sin(psi)
    if x > 1.0:
        t = math.acosh(x)
        return math.sinh((m + 1) * t) / math.sinh(t)
    t = math.acosh(-x)
    value = math.sinh((m + 1) * t) / math.sinh(t)
    return value if m % 2 == 0 else -value


def deriv_T(m: int, x: float) -> float:
    """T_m'(x) = m * U_{m-1}(x), used exactly (never by finite differences)."""
    _check_degree(m)
    if m == 0:
        return 0.0
    return m * eval_U(m - 1, x)


def roots_U(m: int) -> list[float]:
    """The m simple roots of U_m, cos(k pi/(m+1)) for k = 1..m, descending."""
    _check_degree(m)
    if m < 1:
        raise ValueError("degree must be at least 1")
    return [math.cos(k * math.pi / (m + 1)) for k in range(1, m + 1)]

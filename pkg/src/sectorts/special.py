"""Regularized incomplete beta function.

Continued-fraction evaluation (modified Lentz) with the usual reflection
``I_x(a, b) = 1 - I_{1-x}(b, a)`` for ``x > (a + 1) / (a + b + 2)``, where the
fraction converges slowly.
"""

import math

CF_TOL = 1e-12
CF_MAX_ITER = 300
_TINY = 1e-300


class ConvergenceError(ArithmeticError):
    pass


def log_beta(a, b):
    return math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)


def _beta_cf(x, a, b, tol, max_iter):
    qab = a + b
    qap = a + 1.0
    qam = a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < _TINY:
        d = _TINY
    d = 1.0 / d
    h = d
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        # even step
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        h *= d * c
        # odd step
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < _TINY:
            d = _TINY
        c = 1.0 + aa / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < tol:
            return h
    raise ConvergenceError(
        f"incomplete beta fraction did not converge in {max_iter} iterations "
        f"(x={x}, a={a}, b={b})")


def betainc(a, b, x, tol=CF_TOL, max_iter=CF_MAX_ITER):
    """Regularized incomplete beta ``I_x(a, b)`` for ``a, b > 0``, ``0 <= x <= 1``."""
    if a <= 0 or b <= 0:
        raise ValueError("shape parameters must be positive")
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0.0 or x == 1.0:
        return x
    log_front = a * math.log(x) + b * math.log1p(-x) - log_beta(a, b)
    if x < (a + 1.0) / (a + b + 2.0):
        return math.exp(log_front) * _beta_cf(x, a, b, tol, max_iter) / a
    return 1.0 - math.exp(log_front) * _beta_cf(1.0 - x, b, a, tol, max_iter) / b

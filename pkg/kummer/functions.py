"""
Confluent hypergeometric function M(a, b, xi) of the first kind
"""
import logging
import math
from dataclasses import dataclass

from kummer.exceptions import InvalidB, NoConvergence
from kummer.gamma import gamma, reciprocal_gamma

TRUNCATION = 1e-17
SMALL_TERMS_TO_STOP = 3
MAX_TERMS = 1000
POLYNOMIAL_TOL = 1e-12
# Largest argument the scaled series accepts
XI_LIMIT = 700.0


@dataclass(frozen=True)
class KummerArgs:
    """
    Arguments (a, b, xi) of M
    """

    a: float
    b: float
    xi: float = 0.0

    def __post_init__(self):
        check_b(self.b)

    def value(self):
        return kummer_m(self.a, self.b, self.xi)

    def scaled(self):
        return kummer_m_scaled(self.a, self.b, self.xi)

    def derivative(self):
        return kummer_m_dxi(self.a, self.b, self.xi)

    def at(self, xi):
        return KummerArgs(self.a, self.b, xi)


def check_b(b):
    if not math.isfinite(b) or (b <= 0 and float(b).is_integer()):
        raise InvalidB(f"b = {b} is zero or a negative integer")


def polynomial_degree(a):
    """
    Degree k when a = -k is a nonpositive integer, otherwise None.
    """
    nearest = round(a)
    if abs(a - nearest) < POLYNOMIAL_TOL and nearest <= 0:
        return int(-nearest)
    return None


def pochhammer(a, m):
    """
    Rising factorial a(a+1)...(a+m-1)
    """
    if m < 0 or int(m) != m:
        raise ValueError(f"m must be a nonnegative integer, got {m}")
    result = 1.0
    for k in range(int(m)):
        result *= a + k
    return result


def _polynomial(k, b, xi, first_term=1.0):
    term = first_term
    total = term
    for m in range(k):
        term *= (m - k) * xi / ((b + m) * (m + 1))
        total += term
    return total


def _series(a, b, xi, first_term=1.0):
    term = first_term
    total = term
    small_terms = 0
    for m in range(MAX_TERMS):
        term *= (a + m) * xi / ((b + m) * (m + 1))
        total += term
        if not math.isfinite(total):
            break
        if abs(term) <= TRUNCATION * abs(total):
            small_terms += 1
            if small_terms >= SMALL_TERMS_TO_STOP:
                return total
        else:
            small_terms = 0
    logging.warning("Kummer series did not converge for a=%s b=%s xi=%s", a, b, xi)
    raise NoConvergence(f"Series for M({a}, {b}, {xi}) did not converge")


def kummer_m(a, b, xi):
    """
    M(a, b, xi). Negative arguments go through the Kummer transformation
    M(a, b, xi) = e^xi M(b - a, b, -xi).
    """
    check_b(b)
    degree = polynomial_degree(a)
    if degree is not None:
        return _polynomial(degree, b, xi)
    if xi < 0:
        return kummer_m_scaled(b - a, b, -xi)
    return _series(a, b, xi)


def kummer_m_scaled(a, b, xi):
    """
    e^-xi M(a, b, xi), computed with the weight folded into the first term
    so that it stays representable up to xi = 700. Terminating series
    have no such limit.
    """
    check_b(b)
    if xi < 0:
        return kummer_m(b - a, b, -xi)
    degree = polynomial_degree(a)
    if degree is not None:
        return _polynomial(degree, b, xi, first_term=math.exp(-xi))
    if xi > XI_LIMIT:
        raise NoConvergence(f"Scaled series is limited to xi <= {XI_LIMIT}, got {xi}")
    return _series(a, b, xi, first_term=math.exp(-xi))


def kummer_m_dxi(a, b, xi):
    """
    dM/dxi = (a/b) M(a + 1, b + 1, xi)
    """
    check_b(b)
    if a == 0:
        return 0.0
    return a / b * kummer_m(a + 1, b + 1, xi)


def kummer_asymptotic(a, b, xi):
    """
    Leading large-xi form of e^-xi M(a, b, xi).
    """
    check_b(b)
    if xi <= 0:
        raise ValueError("The asymptotic form needs xi > 0.")
    degree = polynomial_degree(a)
    if degree is not None:
        coefficient = pochhammer(-degree, degree) / (pochhammer(b, degree) * math.factorial(degree))
        return coefficient * xi**degree * math.exp(-xi)
    return gamma(b) * reciprocal_gamma(a) * xi ** (a - b)


def dominant_sign(a):
    """
    Sign of M(a, b, xi) for large xi when b > 0.
    """
    return -1 if expected_root_count(a) % 2 else 1


def expected_root_count(a):
    if a >= 0:
        return 0
    return math.ceil(-a - POLYNOMIAL_TOL)

"""
Problem parameters (n, p, lambda) and the constants derived from them
"""
import math
from dataclasses import dataclass, replace
from typing import Optional

CRITICAL_REL_TOL = 1e-12


def sobolev_exponent(n):
    if n <= 2:
        return math.inf
    return (n + 2) / (n - 2)


def lambda_star(n):
    """
    Lower end of the negative definite range, 3n / (2(n - 1)).
    """
    if n < 2:
        raise ValueError(f"lambda_star needs n >= 2, got {n}")
    return 3 * n / (2 * (n - 1))


@dataclass(frozen=True)
class ProblemParams:
    """
    Problem Params
    """

    n: int
    p: float
    lam: float
    mu: Optional[float] = None

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        if not (math.isfinite(self.p) and self.p > 1):
            raise ValueError(f"p must be finite and greater than 1, got {self.p}")
        if not math.isfinite(self.lam):
            raise ValueError(f"lambda must be finite, got {self.lam}")
        if self.mu is not None and not math.isfinite(self.mu):
            raise ValueError(f"mu must be finite, got {self.mu}")

    @property
    def half_n(self):
        return self.n / 2

    @property
    def p_s(self):
        return sobolev_exponent(self.n)

    @property
    def lambda_star(self):
        return lambda_star(self.n)

    @property
    def field_mu(self):
        """
        mu if given, else max(lambda, 0)
        """
        if self.mu is not None:
            return self.mu
        return max(self.lam, 0.0)

    @property
    def is_critical(self):
        return self.n >= 3 and math.isclose(self.p, self.p_s, rel_tol=CRITICAL_REL_TOL)

    @property
    def pohozaev_coefficient(self):
        """
        n/(p+1) - (n-2)/2, exactly zero at the Sobolev exponent
        """
        if self.is_critical:
            return 0.0
        return self.n / (self.p + 1) - (self.n - 2) / 2

    @property
    def drift_coefficient(self):
        """
        1/2 - 1/(p+1)
        """
        return 0.5 - 1 / (self.p + 1)

    def with_mu(self, mu):
        return replace(self, mu=mu)

    @classmethod
    def critical(cls, n, lam, mu=None):
        if n < 3:
            raise ValueError(f"The Sobolev exponent is finite only for n >= 3, got {n}")
        return cls(n=n, p=sobolev_exponent(n), lam=lam, mu=mu)

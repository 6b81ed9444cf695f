"""
Radial reductions of the integral identities satisfied by bounded solutions
"""
import logging
import math
from dataclasses import dataclass

from fields.functions import a_normal, div_a, ij_coeffs, q_field, sigma, weight_rho
from kummer.functions import kummer_m_scaled
from kummer.gamma import gamma
from numerics.exceptions import DepthExceeded
from numerics.quadrature import integrate, integrate_with_error
from numerics.specs import QuadratureSpec
from shooting.nonlinearity import nonlinearity, primitive
from verify.exceptions import GridTooCoarse

PROFILE_QUADRATURE = QuadratureSpec(abs_tol=1e-14, rel_tol=1e-10, max_depth=30)
AVERAGING_QUADRATURE = QuadratureSpec(abs_tol=1e-300, rel_tol=1e-13)
ERROR_BUDGET = 1e-6


def surface_area(n):
    """
    |dB_1| = 2 pi^(n/2) / Gamma(n/2)
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return 2 * math.pi ** (n / 2) / gamma(n / 2)


@dataclass(frozen=True)
class NonlinearityPair:
    """
    Nonlinearity Pair
    """

    f_value: float
    big_f_primitive: float

    @classmethod
    def at(cls, lam, p, s):
        return cls(float(nonlinearity(lam, p, s)), float(primitive(lam, p, s)))

    def relation_residual(self, lam, p, s):
        """
        f(s) s/(p+1) - F(s) - lambda s^2/(2(p+1))
        """
        return self.f_value * s / (p + 1) - self.big_f_primitive - lam * s * s / (2 * (p + 1))


@dataclass(frozen=True)
class IdentityResidual:
    """
    Identity Residual
    """

    lhs: float
    rhs_volume: float
    rhs_boundary: float
    error_estimate: float = 0.0

    @property
    def residual(self):
        return self.lhs - self.rhs_volume - self.rhs_boundary

    @property
    def scale(self):
        return max(abs(self.lhs), abs(self.rhs_volume), abs(self.rhs_boundary))

    @property
    def relative(self):
        return abs(self.residual) / self.scale if self.scale else 0.0


class ProfileSampler:
    """
    w and w' anywhere on a shot profile through its Hermite interpolant
    """

    def __init__(self, profile):
        self.profile = profile
        self.curve = profile.interpolant()
        self.slope = self.curve.derivative()

    def check_radius(self, radius):
        if not radius > 0:
            raise ValueError(f"Radius must be positive, got {radius}")
        if not self.profile.covers(radius):
            raise ValueError(
                f"Profile is only resolved up to r = {self.profile.faithful_radius or self.profile.r_end},"
                f" radius {radius} requested"
            )

    def values(self, r):
        return float(self.curve(r)), float(self.slope(r))

    def integral(self, integrand, radius, breaks=()):
        """
        Integral over [0, radius] of integrand(r, w, w') with the profile
        nodes and any extra breaks as breakpoints.
        """
        nodes = sorted({float(r) for r in (*self.profile.grid, *breaks) if 0 < r < radius})
        try:
            value, error = integrate_with_error(
                lambda r: integrand(r, *self.values(r)),
                0.0,
                radius,
                spec=PROFILE_QUADRATURE,
                points=nodes,
            )
        except DepthExceeded as exc:
            raise GridTooCoarse(f"Quadrature over the profile did not settle: {exc}") from exc
        return value, error


def _checked(residual):
    if residual.error_estimate > ERROR_BUDGET * max(residual.scale, 1e-300):
        logging.warning("Quadrature error %s against scale %s", residual.error_estimate, residual.scale)
        raise GridTooCoarse(
            f"Quadrature error {residual.error_estimate} exceeds {ERROR_BUDGET} x scale {residual.scale}"
        )
    return residual


def eta_boundary(params, mu, r, w, w_prime):
    """
    Total flux of the vector field eta through the sphere of radius r for a
    radial profile with values w, w' there.
    """
    if not r > 0:
        raise ValueError(f"Radius must be positive, got {r}")
    p = params.p
    f_value = nonlinearity(params.lam, p, w)
    volume_part = r**params.n * sigma(params, mu, r) * (0.5 * w_prime * w_prime + f_value * w / (p + 1))
    flux_part = r ** (params.n - 1) * q_field(params, mu, r) * weight_rho(r) * w_prime * w / (p + 1)
    normal_part = r ** (params.n - 1) * w * w * a_normal(params, mu, r)
    return surface_area(params.n) * float(volume_part + flux_part - normal_part)


def identity_residual(profile, params=None, mu=None, radius=None):
    """
    Both sides of the quadratic form identity on the ball of the given radius:
    integral of |w'|^2 Pi_mu against integral of w^2 div a plus the flux of eta.
    """
    params = params or profile.params
    mu = params.field_mu if mu is None else mu
    sampler = ProfileSampler(profile)
    radius = radius if radius is not None else (profile.faithful_radius or profile.r_end)
    sampler.check_radius(radius)
    n = params.n
    area = surface_area(n)

    lhs, lhs_error = sampler.integral(
        lambda r, w, w_prime: w_prime * w_prime * sum(ij_coeffs(params, mu, r)) * r ** (n - 1),
        radius,
    )
    volume, volume_error = sampler.integral(
        lambda r, w, w_prime: w * w * div_a(params, mu, r) * r ** (n - 1), radius
    )
    w_end, w_prime_end = sampler.values(radius)
    result = IdentityResidual(
        lhs=area * lhs,
        rhs_volume=area * volume,
        rhs_boundary=eta_boundary(params, mu, radius, w_end, w_prime_end),
        error_estimate=area * (lhs_error + volume_error),
    )
    logging.info(
        "Identity on B_%s with mu = %s: residual %s at scale %s", radius, mu, result.residual, result.scale
    )
    return _checked(result)


def ball_energy_residual(profile, params=None, radius=None):
    """
    Unweighted energy identity on the ball:
    int |w'|^2 = (n/4 - lambda/(p-1)) int w^2 + int |w|^(p+1) - (R/4) flux(w^2) + flux(w w').
    """
    params = params or profile.params
    sampler = ProfileSampler(profile)
    radius = radius if radius is not None else (profile.faithful_radius or profile.r_end)
    sampler.check_radius(radius)
    n, p, lam = params.n, params.p, params.lam
    area = surface_area(n)

    gradient, gradient_error = sampler.integral(
        lambda r, w, w_prime: w_prime * w_prime * r ** (n - 1), radius
    )
    coefficient = n / 4 - lam / (p - 1)
    potential, potential_error = sampler.integral(
        lambda r, w, w_prime: (coefficient * w * w + abs(w) ** (p + 1)) * r ** (n - 1), radius
    )
    w_end, w_prime_end = sampler.values(radius)
    sphere = area * radius ** (n - 1)
    return _checked(
        IdentityResidual(
            lhs=area * gradient,
            rhs_volume=area * potential,
            rhs_boundary=sphere * (w_end * w_prime_end - radius / 4 * w_end * w_end),
            error_estimate=area * (gradient_error + potential_error),
        )
    )


def averaging_check(mu, n, r):
    """
    Ball average of M(-mu, n/2, |y|^2/4) rho against sigma_mu(r).
    """
    if not r > 0:
        raise ValueError(f"Radius must be positive, got {r}")
    integral = integrate(
        lambda s: s ** (n - 1) * kummer_m_scaled(-mu, n / 2, s * s / 4),
        0.0,
        r,
        spec=AVERAGING_QUADRATURE,
    )
    return n / r**n * integral - kummer_m_scaled(1 - mu, n / 2 + 1, r * r / 4)

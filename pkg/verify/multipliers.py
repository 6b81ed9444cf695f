"""
Weighted identities at lambda = 1 obtained by testing the equation with
w rho, |x|^2 w rho and <x, grad w> rho on the ball B_R, with their exact
boundary remainders.
"""
import logging
import math
from dataclasses import dataclass

from fields.functions import weight_rho
from shooting.nonlinearity import primitive
from verify.exceptions import GridTooCoarse
from verify.identities import ERROR_BUDGET, ProfileSampler, surface_area


def _check_lambda(params):
    if not math.isclose(params.lam, 1.0, abs_tol=1e-12):
        raise ValueError(f"The multiplier identities are stated for lambda = 1, got {params.lam}")


def _prepare(profile, radius):
    params = profile.params
    _check_lambda(params)
    sampler = ProfileSampler(profile)
    sampler.check_radius(radius)
    return params, sampler


def gk_boundary_terms(profile, radius):
    """
    Sphere terms of the three identities at r = radius.
    """
    params, sampler = _prepare(profile, radius)
    w, w_prime = sampler.values(radius)
    n, R = params.n, radius
    area = surface_area(n) * weight_rho(R)
    first = area * R ** (n - 1) * w * w_prime
    second = area * R ** (n - 1) * (R * R * w * w_prime - R * w * w)
    third = area * R**n * (0.5 * w_prime * w_prime + float(primitive(params.lam, params.p, w)))
    return first, second, third


def gk_identity_residuals(profile, radius):
    """
    Signed residuals of the three identities, each divided by the size of
    its largest term: the volume integral of the absolute integrand over
    the ball, or the sphere term itself.
    """
    params, sampler = _prepare(profile, radius)
    n, p, lam = params.n, params.p, params.lam
    area = surface_area(n)
    # where the moment weights change sign
    kinks = (math.sqrt(2 * n), math.sqrt(2 * max(n - 2, 0)))

    def volume(integrand):
        value, error = sampler.integral(
            lambda r, w, w_prime: integrand(r, w, w_prime) * weight_rho(r), radius, breaks=kinks
        )
        size, size_error = sampler.integral(
            lambda r, w, w_prime: abs(integrand(r, w, w_prime)) * weight_rho(r),
            radius,
            breaks=kinks,
        )
        return area * value, area * (error + size_error), area * size

    quadratic = lam / (p - 1)
    pieces = {
        "gradient": volume(lambda r, w, wp: wp * wp * r ** (n - 1)),
        "quadratic": volume(lambda r, w, wp: quadratic * w * w * r ** (n - 1)),
        "power": volume(lambda r, w, wp: abs(w) ** (p + 1) * r ** (n - 1)),
        "gradient_moment": volume(lambda r, w, wp: wp * wp * r ** (n + 1)),
        "mass": volume(lambda r, w, wp: (n * r ** (n - 1) - r ** (n + 1) / 2) * w * w),
        "quadratic_moment": volume(lambda r, w, wp: quadratic * w * w * r ** (n + 1)),
        "power_moment": volume(lambda r, w, wp: abs(w) ** (p + 1) * r ** (n + 1)),
        "pohozaev_gradient": volume(
            lambda r, w, wp: ((n - 2) / 2 * r ** (n - 1) - r ** (n + 1) / 4) * wp * wp
        ),
        "pohozaev_power": volume(
            lambda r, w, wp: (n * r ** (n - 1) - r ** (n + 1) / 2) * abs(w) ** (p + 1)
        ),
    }
    values = {name: value for name, (value, _, _) in pieces.items()}
    sizes = {name: size for name, (_, _, size) in pieces.items()}
    error = sum(err for _, err, _ in pieces.values())
    first, second, third = gk_boundary_terms(profile, radius)

    # f(w) w and F(w) split into their quadratic and power parts
    terms = (
        (values["gradient"], values["quadratic"], -values["power"], -first),
        (
            values["gradient_moment"],
            -values["mass"],
            values["quadratic_moment"],
            -values["power_moment"],
            -second,
        ),
        (
            values["pohozaev_gradient"],
            quadratic / 2 * values["mass"],
            -values["pohozaev_power"] / (p + 1),
            third,
        ),
    )
    magnitudes = (
        (sizes["gradient"], sizes["quadratic"], sizes["power"], abs(first)),
        (
            sizes["gradient_moment"],
            sizes["mass"],
            sizes["quadratic_moment"],
            sizes["power_moment"],
            abs(second),
        ),
        (
            sizes["pohozaev_gradient"],
            quadratic / 2 * sizes["mass"],
            sizes["pohozaev_power"] / (p + 1),
            abs(third),
        ),
    )
    scale = max(max(group) for group in magnitudes)
    if error > ERROR_BUDGET * max(scale, 1e-300):
        raise GridTooCoarse(f"Quadrature error {error} exceeds {ERROR_BUDGET} x scale {scale}")
    residuals = tuple(
        math.fsum(group) / max(size) if any(group) else 0.0
        for group, size in zip(terms, magnitudes)
    )
    logging.info("Multiplier identities on B_%s: residuals %s", radius, residuals)
    return residuals


def combined_coefficient(n, p):
    """
    n/(p+1) - (n-2)/2, negative above the Sobolev exponent
    """
    return n / (p + 1) - (n - 2) / 2


def combined_identity_check(profile, radius):
    """
    (n/(p+1) - (n-2)/2) int |grad w|^2 rho + (1/2)(1/2 - 1/(p+1)) int |x|^2 |grad w|^2 rho
    over B_R; the nonlinear terms have cancelled.
    """
    params, sampler = _prepare(profile, radius)
    n, p = params.n, params.p
    inner = 0.5 * (0.5 - 1 / (p + 1))
    value, _ = sampler.integral(
        lambda r, w, wp: (combined_coefficient(n, p) + inner * r * r)
        * wp
        * wp
        * r ** (n - 1)
        * weight_rho(r),
        radius,
    )
    return surface_area(n) * value


def combined_boundary_term(profile, radius):
    """
    The sphere terms the combination leaves behind; equals combined_identity_check.
    """
    params = profile.params
    first, second, third = gk_boundary_terms(profile, radius)
    p = params.p
    return params.n / (p + 1) * first - second / (2 * (p + 1)) + third


@dataclass(frozen=True)
class MultiplierReport:
    """
    Multiplier Report
    """

    radius: float
    first: float
    second: float
    third: float
    combined: float
    combined_boundary: float


def multiplier_report(profile, radius=None):
    radius = radius if radius is not None else (profile.faithful_radius or profile.r_end)
    first, second, third = gk_identity_residuals(profile, radius)
    return MultiplierReport(
        radius=float(radius),
        first=first,
        second=second,
        third=third,
        combined=combined_identity_check(profile, radius),
        combined_boundary=combined_boundary_term(profile, radius),
    )

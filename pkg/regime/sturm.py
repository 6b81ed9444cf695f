"""
Sturmian root ordering of the Kummer functions entering Pi_lambda

    u1 = M(2 - lambda, n/2 + 2, r^2/4)
    u2 = M(1 - lambda, n/2 + 2, r^2/4)
    u3 = M(1 - lambda, n/2 + 1, r^2/4)
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from fields.functions import pi_profile, xi_of
from kummer.functions import KummerArgs, kummer_m, kummer_m_dxi
from kummer.roots import positive_roots_escalating
from numerics.quadrature import integrate
from numerics.specs import QuadratureSpec
from regime.exceptions import DomainError, NoKappa, OmegaVanishes

OMEGA_FLOOR = 1e-12


@dataclass(frozen=True)
class SturmMarkers:
    """
    Sturm Markers
    """

    root_u3: float
    iota: float
    kappa: float
    pi_at_iota: float
    kappa2: Optional[float] = None
    iota2: Optional[float] = None
    pi_at_iota2: Optional[float] = None

    @property
    def ordering_holds(self):
        return 0 < self.root_u3 < self.iota < self.kappa


def u_args(params):
    """
    (a, b) of u1, u2, u3 with the weight exponent of their Sturm-Liouville form
    """
    lam = params.lam
    half_n = params.half_n
    return (
        (KummerArgs(2 - lam, half_n + 2), params.n + 3),
        (KummerArgs(1 - lam, half_n + 2), params.n + 3),
        (KummerArgs(1 - lam, half_n + 1), params.n + 1),
    )


def radial_roots(args):
    roots = positive_roots_escalating(args.a, args.b)
    return [2 * math.sqrt(xi) for xi in roots]


def sturm_markers(params):
    """
    Locate root_u3 < iota < kappa, and for n >= 3, lambda > 3 a root iota2 of u2
    between the first two roots of u1.
    """
    if params.lam <= 1:
        raise DomainError(f"Sturm markers need lambda > 1, got {params.lam}")
    if params.lam <= 2:
        raise NoKappa(f"u1 has no positive root for lambda = {params.lam} <= 2")

    (u1, _), (u2, _), (u3, _) = u_args(params)
    kappas = radial_roots(u1)
    iotas = radial_roots(u2)
    root_u3 = radial_roots(u3)[0]
    iota, kappa = iotas[0], kappas[0]

    kappa2 = kappas[1] if len(kappas) > 1 else None
    iota2 = None
    if params.n >= 3 and params.lam > 3 and kappa2 is not None:
        iota2 = next((r for r in iotas if kappa < r < kappa2), None)

    markers = SturmMarkers(
        root_u3=root_u3,
        iota=iota,
        kappa=kappa,
        pi_at_iota=pi_profile(params, iota),
        kappa2=kappa2,
        iota2=iota2,
        pi_at_iota2=pi_profile(params, iota2) if iota2 is not None else None,
    )
    if not markers.ordering_holds or markers.pi_at_iota >= 0:
        logging.warning(
            "Sturm markers for n=%s lambda=%s break 0 < root_u3 < iota < kappa with Pi(iota) < 0: %s",
            params.n,
            params.lam,
            markers,
        )
    logging.info("Sturm markers for n=%s lambda=%s: %s", params.n, params.lam, markers)
    return markers


def _kummer_and_derivatives(args, r):
    xi = xi_of(r)
    value = kummer_m(args.a, args.b, xi)
    first = kummer_m_dxi(args.a, args.b, xi)
    second = args.a / args.b * kummer_m_dxi(args.a + 1, args.b + 1, xi)
    return value, r / 2 * first, first / 2 + r * r / 4 * second


def flux_derivative(args, weight_exponent, r):
    """
    (K u')' for u = M(a, b, r^2/4) and K = r^k rho
    """
    value, prime, _ = _kummer_and_derivatives(args, r)
    weight = r**weight_exponent * math.exp(-r * r / 4)
    return weight * (args.a * value + (weight_exponent - 2 * args.b + 1) * prime / r)


def picone_residual(v_args, w_args, weight_exponent, r_range, grid=200):
    """
    Largest relative gap between both sides of the Picone identity with
    K = L = r^k rho, v = M(v_args) and omega = M(w_args).
    """
    lo, hi = r_range
    if not 0 < lo < hi:
        raise ValueError(f"Picone range must satisfy 0 < lo < hi, got {r_range}")
    k = weight_exponent
    radii = np.linspace(lo, hi, int(grid))

    omegas = np.array([kummer_m(w_args.a, w_args.b, xi_of(r)) for r in radii])
    if np.any(np.abs(omegas) < OMEGA_FLOOR) or np.any(np.sign(omegas) != np.sign(omegas[0])):
        raise OmegaVanishes(f"omega vanishes on [{lo}, {hi}]")

    def flux_product(r):
        v, v_prime, _ = _kummer_and_derivatives(v_args, r)
        w, w_prime, _ = _kummer_and_derivatives(w_args, r)
        weight = r**k * math.exp(-r * r / 4)
        return v / w * weight * (v_prime * w - v * w_prime)

    worst = 0.0
    scale = 0.0
    for r in radii:
        v, v_prime, _ = _kummer_and_derivatives(v_args, r)
        w, w_prime, _ = _kummer_and_derivatives(w_args, r)
        weight = r**k * math.exp(-r * r / 4)
        terms = (
            v * flux_derivative(v_args, k, r),
            -v * v / w * flux_derivative(w_args, k, r),
            weight * (v_prime - w_prime * v / w) ** 2,
        )
        h = 1e-5 * (1 + r)
        rhs = (flux_product(r + h) - flux_product(r - h)) / (2 * h)
        worst = max(worst, abs(sum(terms) - rhs))
        scale = max(scale, abs(rhs), *(abs(t) for t in terms))
    if scale == 0:
        return 0.0
    return worst / scale


def u_system_residuals(params, r):
    """
    Relative residuals of (r^k rho u_i')' = a_i r^k rho u_i for u1, u2, u3.
    """
    residuals = []
    for args, k in u_args(params):
        value, prime, second = _kummer_and_derivatives(args, r)
        terms = (second, (k / r - r / 2) * prime, -args.a * value)
        scale = max(abs(t) for t in terms) or 1.0
        residuals.append(abs(sum(terms)) / scale)
    return tuple(residuals)


def u2_prime_integral(params, r, spec=None):
    """
    u2'(r) = (1 - lambda) / (r^(n+3) rho(r)) * integral_0^r rho s^(n+3) u2 ds
    """
    _, (u2, k), _ = u_args(params)
    spec = spec or QuadratureSpec()
    integral = integrate(
        lambda s: math.exp(-s * s / 4) * s**k * kummer_m(u2.a, u2.b, xi_of(s)), 0.0, r, spec=spec
    )
    return (1 - params.lam) * integral / (r**k * math.exp(-r * r / 4))


def u2_prime(params, r):
    _, (u2, _), _ = u_args(params)
    return _kummer_and_derivatives(u2, r)[1]

"""
Amplitude search for bounded nonconstant profiles
"""
import logging
from dataclasses import replace

import numpy as np

from shooting.exceptions import NoBracket
from shooting.nonlinearity import constant_solutions, monotone_radius
from shooting.profiles import DEFAULT_R_END, ShootOutcome, integrate_profile
from shooting.tails import continue_tail

FAITHFUL_TOL = 1e-6
WIDTH_TOL = 1e-12
SUP_FACTOR = 10.0
TAIL_FRACTION = 0.75
CONSTANT_BAND = 1e-5


def faithful_radius(first, second):
    """
    Largest radius up to which two profiles agree within 1e-6 (1 + |alpha|),
    and whether they separate at all before the shorter one ends.
    """
    longer, shorter = (first, second) if first.r_end >= second.r_end else (second, first)
    tol = FAITHFUL_TOL * (1 + max(abs(first.alpha), abs(second.alpha)))
    mask = longer.grid <= shorter.r_end
    radii = longer.grid[mask]
    gaps = np.abs(longer.w[mask] - shorter.interpolant()(radii))
    beyond = np.nonzero(gaps > tol)[0]
    if beyond.size == 0:
        return float(shorter.r_end), False
    return float(radii[max(beyond[0] - 1, 0)]), True


def distance_from_constants(result):
    """
    Sup-norm distance from the nearest constant solution over the faithful part.
    """
    w = result.w[result.faithful_mask()]
    constants = constant_solutions(result.params.lam, result.params.p)
    return min(float(np.max(np.abs(w - c))) for c in constants)


def _accept(result, alpha_lo, alpha_hi):
    """
    Keep a candidate whose faithful part stays bounded, calms down and never
    reaches positive energy past the monotone radius. A candidate that sits
    on a constant keeps that outcome.
    """
    mask = result.faithful_mask()
    grid, w, w_prime = result.grid[mask], result.w[mask], result.w_prime[mask]
    if grid.size < 4:
        return None
    if distance_from_constants(result) < CONSTANT_BAND * (1 + abs(result.alpha)):
        return replace(
            result, outcome=ShootOutcome.CONVERGED_TO_CONSTANT, escape_radius=None, fate=0
        )
    if np.max(np.abs(w)) >= SUP_FACTOR * max(abs(alpha_lo), abs(alpha_hi)):
        return None
    split = TAIL_FRACTION * grid[-1]
    head, tail = np.abs(w_prime[grid <= split]), np.abs(w_prime[grid >= split])
    if tail.size and np.max(tail) > np.max(head):
        return None
    beyond = grid > monotone_radius(result.params.n)
    if np.any(result.energy()[mask][beyond] > 0):
        return None
    return replace(result, outcome=ShootOutcome.BOUNDED_CANDIDATE, escape_radius=None, fate=0)


def _settle(candidate, alpha_lo, alpha_hi, r_end, ode):
    """
    Carry an accepted candidate out to r_end along its decaying tail.
    """
    continued = continue_tail(candidate, r_end, ode)
    if continued is None:
        return candidate
    return _accept(continued, alpha_lo, alpha_hi) or candidate


def _bisect(params, lo, hi, r_end, max_iters, ode):
    if 0 in (lo.fate, hi.fate):
        calm = lo if lo.fate == 0 else hi
        raise NoBracket(f"Amplitude {calm.alpha} never escaped ({calm.outcome}), nothing to bisect")
    if lo.fate == hi.fate:
        raise NoBracket(
            f"Amplitudes {lo.alpha} and {hi.alpha} share fate {lo.fate}, nothing to bisect"
        )
    alpha_lo, alpha_hi = lo.alpha, hi.alpha

    for _ in range(max_iters):
        if abs(hi.alpha - lo.alpha) < WIDTH_TOL * (1 + max(abs(lo.alpha), abs(hi.alpha))):
            break
        mid = integrate_profile(params, 0.5 * (lo.alpha + hi.alpha), r_end, ode)
        if mid.fate == 0:
            logging.info("Midpoint alpha = %s never escaped, outcome %s", mid.alpha, mid.outcome)
            return _accept(mid, alpha_lo, alpha_hi)
        if mid.fate == lo.fate:
            lo = mid
        else:
            hi = mid

    radius, separated = faithful_radius(lo, hi)
    survivor = lo if lo.r_end >= hi.r_end else hi
    # ends that escape together differ only in the phase of the escape
    candidate = _accept(survivor.truncated(radius), alpha_lo, alpha_hi) if separated else None
    logging.info(
        "Bisection converged to alpha = %s, faithful up to r = %s, candidate %s",
        survivor.alpha,
        radius,
        candidate.outcome if candidate is not None else "rejected",
    )
    if candidate is None or candidate.outcome != ShootOutcome.BOUNDED_CANDIDATE:
        return candidate
    return _settle(candidate, alpha_lo, alpha_hi, r_end, ode)


def find_bounded_profile(params, alpha_lo, alpha_hi, r_end=DEFAULT_R_END, max_iters=100, ode=None):
    """
    Bisect the amplitude on a change of fate, the direction in which the two
    shots escape. Returns the bounded candidate carried to r_end along its
    decaying tail (or truncated to the radius where both bracket ends still
    agree when no tail matches), a ConvergedToConstant profile when the
    bracket closes on a constant, or None when it closes on an escaping
    profile.
    """
    lo = integrate_profile(params, alpha_lo, r_end, ode)
    hi = integrate_profile(params, alpha_hi, r_end, ode)
    return _bisect(params, lo, hi, r_end, max_iters, ode)


def scan_amplitudes(params, alphas, r_end=DEFAULT_R_END, ode=None):
    return [integrate_profile(params, float(alpha), r_end, ode) for alpha in alphas]


def bracket_candidates(params, alphas, r_end=DEFAULT_R_END, max_iters=100, ode=None):
    """
    Sweep the amplitudes and bisect every change of fate between neighbours
    that both escaped.
    """
    shots = scan_amplitudes(params, alphas, r_end, ode)
    candidates = []
    for left, right in zip(shots, shots[1:]):
        if left.fate == right.fate or 0 in (left.fate, right.fate):
            continue
        candidate = _bisect(params, left, right, r_end, max_iters, ode)
        if candidate is not None and candidate.outcome == ShootOutcome.BOUNDED_CANDIDATE:
            candidates.append(candidate)
    logging.info(
        "Amplitude sweep over %s values found %s candidates", len(shots), len(candidates)
    )
    return candidates

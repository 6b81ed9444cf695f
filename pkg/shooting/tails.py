"""
Continuation of a bounded candidate past the radius where forward shooting
stays faithful, along the slowly decaying branch w ~ C r^(-2 lambda/(p-1)).

Forward integration amplifies the e^(r^2/4) mode, inward integration damps
it, so the tail is integrated inward from beyond r_end and matched to the
forward profile well inside its faithful part.
"""
import logging
from dataclasses import replace

import numpy as np

from numerics.ode import rk_adaptive
from numerics.roots import bisect
from numerics.specs import OdeSpec
from shooting.profiles import radial_rhs

MATCH_FRACTION = 0.6
TAIL_MARGIN = 5.0
MATCH_TOL = 1e-7
AMPLITUDE_TOL = 1e-13
WIDENINGS = 4


def decay_rate(params):
    """
    Exponent of the slowly decaying branch, 2 lambda/(p - 1)
    """
    return 2 * params.lam / (params.p - 1)


def inward_tail(params, amplitude, r_match, r_end, ode=None):
    """
    Nodes of the decaying solution with tail amplitude C on [r_match, r_end],
    in increasing r, started from C r^-a at r_end + TAIL_MARGIN.
    """
    ode = ode or OdeSpec()
    rate = decay_rate(params)
    r_far = r_end + TAIL_MARGIN
    start = np.array([amplitude * r_far**-rate, -rate * amplitude * r_far ** (-rate - 1)])
    forward = radial_rhs(params)

    def rhs(s, y):
        return -forward(-s, y)

    approach = rk_adaptive(rhs, -r_far, start, -r_end, spec=ode)
    tail = rk_adaptive(rhs, -r_end, approach.final_state, -r_match, spec=ode)
    return -tail.r[::-1], tail.states[::-1]


def _match_amplitude(params, r_match, w_match, r_end, ode):
    def gap(amplitude):
        return inward_tail(params, amplitude, r_match, r_end, ode)[1][0, 0] - w_match

    guess = w_match * r_match ** decay_rate(params)
    lo, hi = sorted((0.5 * guess, 1.5 * guess))
    for _ in range(WIDENINGS):
        gap_lo, gap_hi = gap(lo), gap(hi)
        if np.sign(gap_lo) != np.sign(gap_hi):
            return bisect(gap, lo, hi, rel_tol=AMPLITUDE_TOL, f_lo=gap_lo, f_hi=gap_hi)
        lo, hi = lo - (hi - lo), hi + (hi - lo)
    return None


def continue_tail(candidate, r_end, ode=None):
    """
    Replace the part of the candidate beyond MATCH_FRACTION of its faithful
    radius by the matched decaying branch, up to r_end. Returns None when
    there is no decaying branch to match or the slopes disagree at the seam.
    """
    params = candidate.params
    if params.lam <= 0 or candidate.faithful_radius is None:
        return None
    target = MATCH_FRACTION * candidate.faithful_radius
    seam = max(int(np.searchsorted(candidate.grid, target, side="right")) - 1, 1)
    r_match = float(candidate.grid[seam])
    w_match, w_prime_match = float(candidate.w[seam]), float(candidate.w_prime[seam])
    if w_match == 0 or not r_match < r_end:
        return None

    amplitude = _match_amplitude(params, r_match, w_match, r_end, ode)
    if amplitude is None:
        logging.warning("No tail amplitude matches w = %s at r = %s", w_match, r_match)
        return None
    radii, states = inward_tail(params, amplitude, r_match, r_end, ode)
    defect = float(states[0, 1]) - w_prime_match
    if abs(defect) > MATCH_TOL * (1 + abs(w_prime_match)):
        logging.info("Tail at r = %s misses the slope by %s", r_match, defect)
        return None

    logging.info(
        "Tail C r^-%s with C = %s matched at r = %s, slope defect %s",
        decay_rate(params),
        amplitude,
        r_match,
        defect,
    )
    return replace(
        candidate,
        grid=np.concatenate([candidate.grid[: seam + 1], radii[1:]]),
        w=np.concatenate([candidate.w[: seam + 1], states[1:, 0]]),
        w_prime=np.concatenate([candidate.w_prime[: seam + 1], states[1:, 1]]),
        faithful_radius=float(r_end),
        escape_radius=None,
        fate=0,
    )

"""
Positive roots of M(a, b, xi)
"""
import logging
import math

import numpy as np

from kummer.exceptions import WindowTooSmall
from kummer.functions import (
    XI_LIMIT,
    check_b,
    dominant_sign,
    expected_root_count,
    kummer_m_scaled,
)
from numerics.roots import RootList, bracket_and_bisect

GRID_SPACING = 0.05
MIN_GRID_POINTS = 200


def positive_roots(a, b, xi_max):
    """
    Every sign change of xi -> M(a, b, xi) on (0, xi_max].
    For a >= 0 there are none.
    """
    check_b(b)
    if b <= 0 or xi_max <= 0:
        raise ValueError(f"positive_roots needs b > 0 and xi_max > 0, got b={b}, xi_max={xi_max}")
    if a >= 0:
        return RootList()

    grid_points = max(MIN_GRID_POINTS, int(math.ceil(xi_max / GRID_SPACING)) + 1)
    roots = bracket_and_bisect(lambda xi: kummer_m_scaled(a, b, xi), 0.0, xi_max, grid_points)

    expected = expected_root_count(a)
    if roots.count < expected:
        tail_sign = np.sign(kummer_m_scaled(a, b, xi_max))
        if tail_sign != dominant_sign(a):
            raise WindowTooSmall(
                f"Found {roots.count} of {expected} roots of M({a}, {b}, .) below xi = {xi_max}"
            )
    return roots


def default_window(a, b):
    return 4 * expected_root_count(a) + 2 * b + 10


def positive_roots_escalating(a, b, xi_start=None):
    """
    positive_roots with the window doubled until all roots are inside.
    """
    if a >= 0:
        return positive_roots(a, b, xi_start or 1.0)
    xi_max = min(xi_start or default_window(a, b), XI_LIMIT)
    expected = expected_root_count(a)
    while True:
        try:
            roots = positive_roots(a, b, xi_max)
            if roots.count >= expected:
                return roots
        except WindowTooSmall:
            pass
        if xi_max >= XI_LIMIT:
            raise WindowTooSmall(f"Roots of M({a}, {b}, .) not isolated below xi = {XI_LIMIT}")
        xi_max = min(2 * xi_max, XI_LIMIT)
        logging.info("Escalating root window for a=%s b=%s to xi=%s", a, b, xi_max)

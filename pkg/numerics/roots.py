"""
Sign-change bracketing and bisection
"""
import logging
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RootList:
    """
    Root List
    """

    roots: tuple = ()

    def __post_init__(self):
        roots = tuple(float(x) for x in self.roots)
        if any(b <= a for a, b in zip(roots, roots[1:])):
            raise ValueError("Roots must be strictly increasing.")
        object.__setattr__(self, "roots", roots)

    @property
    def count(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __getitem__(self, index):
        return self.roots[index]


def bisect(f, lo, hi, rel_tol=1e-10, f_lo=None, f_hi=None, max_iters=200):
    """
    Refine a sign change of f inside [lo, hi] to a relative tolerance.
    """
    f_lo = f(lo) if f_lo is None else f_lo
    f_hi = f(hi) if f_hi is None else f_hi
    if f_lo == 0:
        return float(lo)
    if f_hi == 0:
        return float(hi)
    if np.sign(f_lo) == np.sign(f_hi):
        raise ValueError(f"No sign change of f on [{lo}, {hi}]")

    for _ in range(max_iters):
        if hi - lo <= rel_tol * max(abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = f(mid)
        if f_mid == 0:
            return float(mid)
        if np.sign(f_mid) == np.sign(f_lo):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    return float(0.5 * (lo + hi))


def bracket_and_bisect(f, a, b, grid_points):
    """
    Scan f on a uniform grid and refine every sign change.
    A run of exact zeros counts as a root only if the signs on either side differ.
    """
    if grid_points < 2:
        raise ValueError("grid_points must be at least 2.")
    grid = np.linspace(a, b, int(grid_points))

    roots = []
    last_x = last_value = None
    last_sign = 0
    first_zero = None
    for x in grid:
        value = f(x)
        sign = np.sign(value)
        if sign == 0:
            if first_zero is None:
                first_zero = float(x)
            continue
        if last_sign != 0 and sign != last_sign:
            if first_zero is not None:
                roots.append(first_zero)
            else:
                roots.append(bisect(f, last_x, x, f_lo=last_value, f_hi=value))
        last_x, last_value, last_sign = x, value, sign
        first_zero = None

    logging.debug("Found %s sign changes on [%s, %s]", len(roots), a, b)
    return RootList(tuple(roots))

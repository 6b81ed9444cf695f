"""
Lanczos approximation of the gamma function
"""
import math

LANCZOS_G = 7
LANCZOS_COEFFICIENTS = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
]


def is_pole(x):
    return x <= 0 and float(x).is_integer()


def gamma(x):
    """
    Gamma function for real x, using the reflection formula below 1/2.
    """
    x = float(x)
    if is_pole(x):
        raise ValueError(f"Gamma has a pole at {x}")
    if x < 0.5:
        return math.pi / (math.sin(math.pi * x) * gamma(1 - x))
    x -= 1
    series = LANCZOS_COEFFICIENTS[0]
    for i, coefficient in enumerate(LANCZOS_COEFFICIENTS[1:], start=1):
        series += coefficient / (x + i)
    t = x + LANCZOS_G + 0.5
    return math.sqrt(2 * math.pi) * t ** (x + 0.5) * math.exp(-t) * series


def reciprocal_gamma(x):
    if is_pole(x):
        return 0.0
    return 1.0 / gamma(x)

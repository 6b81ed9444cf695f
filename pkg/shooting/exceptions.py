from numerics.exceptions import NumericalError


class NoBracket(NumericalError):
    """
    Both ends of an amplitude bracket share the same fate
    """

from numerics.exceptions import NumericalError


class InvalidB(NumericalError):
    """
    b is zero or a negative integer
    """


class NoConvergence(NumericalError):
    """
    Series failed its truncation criterion
    """


class WindowTooSmall(NumericalError):
    """
    Root search window does not contain every positive root
    """

from numerics.exceptions import NumericalError


class MuZero(NumericalError):
    """
    psi is undefined for mu = 0
    """

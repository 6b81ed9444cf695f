from numerics.exceptions import NumericalError


class GridTooCoarse(NumericalError):
    """
    Quadrature over a profile could not reach the requested accuracy
    """

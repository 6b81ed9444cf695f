class NumericalError(Exception):
    """
    Base class for every numerical failure raised by the library
    """


class DepthExceeded(NumericalError):
    """
    Adaptive quadrature ran out of subdivision depth
    """


class StepUnderflow(NumericalError):
    """
    Adaptive step size fell below the configured minimum
    """

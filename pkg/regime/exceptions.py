from numerics.exceptions import NumericalError


class DomainError(NumericalError):
    """
    Parameters lie outside the range an operation is defined on
    """


class NoKappa(NumericalError):
    """
    u1 has no positive root for lambda <= 2
    """


class OmegaVanishes(NumericalError):
    """
    Picone comparison function vanishes on the range
    """

import factory
from regime.sweep import SweepPoint


class SweepPointFactory(factory.Factory):
    """
    Sweep Point factory
    """

    class Meta:
        model = SweepPoint

    n = 3
    p = 5.0
    lam = 0.5
    r_max = 30.0
    grid_points = 600

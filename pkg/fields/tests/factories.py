import factory
from fields.params import ProblemParams


class ProblemParamsFactory(factory.Factory):
    """
    Problem Params factory
    """

    class Meta:
        model = ProblemParams

    n = 3
    p = 3.0
    lam = 1.0
    mu = None

import factory
from fields.params import ProblemParams
from shooting.nonlinearity import constant_solutions
from shooting.profiles import constant_profile


class ConstantProfileFactory(factory.Factory):
    """
    Constant Profile factory, the largest constant solution by default
    """

    class Meta:
        model = constant_profile

    params = factory.LazyFunction(lambda: ProblemParams(n=3, p=3.0, lam=1.0))
    c = factory.LazyAttribute(lambda o: constant_solutions(o.params.lam, o.params.p)[-1])
    r_end = 12.0
    points = 241

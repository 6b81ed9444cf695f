from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Classify the definiteness regime of the matrix field for (n, p, lambda)"
    command = RunCommand.REGIME

    def add_arguments(self, parser):
        parser.add_argument("n")
        parser.add_argument("p", help="Exponent, or pS for the Sobolev exponent")
        parser.add_argument("lam", metavar="lambda")
        parser.add_argument("--mu", help="Field parameter, defaults to max(lambda, 0)")
        parser.add_argument("--r-max")
        parser.add_argument("--grid-points")
        parser.add_argument("--markers", action="store_true", help="Locate the Sturm markers too")
        parser.add_argument("--output")

    def config_data(self, options):
        return {
            "n": options["n"],
            "p": options["p"],
            "lam": options["lam"],
            "mu": options["mu"],
            "r_max": options["r_max"],
            "grid_points": options["grid_points"],
            "markers": options["markers"],
            "output": options["output"],
        }

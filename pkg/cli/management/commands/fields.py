from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Sample sigma, Q, I, J and pi on a radial grid"
    command = RunCommand.FIELDS

    def add_arguments(self, parser):
        parser.add_argument("n")
        parser.add_argument("p", help="Exponent, or pS for the Sobolev exponent")
        parser.add_argument("lam", metavar="lambda")
        parser.add_argument("--mu")
        parser.add_argument("--r-max")
        parser.add_argument("--points")
        self.add_output_arguments(parser)

    def config_data(self, options):
        return {
            "n": options["n"],
            "p": options["p"],
            "lam": options["lam"],
            "mu": options["mu"],
            "r_max": options["r_max"],
            "grid_points": options["points"],
            "output": options["output"],
            "format": options["format"],
        }

from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Regime map over a grid of n and lambda at a fixed p"
    command = RunCommand.SWEEP

    def add_arguments(self, parser):
        parser.add_argument(
            "--n", "--n-range", dest="n_range", required=True, help="start:stop:step, a,b,c or a value"
        )
        parser.add_argument(
            "--lambda",
            "--lambda-range",
            dest="lambda_range",
            required=True,
            help="start:stop:step, a,b,c or a value",
        )
        parser.add_argument("--p", required=True, help="Exponent, or pS for the Sobolev exponent")
        parser.add_argument("--jobs", help="Worker processes; OU_LIOUVILLE_JOBS takes precedence")
        parser.add_argument("--r-max")
        parser.add_argument("--grid-points")
        self.add_output_arguments(parser)

    def config_data(self, options):
        return {
            "n_range": options["n_range"],
            "lambda_range": options["lambda_range"],
            "p": options["p"],
            "jobs": options["jobs"],
            "r_max": options["r_max"],
            "grid_points": options["grid_points"],
            "output": options["output"],
            "format": options["format"],
        }

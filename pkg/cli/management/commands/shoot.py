from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Shoot a radial profile from w(0) = alpha, or bisect a bracket of amplitudes"
    command = RunCommand.SHOOT

    def add_arguments(self, parser):
        parser.add_argument("n")
        parser.add_argument("p", help="Exponent, or pS for the Sobolev exponent")
        parser.add_argument("lam", metavar="lambda")
        amplitude = parser.add_mutually_exclusive_group(required=True)
        amplitude.add_argument("--alpha")
        amplitude.add_argument("--bracket", nargs=2, metavar=("LO", "HI"))
        parser.add_argument("--r-end")
        parser.add_argument("--output", metavar="PREFIX", help="Write PREFIX.csv and PREFIX.json")
        parser.add_argument(
            "--format", choices=["csv", "json"], help="Stdout format without --output"
        )

    def config_data(self, options):
        return {
            "n": options["n"],
            "p": options["p"],
            "lam": options["lam"],
            "alpha": options["alpha"],
            "bracket": options["bracket"],
            "r_end": options["r_end"],
            "output": options["output"],
            "format": options["format"],
        }

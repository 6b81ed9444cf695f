from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Check the integral identities on a stored shot profile"
    command = RunCommand.VERIFY

    def add_arguments(self, parser):
        parser.add_argument(
            "--profile", required=True, metavar="PREFIX", help="Reads PREFIX.csv and PREFIX.json"
        )
        parser.add_argument("--mu", help="Field parameter, defaults to the profile's")
        parser.add_argument("--radius", help="Ball radius, defaults to the faithful radius")
        parser.add_argument(
            "--multipliers",
            action="store_true",
            help="Check the lambda = 1 multiplier identities instead",
        )
        parser.add_argument("--output")

    def config_data(self, options):
        return {
            "profile": options["profile"],
            "mu": options["mu"],
            "radius": options["radius"],
            "multipliers": options["multipliers"],
            "output": options["output"],
        }

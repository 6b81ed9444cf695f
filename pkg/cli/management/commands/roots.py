from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "List the positive roots of xi -> M(a, b, xi)"
    command = RunCommand.ROOTS

    def add_arguments(self, parser):
        parser.add_argument("a")
        parser.add_argument("b")
        parser.add_argument(
            "--xi-max", help="Search window; doubled until every root is found when omitted"
        )
        self.add_output_arguments(parser)

    def config_data(self, options):
        return {
            "a": options["a"],
            "b": options["b"],
            "xi_max": options["xi_max"],
            "output": options["output"],
            "format": options["format"],
        }

from cli.config import RunCommand
from cli.runner import RunConfigCommand


class Command(RunConfigCommand):
    help = "Print the Kummer function M(a, b, xi)"
    command = RunCommand.EVAL

    def add_arguments(self, parser):
        parser.add_argument("a")
        parser.add_argument("b")
        parser.add_argument("xi")

    def config_data(self, options):
        return {"a": options["a"], "b": options["b"], "xi": options["xi"]}

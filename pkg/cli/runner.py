"""
Execution of a validated RunConfig and the shared command plumbing
"""
import logging
import math
import os

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from cli.config import OutputFormat, RunCommand, RunConfigSerializer
from fields.profile import build_profile, default_grid
from fields.serializers import FieldProfileSerializer
from kummer.functions import kummer_m
from kummer.roots import positive_roots, positive_roots_escalating
from kummer.serializers import RootListSerializer
from numerics.exceptions import NumericalError
from regime.analysis import classify
from regime.serializers import RegimeReportSerializer
from regime.sweep import run_sweep
from regime.tasks import dispatch_sweep
from shooting.exceptions import NoBracket
from shooting.profiles import integrate_profile
from shooting.search import find_bounded_profile
from shooting.serializers import ShootResultSerializer
from shooting.storage import CSV_OPTIONS, read_profile, write_profile
from verify.identities import identity_residual
from verify.multipliers import multiplier_report
from verify.serializers import IdentityResidualSerializer, MultiplierResidualsSerializer

VALIDATION_EXIT = 2
NUMERICAL_EXIT = 3


def format_float(value):
    """
    17 significant digits, with a trailing .0 on integral values.
    """
    text = f"{float(value):.17g}"
    if math.isfinite(value) and not any(mark in text for mark in ".e"):
        text += ".0"
    return text


def render_json(data):
    return JSONRenderer().render(data).decode("utf-8") + "\n"


def render_frame(frame, output_format):
    if output_format == OutputFormat.CSV:
        return frame.to_csv(**CSV_OPTIONS)
    records = frame.astype(object).where(frame.notna(), None).to_dict("records")
    return render_json(records)


def resolve_jobs(requested):
    """
    OU_LIOUVILLE_JOBS wins over --jobs; without either, one job per CPU.
    """
    override = getattr(settings, "OU_LIOUVILLE_JOBS", None)
    if override:
        jobs = int(override)
        if jobs < 1:
            raise ValueError(f"OU_LIOUVILLE_JOBS must be a positive integer, got {override}")
        return jobs
    if requested:
        return requested
    return os.cpu_count() or 1


def describe_errors(errors):
    return "; ".join(
        f"{field}: {' '.join(str(detail) for detail in details)}"
        for field, details in errors.items()
    )


def build_config(data):
    serializer = RunConfigSerializer(data=data)
    if not serializer.is_valid():
        raise CommandError(
            f"Invalid arguments: {describe_errors(serializer.errors)}", returncode=VALIDATION_EXIT
        )
    return serializer.save()


def emit(text, config, stdout):
    if config.output_path is None:
        stdout.write(text, ending="")
        return
    config.output_path.parent.mkdir(parents=True, exist_ok=True)
    config.output_path.write_text(text, encoding="utf-8", newline="\n")
    logging.info("Wrote %s output to %s", config.command, config.output_path)


def _eval(config, stdout):
    stdout.write(format_float(kummer_m(config.a, config.b, config.xi)))


def _roots(config, stdout):
    if config.xi_max is None:
        roots = positive_roots_escalating(config.a, config.b)
    else:
        roots = positive_roots(config.a, config.b, config.xi_max)
    if config.format == OutputFormat.CSV:
        emit("xi\n" + "".join(format_float(root) + "\n" for root in roots), config, stdout)
    else:
        emit(render_json(RootListSerializer(roots).data), config, stdout)


def _regime(config, stdout):
    report = classify(
        config.params,
        r_max=config.r_max,
        grid_points=config.grid_points,
        with_markers=config.markers,
    )
    emit(render_json(RegimeReportSerializer(report).data), config, stdout)


def _sweep(config, stdout):
    if getattr(settings, "CELERY_BROKER_URL", None):
        frame = dispatch_sweep(config.points)
    else:
        frame = run_sweep(config.points, jobs=resolve_jobs(config.jobs))
    emit(render_frame(frame, config.format), config, stdout)


def _shoot(config, stdout):
    if config.alpha is not None:
        result = integrate_profile(config.params, config.alpha, config.r_end, config.ode)
    else:
        lo, hi = config.bracket
        result = find_bounded_profile(config.params, lo, hi, config.r_end, ode=config.ode)
        if result is None:
            raise NoBracket(f"The bracket [{lo}, {hi}] closed on an escaping profile")
    summary = render_json(ShootResultSerializer(result).data)
    if config.output_path is not None:
        write_profile(result, config.output_path)
        stdout.write(summary, ending="")
    elif config.format == OutputFormat.CSV:
        stdout.write(result.to_dataframe().to_csv(**CSV_OPTIONS), ending="")
    else:
        stdout.write(summary, ending="")


def _verify(config, stdout):
    profile = read_profile(config.profile)
    if config.multipliers:
        data = MultiplierResidualsSerializer(multiplier_report(profile, config.radius)).data
    else:
        data = IdentityResidualSerializer(
            identity_residual(profile, mu=config.mu, radius=config.radius)
        ).data
    emit(render_json(data), config, stdout)


def _fields(config, stdout):
    profile = build_profile(config.params, grid=default_grid(config.r_max, config.grid_points))
    if config.format == OutputFormat.CSV:
        emit(profile.to_dataframe().to_csv(**CSV_OPTIONS), config, stdout)
    else:
        emit(render_json(FieldProfileSerializer(profile).data), config, stdout)


HANDLERS = {
    RunCommand.EVAL: _eval,
    RunCommand.ROOTS: _roots,
    RunCommand.REGIME: _regime,
    RunCommand.SWEEP: _sweep,
    RunCommand.SHOOT: _shoot,
    RunCommand.VERIFY: _verify,
    RunCommand.FIELDS: _fields,
}


def run(config, stdout):
    """
    Run one command; module failures become CommandError with exit code
    2 for bad input and 3 for numerical failures.
    """
    logging.info("Running %s", config.command)
    try:
        HANDLERS[config.command](config, stdout)
    except NumericalError as exc:
        logging.error("%s failed: %s", config.command, exc)
        raise CommandError(f"{type(exc).__name__}: {exc}", returncode=NUMERICAL_EXIT)
    except (ValueError, FileNotFoundError) as exc:
        raise CommandError(str(exc), returncode=VALIDATION_EXIT)


class RunConfigCommand(BaseCommand):
    """
    Base for the numerical commands: options -> RunConfig -> run
    """

    command = None

    def add_output_arguments(self, parser):
        parser.add_argument("--output", help="Write the artifact here instead of stdout")
        parser.add_argument("--format", choices=OutputFormat.values)

    def config_data(self, options):
        raise NotImplementedError

    def handle(self, *args, **options):
        data = {key: value for key, value in self.config_data(options).items() if value is not None}
        data["command"] = self.command
        run(build_config(data), self.stdout)

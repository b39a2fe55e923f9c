import copy
import logging.config
import time
import traceback
from pathlib import Path

import click
from click import Context

from .__version__ import __version__
from .config import ENVVAR_PREFIX, LOGGING_CONFIG, Config, load_config
from .corpus import run_corpus
from .curve import LinearFunction, WeierstrassCurve
from .divpoly import degree_coincidences, division_polynomials, primitive_degree, psi_tilde
from .emit import emit
from .errors import RegimeError, TorsionGaloisError
from .galois import classify_mod3, minus_id_probe
from .models import (
    CharPolyReport,
    ClassificationReport,
    DegreeGroup,
    DegreeReport,
    Evidence,
    PolynomialModel,
    ProbeReport,
    ScalingReport,
)
from .torsionchar import (
    charpoly_matrix,
    charpoly_resultant,
    compute_charpoly,
    numeric_root_check,
    scaling_experiment,
    valuation_profile,
)

LEVEL_CHOICES = click.Choice(["critical", "error", "warning", "info", "debug"], case_sensitive=False)

format_option = click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "pretty"]),
    default="json",
    show_default=True,
    help="Output format.",
)
curve_option = click.option(
    "--curve",
    "curve_text",
    required=True,
    help='Weierstrass coefficients "a1,a2,a3,a4,a6"; rationals or polynomials in t.',
)


def _parse_curve(text: str) -> WeierstrassCurve:
    try:
        return WeierstrassCurve.parse(text)
    except TorsionGaloisError as e:
        raise click.BadParameter(str(e), param_hint="--curve") from e


def _parse_u(text: str) -> LinearFunction:
    try:
        return LinearFunction.parse(text)
    except TorsionGaloisError as e:
        raise click.BadParameter(str(e), param_hint="--u") from e


def _config(ctx: Context) -> Config:
    return ctx.obj["config"]


class TorsionGroup(click.Group):
    """
    Adds the global options and turns library errors into exit code 1.

    Usage errors keep click's exit code 2.
    """

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.verbose_option = click.Option(
            ["-v", "--verbose"], is_flag=True, default=False, help="Debug logging and tracebacks on failure."
        )
        self.log_level_option = click.Option(
            ["--log-level"], type=LEVEL_CHOICES, default=None, help="Log level of the torsion_galois loggers."
        )
        self.threads_option = click.Option(
            ["--threads"], type=click.IntRange(min=1), default=None, show_envvar=True, help="Worker threads."
        )
        self.probe_bound_option = click.Option(
            ["--probe-bound"],
            type=click.IntRange(min=2),
            default=None,
            show_envvar=True,
            help="Default largest prime of the -id probe.",
        )
        self.numeric_options = [
            click.Option(
                ["--numeric-max-iterations"],
                type=click.IntRange(min=1),
                default=None,
                show_envvar=True,
                help="Iteration cap of the numeric root finder.",
            ),
            click.Option(
                ["--numeric-step-tolerance"],
                type=click.FloatRange(min=0, min_open=True),
                default=None,
                show_envvar=True,
                help="Relative step size at which root iteration stops.",
            ),
            click.Option(
                ["--numeric-residual-tolerance"],
                type=click.FloatRange(min=0, min_open=True),
                default=None,
                show_envvar=True,
                help="Largest relative residual accepted for a numeric root.",
            ),
        ]
        self.params.extend(
            [
                self.verbose_option,
                self.log_level_option,
                self.threads_option,
                self.probe_bound_option,
                *self.numeric_options,
            ]
        )

    def invoke(self, ctx: Context):
        try:
            return super().invoke(ctx)
        except TorsionGaloisError as e:
            if ctx.obj and ctx.obj.get("verbose"):
                traceback.print_exc()
            click.secho(f"ERROR: {e}", fg="red", err=True)
            ctx.exit(1)


@click.pass_context
def _setup(ctx: Context, verbose: bool, log_level: str | None, **overrides: int | float | None) -> None:
    config = load_config(log_level="DEBUG" if verbose else log_level, **overrides)
    logging_config = copy.deepcopy(LOGGING_CONFIG)
    logging_config["loggers"]["torsion_galois"]["level"] = config["LOG_LEVEL"].upper()
    logging.config.dictConfig(logging_config)
    ctx.obj = {"config": config, "verbose": verbose}


cli = TorsionGroup(
    name="torsion-galois",
    callback=_setup,
    context_settings={"auto_envvar_prefix": ENVVAR_PREFIX},
    help="""\
        Division polynomials, characteristic polynomials of torsion coordinates and
        mod-3 Galois images of elliptic curves over QQ and QQ[t].
    """,
)
cli.params.append(
    click.Option(
        ["--version"],
        is_flag=True,
        expose_value=False,
        is_eager=True,
        callback=lambda ctx, _, value: value and (click.echo(f"torsion-galois {__version__}") or ctx.exit()),
        help="Show the version and exit.",
    )
)


@cli.command("divpoly", help="Division polynomial psi_n, or the primitive psi~_n with --primitive.")
@curve_option
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--primitive", is_flag=True, default=False, help="Emit psi~_n (n >= 3).")
@format_option
def divpoly_command(curve_text: str, n: int, primitive: bool, fmt: str) -> None:
    curve = _parse_curve(curve_text)
    if primitive:
        poly = psi_tilde(curve, n)
    else:
        poly = division_polynomials(curve)[n]
        if n % 2 == 0:
            click.secho(f"NOTE: psi_{n} = psi_2 * f with psi_2 = 2y + a1*x + a3; emitting f", fg="yellow", err=True)
    click.echo(emit(PolynomialModel.from_poly(poly), fmt))  # type: ignore[arg-type]


@cli.command("charpoly", help="Characteristic polynomial chi_{u,n} of u = a*y + b*x + c on the n-torsion.")
@curve_option
@click.option("--u", "u_text", default="1,0,0", show_default=True, help='Coefficients "a,b,c" of u.')
@click.option("--n", "n", type=click.IntRange(min=2), required=True)
@click.option(
    "--method", type=click.Choice(["matrix", "resultant", "both"]), default="resultant", show_default=True
)
@click.option("--check-valuation", "ells", type=int, multiple=True, help="Report the minimum valuation at this prime.")
@click.option("--numeric-check", "tolerance", type=float, default=None, help="Numeric root check tolerance.")
@click.option("--timings", is_flag=True, default=False, help="Include wall-clock timings.")
@format_option
@click.pass_context
def charpoly_command(
    ctx: Context,
    curve_text: str,
    u_text: str,
    n: int,
    method: str,
    ells: tuple[int, ...],
    tolerance: float | None,
    timings: bool,
    fmt: str,
) -> None:
    curve = _parse_curve(curve_text)
    u = _parse_u(u_text)
    elapsed: dict[str, float] = {}
    start = time.perf_counter()
    if method == "both" and n > 2:
        result = charpoly_resultant(curve, u, n)
        elapsed["resultant"] = time.perf_counter() - start
        start = time.perf_counter()
        matrix = charpoly_matrix(curve, u, n)
        elapsed["matrix"] = time.perf_counter() - start
        if matrix.chi != result.chi:
            raise TorsionGaloisError("the matrix and resultant routes disagree")
    else:
        result = compute_charpoly(curve, u, n, "resultant" if method == "both" else method)  # type: ignore[arg-type]
        elapsed[result.method] = time.perf_counter() - start

    valuation_min: dict[int, int | None] = {}
    valuation_ok: dict[int, bool | None] = {}
    for ell in ells:
        try:
            profile = valuation_profile(result, ell)
        except RegimeError as e:
            click.secho(f"WARNING: no valuation bound at {ell}: {e}", fg="yellow", err=True)
            valuation_min[ell] = valuation_ok[ell] = None
            continue
        valuation_min[ell] = int(profile.minimum)
        valuation_ok[ell] = profile.ok

    residual = None
    if tolerance is not None:
        check = numeric_root_check(curve, u, n, tolerance, result.chi, **_config(ctx).root_options)
        residual = check.residual
        if not check.ok:
            click.secho(f"WARNING: numeric residual {residual:.3g} exceeds {tolerance:g}", fg="yellow", err=True)

    report = CharPolyReport(
        curve=str(curve),
        u=str(u),
        n=n,
        degree=result.degree,
        method=method if method == "both" and n > 2 else result.method,
        chi=PolynomialModel.from_poly(result.chi),
        valuation_min=valuation_min,
        valuation_bound_ok=valuation_ok,
        numeric_residual=residual,
        timings=elapsed if timings else None,
    )
    click.echo(emit(report, fmt))  # type: ignore[arg-type]
    if any(ok is False for ok in valuation_ok.values()) or (residual is not None and residual > tolerance):
        raise click.exceptions.Exit(1)


@cli.command("classify-mod3", help="Mod-3 Galois image of a curve over QQ.")
@curve_option
@click.option("--probe-bound", type=click.IntRange(min=2), default=None, help="Largest prime of the -id probe.")
@format_option
@click.pass_context
def classify_command(ctx: Context, curve_text: str, probe_bound: int | None, fmt: str) -> None:
    config = _config(ctx)
    curve = _parse_curve(curve_text)
    classification = classify_mod3(curve, probe_bound or config["PROBE_BOUND"], config["THREADS"])
    if classification.qualifier == "probable":
        click.secho(f"WARNING: {classification.label.value} is probable only", fg="yellow", err=True)
    probe = classification.probe
    report = ClassificationReport(
        curve=str(curve),
        label=classification.label,
        qualifier=classification.qualifier,
        evidence=Evidence(
            factorization_type=list(classification.factorization),
            quartic_group=classification.quartic_group.value if classification.quartic_group else None,
            probe=ProbeReport(ell=probe.ell, bound=probe.bound, found=probe.found) if probe else None,
        ),
    )
    click.echo(emit(report, fmt))  # type: ignore[arg-type]


@cli.command("minus-id", help="Search for a Frobenius witnessing -id in the mod-ell image.")
@curve_option
@click.option("--ell", type=int, default=3, show_default=True)
@click.option("--bound", type=click.IntRange(min=2), default=None, help="Largest prime examined.")
@format_option
@click.pass_context
def minus_id_command(ctx: Context, curve_text: str, ell: int, bound: int | None, fmt: str) -> None:
    config = _config(ctx)
    curve = _parse_curve(curve_text)
    probe = minus_id_probe(curve, ell, bound or config["PROBE_BOUND"], config["THREADS"])
    click.echo(emit(ProbeReport(ell=probe.ell, bound=probe.bound, found=probe.found), fmt))  # type: ignore[arg-type]


@cli.command("scaling-check", help="Valuations of chi_{u,n} for u scaled by lambda = p^m on y^2 = x^3 + A*x + B.")
@curve_option
@click.option("--p", "p", type=int, required=True)
@click.option("--m", "m", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.Choice(["2", "3"]), default="3", show_default=True)
@click.option("--method", type=click.Choice(["matrix", "resultant"]), default="matrix", show_default=True)
@format_option
def scaling_command(curve_text: str, p: int, m: int, n: str, method: str, fmt: str) -> None:
    curve = _parse_curve(curve_text)
    profile = scaling_experiment(curve, p, m, int(n), method)  # type: ignore[arg-type]
    report = ScalingReport(
        curve=str(curve),
        p=p,
        m=m,
        n=int(n),
        ok=profile.ok,
        required=list(profile.required),
        valuations=[None if v == float("inf") else int(v) for v in profile.valuations],
    )
    click.echo(emit(report, fmt))  # type: ignore[arg-type]
    if not profile.ok:
        raise click.exceptions.Exit(1)


@cli.command("degrees", help="Orders n <= LIMIT whose primitive division polynomials share a degree.")
@click.option("--limit", type=click.IntRange(min=3), default=100, show_default=True)
@format_option
def degrees_command(limit: int, fmt: str) -> None:
    groups = [DegreeGroup(degree=primitive_degree(g[0]), orders=g) for g in degree_coincidences(limit)]
    click.echo(emit(DegreeReport(limit=limit, groups=groups), fmt))  # type: ignore[arg-type]


@cli.command("corpus", help="Run a golden corpus file.")
@click.argument("path", type=click.Path(exists=True, dir_okay=False, path_type=Path))
@click.option("--skip-slow", is_flag=True, default=False, help="Skip entries flagged slow.")
@click.option("--timings", is_flag=True, default=False, help="Include wall-clock timings.")
@format_option
@click.pass_context
def corpus_command(ctx: Context, path: Path, skip_slow: bool, timings: bool, fmt: str) -> None:
    config = _config(ctx)
    report = run_corpus(path, config["THREADS"], skip_slow, timings, config["PROBE_BOUND"], config.root_options)
    click.echo(emit(report, fmt))  # type: ignore[arg-type]
    if not report.ok:
        raise click.exceptions.Exit(1)


def main():  # pragma: no cover
    cli.main()

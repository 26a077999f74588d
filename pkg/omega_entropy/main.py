import logging
from typing import List, Optional

import typer

from omega_entropy import __version__
from omega_entropy.cli.commands.analyze import STDIN, run_analyze
from omega_entropy.cli.commands.channel import run_channel
from omega_entropy.cli.commands.converge import run_converge
from omega_entropy.cli.commands.verify import run_verify
from omega_entropy.cli.state import CliState, EXIT_INPUT_ERROR, InputErrorGroup, exit_on_error
from omega_entropy.cli.themes import DEFAULT_THEME, ThemeManager
from omega_entropy.core.config import FORMATS, UNITS, configure_logging, get_config
from omega_entropy.core.errors import ConfigError

app = typer.Typer(
    name="omega-entropy",
    cls=InputErrorGroup,
    help="Finite-sample entropy H_Ω, Shannon entropy H_S, and channel utilization bounds",
    add_completion=False,
    no_args_is_help=True,
)


@app.callback()
def main(
    ctx: typer.Context,
    fmt: Optional[str] = typer.Option(None, "--format", "-f", help=f"Output format: {', '.join(FORMATS)}"),
    unit: Optional[str] = typer.Option(None, "--unit", "-u", help=f"Entropy unit: {', '.join(UNITS)}"),
    debug: bool = typer.Option(False, "--debug", help="Verbose logs and full tracebacks"),
):
    """omega-entropy: finite-sample entropy and protocol-overhead bounds"""
    try:
        config = get_config()
    except ConfigError as e:
        typer.echo(f"❌ Configuration error: {e}", err=True)
        raise typer.Exit(EXIT_INPUT_ERROR)
    if debug:
        config.DEBUG = True
        config.LOG_LEVEL = "DEBUG"
    configure_logging(config)
    if config.TABLE_THEME not in ThemeManager().get_available_themes():
        logging.getLogger(__name__).warning(
            "unknown table theme %r, using %s", config.TABLE_THEME, DEFAULT_THEME
        )
        config.TABLE_THEME = DEFAULT_THEME

    fmt = (fmt or config.DEFAULT_FORMAT).lower()
    unit = (unit or config.DEFAULT_UNIT).lower()
    if fmt not in FORMATS:
        typer.echo(f"❌ Unknown format {fmt!r}; choose one of {', '.join(FORMATS)}", err=True)
        raise typer.Exit(EXIT_INPUT_ERROR)
    if unit not in UNITS:
        typer.echo(f"❌ Unknown unit {unit!r}; choose one of {', '.join(UNITS)}", err=True)
        raise typer.Exit(EXIT_INPUT_ERROR)
    ctx.obj = CliState(format=fmt, unit=unit, debug=config.DEBUG, config=config)


@app.command()
@exit_on_error
def analyze(
    ctx: typer.Context,
    sources: Optional[List[str]] = typer.Argument(None, help="Files to analyze; '-' or nothing reads stdin"),
    bits: bool = typer.Option(False, "--bits", help="Treat input as a bit stream (M=2) instead of bytes (M=256)"),
    compact_alphabet: bool = typer.Option(False, "--compact", help="Count only byte values that occur (M = observed symbols)"),
):
    """Entropy and channel bounds of byte or bit streams."""
    run_analyze(ctx, sources or [STDIN], bits, compact_alphabet)


@app.command()
@exit_on_error
def converge(
    ctx: typer.Context,
    m: Optional[int] = typer.Option(None, "--m", "-m", help="Number of outcomes M (uniform distribution; default 2)"),
    probs: Optional[str] = typer.Option(None, "--probs", "-p", help="Comma-separated probabilities, e.g. 0.2,0.8"),
    n_min: int = typer.Option(2, "--n-min", help="Smallest sample size"),
    n_max: int = typer.Option(4096, "--n-max", help="Largest sample size (at most 1e9)"),
    steps: int = typer.Option(12, "--steps", help="Number of log-spaced grid points"),
):
    """Table of H_Ω converging to H_S as the sample size N grows."""
    run_converge(ctx, m, probs, n_min, n_max, steps)


@app.command()
@exit_on_error
def channel(
    ctx: typer.Context,
    n: int = typer.Argument(..., help="Message size N in bits (or symbols with --probs)"),
    header_bits: Optional[int] = typer.Option(
        None, "--header-bits",
        help="Compare with a real header: overhead = header/(header+N); Ethernet's 208-bit header on 12000 bits gives 0.017",
    ),
    ceil_log2: bool = typer.Option(False, "--ceil-log2", help="Round the length prefix up to whole bits"),
    probs: Optional[str] = typer.Option(None, "--probs", "-p", help="Symbol probabilities for a non-binary source"),
):
    """Maximum channel utilization and minimum protocol overhead for N-bit messages."""
    run_channel(ctx, n, header_bits, ceil_log2, probs)


@app.command()
@exit_on_error
def verify(
    ctx: typer.Context,
    cases: int = typer.Option(1000, "--cases", help="Random cases per identity check"),
    seed: int = typer.Option(0, "--seed", help="Random seed"),
    mode_n: int = typer.Option(12, "--mode-n", help="Sample size N of the equilibrium-mode check"),
    mode_m: int = typer.Option(3, "--mode-m", help="Alphabet size M of the equilibrium-mode check"),
):
    """Check the recursion and coarse-graining identities and the equilibrium mode numerically."""
    run_verify(ctx, cases, seed, mode_n, mode_m)


@app.command()
def version():
    """Show version information."""
    typer.echo(f"omega-entropy v{__version__}")


@app.command()
def help():
    """Show detailed help and examples."""
    typer.echo("""
omega-entropy: finite-sample entropy H_Ω and channel bounds

Commands:
  analyze   Entropy of files or stdin, with utilization/overhead bounds
  converge  H_Ω → H_S convergence table over a log-spaced N grid
  channel   Utilization and overhead bounds for an N-bit message
  verify    Randomized checks of the H_Ω identities and the equilibrium mode

Global options (before the command):
  --format table|json|csv   --unit nats|bits|beans   --debug

Examples:
  omega-entropy channel 256
  omega-entropy channel 12000 --header-bits 208
  omega-entropy verify --cases 1000 --mode-n 30 --mode-m 4
  omega-entropy --format csv converge --n-min 2 --n-max 4096
  omega-entropy --format json analyze --bits payload.bin
  cat data.bin | omega-entropy analyze --compact

Exit codes: 0 success, 1 input error (including bad arguments), 2 numeric-domain error.
""")


if __name__ == "__main__":
    app()

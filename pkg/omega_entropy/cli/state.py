"""
Global CLI options shared by every verb, and the error-to-exit-code mapping.
"""

import functools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, TypeVar

import typer
from typer.core import TyperGroup

try:  # typer >= 0.24 vendors its own copy of click
    from typer import _click as click
except ImportError:
    import click

from omega_entropy.core.config import Config
from omega_entropy.core.errors import InputError, NumericDomainError

logger = logging.getLogger(__name__)

EXIT_INPUT_ERROR = 1
EXIT_DOMAIN_ERROR = 2

F = TypeVar("F", bound=Callable[..., Any])


@dataclass
class CliState:
    """Options given before the verb (--format, --unit, --debug)."""
    format: str = "table"
    unit: str = "bits"
    debug: bool = False
    config: Config = field(default_factory=Config)


class InputErrorGroup(TyperGroup):
    """Command group reporting bad arguments and unknown commands with the input-error exit code."""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = EXIT_INPUT_ERROR
            raise


def get_state(ctx: typer.Context) -> CliState:
    if not isinstance(ctx.obj, CliState):
        ctx.obj = CliState()
    return ctx.obj


def exit_on_error(func: F) -> F:
    """Decorator mapping library errors to exit codes: 1 for input, 2 for numeric domain."""
    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        ctx = kwargs.get("ctx") or next((a for a in args if isinstance(a, typer.Context)), None)
        debug = bool(ctx is not None and get_state(ctx).debug)
        try:
            return func(*args, **kwargs)
        except NumericDomainError as e:
            if debug:
                raise
            typer.echo(f"❌ Numeric domain error: {e}", err=True)
            raise typer.Exit(EXIT_DOMAIN_ERROR)
        except InputError as e:
            if debug:
                raise
            typer.echo(f"❌ {e}", err=True)
            raise typer.Exit(EXIT_INPUT_ERROR)
    return wrapper  # type: ignore[return-value]

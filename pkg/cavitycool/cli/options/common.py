# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""
Common command options for cavitycool commands.
"""

import functools
import logging
import pathlib
import sys
import traceback
from typing import Any, Callable, Dict, Optional, Sequence, TypeVar

import click
from click.core import ParameterSource

from cavitycool.cli.config import (
    CavityCoolConfig,
    CavityCoolConfigError,
    load_from_file,
    make_config,
)
from cavitycool.cli.log import configure_logger
from cavitycool.const import (
    CONFIG_ENVVAR,
    CONFIG_ERROR_EXIT_CODE,
    DEBUG_ENVVAR,
    DEFAULT_CONFIG_FILE,
    ERROR_EXIT_CODE,
    NUMERICAL_ERROR_EXIT_CODE,
)
from cavitycool.errors import DomainError, NumericalError
from cavitycool.molecule import TransitionNotFoundError


F = TypeVar("F", bound=Callable[..., Any])

logger = logging.getLogger(__name__)

CONFIG_KEY = "config"


def exit_code_for(ex: Exception) -> int:
    """Config and input errors exit 2, numerical failures 3, anything else 1."""
    if isinstance(ex, (CavityCoolConfigError, DomainError, TransitionNotFoundError)):
        return CONFIG_ERROR_EXIT_CODE
    if isinstance(ex, NumericalError):
        return NUMERICAL_ERROR_EXIT_CODE
    return ERROR_EXIT_CODE


def handle_exceptions(func: F) -> F:
    @functools.wraps(func)
    def wrapper(*args: Sequence[Any], **kwargs: Dict[Any, Any]) -> Any:
        try:
            return func(*args, **kwargs)
        except click.ClickException:
            raise
        except Exception as ex:
            traceback_str = traceback.format_exc()
            logger.error(f"cavitycool error: {str(ex)}")
            diagnostic = getattr(ex, "diagnostic", None)
            if diagnostic:
                logger.error(f"diagnostic: {diagnostic}")
            logger.debug(traceback_str)
            sys.exit(exit_code_for(ex))

    return wrapper  # type: ignore[return-value]


def debug_to_log_level(ctx: click.Context, param: click.Parameter, value: bool) -> None:
    """Sets logging level based on debug flag."""
    log_level = logging.DEBUG if value else logging.INFO
    configure_logger(log_level)


def load_config_to_ctx(
    ctx: click.Context, param: click.Parameter, value: Optional[pathlib.Path]
) -> Optional[pathlib.Path]:
    """Load the yaml config into the Click context object.

    A missing file at the default location means built-in defaults; a
    missing file that was asked for explicitly is a config error.

    This will always run before other options because the --config is_eager is True.
    """
    explicit = ctx.get_parameter_source(param.name or "") not in (
        ParameterSource.DEFAULT,
        None,
    )
    obj = ctx.ensure_object(dict)
    if not explicit and CONFIG_KEY in obj:
        return value
    try:
        config = load_from_file(value) if value is not None else None
        if config is None:
            if explicit:
                raise CavityCoolConfigError([{"msg": f"Config file {value} not found"}])
            logger.debug(f"No cavitycool config file found at {value}, using defaults.")
            config = make_config()
    except CavityCoolConfigError as ex:
        logger.error(str(ex))
        sys.exit(CONFIG_ERROR_EXIT_CODE)

    obj[CONFIG_KEY] = config
    logger.debug(f"Loaded config into context from {value}.")
    return value


def get_config(ctx: click.Context) -> CavityCoolConfig:
    """The config loaded by --config, or the defaults."""
    obj = ctx.find_object(dict)
    if obj is None or CONFIG_KEY not in obj:
        return make_config()
    config: CavityCoolConfig = obj[CONFIG_KEY]
    return config


def common_options(f: F) -> F:
    """
    Configures common options used across commands.
    """

    f = click.option(
        "--debug",
        default=False,
        is_flag=True,
        is_eager=True,
        envvar=DEBUG_ENVVAR,
        help="Enable debug logging messages.",
        callback=debug_to_log_level,
    )(f)
    f = click.option(
        "--config",
        "config_path",
        type=click.Path(path_type=pathlib.Path, dir_okay=False),
        envvar=CONFIG_ENVVAR,
        help="Path to cavitycool configuration file.",
        default=DEFAULT_CONFIG_FILE,
        is_eager=True,
        callback=load_config_to_ctx,
    )(f)
    return f


def output_options(f: F) -> F:
    """
    Configure where results are written.
    """
    f = click.option(
        "--output",
        "-o",
        type=click.Path(path_type=pathlib.Path, dir_okay=False),
        help="Write results to this file instead of stdout.",
        required=False,
    )(f)
    return f

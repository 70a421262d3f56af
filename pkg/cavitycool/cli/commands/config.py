# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""
Module for the config command group
"""

import logging
import pathlib
import sys

import click

from cavitycool.cli.config import make_config, write_to_file
from cavitycool.cli.options.common import handle_exceptions
from cavitycool.const import DEFAULT_CONFIG_FILE, ERROR_EXIT_CODE


logger = logging.getLogger(__name__)


@click.group(name="config", help="Manage cavitycool configuration files.")
def config_cmd() -> None:
    """Config command group"""


@config_cmd.command(name="init", help="Write a config file populated with the defaults.")
@click.option(
    "--path",
    type=click.Path(path_type=pathlib.Path, dir_okay=False),
    default=DEFAULT_CONFIG_FILE,
    show_default=True,
    help="Where to write the config file.",
)
@click.option("--force", is_flag=True, help="Overwrite an existing file.")
@handle_exceptions
def config_init_cmd(path: pathlib.Path, force: bool) -> None:
    if path.exists() and not force:
        logger.error(f"{path} already exists; use --force to overwrite it.")
        sys.exit(ERROR_EXIT_CODE)
    write_to_file(make_config(), path)
    logger.info(f"Wrote default config to {path}")

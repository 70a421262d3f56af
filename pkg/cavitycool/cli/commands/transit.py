# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the transit command"""

import logging
import pathlib
from typing import Any, Optional

import click

from cavitycool.cli.options.common import (
    common_options,
    get_config,
    handle_exceptions,
    output_options,
)
from cavitycool.cli.utils import parse_grid, resolve_transition
from cavitycool.multimode import confocal_report
from cavitycool.reporter import CSVBuilder, ResultsReporter
from cavitycool.scenarios import transit_table


logger = logging.getLogger(__name__)

TRANSIT_COLUMNS = ["v_m_s", "t_waist_confocal_s", "t_waist_tem00_s", "t_axial_s"]


@click.command(
    name="transit",
    help="Times to cross the confocal waist, the TEM00 waist and the cavity axis.",
)
@click.pass_context
@common_options
@output_options
@click.option(
    "--velocities",
    type=str,
    default="1:400:400",
    show_default=True,
    help="Velocity grid in m/s as a:b:n.",
)
@handle_exceptions
def transit_cmd(
    ctx: click.Context, output: Optional[pathlib.Path], velocities: str, **kwargs: Any
) -> None:
    config = get_config(ctx)
    cavity = confocal_report(
        resolve_transition(config),
        config.cavity.finesse,
        config.cavity.radius_m,
        config.cavity.degradation,
    )
    builder = CSVBuilder(TRANSIT_COLUMNS)
    builder.add_rows(transit_table(parse_grid(velocities), cavity))
    ResultsReporter(output).report_csv(builder)

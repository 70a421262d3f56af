# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the sweep command"""

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
from cavitycool.cli.utils import parse_grid
from cavitycool.molecule import get_transition
from cavitycool.multimode import SWEEP_COLUMNS, design_sweep
from cavitycool.reporter import CSVBuilder, ResultsReporter


logger = logging.getLogger(__name__)


@click.command(
    name="sweep",
    help="Confocal design sweep over finesse and radius, ranked by figure of merit.",
)
@click.pass_context
@common_options
@output_options
@click.option(
    "--transition",
    type=str,
    help="Transition line. Defaults to the config's transition.",
    required=False,
)
@click.option(
    "--f-grid",
    type=str,
    required=True,
    help="Finesse grid as a:b:n, or a single value.",
)
@click.option(
    "--r-grid",
    type=str,
    required=True,
    help="Mirror radius grid in m as a:b:n, or a single value.",
)
@click.option(
    "--degradation",
    type=click.FloatRange(min=0, max=1, min_open=True),
    help="Realized fraction of the ideal cooperativity gain. Defaults to the config value.",
    required=False,
)
@handle_exceptions
def sweep_cmd(
    ctx: click.Context,
    output: Optional[pathlib.Path],
    transition: Optional[str],
    f_grid: str,
    r_grid: str,
    degradation: Optional[float],
    **kwargs: Any,
) -> None:
    config = get_config(ctx)
    line = get_transition(transition or config.transition.name)
    rows = design_sweep(
        line,
        parse_grid(f_grid),
        parse_grid(r_grid),
        degradation if degradation is not None else config.cavity.degradation,
    )
    builder = CSVBuilder(SWEEP_COLUMNS)
    builder.add_rows(rows)
    ResultsReporter(output).report_csv(builder)
    if output:
        logger.info(f"Wrote {builder.row_count} cavity designs to {output}")

# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the coolmap command"""

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
from cavitycool.cli.utils import resolve_cavity
from cavitycool.rates import damping_map, largest_cooling_region, log_grid
from cavitycool.reporter import CSVBuilder, ResultsReporter
from cavitycool.units import rad_s


logger = logging.getLogger(__name__)

COOLMAP_COLUMNS = ["delta_pa_hz", "cooperativity", "ratio"]


@click.command(
    name="coolmap",
    help="Velocity-damping to free-space scattering ratio over cooperativity and detuning.",
)
@click.pass_context
@common_options
@output_options
@handle_exceptions
def coolmap_cmd(ctx: click.Context, output: Optional[pathlib.Path], **kwargs: Any) -> None:
    config = get_config(ctx)
    section = config.coolmap
    transition, derived = resolve_cavity(config)
    result = damping_map(
        derived.kappa,
        transition.gamma_perp,
        transition.omega_rec,
        log_grid(section.c_min, section.c_max, section.c_num),
        log_grid(
            rad_s(section.delta_pa_start_hz), rad_s(section.delta_pa_stop_hz), section.delta_pa_num
        ),
    )
    share = largest_cooling_region(result)
    if share == 0.0:
        logger.warning("No cooling cells on the configured grid.")
    logger.debug(f"Largest cooling region holds {share:.3f} of the cooling cells")

    builder = CSVBuilder(COOLMAP_COLUMNS)
    builder.add_rows(result.rows())
    ResultsReporter(output).report_csv(builder)

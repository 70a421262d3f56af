# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the zones command"""

import logging
import pathlib
from typing import Any, Optional

import click

from cavitycool.cli.options.common import common_options, handle_exceptions, output_options
from cavitycool.reporter import ResultsReporter
from cavitycool.scenarios import ZONE_PRESETS, ZONE_WARNING, zone_preset


logger = logging.getLogger(__name__)


@click.command(name="zones", help="List the decelerator-zone density and velocity presets.")
@common_options
@output_options
@click.option(
    "--zone",
    type=click.Choice(["I", "II", "III", "IV"]),
    help="Show a single zone.",
    required=False,
)
@handle_exceptions
def zones_cmd(output: Optional[pathlib.Path], zone: Optional[str], **kwargs: Any) -> None:
    logger.warning(ZONE_WARNING)
    scenarios = [zone_preset(zone)] if zone else ZONE_PRESETS
    ResultsReporter(output).report_json(
        [
            {
                "zone": scenario.zone.value,
                "density_per_cm3": scenario.density,
                "velocity_m_s": scenario.velocity,
                "description": scenario.description,
            }
            for scenario in scenarios
        ],
        warnings=[ZONE_WARNING],
    )

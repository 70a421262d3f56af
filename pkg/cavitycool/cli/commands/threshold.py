# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the threshold command"""

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
from cavitycool.cli.utils import resolve_drive
from cavitycool.reporter import ResultsReporter
from cavitycool.selforg import thresholds, u0_gamma0_eta
from cavitycool.units import hz


logger = logging.getLogger(__name__)


@click.command(
    name="threshold",
    help="Self-organization pump thresholds and minimum particle numbers.",
)
@click.pass_context
@common_options
@output_options
@handle_exceptions
def threshold_cmd(ctx: click.Context, output: Optional[pathlib.Path], **kwargs: Any) -> None:
    config = get_config(ctx)
    drive = resolve_drive(config)
    section = config.threshold
    report = thresholds(drive, section.temperature_k, section.n_particles, section.s_max)
    u0, gamma0, eta = u0_gamma0_eta(drive.g, drive.delta_pa, drive.gamma_perp, drive.omega_p)
    ResultsReporter(output).report_json(
        {
            "inputs": {
                "transition": config.transition.name,
                "g_hz": hz(drive.g),
                "kappa_hz": hz(drive.kappa),
                "delta_pa_hz": hz(drive.delta_pa),
                "temperature_k": section.temperature_k,
                "n_particles": section.n_particles,
                "s_max": section.s_max,
            },
            "coupling": {
                "u0_hz": hz(u0),
                "gamma0_hz": hz(gamma0),
                "eta_eff_abs_hz": hz(abs(eta)),
            },
            "thresholds": report.to_dict(),
        }
    )

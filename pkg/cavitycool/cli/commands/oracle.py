# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the oracle command"""

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
from cavitycool.cli.utils import resolve_drive, resolve_transition
from cavitycool.errors import DomainError
from cavitycool.quantum_oracle import LiouvillianModel, compare, shelving_dynamics
from cavitycool.reporter import CSVBuilder, ResultsReporter
from cavitycool.steadystate import free_space_rate, pump_for_saturation


logger = logging.getLogger(__name__)

# Default shelving window in mean shelving times
SHELVING_WINDOW = 4.0


@click.command(
    name="oracle",
    help="Compare the semiclassical steady state with the truncated master equation.",
)
@click.pass_context
@common_options
@output_options
@click.option(
    "--shelving",
    is_flag=True,
    help="Run three-level shelving dynamics with the transition's Rayleigh-to-Raman ratio.",
)
@handle_exceptions
def oracle_cmd(
    ctx: click.Context, output: Optional[pathlib.Path], shelving: bool, **kwargs: Any
) -> None:
    config = get_config(ctx)
    section = config.oracle
    drive = resolve_drive(config)
    reporter = ResultsReporter(output)

    if shelving:
        upsilon = resolve_transition(config).upsilon
        model = LiouvillianModel.three_level(drive, upsilon, section.fock_cutoff)
        t_max = section.t_max_s
        if t_max is None:
            rate = free_space_rate(drive)
            if rate <= 0:
                raise DomainError("Shelving dynamics needs a nonzero pump.")
            t_max = SHELVING_WINDOW * (1 + upsilon) / rate
        result = shelving_dynamics(model, t_max, section.n_steps)
        reporter.report_csv(CSVBuilder.from_rows(result.rows()))
        if output and result.t_half is not None:
            logger.info(
                f"Half shelved at {result.t_half:.4g} s after "
                f"{result.cavity_photons_at_half:.4g} cavity photons"
            )
        return

    rows = []
    for s in section.saturations:
        point = drive.with_(omega_p=pump_for_saturation(s, drive.delta_pa, drive.gamma_perp))
        rows.append(compare(point, section.fock_cutoff).to_row())
    reporter.report_csv(CSVBuilder.from_rows(rows))

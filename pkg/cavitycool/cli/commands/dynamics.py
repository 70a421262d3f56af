# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the dynamics command"""

import dataclasses
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
from cavitycool.cli.utils import parse_scan, resolve_ensemble, scan_grid
from cavitycool.reporter import CSVBuilder, ResultsReporter
from cavitycool.selforg import (
    measured_threshold,
    run_ensemble,
    run_trajectory,
    threshold_scan,
)
from cavitycool.units import hz, rad_s


logger = logging.getLogger(__name__)


@click.command(
    name="dynamics",
    help="Stochastic self-organization runs: one trajectory, a seed ensemble, "
    "or a pump-strength threshold scan.",
)
@click.pass_context
@common_options
@output_options
@click.option(
    "--scan",
    type=str,
    help="Scan the pump as omega_p=a:b:n (Hz). Use 'config' for the scan section's grid.",
    required=False,
)
@click.option(
    "--seeds",
    type=click.IntRange(min=1),
    help="Number of seeds (0..k-1) per point; without --scan, runs an ensemble summary.",
    required=False,
)
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    help="Worker processes for ensembles and scans. Defaults to CAVITYCOOL_WORKERS or the CPU count.",
    required=False,
)
@handle_exceptions
def dynamics_cmd(
    ctx: click.Context,
    output: Optional[pathlib.Path],
    scan: Optional[str],
    seeds: Optional[int],
    workers: Optional[int],
    **kwargs: Any,
) -> None:
    config = get_config(ctx)
    ensemble = resolve_ensemble(config)
    reporter = ResultsReporter(output)
    workers = workers if workers is not None else config.scan.workers

    if scan:
        grid_hz = scan_grid(config) if scan == "config" else parse_scan(scan)[1]
        n_seeds = seeds if seeds is not None else config.scan.seeds
        rows = threshold_scan(
            ensemble, [rad_s(value) for value in grid_hz], list(range(n_seeds)), workers
        )
        builder = CSVBuilder(["omega_p_hz", "p_localize", "mean_output"])
        builder.add_rows(row.to_dict() for row in rows)
        reporter.report_csv(builder)
        threshold = measured_threshold(rows)
        if output:
            if threshold is None:
                logger.info("Localization probability never crossed 1/2 on this grid")
            else:
                logger.info(f"Measured pump threshold {hz(threshold):.6g} Hz")
        return

    if seeds is not None:
        summaries = run_ensemble(ensemble, list(range(seeds)), workers)
        builder = CSVBuilder.from_rows([dataclasses.asdict(summary) for summary in summaries])
        reporter.report_csv(builder)
        return

    trajectory = run_trajectory(ensemble)
    reporter.report_csv(CSVBuilder.from_rows(trajectory.rows()))

# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Module for the oh command"""

import logging
import pathlib
from typing import Any, Optional

import click

from cavitycool.cli.options.common import common_options, handle_exceptions, output_options
from cavitycool.molecule import load_table, table_as_dicts, table_checksum
from cavitycool.reporter import CSVBuilder, ResultsReporter


logger = logging.getLogger(__name__)

OH_COLUMNS = [
    "line",
    "lambda_ae",
    "j_prime",
    "n_prime",
    "gamma_over_2pi",
    "upsilon",
    "repumpers",
    "vib_leak",
    "cycling_hyperfine",
    "microwave_pulses",
    "repump_lines",
    "notes",
]


@click.command(name="oh", help="Dump the embedded OH transition table.")
@common_options
@output_options
@click.option("--json", "as_json", is_flag=True, help="Emit JSON instead of CSV.")
@handle_exceptions
def oh_cmd(output: Optional[pathlib.Path], as_json: bool, **kwargs: Any) -> None:
    reporter = ResultsReporter(output)
    if as_json:
        table = load_table()
        reporter.report_json(
            {
                "species": table.species,
                "mass_amu": table.mass_amu,
                "records": table_as_dicts(),
                "sha256": table_checksum(),
            }
        )
        return
    builder = CSVBuilder(OH_COLUMNS)
    for record in table_as_dicts():
        builder.add_row({**record, "repump_lines": " ".join(record["repump_lines"])})
    reporter.report_csv(builder)

# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Main entrypoint for cavitycool"""

import click

from cavitycool.cli.commands.config import config_cmd
from cavitycool.cli.commands.coolmap import coolmap_cmd
from cavitycool.cli.commands.dynamics import dynamics_cmd
from cavitycool.cli.commands.oh import oh_cmd
from cavitycool.cli.commands.oracle import oracle_cmd
from cavitycool.cli.commands.report import report_cmd
from cavitycool.cli.commands.sweep import sweep_cmd
from cavitycool.cli.commands.threshold import threshold_cmd
from cavitycool.cli.commands.transit import transit_cmd
from cavitycool.cli.commands.version import version_cmd
from cavitycool.cli.commands.zones import zones_cmd


EPILOG = "Frequencies on input and output are in Hz; rates inside the library are rad/s."

CONTEXT_SETTINGS = dict(help_option_names=["-h", "--help"])


@click.group(
    name="cavitycool",
    help="cavitycool CLI",
    context_settings=CONTEXT_SETTINGS,
    epilog=EPILOG,
)
@click.pass_context
def root_cmd(ctx: click.Context) -> None:
    """Root command"""


root_cmd.add_command(report_cmd)
root_cmd.add_command(sweep_cmd)
root_cmd.add_command(coolmap_cmd)
root_cmd.add_command(threshold_cmd)
root_cmd.add_command(dynamics_cmd)
root_cmd.add_command(oracle_cmd)
root_cmd.add_command(oh_cmd)
root_cmd.add_command(transit_cmd)
root_cmd.add_command(zones_cmd)
root_cmd.add_command(config_cmd)
root_cmd.add_command(version_cmd)

if __name__ == "__main__":
    root_cmd()

# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""Version command"""

from importlib.metadata import PackageNotFoundError, version

import click


def package_version() -> str:
    try:
        return version("cavitycool")
    except PackageNotFoundError:
        return "unknown"


@click.command(name="version", help="Print the cavitycool version.")
def version_cmd() -> None:
    click.echo(f"cavitycool {package_version()}")

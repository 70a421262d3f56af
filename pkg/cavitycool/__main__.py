#!/usr/bin/env python
# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


# Default entrypoint for cavitycool is the root cmd when run with python -m cavitycool

from cavitycool.cli.root import root_cmd


def init() -> None:
    """cavitycool root"""
    if __name__ == "__main__":
        root_cmd()


init()

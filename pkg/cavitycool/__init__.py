# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

"""
cavitycool - a semiclassical cavity-QED library and command line utility for
modelling cavity-assisted laser cooling and self-organization of molecules.
"""

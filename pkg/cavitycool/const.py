# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors


"""Global constants"""

import scipy


# Common exit codes
SUCCESS_EXIT_CODE = 0
ERROR_EXIT_CODE = 1
CONFIG_ERROR_EXIT_CODE = 2
NUMERICAL_ERROR_EXIT_CODE = 3

# Versioned config and output schema
SCHEMA_VERSION = 1

# Environment variables
DEBUG_ENVVAR = "CAVITYCOOL_DEBUG"
CONFIG_ENVVAR = "CAVITYCOOL_CONFIG"
WORKERS_ENVVAR = "CAVITYCOOL_WORKERS"

DEFAULT_CONFIG_FILE = "cavitycool.yml"

# Output metadata
UNIT_CONVENTIONS = {
    "frequency": "Hz, angular value divided by 2*pi",
    "internal": "rad/s",
    "length": "m",
    "temperature": "K",
}
CONSTANTS_PROVENANCE = f"scipy.constants (CODATA), scipy {scipy.__version__}"

# CSV output
CSV_LINE_TERMINATOR = "\n"
FLOAT_FORMAT = ".10g"

# Default OH cooling line
DEFAULT_TRANSITION = "P1(1)"

# Fraction of the cavity length a packet crosses along the axis
AXIAL_CROSSING_FRACTION = 0.66

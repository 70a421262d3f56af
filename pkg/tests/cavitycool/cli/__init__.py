# SPDX-License-Identifier: Apache-2.0
# Copyright (c) 2024 cavitycool authors

# SPDX-FileCopyrightText: Copyright (c) 2021 Martin Stephens
#
# SPDX-License-Identifier: MIT
"""Run ``python -m biffobear_hyperboloid``."""

import sys

from biffobear_hyperboloid.cli import main

sys.exit(main())

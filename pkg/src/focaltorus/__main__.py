# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright:   (c) 2026 ff. focaltorus developers
# License:     This program is free software. You can redistribute it, use it
#              and/or modify it under the terms of the 2-clause BSD license.
#              For license details please read the file LICENCE.txt provided
#              together with the source code.
# ----------------------------------------------------------------------------


"""Run the command line interface: python -m focaltorus."""

import sys

from .cli import main

sys.exit(main())

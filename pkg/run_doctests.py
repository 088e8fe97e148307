# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Copyright:   (c) 2026 ff. focaltorus developers
# License:     This program is free software. You can redistribute it, use it
#              and/or modify it under the terms of the 2-clause BSD license.
#              For license details please read the file LICENCE.txt provided
#              together with the source code.
# ----------------------------------------------------------------------------
# $Source$
# $Revision$


"""Run the doctests of the modules named on the command line.

Usage: python run_doctests.py focaltorus [focaltorus.focal …]
"""

import doctest
import importlib
import sys

flags = doctest.NORMALIZE_WHITESPACE | doctest.IGNORE_EXCEPTION_DETAIL

failed = 0
for mod_name in sys.argv[1:] or ['focaltorus']:
    mod = importlib.import_module(mod_name)
    print(f"Testing {mod_name}:")
    fail, total = doctest.testmod(mod, optionflags=flags)
    print(f"{total} tests, {fail} failures")
    failed += fail

sys.exit(failed > 0)

###################################################################################################
# Copyright (c) 2024 Enclustra GmbH, Switzerland (info@enclustra.com)
# 
# Permission is hereby granted, free of charge, to any person obtaining a copy of this software
# and associated documentation files (the "Software"), to deal in the Software without
# restriction, including without limitation the rights to use, copy, modify, merge, publish,
# distribute, sublicense, and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
# 
# The above copyright notice and this permission notice shall be included in all copies or
# substantial portions of the Software.
# 
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR IMPLIED, INCLUDING
# BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
# NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM,
# DAMAGES OR OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE SOFTWARE.

# Import Python modules
from os.path import join, dirname, abspath
from os import environ
import argparse

root = abspath(dirname(__file__))

# Add custom command line arguments
parser = argparse.ArgumentParser(description="en_obstruct regression: unit tests and oracle scripts")
parser.add_argument(
        "--oracle-dir",
        default=environ["EN_OBSTRUCT_ORACLE_DIR"] if "EN_OBSTRUCT_ORACLE_DIR" in environ else join(root, "../bittrue/oracle"),
        help="Location of the oracle scripts (one sub-directory per case)",
    )
parser.add_argument(
        "--disable-oracle",
        action="store_true",
        default=False,
        help="Disables automatic execution of oracle scripts",
    )
parser.add_argument(
        "--skip-unit-tests",
        action="store_true",
        default=False,
        help="Does not run the unit tests",
    )
parser.add_argument(
        "--test-dir",
        default=join(root, "../bittrue/tests/python"),
        help="Location of the unit tests",
    )
parser.add_argument(
        "cases",
        nargs="*",
        help="Oracle cases to run (default: every sub-directory of the oracle dir)",
    )

def parse_args(argv=None):
    return parser.parse_args(argv)

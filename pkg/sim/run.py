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
from os.path import join, dirname, abspath, isdir, isfile
from os import listdir
import sys
import unittest

root = abspath(dirname(__file__))
sys.path.append(root)

from common import parse_args
from oracle_runner import oracle_runner

def run_unit_tests(test_dir):
    suite = unittest.defaultTestLoader.discover(test_dir, pattern="*_test.py")
    result = unittest.TextTestRunner(verbosity=1).run(suite)
    return result.wasSuccessful()

def oracle_cases(oracle_dir, names):
    if not names:
        names = sorted(d for d in listdir(oracle_dir) if isfile(join(oracle_dir, d, "oracle.py")))
    for name in names:
        if not isdir(join(oracle_dir, name)):
            raise Exception(f"\n\nERROR: unknown oracle case '{name}' in {oracle_dir}\n")
    return names

if __name__ == '__main__':
    args = parse_args()
    ok = True

    ###############################################################################################
    # Unit tests
    ###############################################################################################
    if not args.skip_unit_tests:
        ok = run_unit_tests(args.test_dir) and ok

    ###############################################################################################
    # Oracle scripts
    ###############################################################################################
    for name in oracle_cases(args.oracle_dir, args.cases):
        oracle = oracle_runner(args.disable_oracle, join(args.oracle_dir, name))
        print(f"Oracle {name}: {oracle.get_config()}")
        try:
            oracle.run()
        except AssertionError as e:
            print(f"Oracle {name} FAILED: {e}")
            ok = False

    sys.exit(0 if ok else 1)

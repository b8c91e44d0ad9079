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

###################################################################################################
# Description:
#
# Unit tests of the oracle runner used by the regression script.
###################################################################################################

###################################################################################################
# Imports
###################################################################################################
import sys
from os.path import join, dirname, isfile
root = dirname(__file__)
sys.path.append(join(root, "../../../sim"))
from oracle_runner import oracle_runner, load_oracle_module

import tempfile
import unittest
from threading import Thread

###################################################################################################
# Helpers
###################################################################################################

ORACLE_SCRIPT = '''
from os.path import join, dirname

ORACLE_CONFIG = {"seeds": [0, 1]}

def run():
    with open(join(dirname(__file__), "ran.txt"), "a") as f:
        f.write("x")
'''

def make_oracle(path):
    with open(join(path, "oracle.py"), "w") as f:
        f.write(ORACLE_SCRIPT)

###################################################################################################
# Test Cases
###################################################################################################

### oracle_runner ###
class oracle_runner_Test(unittest.TestCase):

    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.path = self._tmp.name
        make_oracle(self.path)

    def test_ConfigWithoutRunning(self):
        oracle = oracle_runner(False, self.path)
        self.assertEqual({"seeds": [0, 1]}, oracle.get_config())
        self.assertFalse(isfile(join(self.path, "ran.txt")))
        self.assertNotIn(self.path, sys.path)

    def test_RunsOnce(self):
        oracle = oracle_runner(False, self.path)
        self.assertTrue(oracle.run())
        self.assertTrue(oracle.run())
        self.assertEqual(1, oracle.run_count)
        with open(join(self.path, "ran.txt")) as f:
            self.assertEqual("x", f.read())

    def test_Disabled(self):
        oracle = oracle_runner(True, self.path)
        oracle.run()
        self.assertEqual(0, oracle.run_count)
        self.assertFalse(isfile(join(self.path, "ran.txt")))

    def test_ConcurrentRuns(self):
        oracle = oracle_runner(False, self.path)
        threads = [Thread(target=oracle.run) for _ in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        self.assertEqual(1, oracle.run_count)
        self.assertFalse(oracle.pending)
        with open(join(self.path, "ran.txt")) as f:
            self.assertEqual("x", f.read())

    def test_LoadRestoresPath(self):
        module = load_oracle_module(self.path)
        self.assertIn("run", module)
        self.assertNotIn(self.path, sys.path)

if __name__ == "__main__":
    unittest.main()

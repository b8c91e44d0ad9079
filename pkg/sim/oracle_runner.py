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
# Loads a per-case oracle script (bittrue/oracle/<case>/oracle.py) and runs its run() function at
# most once. All cases share the module name "oracle", so the case directory is put on sys.path
# only while the script is loaded, one case at a time.
###################################################################################################

import sys
import runpy
from threading import Lock

SYS_PATH_LOCK = Lock()

def load_oracle_module(oracle_path : str, module_name : str = "oracle"):
    """
    Globals of the oracle script; its run() is not called.
    """
    with SYS_PATH_LOCK:
        sys.path.insert(1, oracle_path)
        try:
            return runpy.run_module(module_name)
        finally:
            sys.path.remove(oracle_path)

class oracle_runner:

    def __init__(self, disable, oracle_path, module_name="oracle"):
        self.oracle_path = oracle_path
        self.module_name = module_name
        self.module_dict = load_oracle_module(oracle_path, module_name)
        self.pending = not disable
        self.run_count = 0
        self._run_lock = Lock()

    def get_config(self):
        """
        ORACLE_CONFIG of the script (seeds, instance counts), or None.
        """
        return self.module_dict.get("ORACLE_CONFIG")

    def run(self) -> bool:
        if not self.pending:
            return True
        with self._run_lock:
            # pending may have been cleared while waiting
            if self.pending:
                self.module_dict["run"]()
                self.run_count += 1
                self.pending = False
        return True

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
# Imports
###################################################################################################
import sys
from os.path import join, dirname
root = dirname(__file__)

sys.path.append(join(root, "../../models/python"))
from en_obstruct_pkg import *

sys.path.append(join(root, ".."))
from oracle_utils import *

ORACLE_CONFIG = {"D": 7,
                 "generator_sets": [[("x", 1)], [("x", 1), ("y", 1)], [("x", 1), ("y", 2)]]}

###################################################################################################
# Main
###################################################################################################
def run():
    # Clear data directory
    DATA_DIR = join(root, "data")
    clear_directory(DATA_DIR)

    ###############################################################################################
    # Run
    ###############################################################################################
    D = ORACLE_CONFIG["D"]
    sets = ORACLE_CONFIG["generator_sets"]
    degrees = list(range(1, D + 1))
    results = []
    progress = ProgressReporter((sets, degrees))
    for gen_set in sets:
        gens = [GradedGenerator(name, degree) for name, degree in gen_set]
        basis = hall_basis(gens, D)
        for d in degrees:
            progress.report()
            hall = len(basis[d])
            brute = lie_dim_oracle(gens, d)
            assert hall == brute, f"Hall basis dimension {hall} differs from oracle {brute} in degree {d}"
            results.append({"generators": [f"{n}:{g}" for n, g in gen_set], "degree": d, "dim": hall})

    print(f"Oracle generated {len(results)} dimension entries.")
    save_json(join(DATA_DIR, "hall_dims.json"), results)

###################################################################################################
# Support execution as a script
###################################################################################################
if __name__ == '__main__':
    run()

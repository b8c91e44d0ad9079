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

ORACLE_CONFIG = {"seeds": list(range(8))}

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
    seeds = ORACLE_CONFIG["seeds"]
    results = []
    progress = ProgressReporter((seeds,))
    for seed in seeds:
        progress.report()
        maps, nonzero, indet = seeded_toda_instance(seed)
        bracket = toda_bracket(maps, oracle=True)
        assert oracle_agrees(bracket), f"Enumeration disagrees with the solver for seed {seed}"
        assert bracket.is_zero() != nonzero, f"Unexpected vanishing for seed {seed}"
        assert bracket.indeterminacy_dim() == indet, f"Unexpected indeterminacy for seed {seed}"
        results.append({"seed": seed, "maps": len(maps), "enumerated": len(bracket.oracle_classes),
                        "indeterminacy_dim": indet, "zero": bracket.is_zero()})

    print(f"Oracle checked {len(results)} Toda brackets.")
    save_json(join(DATA_DIR, "toda_grid.json"), results)

###################################################################################################
# Support execution as a script
###################################################################################################
if __name__ == '__main__':
    run()

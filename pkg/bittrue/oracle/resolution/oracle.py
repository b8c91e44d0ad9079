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

ORACLE_CONFIG = {"N": 3, "D": 6,
                 "presentation": {"generators": [{"name": "x", "degree": 1}],
                                  "relations": ["[x,x]"], "degree_cutoff": 6}}

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
    N = ORACLE_CONFIG["N"]
    D = ORACLE_CONFIG["D"]
    orders = [PivotOrder.Ascending_s, PivotOrder.Descending_s]
    dumps = {}
    cohomology = {}
    progress = ProgressReporter((orders,))
    for order in orders:
        progress.report()
        algebra = presentation_from_dict(ORACLE_CONFIG["presentation"], D, order)
        X = resolve(algebra, N, D, order)
        assert not check_simplicial_identities(X), "Simplicial identities fail"
        dumps[order.name] = resolution_to_dict(X, homotopy_dims(X))
        cx = build_aq_complex(X, loop_module(algebra, 0, D))
        cohomology[order.name] = cohomology_dims(cx, 2)

    # Cohomology does not depend on the resolution
    assert cohomology[orders[0].name] == cohomology[orders[1].name], "Cohomology depends on the pivot order"

    print(f"Oracle generated {len(dumps)} resolutions.")
    for name, dump in dumps.items():
        save_json(join(DATA_DIR, f"resolution_{name}.json"), dump)
    save_json(join(DATA_DIR, "cohomology.json"), cohomology_report(2, cohomology[orders[0].name]))

###################################################################################################
# Support execution as a script
###################################################################################################
if __name__ == '__main__':
    run()

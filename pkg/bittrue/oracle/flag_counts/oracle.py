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
from math import factorial

sys.path.append(join(root, "../../models/python"))
from en_obstruct_pkg import *

sys.path.append(join(root, ".."))
from oracle_utils import *

ORACLE_CONFIG = {"k_max": 6, "decomposition_k_max": 5}

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
    k_values = list(range(1, ORACLE_CONFIG["k_max"] + 1))
    results = []
    progress = ProgressReporter((k_values,))
    for k in k_values:
        progress.report()
        phi = Flag(k, range(k))
        K = build_flag_complex(phi)
        base = base_complex(K)
        boundary = check_sphere(polytope_boundary(K), k - 1)
        entry = {"k": k,
                 "top": len(K.top_simplices),
                 "base_top": len(base.of_dim(k - 1)),
                 "expected": factorial(k),
                 "sphere": boundary.verdict,
                 "faces_ok": check_face_identities(K)}
        if k <= ORACLE_CONFIG["decomposition_k_max"]:
            entry["decomposition"] = base_decomposition(phi).verdict
            entry["interior"] = base_interior_check(K)
        assert entry["top"] == entry["expected"] and entry["base_top"] == entry["expected"], \
            f"Permutohedron count mismatch for k = {k}"
        results.append(entry)

    print(f"Oracle generated {len(results)} flag entries.")
    save_json(join(DATA_DIR, "flag_counts.json"), results)

###################################################################################################
# Support execution as a script
###################################################################################################
if __name__ == '__main__':
    run()

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

import sys
import os
import json
import random
from fractions import Fraction
from os.path import join, dirname
from shutil import rmtree
import numpy as np

sys.path.append(join(dirname(__file__), "../models/python"))
from en_obstruct_pkg import *

###################################################################################################
# Helper Functions
###################################################################################################

def clear_directory(path):
    try:
        rmtree(path)
    except FileNotFoundError:
        pass
    os.mkdir(path)

def save_json(path, data):
    with open(path, "w") as f:
        f.write(dumps_report(data) + "\n")

def load_json(path):
    with open(path, "r") as f:
        return json.load(f)

###################################################################################################
# Seeded Toda bracket instances
###################################################################################################

def _complex(dims, diffs=None):
    return ChainComplexQ(dims, {k: as_matrix(v, (dims.get((k[0] - 1, k[1]), 0), dims[k]))
                                for k, v in (diffs or {}).items()})

def _map(source, target, comps, p=0):
    return ChainMap(source, target, p, {k: as_matrix(v, (target.dim(k[0] + p, k[1]), source.dim(*k)))
                                        for k, v in comps.items()})

def toda_template(kind : int):
    """
    Two small towers of chain maps with known brackets. Returns (maps, value_nonzero,
    indeterminacy_dim).
    kind 0: <f3,f2,f1>, value a -> p, indeterminacy spanned by a -> r.
    kind 1: <f4,f3,f2,f1>, value a -> m, no indeterminacy.
    """
    a0 = _complex({(0, 0): 1})
    a1 = _complex({(0, 0): 1})
    if kind == 0:
        # A2: w (q=0), v, t (q=1) with dv = w
        a2 = _complex({(0, 0): 1, (1, 0): 2}, {(1, 0): [[1, 0]]})
        a3 = _complex({(1, 0): 2})
        return ([_map(a0, a1, {(0, 0): [[1]]}),
                 _map(a1, a2, {(0, 0): [[1]]}),
                 _map(a2, a3, {(1, 0): [[1, 0], [0, 1]]})], True, 1)
    assert kind == 1, f"Unknown template {kind}"
    a2 = _complex({(0, 0): 1, (1, 0): 1}, {(1, 0): [[1]]})
    a3 = _complex({(1, 0): 1, (2, 0): 1}, {(2, 0): [[1]]})
    a4 = _complex({(2, 0): 1})
    return ([_map(a0, a1, {(0, 0): [[1]]}),
             _map(a1, a2, {(0, 0): [[1]]}),
             _map(a2, a3, {(1, 0): [[1]]}),
             _map(a3, a4, {(2, 0): [[1]]})], True, 0)

def _pad(maps, j, q, e):
    """
    Adds a contractible pair in dimensions q, q+1 to A_j; the maps are zero on it.
    """
    pair = _complex({(q, e): 1, (q + 1, e): 1}, {(q + 1, e): [[1]]})
    complexes = [maps[0].source] + [f.target for f in maps]
    complexes[j] = direct_sum(complexes[j], pair)
    result = []
    for i, f in enumerate(maps):
        s, t = complexes[i], complexes[i + 1]
        comps = {}
        for (qq, ee), m in f.components.items():
            block = zeros(t.dim(qq + f.p, ee), s.dim(qq, ee))
            block[:m.shape[0], :m.shape[1]] = m
            comps[(qq, ee)] = block
        result.append(ChainMap(s, t, f.p, comps))
    return result

def _random_invertible(n, rng):
    lower = identity(n)
    upper = identity(n)
    for i in range(n):
        for k in range(i):
            lower[i, k] = Fraction(rng.choice((-1, 0, 1)))
            upper[k, i] = Fraction(rng.choice((-1, 0, 1)))
    p = matmul(lower, upper)
    return p, from_domain_matrix(to_domain_matrix(p).to_dense().inv())

def _change_basis(maps, rng):
    complexes = [maps[0].source] + [f.target for f in maps]
    bases = []
    new = []
    for c in complexes:
        b = {k: _random_invertible(n, rng) for k, n in c.dims.items()}
        diffs = {}
        for (q, e), m in c.differentials.items():
            diffs[(q, e)] = matmul(matmul(b[(q - 1, e)][0], m), b[(q, e)][1])
        bases.append(b)
        new.append(ChainComplexQ(c.dims, diffs))
    result = []
    for i, f in enumerate(maps):
        comps = {}
        for (q, e), m in f.components.items():
            comps[(q, e)] = matmul(matmul(bases[i + 1][(q + f.p, e)][0], m), bases[i][(q, e)][1])
        result.append(ChainMap(new[i], new[i + 1], f.p, comps))
    return result

def seeded_toda_instance(seed : int):
    """
    A template with a random contractible summand and random changes of basis. Returns
    (maps, value_nonzero, indeterminacy_dim).
    """
    rng = random.Random(seed)
    maps, nonzero, indet = toda_template(rng.choice((0, 1)))
    j = rng.randrange(len(maps) + 1)
    maps = _pad(maps, j, rng.choice((0, 1)), 0)
    return _change_basis(maps, rng), nonzero, indet

###################################################################################################
# Progress Reporter Class
###################################################################################################

# Helper class for printing progress %
class ProgressReporter:
    def __init__(self, param_lists, message="Generating oracle data"):
        param_counts = [len(param_list) for param_list in param_lists]
        self._total_params = np.prod(param_counts)
        self.message = message
        self.step_percent = 10 # Print progress after each 10%
        self._next_percent = 0
        self._index = 0

    def report(self):
        # Print start message
        if self._index == 0:
            print(self.message + ": ", end="", flush=True)

        # Update % completion
        self._index += 1
        percent = 100 * self._index / self._total_params

        # Print progress
        if percent >= self._next_percent:
            print(f"{int(self._next_percent)}%...", end="", flush=True)
            self._next_percent += self.step_percent

        # Print finish message
        if self._index == self._total_params:
            print("Done.", flush=True)

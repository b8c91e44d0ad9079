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
# Unit tests of truncated simplicial CW objects and free CW resolutions.
###################################################################################################

###################################################################################################
# Imports
###################################################################################################
import sys
from os.path import join, dirname
root = dirname(__file__)
sys.path.append(join(root, "../../models/python"))
from en_obstruct_pkg import *

import unittest
import warnings
from math import comb

###################################################################################################
# Helpers
###################################################################################################

def cp_infinity(N=3, D=5):
    # L(x) / [x,x] with x of degree 1
    algebra = PresentedLieAlgebra([GradedGenerator("x", 1)], ["[x,x]"], D)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CutoffWarning)
        return resolve(algebra, N, D)

###################################################################################################
# Test Cases
###################################################################################################

### latching_index_set ###
class latching_index_set_Test(unittest.TestCase):

    def test_Counts(self):
        self.assertEqual(3, len(latching_index_set(2)))
        self.assertEqual(7, len(latching_index_set(3)))

    def test_BinomialPerLevel(self):
        for n in range(1, 5):
            entries = latching_index_set(n)
            for k in range(n):
                self.assertEqual(comb(n, k), len([ops for j, ops in entries if j == k]))

    def test_StandardSequences(self):
        for k, ops in latching_index_set(4):
            self.assertEqual(4 - k, len(ops))
            self.assertEqual(sorted(ops, reverse=True), list(ops))

### apply_degeneracy_to_symbol ###
class apply_degeneracy_to_symbol_Test(unittest.TestCase):

    def setUp(self):
        self.x = CWGenerator("x", 1, 0)

    def test_Generator(self):
        self.assertEqual("s0.x", apply_degeneracy_to_symbol(CWSymbol(self.x), 0).name)

    def test_Rewrite(self):
        s = CWSymbol(self.x, (0,))
        self.assertEqual("s1s0.x", apply_degeneracy_to_symbol(s, 0).name)
        self.assertEqual("s1s0.x", apply_degeneracy_to_symbol(s, 1).name)

    def test_Prepend(self):
        s = CWSymbol(self.x, (1, 0))
        self.assertEqual("s2s1s0.x", apply_degeneracy_to_symbol(s, 2).name)
        self.assertEqual("s2s1s0.x", apply_degeneracy_to_symbol(s, 0).name)

    def test_NonStandardRejected(self):
        with self.assertRaises(AssertionError):
            CWSymbol(self.x, (0, 1))

### split_symbol_name ###
class split_symbol_name_Test(unittest.TestCase):

    def test_Degenerate(self):
        self.assertEqual(((2, 0), "x"), split_symbol_name("s2s0.x"))

    def test_Basis(self):
        self.assertEqual(((), "c1_0"), split_symbol_name("c1_0"))

### TruncatedCWObject ###
class TruncatedCWObject_Test(unittest.TestCase):

    def setUp(self):
        self.X = TruncatedCWObject([[CWGenerator("x", 1, 0)]], D=2)

    def test_AboveCutoff(self):
        with self.assertRaises(CutoffError):
            self.X.add_generators(0, [CWGenerator("y", 3, 0)])

    def test_DuplicateName(self):
        with self.assertRaises(PresentationError):
            self.X.add_generators(0, [CWGenerator("x", 2, 0)])

    def test_LevelAlphabet(self):
        Y = cw_extend(cw_extend(self.X, [("c", 2)], ["[x,x]"]), [], [])
        self.assertEqual(["s0.x", "c"], [s.name for s in Y.alphabet(1)])
        self.assertEqual(["s1s0.x", "s0.c", "s1.c"], [s.name for s in Y.alphabet(2)])

    def test_NotAMooreChain(self):
        X1 = cw_extend(TruncatedCWObject([[CWGenerator("x", 1, 0), CWGenerator("y", 1, 0)]], D=3),
                       [("c", 2)], ["[x,y]"])
        with self.assertRaises(MooreChainError):
            cw_extend(X1, [("g", 2)], ["[s0.x,s0.y]"])

    def test_UnknownLetter(self):
        with self.assertRaises(PresentationError):
            cw_extend(self.X, [("c", 2)], ["[x,z]"])

### resolve ###
class resolve_Test(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.res = cp_infinity()

    def test_FirstLevel(self):
        self.assertEqual([("c1_0", 2)], [(g.name, g.degree) for g in self.res.basis[1]])
        self.assertEqual("[x,x]", to_expression(self.res.attach_value(self.res.basis[1][0])))

    def test_SecondLevel(self):
        gens = [g for g in self.res.basis[2] if g.degree == 3]
        self.assertEqual(1, len(gens))
        self.assertEqual({}, self.res.attach_value(gens[0]).linear_part())

    def test_Homotopy(self):
        dims = homotopy_dims(self.res)
        self.assertEqual([1, 0, 0, 0, 0], dims[0])
        self.assertEqual([0] * 5, dims[1])
        self.assertEqual([0] * 5, dims[2])

    def test_PresentedAlgebraDims(self):
        self.assertEqual(self.res.presentation.dims(), homotopy_dims(self.res)[0])

    def test_SimplicialIdentities(self):
        self.assertEqual([], check_simplicial_identities(self.res))

    def test_AttachingValuesAreCycles(self):
        for n in range(2, self.res.N + 1):
            values = [self.res.attach_value(g) for g in self.res.basis[n]]
            self.assertTrue(is_cycle_valued(self.res, n - 1, values))

    def test_MooreData(self):
        data = moore_data(self.res, 2)
        self.assertEqual(set(range(1, 6)), set(data))

    def test_MooreComplex(self):
        self.assertTrue(moore_complex(self.res).check_square_zero())

    def test_PivotOrderKeepsHomotopy(self):
        algebra = PresentedLieAlgebra([GradedGenerator("x", 1)], ["[x,x]"], 4)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", CutoffWarning)
            down = resolve(algebra, 2, 4, PivotOrder.Descending_s)
        self.assertEqual([1, 0, 0, 0], homotopy_dims(down)[0])
        self.assertEqual([0] * 4, homotopy_dims(down)[1])

    def test_FreeAlgebraNeedsNoCells(self):
        algebra = PresentedLieAlgebra([GradedGenerator("x", 1)], [], 4)
        X = resolve(algebra, 2, 4)
        self.assertEqual([[], []], X.basis[1:])

### face_map ###
class face_map_Test(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.res = cp_infinity(N=2, D=3)

    def test_DegenerateLetter(self):
        x = self.res.level(0).algebra.element("x")
        self.assertEqual(x, face_map(self.res, 1, 0)["s0.x"])
        self.assertEqual(x, face_map(self.res, 1, 1)["s0.x"])

    def test_BasisLetter(self):
        self.assertEqual(self.res.parse("[x,x]", 0), face_map(self.res, 1, 0)["c1_0"])
        self.assertTrue(face_map(self.res, 1, 1)["c1_0"].is_zero())

    def test_DegeneracyMap(self):
        self.assertEqual({"x": "s0.x"}, degeneracy_map(self.res, 0, 0))
        m = degeneracy_map(self.res, 1, 1)
        self.assertEqual("s1s0.x", m["s0.x"])
        self.assertEqual("s1.c1_0", m["c1_0"])

### truncate ###
class truncate_Test(unittest.TestCase):

    def test_Levels(self):
        res = cp_infinity(N=2, D=3)
        t = truncate(res, 1)
        self.assertEqual(1, t.N)
        self.assertEqual([g.name for g in res.basis[1]], [g.name for g in t.basis[1]])

### pad_resolution ###
class pad_resolution_Test(unittest.TestCase):

    def test_CancellingPair(self):
        res = cp_infinity(N=2, D=3)
        padded = pad_resolution(res, 1, 2)
        self.assertEqual(1, padded.generator("p1_0").level)
        self.assertEqual(2, padded.generator("p2_0").level)
        self.assertEqual("p1_0", to_expression(padded.attach_value(padded.generator("p2_0"))))
        self.assertEqual([h.dim for h in homotopy_data(res, 0).values()],
                         [h.dim for h in homotopy_data(padded, 0).values()])
        self.assertEqual([0, 0, 0], [h.dim for h in homotopy_data(padded, 1).values()])

### decomposable_moore_chains ###
class decomposable_moore_chains_Test(unittest.TestCase):

    def test_LinearChainExcluded(self):
        res = cp_infinity(N=2, D=3)
        self.assertEqual(0, decomposable_moore_chains(res, 1, 2).shape[0])
        self.assertEqual(1, decomposable_moore_chains(res, 1, 3).shape[0])

if __name__ == "__main__":
    unittest.main()

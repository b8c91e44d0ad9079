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
# Unit tests of bigraded chain complexes, chain maps, Hom complexes and nullhomotopies.
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

###################################################################################################
# Helpers
###################################################################################################

def point():
    return ChainComplexQ({(0, 0): 1})

def interval():
    # u in dimension 0, v in dimension 1, dv = u
    return ChainComplexQ({(0, 0): 1, (1, 0): 1}, {(1, 0): as_matrix([[1]])})

def map_(source, target, comps, p=0):
    return ChainMap(source, target, p, {k: as_matrix(v, (target.dim(k[0] + p, k[1]), source.dim(*k)))
                                        for k, v in comps.items()})

###################################################################################################
# Test Cases
###################################################################################################

### ChainComplexQ ###
class ChainComplexQ_Test(unittest.TestCase):

    def test_Homology(self):
        c = ChainComplexQ({(0, 0): 1, (1, 0): 1, (2, 0): 1}, {(1, 0): as_matrix([[1]])})
        self.assertTrue(c.check_square_zero())
        self.assertEqual(0, c.homology_dim(0, 0))
        self.assertEqual(0, c.homology_dim(1, 0))
        self.assertEqual(1, c.homology_dim(2, 0))
        self.assertEqual(1, c.homology(2, 0).dim)

    def test_NotSquareZero(self):
        c = ChainComplexQ({(0, 0): 1, (1, 0): 1, (2, 0): 1},
                          {(1, 0): as_matrix([[1]]), (2, 0): as_matrix([[1]])})
        self.assertFalse(c.check_square_zero())

    def test_ShapeChecked(self):
        with self.assertRaises(AssertionError):
            ChainComplexQ({(0, 0): 1, (1, 0): 1}, {(1, 0): as_matrix([[1, 1]])})

    def test_Suspend(self):
        s = interval().suspend(1)
        self.assertEqual({(1, 0): 1, (2, 0): 1}, s.dims)
        self.assertEqual([[-1]], s.d(2, 0).tolist())

    def test_DirectSum(self):
        c = direct_sum(interval(), point())
        self.assertEqual({(0, 0): 2, (1, 0): 1}, c.dims)
        self.assertEqual([[1], [0]], c.d(1, 0).tolist())
        self.assertEqual(1, c.homology_dim(0, 0))

    def test_Labels(self):
        c = ChainComplexQ({(0, 1): 1}, labels={(0, 1): ["x"]})
        self.assertEqual("x", c.label(0, 1, 0))
        self.assertEqual("b0_2_0", c.label(0, 2, 0))

### ChainMap ###
class ChainMap_Test(unittest.TestCase):

    def test_ChainCondition(self):
        f = map_(point(), interval(), {(0, 0): [[1]]})
        self.assertTrue(is_chain_map(f))

    def test_NotAChainMap(self):
        # u -> pt, but dv = u while v has no image
        f = map_(interval(), point(), {(0, 0): [[1]]})
        self.assertFalse(is_chain_map(f))

    def test_Arithmetic(self):
        f = map_(point(), interval(), {(0, 0): [[1]]})
        self.assertEqual(f.scale(2), f + f)
        self.assertTrue((f - f).is_zero())
        self.assertEqual(f, f + ChainMap.zero(point(), interval(), 0))

    def test_ComposeDegrees(self):
        a = interval()
        h = map_(point(), a, {(0, 0): [[1]]}, p=1)
        f = ChainMap.identity(a)
        self.assertEqual(1, compose(f, h).p)
        self.assertEqual(h, compose(f, h))

    def test_DifferentialOfHomotopy(self):
        a = interval()
        h = map_(point(), a, {(0, 0): [[1]]}, p=1)
        self.assertEqual(map_(point(), a, {(0, 0): [[1]]}), differential(h))

    def test_Shift(self):
        f = map_(point(), interval(), {(0, 0): [[1]]})
        g = shift(f)
        self.assertEqual(-1, g.p)
        self.assertEqual({(1, 0): 1}, g.source.dims)
        self.assertEqual([[1]], g.component(1, 0).tolist())

### cone ###
class cone_Test(unittest.TestCase):

    def test_ConeOnPointIsContractible(self):
        c = cone(ChainMap.identity(point()))
        self.assertTrue(c.check_square_zero())
        self.assertEqual(0, c.homology_dim(0, 0))
        self.assertEqual(0, c.homology_dim(1, 0))

    def test_ConeOfZeroMap(self):
        c = cone(ChainMap.zero(point(), point(), 0))
        self.assertEqual(1, c.homology_dim(0, 0))
        self.assertEqual(1, c.homology_dim(1, 0))

### hom_homology ###
class hom_homology_Test(unittest.TestCase):

    def test_Identity(self):
        self.assertEqual({0: [1]}, {e: list(v) for e, v in hom_homology_coordinates(ChainMap.identity(point())).items()})

    def test_IntoContractible(self):
        self.assertEqual(0, hom_homology(point(), interval(), 0, 0).dim)

    def test_VectorRoundTrip(self):
        f = map_(point(), interval(), {(0, 0): [[3]]})
        self.assertEqual(f, hom_from_vectors(point(), interval(), 0, {0: hom_vector(f, 0)}))

### solve_nullhomotopy ###
class solve_nullhomotopy_Test(unittest.TestCase):

    def test_Contractible(self):
        f = map_(point(), interval(), {(0, 0): [[1]]})
        result = solve_nullhomotopy(f)
        self.assertTrue(result.found)
        self.assertEqual(f, differential(result.h))
        self.assertEqual([[1]], result.h.component(0, 0).tolist())
        self.assertEqual([], result.kernel)

    def test_Identity(self):
        result = solve_nullhomotopy(ChainMap.identity(point()))
        self.assertFalse(result.found)
        self.assertEqual((0, 1), result.certificate["ranks"][0])
        self.assertEqual({0: ["1"]}, result.certificate["class"])

    def test_Kernel(self):
        # Two homotopies differ by a degree-1 cycle: the map into the free cycle w
        target = direct_sum(interval(), ChainComplexQ({(1, 0): 1}))
        f = map_(point(), target, {(0, 0): [[1]]})
        result = solve_nullhomotopy(f)
        self.assertTrue(result.found)
        self.assertEqual(1, len(result.kernel))
        self.assertTrue(is_chain_map(result.kernel[0]))

if __name__ == "__main__":
    unittest.main()

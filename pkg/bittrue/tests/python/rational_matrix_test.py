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
# Unit tests of the exact rational linear algebra helpers.
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
from fractions import Fraction

###################################################################################################
# Test Cases
###################################################################################################

### solve ###
class solve_Test(unittest.TestCase):

    def test_Consistent(self):
        x = solve(as_matrix([[1, 2], [0, 1]]), as_vector([3, 1]))
        self.assertEqual([1, 1], list(x))

    def test_Inconsistent(self):
        self.assertIsNone(solve(as_matrix([[1, 2], [2, 4]]), as_vector([1, 3])))

    def test_FractionalSolution(self):
        x = solve(as_matrix([[2, 0], [0, 3]]), as_vector([1, 1]))
        self.assertEqual([Fraction(1, 2), Fraction(1, 3)], list(x))

    def test_NoEquations(self):
        x = solve(zeros(0, 3), zero_vector(0))
        self.assertTrue(is_zero(x))
        self.assertEqual(3, len(x))

    def test_RankCertificate(self):
        self.assertEqual((1, 2), column_space_rank_certificate(as_matrix([[1, 2], [2, 4]]), as_vector([1, 3])))

### nullspace ###
class nullspace_Test(unittest.TestCase):

    def test_StandardBasis(self):
        n = nullspace(as_matrix([[1, 1, 0]]))
        self.assertEqual([[-1, 1, 0], [0, 0, 1]], n.tolist())

    def test_Kernel(self):
        a = as_matrix([[1, 2, 3], [2, 4, 6]])
        n = nullspace(a)
        self.assertEqual(2, n.shape[0])
        self.assertTrue(is_zero(matmul(a, n.T)))

    def test_NoRows(self):
        self.assertEqual(identity(2).tolist(), nullspace(zeros(0, 2)).tolist())

### rank ###
class rank_Test(unittest.TestCase):

    def test_Identity(self):
        self.assertEqual(3, rank(identity(3)))

    def test_ZeroSized(self):
        self.assertEqual(0, rank(zeros(0, 4)))
        self.assertEqual(0, rank(zeros(4, 0)))

    def test_ExactFractions(self):
        a = as_matrix([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
        self.assertEqual(1, rank(a))

### matmul ###
class matmul_Test(unittest.TestCase):

    def test_ZeroInnerDimension(self):
        c = matmul(zeros(2, 0), zeros(0, 3))
        self.assertEqual((2, 3), c.shape)
        self.assertTrue(is_zero(c))

    def test_Product(self):
        c = matmul(as_matrix([[1, 2]]), as_matrix([[3], [4]]))
        self.assertEqual([[11]], c.tolist())

### SparseEchelon ###
class SparseEchelon_Test(unittest.TestCase):

    def test_DependentVectorRejected(self):
        e = SparseEchelon()
        self.assertTrue(e.add({0: 1, 1: 1}, "a"))
        self.assertFalse(e.add({0: 2, 1: 2}, "b"))
        self.assertEqual(1, len(e))

    def test_Coordinates(self):
        e = SparseEchelon()
        e.add({(0,): 1}, "a")
        e.add({(0,): 1, (1,): 1}, "b")
        self.assertEqual({"a": 1, "b": 1}, e.coordinates({(0,): 2, (1,): 1}))
        self.assertIsNone(e.coordinates({(2,): 1}))

    def test_Contains(self):
        e = SparseEchelon()
        e.add({0: 1, 2: -1}, 0)
        self.assertTrue(e.contains({0: -3, 2: 3}))
        self.assertFalse(e.contains({0: 1}))

### QuotientSpace ###
class QuotientSpace_Test(unittest.TestCase):

    def test_AscendingRepresentatives(self):
        q = QuotientSpace(identity(3), as_matrix([[1, 1, 0]]))
        self.assertEqual([0, 2], q.representative_indices)
        self.assertEqual([-1, 0], list(q.coordinates(as_vector([0, 1, 0]))))

    def test_DescendingRepresentatives(self):
        q = QuotientSpace(identity(3), as_matrix([[1, 1, 0]]), PivotOrder.Descending_s)
        self.assertEqual([2, 1], q.representative_indices)

    def test_SubspaceMapsToZero(self):
        q = QuotientSpace(identity(3), as_matrix([[1, 1, 0]]))
        self.assertTrue(is_zero(q.coordinates(as_vector([2, 2, 0]))))

    def test_OutsideAmbient(self):
        q = QuotientSpace(as_matrix([[1, 0, 0]]), zeros(0, 3))
        self.assertIsNone(q.coordinates(as_vector([0, 1, 0])))

    def test_Lift(self):
        q = QuotientSpace(identity(3), as_matrix([[1, 1, 0]]))
        v = q.lift(as_vector([3, 1]))
        self.assertEqual([3, 0, 1], list(v))
        self.assertEqual([3, 1], list(q.coordinates(v)))

### fraction_str ###
class fraction_str_Test(unittest.TestCase):

    def test_Integer(self):
        self.assertEqual("-4", fraction_str(Fraction(-8, 2)))

    def test_Fraction(self):
        self.assertEqual("-1/2", fraction_str(Fraction(-1, 2)))

    def test_MatrixLists(self):
        a = as_matrix([[Fraction(1, 2), 0]])
        rows = matrix_to_lists(a)
        self.assertEqual([["1/2", "0"]], rows)
        self.assertEqual(a.tolist(), matrix_from_lists(rows, (1, 2)).tolist())

if __name__ == "__main__":
    unittest.main()

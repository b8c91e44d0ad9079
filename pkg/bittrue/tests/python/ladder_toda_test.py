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
# Unit tests of Moore towers, ladder diagrams, Toda brackets and the correspondence checks.
###################################################################################################

###################################################################################################
# Imports
###################################################################################################
import sys
from os.path import join, dirname
root = dirname(__file__)
sys.path.append(join(root, "../../models/python"))
sys.path.append(join(root, "../../oracle"))
from en_obstruct_pkg import *
from oracle_utils import toda_template, seeded_toda_instance

import unittest
import warnings
from random import Random

###################################################################################################
# Helpers
###################################################################################################

def complex_(dims, diffs=None):
    return ChainComplexQ(dims, {k: as_matrix(v, (dims.get((k[0] - 1, k[1]), 0), dims[k]))
                                for k, v in (diffs or {}).items()})

def map_(source, target, comps, p=0):
    return ChainMap(source, target, p, {k: as_matrix(v, (target.dim(k[0] + p, k[1]), source.dim(*k)))
                                        for k, v in comps.items()})

def cp_infinity(N=3, D=5):
    algebra = PresentedLieAlgebra([GradedGenerator("x", 1)], ["[x,x]"], D)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CutoffWarning)
        return resolve(algebra, N, D)

def free_product():
    # L(x)/[x,x] * L(y) with x of degree 1 and y of degree 2
    algebra = PresentedLieAlgebra([GradedGenerator("x", 1), GradedGenerator("y", 2)], ["[x,x]"], 5)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", CutoffWarning)
        return resolve(algebra, 3, 5)

def broken_attach():
    X0 = TruncatedCWObject([[CWGenerator("x", 1, 0), CWGenerator("y", 1, 0)]], D=4)
    X1 = cw_extend(X0, [("c", 2)], ["[x,y]"])
    return cw_extend(X1, [("g", 3)], ["[s0.x,c]"])

def uncorrectable_attach():
    X0 = TruncatedCWObject([[CWGenerator("x", 1, 0)]], D=3)
    X1 = cw_extend(X0, [("c", 2)], ["[x,x]"])
    return cw_extend(X1, [("g", 2)], ["c"])

def unkilled_cycle():
    X0 = TruncatedCWObject([[CWGenerator("x", 1, 0)]], D=4)
    X1 = cw_extend(X0, [("c", 2)], ["[x,x]"])
    return cw_extend(X1, [("g", 3)], ["0"])

def one_level_tower(extra : bool):
    """
    T0 = <t> in (1,1). T1 = <a> in (0,1), <b> in (1,1) with db = a and d0 b = t. With extra, T1 also
    holds a cycle z in (1,1) with d0 z = t.
    """
    t0 = complex_({(1, 1): 1})
    if extra:
        t1 = complex_({(0, 1): 1, (1, 1): 2}, {(1, 1): [[1, 0]]})
        d0 = map_(t1, t0, {(1, 1): [[1, 1]]})
    else:
        t1 = complex_({(0, 1): 1, (1, 1): 1}, {(1, 1): [[1]]})
        d0 = map_(t1, t0, {(1, 1): [[1]]})
    return MooreTower([t0, t1], {1: d0})

def source():
    return complex_({(0, 1): 1})

###################################################################################################
# Test Cases
###################################################################################################

### MooreTower ###
class MooreTower_Test(unittest.TestCase):

    def test_FaceNotAChainMap(self):
        t0 = complex_({(0, 1): 1})
        t1 = complex_({(0, 1): 1, (1, 1): 1}, {(1, 1): [[1]]})
        with self.assertRaises(AssertionError):
            MooreTower([t0, t1], {1: map_(t1, t0, {(0, 1): [[1]]})})

    def test_FacesMustCompose(self):
        t = complex_({(0, 1): 1})
        identity_ = ChainMap.identity(t)
        with self.assertRaises(AssertionError):
            MooreTower([t, t, t], {1: identity_, 2: identity_})

    def test_CycleValued(self):
        tower = one_level_tower(False)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        self.assertTrue(tower.is_cycle_valued(1, gamma))
        self.assertEqual(1, tower.top)

    def test_CoformalTower(self):
        res = cp_infinity(N=2, D=3)
        tower = coformal_tower(res, 0)
        self.assertEqual(1, tower.top)
        self.assertIsNotNone(tower.augmentation)
        self.assertTrue(compose(tower.augmentation, tower.face(1)).is_zero())

    def test_AbelianizedMoore(self):
        cx = abelianized_moore(cp_infinity(N=2, D=3))
        self.assertTrue(cx.check_square_zero())
        self.assertEqual(1, cx.dim(0, 1))
        self.assertEqual(1, cx.dim(1, 2))

### build_ladder ###
class build_ladder_Test(unittest.TestCase):

    def test_OneRung(self):
        tower = one_level_tower(False)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        ladder = build_ladder(tower, gamma, 1)
        self.assertEqual(1, len(ladder.rungs))
        self.assertTrue(ladder.rung(1).residual().is_zero())
        self.assertEqual(1, ladder.gamma0.p)
        self.assertFalse(ladder.gamma0.is_zero())

    def test_NotCycleValued(self):
        tower = one_level_tower(False)
        bad = map_(complex_({(1, 1): 1}), tower.levels[1], {(1, 1): [[1]]})
        self.assertFalse(is_chain_map(bad))
        with self.assertRaises(HomotopyEquationError):
            build_ladder(tower, bad, 1)

    def test_TopNotNullhomotopic(self):
        # a has nothing to bound it on level 1
        t0 = complex_({(1, 1): 1})
        t1 = complex_({(0, 1): 1})
        tower = MooreTower([t0, t1], {1: ChainMap.zero(t1, t0, 0)})
        with self.assertRaises(RefusalError):
            build_ladder(tower, map_(source(), t1, {(0, 1): [[1]]}), 1)

    def test_CorrectedRung(self):
        # T2: a2 in (0,1), u, w in (1,1) with du = a2, d0 u = z, d0 w = -z
        t0 = complex_({(1, 1): 1})
        t1 = complex_({(0, 1): 1, (1, 1): 2}, {(1, 1): [[1, 0]]})
        t2 = complex_({(0, 1): 1, (1, 1): 2}, {(1, 1): [[1, 0]]})
        tower = MooreTower([t0, t1, t2], {1: map_(t1, t0, {(1, 1): [[1, 0]]}),
                                          2: map_(t2, t1, {(1, 1): [[0, 0], [1, -1]]})})
        gamma = map_(source(), t2, {(0, 1): [[1]]})
        ladder = build_ladder(tower, gamma, 2)
        self.assertEqual([2, 1], [r.level for r in ladder.rungs])
        self.assertTrue(ladder.gamma0.is_zero())
        for r in ladder.rungs:
            self.assertTrue(r.residual().is_zero())
        self.assertTrue(compose(tower.face(2), ladder.rung(2).H).is_zero())

### ladder_correct ###
class ladder_correct_Test(unittest.TestCase):

    def test_Refusal(self):
        tower = one_level_tower(False)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        H = solve_nullhomotopy(gamma).h
        with self.assertRaises(RefusalError) as e:
            ladder_correct(tower, 1, H, compose(tower.face(1), H))
        self.assertIn(1, e.exception.certificate["ranks"])

    def test_Correction(self):
        tower = one_level_tower(True)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        H = solve_nullhomotopy(gamma).h
        self.assertFalse(compose(tower.face(1), H).is_zero())
        corrected, beta = ladder_correct(tower, 1, H, compose(tower.face(1), H))
        self.assertTrue(compose(tower.face(1), corrected).is_zero())
        self.assertEqual(gamma, differential(corrected))
        self.assertTrue(beta.is_zero())

### ladder_descend ###
class ladder_descend_Test(unittest.TestCase):

    def test_WrongHomotopy(self):
        tower = one_level_tower(False)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        H = solve_nullhomotopy(gamma).h
        with self.assertRaises(HomotopyEquationError):
            ladder_descend(tower, 1, gamma, H.scale(2))

### MinimalValue ###
class MinimalValue_Test(unittest.TestCase):

    def test_RoundTrip(self):
        tower = one_level_tower(False)
        gamma = map_(source(), tower.levels[1], {(0, 1): [[1]]})
        ladder = build_ladder(tower, gamma, 1)
        mv = minimal_value_from_ladder(ladder)
        self.assertEqual([1], list(mv.values))
        self.assertTrue(ladders_equal(ladder, ladder_from_minimal_value(mv, tower)))

    def test_ToDict(self):
        tower = one_level_tower(False)
        ladder = build_ladder(tower, map_(source(), tower.levels[1], {(0, 1): [[1]]}), 1)
        d = ladder.to_dict()
        self.assertEqual(1, d["n"])
        self.assertTrue(d["rungs"][0]["residual_zero"])
        self.assertEqual({"p": 1, "components": {"0,1": [["1"]]}}, d["gamma0"])

### toda_bracket ###
class toda_bracket_Test(unittest.TestCase):

    def test_Triple(self):
        maps, nonzero, indet = toda_template(0)
        bracket = toda_bracket(maps)
        self.assertEqual(1, bracket.value.p)
        self.assertEqual(nonzero, not bracket.is_zero())
        self.assertEqual(indet, bracket.indeterminacy_dim())

    def test_Quadruple(self):
        maps, _, _ = toda_template(1)
        bracket = toda_bracket(maps, oracle=True)
        d = bracket.to_dict()
        self.assertEqual(2, d["degree"])
        self.assertEqual({"0": ["1"]}, d["value"])
        self.assertEqual(0, d["indeterminacy_dim"])
        self.assertFalse(bracket.is_zero())
        self.assertTrue(oracle_agrees(bracket))

    def test_SeededInstances(self):
        for seed in range(8):
            maps, nonzero, indet = seeded_toda_instance(seed)
            bracket = toda_bracket(maps, oracle=True)
            self.assertEqual(nonzero, not bracket.is_zero(), f"seed {seed}")
            self.assertEqual(indet, bracket.indeterminacy_dim(), f"seed {seed}")
            self.assertTrue(oracle_agrees(bracket), f"seed {seed}")

    def test_CompositeMustVanish(self):
        p = complex_({(0, 0): 1})
        identity_ = ChainMap.identity(p)
        with self.assertRaises(ValueError):
            toda_bracket([identity_, identity_, identity_])

    def test_Undefined(self):
        p = complex_({(0, 0): 1})
        identity_ = ChainMap.identity(p)
        with self.assertRaises(RefusalError):
            toda_bracket([identity_, identity_, ChainMap.zero(p, p, 0)])

    def test_TooFewMaps(self):
        p = complex_({(0, 0): 1})
        with self.assertRaises(AssertionError):
            toda_bracket([ChainMap.identity(p), ChainMap.identity(p)])

    def test_OracleRequired(self):
        maps, _, _ = toda_template(0)
        with self.assertRaises(AssertionError):
            oracle_agrees(toda_bracket(maps))

### verify_existence_correspondence ###
class verify_existence_correspondence_Test(unittest.TestCase):

    def test_FreeAlgebra(self):
        res = resolve(PresentedLieAlgebra([GradedGenerator("x", 1)], [], 4), 2, 4)
        report = verify_existence_correspondence(res, 0)
        self.assertTrue(report["pass"])
        self.assertTrue(report["beta_zero"])

    def test_Resolution(self):
        res = cp_infinity()
        for n in (0, 1):
            report = verify_existence_correspondence(res, n)
            self.assertTrue(report["pass"], f"n = {n}")
            self.assertTrue(report["bijection"], f"n = {n}")

    def test_HigherLevel(self):
        report = verify_existence_correspondence(cp_infinity(N=4, D=4), 2)
        self.assertTrue(report["pass"])
        self.assertTrue(report["beta_zero"])
        self.assertTrue(report["ladder_zero"])
        self.assertTrue(report["phi_zero"])

    def test_UncorrectableAttach(self):
        report = verify_existence_correspondence(uncorrectable_attach(), 0)
        self.assertFalse(report["beta_zero"])
        self.assertFalse(report["correctable"])
        self.assertFalse(report["ladder_zero"])
        self.assertEqual(["2"], list(report["ladder_certificate"]))
        self.assertIsNone(report["bijection"])
        self.assertTrue(report["pass"])

    def test_CorrectableAttach(self):
        report = verify_existence_correspondence(broken_attach(), 0)
        self.assertTrue(report["correctable"])
        self.assertTrue(report["beta_zero"])
        self.assertTrue(report["ladder_zero"])
        self.assertTrue(report["phi_zero"])
        self.assertTrue(report["bijection"])
        self.assertTrue(report["pass"])

    def test_AttachOverride(self):
        # replacing the attaching value of g by 0 leaves nothing to correct
        report = verify_existence_correspondence(broken_attach(), 0, {"g": "0"})
        self.assertTrue(report["beta_zero"])
        self.assertTrue(report["pass"])

### correspondence ###
class correspondence_Test(unittest.TestCase):

    @classmethod
    def setUpClass(cls):
        cls.res = free_product()
        cls.tower = coformal_tower(cls.res, 0)
        cls.cx = loop_complex(cls.res, 0)
        cls.source = generator_source(cls.res, 2)

    def random_map(self, rng):
        target = self.tower.levels[0]
        vectors = {}
        for e in self.source.degrees():
            vectors[e] = as_vector([rng.randint(-3, 3) for _ in range(hom_dim(self.source, target, 0, e))])
        return hom_from_vectors(self.source, target, 0, vectors)

    def test_Additive(self):
        rng = Random(11)
        for _ in range(3):
            f1 = self.random_map(rng)
            f2 = self.random_map(rng)
            both = correspondence(self.tower, f1 + f2, self.cx, 0)
            each = correspondence(self.tower, f1, self.cx, 0) + correspondence(self.tower, f2, self.cx, 0)
            self.assertEqual(each.to_dict(), both.to_dict())

    def test_ZeroMap(self):
        f = hom_from_vectors(self.source, self.tower.levels[0], 0, {})
        self.assertTrue(correspondence(self.tower, f, self.cx, 0).is_zero_cochain())

    def test_NoAugmentation(self):
        tower = MooreTower(self.tower.levels, self.tower.faces)
        with self.assertRaises(AssertionError):
            correspondence(tower, hom_from_vectors(self.source, tower.levels[0], 0, {}), self.cx, 0)

### verify_difference_correspondence ###
class verify_difference_correspondence_Test(unittest.TestCase):

    def test_ScaledValue(self):
        # 2v - v = v is the boundary of the level-2 cell itself
        res = cp_infinity()
        g = [h for h in res.basis[2] if h.degree == 3][0]
        report = verify_difference_correspondence(res, 0, None, {g.name: 2 * res.attach_value(g)})
        self.assertTrue(report["pass"])
        self.assertTrue(report["delta_zero"])
        self.assertTrue(report["ladder_zero"])
        self.assertTrue(report["representatives_agree"])

    def test_SameMap(self):
        report = verify_difference_correspondence(cp_infinity(), 0, None, None)
        self.assertTrue(report["pass"])
        self.assertTrue(report["delta_zero"])

    def test_InjectedCycle(self):
        # [s0.x,c] is a cycle of the 2-truncation that nothing bounds
        report = verify_difference_correspondence(unkilled_cycle(), 0, {"g": "[s0.x,c]"}, None)
        self.assertFalse(report["delta_zero"])
        self.assertFalse(report["ladder_zero"])
        self.assertTrue(report["representatives_agree"])
        self.assertTrue(report["pass"])

if __name__ == "__main__":
    unittest.main()

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
# Ladder diagrams, long Toda brackets and the correspondence with Andre-Quillen classes, in
# chain complexes of graded Q-vector spaces.
#
# A Moore tower is a sequence of chain complexes T_0 ... T_m with face chain maps d0: T_i -> T_{i-1}
# satisfying d0 d0 = 0, and an augmentation of T_0. A ladder from gamma_n descends through it:
# gamma_i is a chain map X -> T_i of degree n-i with d0 gamma_i = 0, H_i has degree n-i+1 with
# D(H_i) = gamma_i, and gamma_{i-1} = d0 H_i.
###################################################################################################

from fractions import Fraction
from itertools import product

from .en_obstruct_types import *
from .rational_matrix import *
from .graded_lie import *
from .chain_complex import *
from .flag_complex import basic_atomic, face as face_of_word, prefix
from .simplicial_cw import *
from .aq_cohomology import *

###################################################################################################
# Abelianized Moore complex
###################################################################################################

def abelianized_moore(res : TruncatedCWObject, D=None) -> ChainComplexQ:
    """
    Chain dimension n spanned by the basis of level n, differential linearize o attach.
    """
    D = res.D if D is None else D
    dims = {}
    diffs = {}
    labels = {}
    for n in range(res.N + 1):
        for d in range(1, D + 1):
            gens = basis_of_degree(res, n, d)
            dims[(n, d)] = len(gens)
            labels[(n, d)] = [g.name for g in gens]
            if n >= 1 and gens and basis_of_degree(res, n - 1, d):
                diffs[(n, d)] = abelianized_differential(res, n, d)
    return ChainComplexQ(dims, diffs, labels)

###################################################################################################
# Moore towers
###################################################################################################

class MooreTower:
    """
    levels:       [T_0, ..., T_m] (ChainComplexQ)
    faces:        {i: degree-0 chain map T_i -> T_{i-1}} for 1 <= i <= m
    augmentation: degree-0 chain map from T_0, or None
    """

    def __init__(self, levels, faces, augmentation=None):
        self.levels = levels
        self.faces = faces
        self.augmentation = augmentation
        for i, f in faces.items():
            assert f.p == 0 and is_chain_map(f), f"d0 on level {i} must be a degree-0 chain map"
            if i >= 2:
                assert compose(faces[i - 1], f).is_zero(), f"d0 d0 must vanish on level {i}"

    @property
    def top(self) -> int:
        return len(self.levels) - 1

    def face(self, i : int) -> ChainMap:
        return self.faces[i]

    def is_cycle_valued(self, i : int, gamma : ChainMap) -> bool:
        """
        d0 gamma = 0 (vacuous on level 0).
        """
        return i == 0 or compose(self.faces[i], gamma).is_zero()

def coformal_tower(res : TruncatedCWObject, n : int) -> MooreTower:
    """
    Levels T_i (0 <= i <= n+1) with (T_i)_{q,e} = Moore chains of level i in internal degree q+e and
    zero differential; faces are the Moore boundaries; the augmentation projects level 0 onto the
    presented algebra, (q, e) -> Lambda_{q+e}.
    """
    assert res.N >= n + 1, f"The tower needs levels through {n + 1}"
    D = res.D
    base = presentation_of(res)
    levels = []
    for i in range(n + 2):
        dims = {(q, e): res.moore(i, q + e).chain_dim for e in range(1, D + 1) for q in range(0, D - e + 1)}
        levels.append(ChainComplexQ(dims))
    faces = {}
    for i in range(1, n + 2):
        comps = {}
        for (q, e) in levels[i].dims:
            m = res.moore(i, q + e)
            below = res.moore(i - 1, q + e)
            c = zeros(below.chain_dim, m.chain_dim)
            for r in range(m.chain_dim):
                c[:, r] = below.chain_coordinates(m.boundary[r])
            comps[(q, e)] = c
        faces[i] = ChainMap(levels[i], levels[i - 1], 0, comps)
    augmentation = None
    if [g.name for g in base.generators] == [s.name for s in res.alphabet(0)]:
        top = min(D, base.degree_cutoff)
        target = ChainComplexQ({(q, e): base.dim(q + e) for e in range(1, top + 1) for q in range(0, top - e + 1)})
        comps = {}
        for (q, e) in levels[0].dims:
            if q + e <= top:
                comps[(q, e)] = matmul(base.quotient(q + e).projection, res.moore(0, q + e).chains.T.copy())
        augmentation = ChainMap(levels[0], target, 0, comps)
    return MooreTower(levels, faces, augmentation)

def generator_source(res : TruncatedCWObject, level : int, q : int = 0) -> ChainComplexQ:
    """
    The basis generators of one level as a complex concentrated in chain dimension q, zero
    differential.
    """
    dims = {}
    labels = {}
    for d in range(1, res.D + 1):
        gens = basis_of_degree(res, level, d)
        dims[(q, d)] = len(gens)
        labels[(q, d)] = [g.name for g in gens]
    return ChainComplexQ(dims, labels=labels)

def attaching_boundary_map(res : TruncatedCWObject, tower : MooreTower, n : int, attach=None) -> ChainMap:
    """
    gamma_n: x -> d_0(attach x) in Moore-chain coordinates of level n, from the level-(n+2) basis.
    """
    source = generator_source(res, n + 2)
    values = attach_values(res, n + 2, attach)
    comps = {}
    for (q, d) in source.dims:
        below = res.moore(n, d)
        m = zeros(below.chain_dim, source.dim(q, d))
        for k, g in enumerate(basis_of_degree(res, n + 2, d)):
            image = res.coordinates(res.face(values[g.name], n + 1, 0), n)
            coords = below.chain_coordinates(image)
            assert coords is not None, "d_0 of a Moore chain is a Moore chain"
            m[:, k] = coords
        comps[(q, d)] = m
    return ChainMap(source, tower.levels[n], 0, comps)

###################################################################################################
# Ladders
###################################################################################################

class Rung:
    def __init__(self, level : int, gamma : ChainMap, H : ChainMap):
        self.level = level
        self.gamma = gamma
        self.H = H

    def residual(self) -> ChainMap:
        return differential(self.H) - self.gamma


class LadderDiagram:
    """
    Rungs from level n down to 1 (rungs[0] is level n) and the final gamma_0.
    """

    def __init__(self, n : int, rungs, gamma0 : ChainMap):
        self.n = n
        self.rungs = rungs
        self.gamma0 = gamma0

    def rung(self, i : int) -> Rung:
        return self.rungs[self.n - i]

    def to_dict(self):
        return {
            "n": self.n,
            "rungs": [{"level": r.level,
                       "gamma": chain_map_to_dict(r.gamma),
                       "H": chain_map_to_dict(r.H),
                       "residual_zero": r.residual().is_zero()} for r in self.rungs],
            "gamma0": chain_map_to_dict(self.gamma0),
        }

def chain_map_to_dict(f : ChainMap):
    return {"p": f.p,
            "components": {f"{q},{e}": matrix_to_lists(m) for (q, e), m in sorted(f.components.items())}}

def ladder_descend(tower : MooreTower, i : int, gamma : ChainMap, H : ChainMap) -> ChainMap:
    """
    gamma_{i-1} = d0 H_i, after checking D(H_i) = gamma_i.
    """
    if differential(H) != gamma:
        raise HomotopyEquationError(f"D(H_{i}) differs from gamma_{i}")
    result = compose(tower.face(i), H)
    assert is_chain_map(result) and tower.is_cycle_valued(i - 1, result), "Descent must be cycle-valued"
    return result

def _solve_blocks(columns, widths, rhs_parts, row_dims):
    """
    Stacks the block system sum_k A_k x_k = b. columns[k] lists the matrices of unknown block k
    in each equation (None for zero); returns (A, b).
    """
    rows = sum(row_dims)
    a = zeros(rows, sum(widths))
    col = 0
    for blocks, w in zip(columns, widths):
        row = 0
        for m, h in zip(blocks, row_dims):
            if m is not None and h and w:
                a[row:row + h, col:col + w] = m
            row += h
        col += w
    b = zero_vector(rows)
    row = 0
    for v, h in zip(rhs_parts, row_dims):
        if h:
            b[row:row + h] = v
        row += h
    return a, b

def _operator_matrix(op, source, target, p, e, rows):
    """
    Matrix of a linear operator on Hom_p(source, target) in degree e, columns on the hom basis.
    """
    basis = hom_basis(source, target, p, e)
    m = zeros(rows, len(basis))
    for k, f in enumerate(basis):
        m[:, k] = hom_vector(op(f), e)
    return m

def ladder_correct(tower : MooreTower, i : int, H : ChainMap, gamma_prev : ChainMap):
    """
    Finds a D-cycle alpha of the degree of H_i and beta with D(beta) = gamma_{i-1} + d0 alpha, so
    that H_i + alpha still bounds gamma_i and its descent is nullhomotopic. Returns (H + alpha,
    beta). Raises RefusalError naming the class of gamma_{i-1} otherwise.
    """
    x = H.source
    Ti, Tj = tower.levels[i], tower.levels[i - 1]
    p = H.p
    d0 = tower.face(i)
    alpha_parts = {}
    beta_parts = {}
    failed = {}
    for e in x.degrees():
        na, nb = hom_dim(x, Ti, p, e), hom_dim(x, Tj, p + 1, e)
        r1, r2 = hom_dim(x, Ti, p - 1, e), hom_dim(x, Tj, p, e)
        if r2 == 0:
            continue
        da = hom_differential_matrix(x, Ti, p, e) if na else zeros(r1, 0)
        d0a = _operator_matrix(lambda f: compose(d0, f), x, Ti, p, e, r2) if na else zeros(r2, 0)
        db = hom_differential_matrix(x, Tj, p + 1, e) if nb else zeros(r2, 0)
        a, b = _solve_blocks([[da, -d0a], [None, db]], [na, nb],
                             [zero_vector(r1), hom_vector(gamma_prev, e)], [r1, r2])
        sol = solve(a, b)
        if sol is None:
            failed[e] = column_space_rank_certificate(a, b)
            continue
        alpha_parts[e] = sol[:na]
        beta_parts[e] = sol[na:]
    if failed:
        certificate = {"ranks": failed}
        if is_chain_map(gamma_prev):
            certificate["class"] = {e: [fraction_str(c) for c in v]
                                    for e, v in hom_homology_coordinates(gamma_prev).items() if e in failed}
        raise RefusalError(f"gamma_{i - 1} cannot be made nullhomotopic by correcting H_{i}", certificate)
    alpha = hom_from_vectors(x, Ti, p, alpha_parts)
    beta = hom_from_vectors(x, Tj, p + 1, beta_parts)
    corrected = H + alpha
    assert differential(beta) == compose(d0, corrected), "Corrected rung residual is nonzero"
    return corrected, beta

def build_ladder(tower : MooreTower, gamma_n : ChainMap, n : int) -> LadderDiagram:
    """
    Descends from gamma_n to gamma_0, correcting the previous rung when a descent is not
    nullhomotopic.
    """
    assert n <= tower.top, f"Tower has no level {n}"
    if not (is_chain_map(gamma_n) and tower.is_cycle_valued(n, gamma_n)):
        raise HomotopyEquationError("gamma_n must be a chain map with d0 gamma_n = 0")
    rungs = []
    gamma = gamma_n
    for i in range(n, 0, -1):
        result = solve_nullhomotopy(gamma)
        if result.found:
            H = result.h
        elif not rungs:
            raise RefusalError(f"gamma_{n} is not nullhomotopic", result.certificate)
        else:
            above = rungs[-1]
            corrected, H = ladder_correct(tower, above.level, above.H, gamma)
            rungs[-1] = Rung(above.level, above.gamma, corrected)
            gamma = compose(tower.face(above.level), corrected)
        rungs.append(Rung(i, gamma, H))
        gamma = ladder_descend(tower, i, gamma, H)
    return LadderDiagram(n, rungs, gamma)

###################################################################################################
# Minimal values
###################################################################################################

class MinimalValue:
    """
    Data of a minimal value: the basic atomic simplex tau_k carries H_{n-k+1} for 1 <= k <= n,
    and gamma_n sits on the vertex. Consecutive simplices satisfy d_0 tau_k = d0 . tau_{k-1}.
    """

    def __init__(self, n : int, gamma_n : ChainMap, values):
        self.n = n
        self.gamma_n = gamma_n
        self.values = values
        self.simplices = {k: basic_atomic(k) for k in values}
        for k in self.simplices:
            if k >= 2:
                assert face_of_word(self.simplices[k], 0) == prefix((0,), self.simplices[k - 1]), \
                    "Basic atomic simplices must be linked by d0"

def minimal_value_from_ladder(ladder : LadderDiagram) -> MinimalValue:
    n = ladder.n
    return MinimalValue(n, ladder.rungs[0].gamma if ladder.rungs else ladder.gamma0,
                        {n - r.level + 1: r.H for r in ladder.rungs})

def ladder_from_minimal_value(mv : MinimalValue, tower : MooreTower) -> LadderDiagram:
    rungs = []
    gamma = mv.gamma_n
    for k in range(1, mv.n + 1):
        i = mv.n - k + 1
        H = mv.values[k]
        rungs.append(Rung(i, gamma, H))
        gamma = ladder_descend(tower, i, gamma, H)
    return LadderDiagram(mv.n, rungs, gamma)

def ladders_equal(a : LadderDiagram, b : LadderDiagram) -> bool:
    return a.n == b.n and len(a.rungs) == len(b.rungs) and a.gamma0 == b.gamma0 and \
        all(r.level == s.level and r.gamma == s.gamma and r.H == s.H for r, s in zip(a.rungs, b.rungs))

###################################################################################################
# Toda brackets
###################################################################################################

class TodaBracketValue:
    """
    value:        one representative map A_0 -> A_k of degree k-2
    classes:      {e: hom-homology coordinates of value}
    indeterminacy:{e: matrix whose rows span the achievable differences of classes}
    """

    def __init__(self, value : ChainMap, classes, indeterminacy):
        self.value = value
        self.classes = classes
        self.indeterminacy = indeterminacy
        self.oracle_classes = None

    def class_vector(self):
        return concatenate_classes(self.classes)

    def indeterminacy_matrix(self):
        width = sum(len(v) for v in self.classes.values())
        rows = []
        pos = 0
        for e in sorted(self.classes):
            n = len(self.classes[e])
            m = self.indeterminacy.get(e)
            if m is not None:
                for r in range(m.shape[0]):
                    row = zero_vector(width)
                    row[pos:pos + n] = m[r]
                    rows.append(list(row))
            pos += n
        return as_matrix(rows, (len(rows), width)) if rows else zeros(0, width)

    def indeterminacy_dim(self) -> int:
        return rank(self.indeterminacy_matrix())

    def contains(self, class_vector) -> bool:
        """
        True if class_vector lies in the coset value + indeterminacy.
        """
        diff = as_vector(class_vector) - self.class_vector()
        if is_zero(diff):
            return True
        return solve(self.indeterminacy_matrix().T.copy(), diff) is not None

    def is_zero(self) -> bool:
        return self.contains(zero_vector(len(self.class_vector())))

    def to_dict(self):
        return {"degree": self.value.p,
                "value": {str(e): [fraction_str(c) for c in v] for e, v in sorted(self.classes.items())},
                "indeterminacy": {str(e): matrix_to_lists(m) for e, m in sorted(self.indeterminacy.items())},
                "indeterminacy_dim": self.indeterminacy_dim()}

def _check_tower(maps):
    assert len(maps) >= 3, "A Toda bracket needs at least three maps"
    for j, f in enumerate(maps):
        assert f.p == 0 and is_chain_map(f), f"Map {j + 1} must be a degree-0 chain map"
    for j in range(1, len(maps) - 1):
        if not compose(maps[j + 1], maps[j]).is_zero():
            raise ValueError(f"Composite of maps {j + 1} and {j + 2} must vanish strictly")

def _stagewise_value(maps):
    """
    One value by iterated nullhomotopies, or None if a stage has no solution.
    """
    k = len(maps)
    H = None
    for j in range(1, k - 1):
        rhs = compose(maps[1], maps[0]) if j == 1 else compose(maps[j], H)
        result = solve_nullhomotopy(rhs)
        if not result.found:
            return None
        H = result.h
    return compose(maps[-1], H)

def toda_bracket(maps, oracle : bool = False) -> TodaBracketValue:
    """
    Long Toda bracket <f_k, ..., f_1> of degree-0 chain maps f_j: A_{j-1} -> A_j whose composites
    f_{j+1} f_j vanish for j >= 2. Unknowns H_1 ... H_{k-2} solve D(H_1) = f_2 f_1 and
    D(H_j) = f_{j+1} H_{j-1}; the value is f_k H_{k-2}. The indeterminacy is the image of the
    solution space of the homogeneous system.
    """
    _check_tower(maps)
    k = len(maps)
    a0 = maps[0].source
    targets = [f.target for f in maps]     # targets[j] = A_{j+1}
    m = k - 2
    out = targets[-1]
    degrees = sorted(set(a0.degrees()))
    particular = {}
    kernels = {}
    for e in degrees:
        widths = [hom_dim(a0, targets[j + 1], j + 1, e) for j in range(m)]
        row_dims = [hom_dim(a0, targets[j + 1], j, e) for j in range(m)]
        columns = []
        for j in range(m):
            blocks = [None] * m
            if widths[j]:
                blocks[j] = hom_differential_matrix(a0, targets[j + 1], j + 1, e)
                if j + 1 < m:
                    f = maps[j + 2]
                    blocks[j + 1] = -_operator_matrix(lambda h, f=f: compose(f, h), a0, targets[j + 1],
                                                      j + 1, e, row_dims[j + 1])
            columns.append(blocks)
        rhs = [hom_vector(compose(maps[1], maps[0]), e)] + [zero_vector(h) for h in row_dims[1:]]
        a, b = _solve_blocks(columns, widths, rhs, row_dims)
        x = solve(a, b)
        if x is None:
            raise RefusalError(f"The bracket is undefined in internal degree {e}",
                               {"ranks": {e: column_space_rank_certificate(a, b)}})
        start = sum(widths[:-1])
        particular[e] = x[start:]
        kernels[e] = nullspace(a)[:, start:]
    last = m - 1
    h_last = hom_from_vectors(a0, targets[last + 1], last + 1, particular)
    value = _stagewise_value(maps)
    if value is None:
        value = compose(maps[-1], h_last)
    classes = {}
    indeterminacy = {}
    for e in degrees:
        if not hom_dim(a0, out, k - 2, e):
            continue
        homology = hom_homology(a0, out, k - 2, e)
        classes[e] = homology.coordinates(hom_vector(value, e))
        rows = []
        for r in range(kernels[e].shape[0]):
            h = hom_from_vectors(a0, targets[last + 1], last + 1, {e: kernels[e][r]})
            coords = homology.coordinates(hom_vector(compose(maps[-1], h), e))
            if not is_zero(coords):
                rows.append(list(coords))
        if rows:
            r_mat, pivots = rref(as_matrix(rows))
            indeterminacy[e] = r_mat[:len(pivots)]
    result = TodaBracketValue(value, classes, indeterminacy)
    if oracle:
        result.oracle_classes = toda_oracle(maps)
    return result

def toda_oracle(maps, grid=(-1, 0, 1)):
    """
    Enumerates the bracket values over all stagewise choices: at every stage a particular
    nullhomotopy plus a grid combination of hom-homology class representatives. Dead ends are
    skipped. Returns the list of distinct value class vectors.
    """
    _check_tower(maps)
    k = len(maps)
    a0 = maps[0].source
    out = maps[-1].target
    found = []

    def stage(j, H):
        if j == k - 1:
            value = compose(maps[-1], H)
            v = concatenate_classes({e: hom_homology(a0, out, k - 2, e).coordinates(hom_vector(value, e))
                                     for e in a0.degrees() if hom_dim(a0, out, k - 2, e)})
            key = tuple(v)
            if key not in found:
                found.append(key)
            return
        rhs = compose(maps[1], maps[0]) if j == 1 else compose(maps[j], H)
        result = solve_nullhomotopy(rhs)
        if not result.found:
            return
        target = rhs.target
        reps = []
        for e in a0.degrees():
            if hom_dim(a0, target, j, e):
                space = hom_homology(a0, target, j, e)
                reps += [hom_from_vectors(a0, target, j, {e: space.representatives[r]}) for r in range(space.dim)]
        for coeffs in product(grid, repeat=len(reps)):
            h = result.h
            for c, z in zip(coeffs, reps):
                if c:
                    h = h + z.scale(c)
            stage(j + 1, h)

    stage(1, None)
    return [as_vector(v) for v in found]

def oracle_agrees(bracket : TodaBracketValue) -> bool:
    """
    Every enumerated class lies in the coset, and the enumerated differences span the
    indeterminacy.
    """
    classes = bracket.oracle_classes
    assert classes is not None, "Run toda_bracket with oracle=True first"
    if not all(bracket.contains(v) for v in classes):
        return False
    base = classes[0]
    diffs = [list(v - base) for v in classes[1:]]
    width = len(base)
    diff_rank = rank(as_matrix(diffs, (len(diffs), width))) if diffs else 0
    return diff_rank == bracket.indeterminacy_dim()

###################################################################################################
# Correspondence
###################################################################################################

def correspondence(tower : MooreTower, gamma0 : ChainMap, cx : AQCochainComplex, n : int) -> AQClass:
    """
    Post-composes gamma_0 (degree n, from the level-(n+2) basis) with the augmentation; the value on
    a generator of degree d lands in Lambda_{d+n} = (Omega^n Lambda)_d.
    """
    assert tower.augmentation is not None, "The tower has no augmentation"
    eps = compose(tower.augmentation, gamma0)
    cochain = {}
    for d in range(1, cx.D + 1):
        phi = cx.zero_cochain(n + 2, d)
        comp = eps.component(0, d)
        if comp.shape == phi.shape:
            phi = comp
        else:
            assert is_zero(comp), f"Augmented value in degree {d} does not match the coefficients"
        cochain[d] = phi
    return AQClass(cx, n + 2, cochain)

def correction_inclusion(res : TruncatedCWObject, tower : MooreTower, i : int) -> ChainMap:
    """
    The subcomplex of T_i spanned by the Moore chains with zero linear part on the basis, as its
    inclusion into T_i.
    """
    target = tower.levels[i]
    dims = {}
    comps = {}
    for (q, e) in target.dims:
        chains = correction_chains(res, i, q + e)
        moore = res.moore(i, q + e)
        c = zeros(moore.chain_dim, chains.shape[0])
        for r in range(chains.shape[0]):
            c[:, r] = moore.chain_coordinates(chains[r])
        dims[(q, e)] = chains.shape[0]
        comps[(q, e)] = c
    source = ChainComplexQ(dims)
    return ChainMap(source, target, 0, {k: m for k, m in comps.items() if source.dim(*k)})

def correct_top_rung(tower : MooreTower, gamma_n : ChainMap, n : int, inclusion : ChainMap):
    """
    Solves d0 o inclusion o alpha = gamma_n for alpha of degree 0 into the correction subcomplex
    of T_{n+1}. Returns (gamma_n - d0 o inclusion o alpha, {}) or (None, certificate).
    """
    x = gamma_n.source
    lift = compose(tower.face(n + 1), inclusion)
    sub = inclusion.source
    parts = {}
    failed = {}
    for e in x.degrees():
        rows = hom_dim(x, tower.levels[n], gamma_n.p, e)
        if rows == 0:
            continue
        width = hom_dim(x, sub, gamma_n.p, e)
        a = _operator_matrix(lambda f: compose(lift, f), x, sub, gamma_n.p, e, rows) if width else zeros(rows, 0)
        b = hom_vector(gamma_n, e)
        sol = solve(a, b)
        if sol is None:
            failed[e] = column_space_rank_certificate(a, b)
            continue
        parts[e] = sol
    if failed:
        return None, failed
    alpha = hom_from_vectors(x, sub, gamma_n.p, parts)
    return gamma_n - compose(lift, alpha), {}

def verify_existence_correspondence(res : TruncatedCWObject, n : int, attach=None):
    """
    Compares beta_n of an attaching map with the ladder built from it. The ladder side first
    corrects gamma_n = d_0 o attach by the image of the correction chains of level n+1; it exists
    exactly when beta_n vanishes. When it exists, the minimal value is sent to Omega^n Lambda
    cochains and the ladder is regenerated from it.
    """
    beta = beta_obstruction(res, n, attach)
    tower = coformal_tower(res, n)
    gamma_n = attaching_boundary_map(res, tower, n, attach)
    corrected, certificate = correct_top_rung(tower, gamma_n, n, correction_inclusion(res, tower, n + 1))
    beta_zero = beta.is_zero_cochain()
    beta_witness = is_coboundary(beta)
    report = {
        "n": n,
        "beta_zero": beta_zero,
        "beta_coboundary": beta_witness.found,
        "beta_cochain": beta.to_dict(),
        "beta_witness": witness_to_dict(beta_witness),
        "correctable": beta.data.correctable,
        "ladder_zero": corrected is not None,
        "ladder_certificate": {str(e): list(r) for e, r in certificate.items()},
        "phi_zero": None,
        "phi_cochain": None,
        "bijection": None,
    }
    agree = beta_zero == (corrected is not None)
    if corrected is None:
        report["pass"] = agree
        return report
    ladder = build_ladder(tower, corrected, n)
    mv = minimal_value_from_ladder(ladder)
    bijection = ladders_equal(ladder, ladder_from_minimal_value(mv, tower))
    phi_zero = True
    if tower.augmentation is not None:
        phi = correspondence(tower, ladder.gamma0, loop_complex(res, n), n)
        phi_zero = is_coboundary(phi).found
        report["phi_cochain"] = phi.to_dict()
    report["phi_zero"] = phi_zero
    report["bijection"] = bijection
    report["pass"] = agree and phi_zero and bijection
    return report

def witness_to_dict(result : CoboundaryResult):
    if not result.found:
        return {"certificate": {str(d): list(r) for d, r in result.certificate.items()}}
    return {str(d): matrix_to_lists(m) for d, m in result.witness.items()}

def difference_source_map(res : TruncatedCWObject, n : int, Y : TruncatedCWObject, M : ChainComplexQ, values) -> ChainMap:
    """
    The map from the level-(n+2) basis, placed in chain dimension n+1, to the Moore complex of Y
    sending x to the Moore-chain coordinates of values[x].
    """
    source = generator_source(res, n + 2, n + 1)
    comps = {}
    for (q, d) in source.dims:
        chains = Y.moore(n + 1, d)
        m = zeros(M.dim(n + 1, d), source.dim(q, d))
        for k, g in enumerate(basis_of_degree(res, n + 2, d)):
            coords = chains.chain_coordinates(values[g.name])
            assert coords is not None, f"Value on {g.name} is not a Moore chain"
            m[:, k] = coords
        comps[(q, d)] = m
    return ChainMap(source, M, 0, comps)

def verify_difference_correspondence(res : TruncatedCWObject, n : int, a, b):
    """
    Compares the difference class of two attaching maps with the nullhomotopy problem of their
    difference in the Moore complex of the (n+2)-truncation: the difference bounds there exactly
    when every value of the class vanishes.
    """
    delta = delta_difference(res, n, a, b)
    Y = difference_object(res, n)
    M = moore_complex(Y)
    module = delta.complex.module
    values = delta.data.chain_values
    f = difference_source_map(res, n, Y, M, values)
    nullhomotopy = solve_nullhomotopy(f)
    lifted = {}
    for g in res.basis[n + 2]:
        lifted[g.name] = module.lift(g.degree, delta.column(g.name))
    g_map = f - difference_source_map(res, n, Y, M, lifted)
    representatives_agree = solve_nullhomotopy(g_map).found
    delta_zero = delta.is_zero_cochain()
    return {
        "n": n,
        "delta": delta.to_dict(),
        "delta_zero": delta_zero,
        "coboundary": is_coboundary(delta).found,
        "ladder_zero": nullhomotopy.found,
        "ladder_class": {str(e): [fraction_str(c) for c in v]
                         for e, v in hom_homology_coordinates(f).items()},
        "representatives_agree": representatives_agree,
        "pass": (delta_zero == nullhomotopy.found) and representatives_agree,
    }

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
# Truncated simplicial graded Lie algebras with a CW basis.
#
# Level n is the free Lie algebra on formal symbols s_I(g): g runs over the basis generators of
# levels k <= n and I over the standard (strictly decreasing) degeneracy sequences of length n-k.
# Degenerate symbols are never expanded. On a basis generator g of level n, d_0 g is its attaching
# value and d_i g = 0 for i >= 1; all other faces follow from the simplicial identities.
###################################################################################################

from itertools import combinations
import re
import warnings

from .en_obstruct_types import *
from .rational_matrix import *
from .graded_lie import *
from .chain_complex import *

###################################################################################################
# Symbols
###################################################################################################

class CWGenerator:
    """
    A basis generator of level `level`. attach is its d_0 value (a LiePolynomial of level-1
    symbols, or None at level 0).
    """

    def __init__(self, name : str, degree : int, level : int, attach=None):
        assert level >= 0, "Levels start at 0"
        assert (attach is None) == (level == 0), "Exactly the generators above level 0 carry attaching values"
        self.name = name
        self.degree = int(degree)
        self.level = int(level)
        self.attach = attach

    def __repr__(self):
        return f"CWGenerator({self.name!r}, degree={self.degree}, level={self.level})"


class CWSymbol:
    """
    s_{a_1} s_{a_2} ... s_{a_m} g with a_1 > a_2 > ... > a_m.
    """

    def __init__(self, base : CWGenerator, ops=()):
        ops = tuple(ops)
        assert all(a > b for a, b in zip(ops, ops[1:])), f"Degeneracy sequence {ops} is not standard"
        self.base = base
        self.ops = ops

    @property
    def level(self) -> int:
        return self.base.level + len(self.ops)

    @property
    def degree(self) -> int:
        return self.base.degree

    @property
    def is_degenerate(self) -> bool:
        return len(self.ops) > 0

    @property
    def name(self) -> str:
        if not self.ops:
            return self.base.name
        return "".join(f"s{a}" for a in self.ops) + "." + self.base.name

    def __eq__(self, other):
        return isinstance(other, CWSymbol) and self.base is other.base and self.ops == other.ops

    def __hash__(self):
        return hash((self.base.name, self.ops))

    def __repr__(self):
        return f"CWSymbol({self.name})"

_SYMBOL_RE = re.compile(r"^((?:s\d+)+)\.(.+)$")

def split_symbol_name(name : str):
    """
    "s2s0.x" -> ((2, 0), "x").
    """
    m = _SYMBOL_RE.match(name)
    if m is None:
        return (), name
    return tuple(int(a) for a in re.findall(r"s(\d+)", m.group(1))), m.group(2)

def apply_degeneracy_to_symbol(symbol : CWSymbol, j : int) -> CWSymbol:
    """
    s_j applied to a symbol, rewritten to standard form with s_i s_j = s_{j+1} s_i (i <= j).
    """
    ops = list(symbol.ops)
    out = []
    cur = j
    for pos, a in enumerate(ops):
        if cur > a:
            return CWSymbol(symbol.base, out + [cur] + ops[pos:])
        out.append(a + 1)
    out.append(cur)
    return CWSymbol(symbol.base, out)

def _face_of_symbol(symbol : CWSymbol, i : int):
    """
    Pushes d_i through the degeneracies of a symbol. Returns (emitted, inner) where the face equals
    s_{emitted[0]} ... s_{emitted[-1]} applied to inner; inner is a CWSymbol, the attaching value
    (LiePolynomial), or None for zero.
    """
    emitted = []
    ops = symbol.ops
    for pos, a in enumerate(ops):
        if i < a:
            emitted.append(a - 1)
        elif i == a or i == a + 1:
            return emitted, CWSymbol(symbol.base, ops[pos + 1:])
        else:
            emitted.append(a)
            i -= 1
    if i == 0 and symbol.base.attach is not None:
        return emitted, symbol.base.attach
    return emitted, None

###################################################################################################
# Latching bookkeeping
###################################################################################################

def latching_index_set(n : int):
    """
    [(k, ops)] for 0 <= k < n: the standard degeneracy sequences of length n-k labelling the
    copies of the level-k basis inside level n. There are C(n, k) of them for each k.
    """
    assert n >= 0, "n must be non-negative"
    result = []
    for k in range(n):
        for subset in combinations(range(n), n - k):
            result.append((k, tuple(sorted(subset, reverse=True))))
    return result

###################################################################################################
# Levels
###################################################################################################

class CWLevel:
    """
    The free Lie algebra of one level with its symbol alphabet (in algebra generator order).
    """

    def __init__(self, n : int, symbols):
        self.n = n
        self.algebra = FreeLieAlgebra([GradedGenerator(s.name, s.degree) for s in symbols])
        by_name = {s.name: s for s in symbols}
        self.symbols = [by_name[g.name] for g in self.algebra.generators]
        self.index = {s: i for i, s in enumerate(self.symbols)}

    def symbol_element(self, symbol : CWSymbol) -> LiePolynomial:
        return self.algebra.gen(self.index[symbol])


class TruncatedCWObject:
    """
    levels[n] is the basis of level n (list of CWGenerator); D is the internal degree cutoff.
    presentation is the PresentedLieAlgebra being resolved, when known.
    Level algebras, face images and Moore data are cached and rebuilt when a level changes.
    """

    def __init__(self, levels, D : int, pivot_order : PivotOrder = PivotOrder.Ascending_s, presentation=None):
        assert len(levels) >= 1, "A truncated object has at least level 0"
        assert D >= 1, "Degree cutoff must be at least 1"
        self.D = int(D)
        self.pivot_order = pivot_order
        self.presentation = presentation
        self.basis = [[] for _ in levels]
        self._levels = {}
        self._faces = {}
        self._moore = {}
        for n, gens in enumerate(levels):
            self.add_generators(n, gens)

    @property
    def N(self) -> int:
        return len(self.basis) - 1

    def generator(self, name : str):
        for gens in self.basis:
            for g in gens:
                if g.name == name:
                    return g
        return None

    def add_generators(self, n : int, gens):
        """
        Adds basis generators at level n. Attaching values are rebased onto this object's level n-1.
        """
        assert 0 <= n <= self.N, f"Level {n} is outside 0..{self.N}"
        for g in gens:
            if g.level != n:
                raise ValueError(f"Generator {g.name} belongs to level {g.level}, not {n}")
            if g.degree > self.D:
                raise CutoffError(f"Generator {g.name} has degree {g.degree} above the cutoff {self.D}")
            if self.generator(g.name) is not None:
                raise PresentationError(f"Duplicate generator name '{g.name}'")
            attach = None
            if n > 0:
                attach = rebase(g.attach, self.level(n - 1))
                if attach.degree != g.degree:
                    raise PresentationError(f"Attaching value of {g.name} has degree {attach.degree}, "
                                            f"expected {g.degree}")
            self.basis[n].append(CWGenerator(g.name, g.degree, n, attach))
        self._invalidate(n)

    def _invalidate(self, n : int):
        for cache in (self._levels, self._faces, self._moore):
            for key in list(cache):
                k = key if isinstance(key, int) else key[0]
                if k >= n:
                    del cache[key]

    def level(self, n : int) -> CWLevel:
        assert 0 <= n <= self.N, f"Level {n} is outside 0..{self.N}"
        if n not in self._levels:
            symbols = [CWSymbol(g) for g in self.basis[n]]
            for k, ops in latching_index_set(n):
                symbols += [CWSymbol(g, ops) for g in self.basis[k]]
            self._levels[n] = CWLevel(n, symbols)
        return self._levels[n]

    def alphabet(self, n : int):
        return self.level(n).symbols

    def _own(self, g : CWGenerator) -> CWGenerator:
        own = self.generator(g.name)
        assert own is not None, f"Unknown generator {g.name}"
        return own

    ###############################################################################################
    # Faces and degeneracies
    ###############################################################################################

    def _degenerate(self, p : LiePolynomial, from_level : int, ops) -> LiePolynomial:
        """
        Applies s_{ops[0]} ... s_{ops[-1]} (innermost last in the list) letterwise.
        """
        if not ops or p is None:
            return p
        source = self.level(from_level)
        target = self.level(from_level + len(ops))
        images = []
        for s in source.symbols:
            for j in reversed(ops):
                s = apply_degeneracy_to_symbol(s, j)
            images.append(target.symbol_element(s))
        return apply_homomorphism(p, images, target.algebra)

    def face_images(self, n : int, i : int):
        """
        Images in level n-1 of the level-n alphabet under d_i (list of LiePolynomial).
        """
        assert 1 <= n <= self.N and 0 <= i <= n, f"Face d_{i} on level {n} is undefined"
        key = (n, i)
        if key not in self._faces:
            target = self.level(n - 1)
            images = []
            for s in self.level(n).symbols:
                emitted, inner = _face_of_symbol(s, i)
                inner_level = n - 1 - len(emitted)
                if inner is None:
                    images.append(LiePolynomial.zero(target.algebra, s.degree))
                    continue
                if isinstance(inner, CWSymbol):
                    inner = self.level(inner_level).symbol_element(inner)
                else:
                    inner = self.attach_value(s.base)
                images.append(self._degenerate(inner, inner_level, emitted))
            self._faces[key] = images
        return self._faces[key]

    def face(self, p : LiePolynomial, n : int, i : int) -> LiePolynomial:
        return apply_homomorphism(p, self.face_images(n, i), self.level(n - 1).algebra)

    def degeneracy(self, p : LiePolynomial, n : int, j : int) -> LiePolynomial:
        assert 0 <= j <= n < self.N, f"Degeneracy s_{j} on level {n} is undefined"
        return self._degenerate(p, n, (j,))

    ###############################################################################################
    # Moore data
    ###############################################################################################

    def face_matrix(self, n : int, i : int, d : int):
        """
        Rows: Hall basis of level n in degree d. Columns: Hall coordinates in level n-1.
        """
        source = self.level(n).algebra
        target = self.level(n - 1).algebra
        m = zeros(source.dim(d), target.dim(d))
        for r in range(source.dim(d)):
            m[r] = target.coordinates(self.face(source.basis_element(d, r), n, i))
        return m

    def moore(self, n : int, d : int):
        key = (n, d)
        if key not in self._moore:
            self._moore[key] = MooreData(self, n, d)
        return self._moore[key]

    def element(self, n : int, d : int, coords) -> LiePolynomial:
        return self.level(n).algebra.from_coordinates(d, coords)

    def coordinates(self, p : LiePolynomial, n : int):
        return self.level(n).algebra.coordinates(p)

    def parse(self, text : str, n : int, degree=None) -> LiePolynomial:
        return parse_lie_expression(text, self.level(n).algebra, degree)

    def attach_value(self, g : CWGenerator) -> LiePolynomial:
        """
        d_0 of a basis generator, as an element of the current level-(n-1) algebra.
        """
        own = self._own(g)
        own.attach = rebase(own.attach, self.level(own.level - 1))
        return own.attach

    def generator_element(self, g : CWGenerator) -> LiePolynomial:
        return self.level(g.level).symbol_element(CWSymbol(self._own(g)))

    def __repr__(self):
        return f"TruncatedCWObject(N={self.N}, D={self.D}, basis={[len(b) for b in self.basis]})"

def rebase(p : LiePolynomial, level : CWLevel) -> LiePolynomial:
    """
    Moves p onto the algebra of level, matching letters by name.
    """
    if p.algebra is level.algebra:
        return p
    names = [g.name for g in p.algebra.generators]
    index = level.algebra.index
    terms = {}
    for w, c in p.terms.items():
        for i in w:
            if names[i] not in index:
                raise PresentationError(f"Letter '{names[i]}' is not in the level-{level.n} alphabet")
        terms[tuple(index[names[i]] for i in w)] = c
    return LiePolynomial(level.algebra, terms, p.degree)

###################################################################################################
# Moore chains and homotopy
###################################################################################################

class MooreData:
    """
    Level n, internal degree d, all in Hall coordinates of level n:
        chains   = basis rows of C_n = intersection of ker d_i, i >= 1
        cycles   = basis rows of Z_n = C_n intersected with ker d_0
        boundary = matrix of d_0 on the chain basis (rows: chains, columns: level n-1 coordinates)
    """

    def __init__(self, X : TruncatedCWObject, n : int, d : int):
        self.level = n
        self.degree = d
        width = X.level(n).algebra.dim(d)
        self.width = width
        if n == 0:
            self.chains = identity(width)
            self.cycles = identity(width)
            self.boundary = zeros(width, 0)
            return
        faces = [X.face_matrix(n, i, d) for i in range(n + 1)]
        higher = _hstack(faces[1:], width)
        everything = _hstack(faces, width)
        self.chains = nullspace(higher.T.copy())
        self.cycles = nullspace(everything.T.copy())
        self.boundary = matmul(self.chains, faces[0])

    @property
    def chain_dim(self) -> int:
        return self.chains.shape[0]

    @property
    def cycle_dim(self) -> int:
        return self.cycles.shape[0]

    def chain_coordinates(self, v):
        """
        Coordinates of a Hall vector in the chain basis, or None if it is not a Moore chain.
        """
        return solve(self.chains.T.copy(), v)

def _hstack(blocks, rows):
    cols = sum(b.shape[1] for b in blocks)
    m = zeros(rows, cols)
    pos = 0
    for b in blocks:
        m[:, pos:pos + b.shape[1]] = b
        pos += b.shape[1]
    return m

def moore_data(X : TruncatedCWObject, n : int, D=None):
    """
    {d: MooreData} for d = 1..D. Verifies that d_0 maps chains into Moore cycles of level n-1.
    """
    D = X.D if D is None else D
    data = {d: X.moore(n, d) for d in range(1, D + 1)}
    if n >= 1:
        for d, m in data.items():
            below = X.moore(n - 1, d)
            for r in range(m.boundary.shape[0]):
                if solve(below.cycles.T.copy(), m.boundary[r]) is None:
                    raise MooreChainError(f"d_0 of a Moore chain of level {n}, degree {d} is not a Moore cycle")
    return data

def moore_boundaries(X : TruncatedCWObject, n : int, d : int):
    """
    Rows spanning d_0(C_{n+1}) inside level n (Hall coordinates); empty at the top level.
    """
    width = X.level(n).algebra.dim(d)
    if n >= X.N:
        return zeros(0, width)
    return X.moore(n + 1, d).boundary

class HomotopyGroupData:
    """
    pi_n in degree d: Z_n / d_0(C_{n+1}) with representative cycles (Hall coordinates).
    """

    def __init__(self, X : TruncatedCWObject, n : int, d : int):
        self.level = n
        self.degree = d
        self.space = QuotientSpace(X.moore(n, d).cycles, moore_boundaries(X, n, d), X.pivot_order)

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def representatives(self):
        return self.space.representatives

    def coordinates(self, v):
        return self.space.coordinates(v)

def homotopy_data(X : TruncatedCWObject, n : int, D=None):
    D = X.D if D is None else D
    return {d: HomotopyGroupData(X, n, d) for d in range(1, D + 1)}

def homotopy_dims(X : TruncatedCWObject):
    """
    {n: [dim pi_n(d) for d = 1..D]} for every level.
    """
    return {n: [h.dim for h in homotopy_data(X, n).values()] for n in range(X.N + 1)}

###################################################################################################
# Construction
###################################################################################################

def face_map(X : TruncatedCWObject, n : int, i : int):
    """
    {symbol name: d_i(symbol)} on the level-n alphabet.
    """
    return {s.name: img for s, img in zip(X.alphabet(n), X.face_images(n, i))}

def degeneracy_map(X : TruncatedCWObject, n : int, j : int):
    """
    {symbol name: name of s_j(symbol)} from level n to level n+1.
    """
    assert 0 <= j <= n, f"s_{j} is undefined on level {n}"
    return {s.name: apply_degeneracy_to_symbol(s, j).name for s in X.alphabet(n)}

def _relation_rows(algebra : PresentedLieAlgebra, level : CWLevel, d : int):
    ideal = algebra.ideal_basis(d)
    rows = zeros(len(ideal), level.algebra.dim(d))
    for k, u in enumerate(ideal):
        rows[k] = level.algebra.coordinates(rebase(u, level))
    return rows

def resolve(algebra : PresentedLieAlgebra, N : int, D : int,
            pivot_order : PivotOrder = PivotOrder.Ascending_s) -> TruncatedCWObject:
    """
    Free CW resolution of a presented algebra through level N and degree D. The basis of level
    n+1 is built degree by degree: in each degree a complement of the current boundaries is chosen
    inside the relation ideal (n = 0) or inside the Moore cycles (n >= 1), and every chosen vector
    becomes the attaching value of a new generator c{n+1}_{k}.
    """
    assert N >= 1, "N must be at least 1"
    assert D >= 1, "D must be at least 1"
    if D > algebra.degree_cutoff:
        algebra = algebra.with_cutoff(D)
    gens0 = [CWGenerator(g.name, g.degree, 0) for g in algebra.generators]
    X = TruncatedCWObject([gens0] + [[] for _ in range(N)], D, pivot_order, algebra)
    top_degree = []
    for n in range(N):
        count = 0
        for d in range(1, D + 1):
            level = X.level(n)
            if n == 0:
                target = _relation_rows(algebra, level, d)
            else:
                target = X.moore(n, d).cycles
            space = QuotientSpace(target, moore_boundaries(X, n, d), pivot_order)
            new = []
            for k in range(space.dim):
                attach = level.algebra.from_coordinates(d, space.representatives[k])
                new.append(CWGenerator(f"c{n + 1}_{count}", d, n + 1, attach))
                count += 1
            if new:
                X.add_generators(n + 1, new)
                if d == D:
                    top_degree.append(n + 1)
    if top_degree:
        warnings.warn(f"Generators were created at the degree cutoff {D} on levels {top_degree}; "
                      f"generators above degree {D} are not computed", CutoffWarning)
    return X

def truncate(X : TruncatedCWObject, n : int) -> TruncatedCWObject:
    assert 0 <= n <= X.N, f"Cannot truncate level {X.N} object at {n}"
    return TruncatedCWObject([list(b) for b in X.basis[:n + 1]], X.D, X.pivot_order, X.presentation)

def check_moore_chain(X, n, name, value):
    for i in range(1, n + 1):
        if not X.face(value, n, i).is_zero():
            raise MooreChainError(f"d_{i} of attach({name}) = {to_expression(X.face(value, n, i))} is nonzero "
                                  f"(d_{i} o d0bar = 0 is violated)")

def cw_extend(X : TruncatedCWObject, basis, attach) -> TruncatedCWObject:
    """
    New top level N+1 with the given basis [(name, degree)] and attaching values in the level-N
    alphabet (LiePolynomial or expression). Attaching values must be Moore chains.
    """
    assert len(basis) == len(attach), "One attaching value per basis generator"
    n = X.N
    Y = TruncatedCWObject([list(b) for b in X.basis] + [[]], X.D, X.pivot_order, X.presentation)
    gens = []
    for (name, degree), value in zip(basis, attach):
        if isinstance(value, str):
            value = Y.parse(value, n, degree)
        elif value.is_zero():
            value = LiePolynomial.zero(Y.level(n).algebra, degree)
        else:
            value = rebase(value, Y.level(n))
        check_moore_chain(Y, n, name, value)
        gens.append(CWGenerator(name, degree, n + 1, value))
    Y.add_generators(n + 1, gens)
    return Y

def is_cycle_valued(X : TruncatedCWObject, n : int, values) -> bool:
    """
    True if every value (level-n LiePolynomial) is a Moore cycle.
    """
    return all(X.face(v, n, i).is_zero() for v in values for i in range(n + 1)) if n >= 1 else True

def pad_resolution(X : TruncatedCWObject, n : int, degree : int) -> TruncatedCWObject:
    """
    Adds a cancelling pair: g at level n with zero attaching value and g' at level n+1 with
    d_0 g' = g.
    """
    assert 0 <= n < X.N, f"Padding needs levels {n} and {n + 1}"
    k = sum(1 for g in X.basis[n] if g.name.startswith(f"p{n}_"))
    name = f"p{n}_{k}"
    levels = [list(b) for b in X.basis[:n + 1]] + [[] for _ in range(X.N - n)]
    zero = LiePolynomial.zero(X.level(n - 1).algebra, degree) if n > 0 else None
    levels[n].append(CWGenerator(name, degree, n, zero))
    Y = TruncatedCWObject(levels, X.D, X.pivot_order, X.presentation)
    g = Y.generator(name)
    Y.add_generators(n + 1, list(X.basis[n + 1]) + [CWGenerator(f"p{n + 1}_{k}", degree, n + 1,
                                                                 Y.generator_element(g))])
    for m in range(n + 2, X.N + 1):
        Y.add_generators(m, list(X.basis[m]))
    return Y

def decomposable_moore_chains(X : TruncatedCWObject, n : int, d : int):
    """
    Rows spanning the Moore chains of level n, degree d with zero linear part.
    """
    chains = X.moore(n, d).chains
    algebra = X.level(n).algebra
    letters = [k for k, e in enumerate(algebra.basis(d)) if not isinstance(e.tree, tuple)]
    if not letters:
        return chains
    combos = nullspace(chains[:, letters].T.copy())
    return matmul(combos, chains)

def check_simplicial_identities(X : TruncatedCWObject):
    """
    Checks d_i d_j = d_{j-1} d_i (i < j), the mixed identities d_i s_j and s_i s_j = s_{j+1} s_i
    (i <= j) on every letter of every level. Returns the list of violations (empty on success).
    """
    failures = []
    for n in range(X.N + 1):
        for s in X.alphabet(n):
            x = X.level(n).symbol_element(s)
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        lhs = X.face(X.face(x, n, j), n - 1, i)
                        rhs = X.face(X.face(x, n, i), n - 1, j - 1)
                        if lhs != rhs:
                            failures.append(f"d{i}d{j} != d{j - 1}d{i} on {s.name}")
            if n < X.N:
                for j in range(n + 1):
                    y = X.degeneracy(x, n, j)
                    for i in range(n + 2):
                        lhs = X.face(y, n + 1, i)
                        if i < j:
                            rhs = X.degeneracy(X.face(x, n, i), n - 1, j - 1)
                        elif i in (j, j + 1):
                            rhs = x
                        else:
                            rhs = X.degeneracy(X.face(x, n, i - 1), n - 1, j)
                        if lhs != rhs:
                            failures.append(f"d{i}s{j} identity fails on {s.name}")
            if n + 1 < X.N:
                for j in range(n + 1):
                    for i in range(j + 1):
                        lhs = X.degeneracy(X.degeneracy(x, n, j), n + 1, i)
                        rhs = X.degeneracy(X.degeneracy(x, n, i), n + 1, j + 1)
                        if lhs != rhs:
                            failures.append(f"s{i}s{j} != s{j + 1}s{i} on {s.name}")
    return failures

def moore_complex(X : TruncatedCWObject) -> ChainComplexQ:
    """
    The Moore complex (C_n, d_0) in Moore-chain coordinates: chain dimension = level.
    """
    dims = {}
    diffs = {}
    for n in range(X.N + 1):
        for d in range(1, X.D + 1):
            dims[(n, d)] = X.moore(n, d).chain_dim
    for n in range(1, X.N + 1):
        for d in range(1, X.D + 1):
            m = X.moore(n, d)
            below = X.moore(n - 1, d)
            diff = zeros(below.chain_dim, m.chain_dim)
            for r in range(m.chain_dim):
                coords = below.chain_coordinates(m.boundary[r])
                assert coords is not None, "d_0 of a Moore chain must be a Moore chain"
                diff[:, r] = coords
            diffs[(n, d)] = diff
    return ChainComplexQ(dims, {k: v for k, v in diffs.items() if v.shape[0] and v.shape[1]})

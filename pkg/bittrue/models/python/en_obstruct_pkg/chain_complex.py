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
# Bigraded chain complexes of finite-dimensional Q-vector spaces and chain maps between them.
#
# Spaces are indexed by (q, e): q is the chain dimension and e the internal degree. Differentials
# lower q by one and preserve e. A map of chain degree p sends (q, e) to (q + p, e).
###################################################################################################

from fractions import Fraction

from .en_obstruct_types import *
from .rational_matrix import *

###################################################################################################
# Chain complexes
###################################################################################################

class ChainComplexQ:
    """
    dims:          {(q, e): int}
    differentials: {(q, e): matrix of shape dim(q-1, e) x dim(q, e)}
    labels:        optional {(q, e): [str]} naming the basis vectors
    """

    def __init__(self, dims, differentials=None, labels=None):
        self.dims = {k: int(v) for k, v in dims.items() if v > 0}
        self.differentials = {}
        self.labels = labels if labels is not None else {}
        for (q, e), m in (differentials or {}).items():
            assert m.shape == (self.dim(q - 1, e), self.dim(q, e)), \
                f"Differential at {(q, e)} has shape {m.shape}"
            if not is_zero(m):
                self.differentials[(q, e)] = m

    @staticmethod
    def zero():
        return ChainComplexQ({})

    def dim(self, q : int, e : int) -> int:
        return self.dims.get((q, e), 0)

    def d(self, q : int, e : int):
        m = self.differentials.get((q, e))
        return m if m is not None else zeros(self.dim(q - 1, e), self.dim(q, e))

    def degrees(self):
        return sorted({e for _, e in self.dims})

    def chain_dims(self, e=None):
        return sorted({q for q, x in self.dims if e is None or x == e})

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def label(self, q : int, e : int, k : int) -> str:
        names = self.labels.get((q, e))
        return names[k] if names is not None else f"b{q}_{e}_{k}"

    def check_square_zero(self) -> bool:
        for (q, e) in self.dims:
            if self.dim(q - 2, e) and not is_zero(matmul(self.d(q - 1, e), self.d(q, e))):
                return False
        return True

    def cycles(self, q : int, e : int):
        """
        Rows form a basis of ker d at (q, e).
        """
        return nullspace(self.d(q, e))

    def boundaries(self, q : int, e : int):
        return self.d(q + 1, e).T.copy()

    def homology(self, q : int, e : int, order : PivotOrder = PivotOrder.Ascending_s) -> QuotientSpace:
        return QuotientSpace(self.cycles(q, e), self.boundaries(q, e), order)

    def homology_dim(self, q : int, e : int) -> int:
        n = self.dim(q, e)
        return n - rank(self.d(q, e)) - rank(self.d(q + 1, e))

    def suspend(self, k : int = 1):
        """
        Sigma^k: (q, e) moves to (q + k, e), differentials multiplied by (-1)^k.
        """
        sign = -1 if k % 2 else 1
        dims = {(q + k, e): n for (q, e), n in self.dims.items()}
        diffs = {(q + k, e): sign * m for (q, e), m in self.differentials.items()}
        labels = {(q + k, e): v for (q, e), v in self.labels.items()}
        return ChainComplexQ(dims, diffs, labels)

    def __repr__(self):
        return f"ChainComplexQ({dict(sorted(self.dims.items()))})"

def direct_sum(a : ChainComplexQ, b : ChainComplexQ) -> ChainComplexQ:
    keys = set(a.dims) | set(b.dims)
    dims = {k: a.dims.get(k, 0) + b.dims.get(k, 0) for k in keys}
    diffs = {}
    for (q, e) in keys:
        m = zeros(dims.get((q - 1, e), 0), dims[(q, e)])
        m[:a.dim(q - 1, e), :a.dim(q, e)] = a.d(q, e)
        m[a.dim(q - 1, e):, a.dim(q, e):] = b.d(q, e)
        diffs[(q, e)] = m
    return ChainComplexQ(dims, diffs)

###################################################################################################
# Chain maps
###################################################################################################

class ChainMap:
    """
    A map of chain degree p from source to target. components[(q, e)] has shape
    target.dim(q + p, e) x source.dim(q, e); missing components are zero. It is a chain map when
    D(f) = d f - (-1)^p f d vanishes.
    """

    def __init__(self, source : ChainComplexQ, target : ChainComplexQ, p : int, components=None):
        self.source = source
        self.target = target
        self.p = int(p)
        self.components = {}
        for (q, e), m in (components or {}).items():
            assert m.shape == (target.dim(q + p, e), source.dim(q, e)), \
                f"Component at {(q, e)} has shape {m.shape}"
            if not is_zero(m):
                self.components[(q, e)] = m

    @staticmethod
    def zero(source, target, p : int):
        return ChainMap(source, target, p)

    @staticmethod
    def identity(x : ChainComplexQ):
        return ChainMap(x, x, 0, {k: identity(n) for k, n in x.dims.items()})

    def component(self, q : int, e : int):
        m = self.components.get((q, e))
        return m if m is not None else zeros(self.target.dim(q + self.p, e), self.source.dim(q, e))

    def is_zero(self) -> bool:
        return not self.components

    def __add__(self, other):
        assert self.p == other.p, "Maps of different degrees cannot be added"
        keys = set(self.components) | set(other.components)
        return ChainMap(self.source, self.target, self.p,
                        {k: self.component(*k) + other.component(*k) for k in keys})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return ChainMap(self.source, self.target, self.p, {k: c * m for k, m in self.components.items()})

    def __eq__(self, other):
        return isinstance(other, ChainMap) and self.p == other.p and (self - other).is_zero()

    def __hash__(self):
        return hash(self.p)

    def __repr__(self):
        return f"ChainMap(p={self.p}, components={sorted(self.components)})"

def compose(g : ChainMap, f : ChainMap) -> ChainMap:
    """
    g after f; the degrees add.
    """
    p = f.p + g.p
    comps = {}
    for (q, e) in f.components:
        comps[(q, e)] = matmul(g.component(q + f.p, e), f.component(q, e))
    return ChainMap(f.source, g.target, p, comps)

def differential(f : ChainMap) -> ChainMap:
    """
    D(f) = d f - (-1)^p f d, a map of degree p - 1.
    """
    sign = -1 if f.p % 2 else 1
    comps = {}
    for (q, e) in f.source.dims:
        m = matmul(f.target.d(q + f.p, e), f.component(q, e)) \
            - sign * matmul(f.component(q - 1, e), f.source.d(q, e))
        comps[(q, e)] = m
    return ChainMap(f.source, f.target, f.p - 1, comps)

def is_chain_map(f : ChainMap) -> bool:
    return differential(f).is_zero()

def shift(f : ChainMap, k : int = 1) -> ChainMap:
    """
    The same components seen as a map Sigma^k(source) -> target of degree p - k.
    """
    sign = -1 if (k * f.p) % 2 else 1
    src = f.source.suspend(k)
    comps = {(q + k, e): sign * m for (q, e), m in f.components.items()}
    return ChainMap(src, f.target, f.p - k, comps)

def cone(f : ChainMap) -> ChainComplexQ:
    """
    Mapping cone of a degree-0 chain map f: A -> B. cone_q = B_q + A_{q-1} with
    d(b, a) = (d b + f a, -d a). cone(identity) is the cone on A.
    """
    assert f.p == 0, "Cones are taken of degree-0 chain maps"
    a, b = f.source, f.target
    keys = set(b.dims) | {(q + 1, e) for (q, e) in a.dims}
    dims = {(q, e): b.dim(q, e) + a.dim(q - 1, e) for (q, e) in keys}
    diffs = {}
    for (q, e) in keys:
        bq, aq = b.dim(q, e), a.dim(q - 1, e)
        bq1, aq1 = b.dim(q - 1, e), a.dim(q - 2, e)
        m = zeros(bq1 + aq1, bq + aq)
        m[:bq1, :bq] = b.d(q, e)
        m[:bq1, bq:] = f.component(q - 1, e)
        m[bq1:, bq:] = -a.d(q - 1, e)
        diffs[(q, e)] = m
    return ChainComplexQ(dims, diffs)

###################################################################################################
# Hom complexes
###################################################################################################

def _hom_blocks(source, target, p, e):
    return [(q, target.dim(q + p, e), source.dim(q, e)) for q in source.chain_dims(e)
            if target.dim(q + p, e) and source.dim(q, e)]

def hom_dim(source, target, p : int, e : int) -> int:
    return sum(r * c for _, r, c in _hom_blocks(source, target, p, e))

def hom_vector(f : ChainMap, e : int):
    """
    Flattens the internal-degree-e components of f into one coordinate vector.
    """
    values = []
    for q, r, c in _hom_blocks(f.source, f.target, f.p, e):
        values += list(f.component(q, e).flat)
    return as_vector(values)

def hom_from_vectors(source, target, p : int, vectors) -> ChainMap:
    """
    Inverse of hom_vector: vectors is {e: vector}.
    """
    comps = {}
    for e, v in vectors.items():
        pos = 0
        for q, r, c in _hom_blocks(source, target, p, e):
            m = zeros(r, c)
            for i in range(r):
                for j in range(c):
                    m[i, j] = v[pos]
                    pos += 1
            comps[(q, e)] = m
    return ChainMap(source, target, p, comps)

def hom_basis(source, target, p : int, e : int):
    n = hom_dim(source, target, p, e)
    basis = []
    for k in range(n):
        v = zero_vector(n)
        v[k] = Fraction(1)
        basis.append(hom_from_vectors(source, target, p, {e: v}))
    return basis

def hom_differential_matrix(source, target, p : int, e : int):
    """
    Matrix of D: Hom_p -> Hom_{p-1} in internal degree e, columns indexed by hom_vector coordinates.
    """
    basis = hom_basis(source, target, p, e)
    m = zeros(hom_dim(source, target, p - 1, e), len(basis))
    for k, f in enumerate(basis):
        m[:, k] = hom_vector(differential(f), e)
    return m

def hom_degrees(source, target):
    return sorted(set(source.degrees()) & set(target.degrees()))

def hom_homology(source, target, p : int, e : int) -> QuotientSpace:
    """
    H_p of Hom(source, target) in internal degree e.
    """
    cycles = nullspace(hom_differential_matrix(source, target, p, e))
    boundaries = hom_differential_matrix(source, target, p + 1, e).T.copy()
    return QuotientSpace(cycles, boundaries)

def hom_homology_coordinates(f : ChainMap):
    """
    Class of a D-cycle f in H_p(Hom(source, target)), as {e: coordinates}.
    """
    assert is_chain_map(f), "Only cycles of the Hom complex have homology classes"
    return {e: hom_homology(f.source, f.target, f.p, e).coordinates(hom_vector(f, e))
            for e in hom_degrees(f.source, f.target)}

def concatenate_classes(classes):
    values = []
    for e in sorted(classes):
        values += list(classes[e])
    return as_vector(values)

###################################################################################################
# Nullhomotopies
###################################################################################################

class NullhomotopyResult:
    """
    h:           a map of degree p + 1 with D(h) = f, or None
    kernel:      basis (list of ChainMap) of the degree-(p+1) D-cycles parametrizing all solutions
    certificate: for infeasible equations, {"ranks": {e: (rank A, rank [A|f])}, "class": {e: [...]}}
    """

    def __init__(self, h, kernel, certificate=None):
        self.h = h
        self.kernel = kernel
        self.certificate = certificate

    @property
    def found(self) -> bool:
        return self.h is not None

def solve_nullhomotopy(f : ChainMap) -> NullhomotopyResult:
    """
    Solves D(h) = f exactly; for p = 0 this is d h + h d = f.
    """
    source, target, p = f.source, f.target, f.p
    vectors = {}
    kernel = []
    infeasible = {}
    for e in hom_degrees(source, target):
        a = hom_differential_matrix(source, target, p + 1, e)
        b = hom_vector(f, e)
        for row in nullspace(a):
            kernel.append(hom_from_vectors(source, target, p + 1, {e: row}))
        if a.shape[0] == 0:
            continue
        x = solve(a, b)
        if x is None:
            infeasible[e] = column_space_rank_certificate(a, b)
        else:
            vectors[e] = x
    if infeasible:
        classes = {}
        if is_chain_map(f):
            classes = {e: [fraction_str(c) for c in hom_homology(source, target, p, e).coordinates(hom_vector(f, e))]
                       for e in infeasible}
        return NullhomotopyResult(None, kernel, {"ranks": infeasible, "class": classes})
    h = hom_from_vectors(source, target, p + 1, vectors)
    assert differential(h) == f, "Nullhomotopy residual is nonzero"
    return NullhomotopyResult(h, kernel)

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
# Face-operator word calculus, flags and flag complexes.
#
# A FaceWord d_{I_0}|d_{I_1}|...|d_{I_{m+1}} is a simplex of dimension m. Bar number i+1 sits
# between blocks B_i and B_{i+1}; the i-th face removes it and merges the two blocks. Every block is
# kept in standard (strictly increasing) form, so equality of simplices is equality of blocks.
###################################################################################################

from itertools import combinations
from math import factorial
from fractions import Fraction

from .en_obstruct_types import *
from .rational_matrix import zeros, rank

###################################################################################################
# Face-operator words
###################################################################################################

def normalize_face_word(word):
    """
    Returns the strictly increasing word representing the same composite of face operators.
    Rewrites d_a d_b -> d_b d_{a+1} (a >= b) at the rightmost violation until sorted.
    """
    w = [int(i) for i in word]
    assert all(i >= 0 for i in w), "Face indices must be non-negative"
    while True:
        p = len(w) - 2
        while p >= 0 and w[p] < w[p+1]:
            p -= 1
        if p < 0:
            return tuple(w)
        a, b = w[p], w[p+1]
        w[p], w[p+1] = b, a + 1

def _is_standard(block) -> bool:
    return all(block[t] < block[t+1] for t in range(len(block) - 1))

def equivalent_words(word):
    """
    Returns every word of face operators whose composite equals that of `word`.
    """
    start = tuple(int(i) for i in word)
    seen = {start}
    todo = [start]
    while todo:
        w = todo.pop()
        for p in range(len(w) - 1):
            a, b = w[p], w[p+1]
            if a >= b:
                moved = w[:p] + (b, a + 1) + w[p+2:]
            else:
                moved = w[:p] + (b - 1, a) + w[p+2:]
            if moved not in seen:
                seen.add(moved)
                todo.append(moved)
    return sorted(seen)

###################################################################################################
# Flag
###################################################################################################

class Flag:
    """
    A flag phi = (i_1 < ... < i_k) in ambient n, i.e. 0 <= i_1 and i_k <= n+1. The empty flag
    (k = 0) is allowed; it labels the one-point summand of a mapping space.
    """

    def __init__(self, ambient : int, indices):
        indices = tuple(int(i) for i in indices)
        if ambient < 0:
            raise ValueError(f"Flag ambient must be non-negative, got {ambient}")
        if not _is_standard(indices):
            raise ValueError(f"Flag indices must be strictly increasing, got {indices}")
        if len(indices) > 0 and (indices[0] < 0 or indices[-1] > ambient + 1):
            raise ValueError(f"Flag indices must lie in [0, {ambient+1}], got {indices}")
        self.ambient = int(ambient)
        self.indices = indices

    @property
    def length(self) -> int:
        return len(self.indices)

    def drop(self, *positions):
        """
        Returns the flag with the given 1-based positions removed (phi^j, phi^{j,l}).
        """
        keep = [i for t, i in enumerate(self.indices, start=1) if t not in positions]
        return Flag(self.ambient, keep)

    def front_index(self, j : int) -> int:
        """
        Index c with d_phi = d_c d_{phi^j} (the j-th operator moved to the front).
        """
        assert 1 <= j <= self.length, "Position out of range"
        return self.indices[j-1] - j + 1

    def __eq__(self, other):
        return isinstance(other, Flag) and (self.ambient, self.indices) == (other.ambient, other.indices)

    def __hash__(self):
        return hash((self.ambient, self.indices))

    def __repr__(self):
        return f"Flag({self.ambient}, {list(self.indices)})"

###################################################################################################
# FaceWord
###################################################################################################

class FaceWord:
    """
    Bar-separated block word d_{I_0}|d_{I_1}|...|d_{I_{m+1}}, a simplex of dimension m.
    """

    def __init__(self, blocks):
        blocks = tuple(tuple(int(i) for i in b) for b in blocks)
        if len(blocks) < 2:
            raise ValueError("A FaceWord needs at least one bar")
        for b in blocks:
            if any(i < 0 for i in b) or not _is_standard(b):
                raise ValueError(f"Block {b} is not in standard form")
        self.blocks = blocks

    @staticmethod
    def standard(blocks):
        """
        Builds a FaceWord after normalizing every block.
        """
        return FaceWord(normalize_face_word(b) for b in blocks)

    @property
    def bar_count(self) -> int:
        return len(self.blocks) - 1

    @property
    def dim(self) -> int:
        return len(self.blocks) - 2

    @property
    def is_degenerate(self) -> bool:
        return any(len(b) == 0 for b in self.blocks[1:-1])

    @property
    def is_decomposable(self) -> bool:
        return len(self.blocks[0]) > 0

    def composite(self):
        return normalize_face_word(i for b in self.blocks for i in b)

    def vertex(self, t : int):
        """
        The t-th vertex: all bars except bar t+1 erased.
        """
        assert 0 <= t <= self.dim, "Vertex index out of range"
        left = [i for b in self.blocks[:t+1] for i in b]
        right = [i for b in self.blocks[t+1:] for i in b]
        return FaceWord.standard((left, right))

    def __eq__(self, other):
        return isinstance(other, FaceWord) and self.blocks == other.blocks

    def __lt__(self, other):
        return self.blocks < other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __str__(self):
        return "|".join("".join(f"d{i}" for i in b) for b in self.blocks)

    def __repr__(self):
        return f"FaceWord('{self}')"

def parse_face_word(text : str) -> FaceWord:
    """
    Parses the text syntax, e.g. "|d0|d1|d0|" or "d2d4|d5|".
    """
    blocks = []
    for part in text.strip().split("|"):
        part = part.strip()
        if part == "" or part == "∅":
            blocks.append(())
            continue
        if not part.startswith("d"):
            raise ValueError(f"Malformed block '{part}' in face word '{text}'")
        try:
            blocks.append(tuple(int(x) for x in part[1:].split("d")))
        except ValueError:
            raise ValueError(f"Malformed block '{part}' in face word '{text}'")
    return FaceWord.standard(blocks)

def face(s : FaceWord, i : int) -> FaceWord:
    """
    Removes bar i+1 and merges the adjacent blocks.
    """
    if not 0 <= i <= s.dim:
        raise IndexError(f"Face index {i} out of range for a {s.dim}-simplex")
    b = s.blocks
    return FaceWord.standard(b[:i] + (b[i] + b[i+1],) + b[i+2:])

def degeneracy(s : FaceWord, i : int) -> FaceWord:
    """
    Duplicates bar i+1 (inserts an empty block after B_i).
    """
    if not 0 <= i <= s.dim:
        raise IndexError(f"Degeneracy index {i} out of range for a {s.dim}-simplex")
    b = s.blocks
    return FaceWord(b[:i+1] + ((),) + b[i+1:])

def prefix(word, s : FaceWord) -> FaceWord:
    """
    Composition d_word o s: the word is placed in front of block B_0.
    """
    b = s.blocks
    return FaceWord.standard((tuple(word) + b[0],) + b[1:])

def cone_point(phi : Flag) -> FaceWord:
    return FaceWord(((), phi.indices))

def basic_atomic(k : int) -> FaceWord:
    """
    The basic atomic k-simplex |d0|d0|...|d0|.
    """
    if k < 1:
        raise ValueError("The basic atomic simplex needs k >= 1")
    return FaceWord(((),) + ((0,),) * k + ((),))

###################################################################################################
# Subcomplexes
###################################################################################################

class SimplicialSubcomplex:
    """
    A finite set of nondegenerate FaceWords closed under faces, graded by dimension.
    """

    def __init__(self, simplices):
        by_dim = {}
        for s in simplices:
            by_dim.setdefault(s.dim, set()).add(s)
        self.simplices = {m: frozenset(v) for m, v in by_dim.items()}

    @staticmethod
    def closure(generators):
        todo = list(generators)
        seen = set(todo)
        while todo:
            s = todo.pop()
            if s.dim == 0:
                continue
            for i in range(s.dim + 1):
                f = face(s, i)
                if f not in seen:
                    seen.add(f)
                    todo.append(f)
        return SimplicialSubcomplex(seen)

    @property
    def dimension(self) -> int:
        return max(self.simplices) if self.simplices else -1

    @property
    def f_vector(self):
        return [len(self.simplices.get(m, ())) for m in range(self.dimension + 1)]

    @property
    def euler_characteristic(self) -> int:
        return sum((-1)**m * c for m, c in enumerate(self.f_vector))

    def of_dim(self, m : int):
        return sorted(self.simplices.get(m, ()))

    def all_simplices(self):
        return frozenset(s for v in self.simplices.values() for s in v)

    def __contains__(self, s):
        return s in self.simplices.get(s.dim, ())

    def __len__(self):
        return sum(len(v) for v in self.simplices.values())

###################################################################################################
# Flag complexes
###################################################################################################

class FlagComplex(SimplicialSubcomplex):
    """
    The flag complex K_phi: all nondegenerate FaceWords whose composite is d_phi, with faces.
    """

    def __init__(self, flag : Flag, simplices, face_table):
        super().__init__(simplices)
        self.flag = flag
        self.face_table = face_table

    @property
    def top_simplices(self):
        return self.of_dim(self.flag.length)

    @property
    def cone_point(self) -> FaceWord:
        return cone_point(self.flag)

def build_flag_complex(phi : Flag) -> FlagComplex:
    """
    Enumerates every nondegenerate FaceWord of dimension 0..k whose composite is d_phi.
    """
    k = phi.length
    simplices = set()
    for w in equivalent_words(phi.indices):
        for m in range(k + 1):
            for cuts in combinations(range(k + 1), m + 1):
                bounds = (0,) + cuts + (k,)
                blocks = tuple(w[bounds[t]:bounds[t+1]] for t in range(m + 2))
                if all(_is_standard(b) for b in blocks):
                    simplices.add(FaceWord(blocks))
    face_table = {s: tuple(face(s, i) for i in range(s.dim + 1)) for s in simplices if s.dim > 0}
    return FlagComplex(phi, simplices, face_table)

def check_face_identities(K : FlagComplex) -> bool:
    """
    Checks d_i d_j = d_{j-1} d_i (i < j) on every simplex of dimension >= 2.
    """
    for s, faces in K.face_table.items():
        if s.dim < 2:
            continue
        for j in range(s.dim + 1):
            for i in range(j):
                if face(faces[j], i) != face(faces[i], j - 1):
                    return False
    return True

def base_complex(K : FlagComplex) -> SimplicialSubcomplex:
    """
    Subcomplex spanned by the 0-th faces of the top simplices.
    """
    if K.flag.length == 0:
        return SimplicialSubcomplex(())
    return SimplicialSubcomplex.closure(face(s, 0) for s in K.top_simplices)

def top_complex(K : FlagComplex) -> SimplicialSubcomplex:
    """
    Subcomplex spanned by the i-th faces (i >= 1) of the top simplices.
    """
    return SimplicialSubcomplex.closure(face(s, i) for s in K.top_simplices for i in range(1, s.dim + 1))

def _free_facets(c : SimplicialSubcomplex, m : int):
    count = {}
    for s in c.of_dim(m):
        for i in range(m + 1):
            f = face(s, i)
            count[f] = count.get(f, 0) + 1
    return count

def polytope_boundary(K : FlagComplex) -> SimplicialSubcomplex:
    """
    Subcomplex spanned by the (k-1)-simplices that are a face of exactly one top simplex.
    """
    k = K.flag.length
    assert k >= 1, "The boundary needs a nonempty flag"
    count = _free_facets(K, k)
    return SimplicialSubcomplex.closure(f for f, c in count.items() if c == 1)

def subcomplex_boundary(c : SimplicialSubcomplex) -> SimplicialSubcomplex:
    """
    Free-facet boundary of a pure subcomplex.
    """
    m = c.dimension
    if m <= 0:
        return SimplicialSubcomplex(())
    count = _free_facets(c, m)
    return SimplicialSubcomplex.closure(f for f, n in count.items() if n == 1)

###################################################################################################
# Sphere checks
###################################################################################################

class SphereReport:
    """
    Combinatorial sphere certificate. euler_characteristic is the alternating sum of f_vector;
    betti holds the rational Betti numbers when they were computed.
    """

    def __init__(self, f_vector, is_pseudomanifold : bool, is_connected : bool, verdict : bool, betti=None):
        self.f_vector = list(f_vector)
        self.betti = list(betti) if betti is not None else None
        self.euler_characteristic = sum((-1)**m * c for m, c in enumerate(self.f_vector))
        self.is_pseudomanifold = bool(is_pseudomanifold)
        self.is_connected = bool(is_connected)
        self.verdict = bool(verdict)

    def to_dict(self):
        result = {"f_vector": self.f_vector, "euler": self.euler_characteristic,
                  "pseudomanifold": self.is_pseudomanifold, "connected": self.is_connected,
                  "sphere": self.verdict}
        if self.betti is not None:
            result["betti"] = self.betti
        return result

def _is_connected(c : SimplicialSubcomplex) -> bool:
    vertices = c.of_dim(0)
    if not vertices:
        return False
    parent = {v: v for v in vertices}
    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v
    for e in c.of_dim(1):
        a, b = find(face(e, 0)), find(face(e, 1))
        parent[a] = b
    return len({find(v) for v in vertices}) == 1

def check_sphere(c : SimplicialSubcomplex, dim : int) -> SphereReport:
    """
    verdict = (chi = 1 + (-1)^dim) and connected and every (dim-1)-simplex lies in exactly two
    dim-simplices. For dim = 0 the verdict is "exactly two vertices".
    """
    fv = c.f_vector
    if dim == 0:
        return SphereReport(fv, True, _is_connected(c), fv == [2])
    count = _free_facets(c, dim)
    pseudo = c.dimension == dim and all(count.get(f, 0) == 2 for f in c.of_dim(dim - 1))
    connected = _is_connected(c)
    report = SphereReport(fv, pseudo, connected, False)
    report.verdict = report.euler_characteristic == 1 + (-1)**dim and connected and pseudo
    return report

def _boundary_matrix(c, sub, m):
    rows = [s for s in c.of_dim(m - 1) if s not in sub]
    cols = [s for s in c.of_dim(m) if s not in sub]
    index = {s: r for r, s in enumerate(rows)}
    a = zeros(len(rows), len(cols))
    for j, s in enumerate(cols):
        for i in range(m + 1):
            f = face(s, i)
            if f in index:
                a[index[f], j] += Fraction((-1)**i)
    return a

def quotient_cell_counts(c : SimplicialSubcomplex, sub : SimplicialSubcomplex):
    """
    Cells of c / sub by dimension: the simplices outside sub, plus the point sub collapses to
    (a disjoint base point when sub is empty).
    """
    counts = [len([s for s in c.of_dim(m) if s not in sub]) for m in range(max(c.dimension, 0) + 1)]
    counts[0] += 1
    return counts

def quotient_homology(c : SimplicialSubcomplex, sub : SimplicialSubcomplex):
    """
    Ranks of the relative homology H_m(c, sub; Q) for m = 0..dim c.
    """
    top = c.dimension
    counts = [len([s for s in c.of_dim(m) if s not in sub]) for m in range(top + 1)]
    ranks = [0] + [rank(_boundary_matrix(c, sub, m)) for m in range(1, top + 1)] + [0]
    return [counts[m] - ranks[m] - ranks[m+1] for m in range(top + 1)]

def check_quotient_sphere(K : FlagComplex) -> SphereReport:
    """
    Certifies that the base complex modulo its boundary has the rational homology of a
    (k-1)-sphere, k = |phi|.
    """
    k = K.flag.length
    base = base_complex(K)
    boundary = subcomplex_boundary(base)
    betti = quotient_homology(base, boundary)
    # an empty boundary leaves a disjoint base point
    connected = betti[0] == 0 if boundary.of_dim(0) else False
    expected = [0] * (k - 1) + [1]
    report = SphereReport(quotient_cell_counts(base, boundary), base_interior_check(K), connected, False, betti)
    report.verdict = betti == expected and (connected or k == 1)
    return report

def base_interior_check(K : FlagComplex) -> bool:
    """
    Every (k-2)-simplex of the base complex that is not on its boundary lies in exactly two
    (k-1)-simplices.
    """
    k = K.flag.length
    if k < 2:
        return True
    base = base_complex(K)
    count = _free_facets(base, k - 1)
    boundary = subcomplex_boundary(base)
    return all(count.get(f, 0) == 2 for f in base.of_dim(k - 2) if f not in boundary)

###################################################################################################
# Base decomposition and mapping spaces
###################################################################################################

class BaseDecomposition:
    """
    Cover of the base complex by the pieces d_{c_j} o K_{phi^j} and the pairwise intersections.
    """

    def __init__(self, flag, prefixes, pieces, cover_ok, intersections):
        self.flag = flag
        self.prefixes = prefixes            # [c_j]
        self.pieces = pieces                # [SimplicialSubcomplex]
        self.cover_ok = cover_ok
        self.intersections = intersections  # {(j, l): bool}

    @property
    def verdict(self) -> bool:
        return self.cover_ok and all(self.intersections.values())

    def to_dict(self):
        return {"prefixes": self.prefixes,
                "piece_f_vectors": [p.f_vector for p in self.pieces],
                "cover": self.cover_ok,
                "intersections": {f"{j},{l}": ok for (j, l), ok in sorted(self.intersections.items())}}

def base_decomposition(phi : Flag) -> BaseDecomposition:
    """
    Checks that the pieces d_{c_j} o K_{phi^j} (c_j = i_j - j + 1) cover the base complex and that
    pieces j < l meet exactly in d_{c_l} d_{c_j} o K_{phi^{j,l}}.
    """
    k = phi.length
    if k < 2:
        return BaseDecomposition(phi, [], [], True, {})
    prefixes = [phi.front_index(j) for j in range(1, k + 1)]
    pieces = []
    for j in range(1, k + 1):
        sub = build_flag_complex(phi.drop(j))
        pieces.append(SimplicialSubcomplex(prefix((prefixes[j-1],), s) for s in sub.all_simplices()))
    union = set()
    for p in pieces:
        union |= p.all_simplices()
    cover_ok = union == base_complex(build_flag_complex(phi)).all_simplices()
    intersections = {}
    for j in range(1, k + 1):
        for l in range(j + 1, k + 1):
            sub = build_flag_complex(phi.drop(j, l))
            word = (prefixes[l-1], prefixes[j-1])
            expected = {prefix(word, s) for s in sub.all_simplices()}
            actual = pieces[j-1].all_simplices() & pieces[l-1].all_simplices()
            intersections[(j, l)] = actual == expected
    return BaseDecomposition(phi, prefixes, pieces, cover_ok, intersections)

def mapping_space(n : int, k : int):
    """
    Flags indexing the wedge summands of the mapping space from level n+2 to level n-k+1.
    """
    if not 0 <= k <= n + 1:
        raise ValueError(f"k must lie in [0, {n+1}], got {k}")
    return [Flag(n, c) for c in combinations(range(n + 2), k)]

def flag_report(phi : Flag):
    """
    Statistics of K_phi as a JSON-ready dict.
    """
    K = build_flag_complex(phi)
    k = phi.length
    report = {"flag": list(phi.indices), "f_vector": K.f_vector, "euler": K.euler_characteristic,
              "top_count": len(K.top_simplices), "top_expected": factorial(k),
              "cone_point": str(K.cone_point)}
    if k >= 1:
        base = base_complex(K)
        boundary = check_sphere(polytope_boundary(K), k - 1)
        report["sphere"] = boundary.verdict
        report["boundary"] = boundary.to_dict()
        report["base_f_vector"] = base.f_vector
        report["base_top_count"] = len(base.of_dim(k - 1))
        report["quotient_sphere"] = check_quotient_sphere(K).verdict
        report["decomposition"] = base_decomposition(phi).to_dict()
    else:
        report["sphere"] = False
    return report

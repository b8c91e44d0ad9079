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
# Connected graded Lie algebras over Q.
#
# A free graded Lie algebra is computed inside its free associative (tensor) algebra: an element
# is stored as its expansion {word: coefficient}, where a word is a tuple of generator indices, and
# the graded commutator is [a,b] = ab - (-1)^{|a||b|} ba. The expansion is canonical, so equality
# and linear independence are decided on it directly. A Hall basis is built degree by degree and
# normal forms are coordinates with respect to it.
###################################################################################################

from fractions import Fraction
import warnings
import pyparsing as pp

from .en_obstruct_types import *
from .rational_matrix import *

###################################################################################################
# Private helpers
###################################################################################################

def _tensor_add(a, b, scale=1):
    result = dict(a)
    for w, c in b.items():
        x = result.get(w, 0) + scale * c
        if x == 0:
            result.pop(w, None)
        else:
            result[w] = x
    return result

def _tensor_mul(a, b):
    result = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            w = wa + wb
            x = result.get(w, 0) + ca * cb
            if x == 0:
                result.pop(w, None)
            else:
                result[w] = x
    return result

def _tensor_commutator(a, da, b, db):
    sign = -1 if (da * db) % 2 == 0 else 1
    return _tensor_add(_tensor_mul(a, b), _tensor_mul(b, a), sign)

###################################################################################################
# Generators and elements
###################################################################################################

class GradedGenerator:
    """
    A named generator of positive internal degree.
    """

    def __init__(self, name : str, degree : int):
        if int(degree) < 1:
            raise PresentationError(f"Generator '{name}' must have degree >= 1, got {degree}")
        self.name = str(name)
        self.degree = int(degree)

    def __eq__(self, other):
        return isinstance(other, GradedGenerator) and (self.name, self.degree) == (other.name, other.degree)

    def __hash__(self):
        return hash((self.name, self.degree))

    def __repr__(self):
        return f"GradedGenerator({self.name!r}, {self.degree})"


class HallElement:
    """
    A Hall basis element: a bracket tree over generator indices together with its expansion.
    """

    def __init__(self, tree, degree : int, expansion):
        self.tree = tree            # generator index, or (left, right) trees
        self.degree = degree
        self.expansion = expansion


class LiePolynomial:
    """
    Exact rational combination of Lie elements of one algebra, stored as its tensor expansion.
    degree is the internal degree, or None for an inhomogeneous sum.
    """

    def __init__(self, algebra, terms, degree):
        self.algebra = algebra
        self.terms = {w: Fraction(c) for w, c in terms.items() if c != 0}
        self.degree = degree

    @staticmethod
    def zero(algebra, degree):
        return LiePolynomial(algebra, {}, degree)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_same(self, other):
        assert self.algebra is other.algebra, "Operands belong to different algebras"

    def __add__(self, other):
        self._check_same(other)
        degree = self.degree if self.degree == other.degree else None
        if self.is_zero():
            degree = other.degree
        elif other.is_zero():
            degree = self.degree
        return LiePolynomial(self.algebra, _tensor_add(self.terms, other.terms), degree)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LiePolynomial(self.algebra, {w: -c for w, c in self.terms.items()}, self.degree)

    def __mul__(self, scalar):
        scalar = Fraction(scalar)
        return LiePolynomial(self.algebra, {w: scalar * c for w, c in self.terms.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LiePolynomial) and self.algebra is other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def linear_part(self):
        """
        Coefficients of the generators themselves (words of length one), {index: coefficient}.
        """
        return {w[0]: c for w, c in self.terms.items() if len(w) == 1}

    def __repr__(self):
        return f"LiePolynomial({to_expression(self)})"

###################################################################################################
# Free graded Lie algebra
###################################################################################################

class FreeLieAlgebra:
    """
    Free graded Lie algebra on a list of generators. Generators are kept in Hall order: by degree,
    then by name. The optional cutoff bounds the internal degrees that may be computed.
    """

    def __init__(self, generators, cutoff=None):
        generators = sorted(generators, key=lambda g: (g.degree, g.name))
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise PresentationError(f"Duplicate generator names in {names}")
        self.generators = generators
        self.index = {g.name: i for i, g in enumerate(generators)}
        self.cutoff = cutoff
        self._basis = {}
        self._echelon = {}

    def __repr__(self):
        return f"FreeLieAlgebra({[g.name for g in self.generators]})"

    def _check_cutoff(self, d):
        if self.cutoff is not None and d > self.cutoff:
            raise CutoffError(f"Degree {d} exceeds the degree cutoff {self.cutoff}")

    def generator_degree(self, i : int) -> int:
        return self.generators[i].degree

    def word_degree(self, word) -> int:
        return sum(self.generators[i].degree for i in word)

    def element(self, name : str) -> LiePolynomial:
        if name not in self.index:
            raise PresentationError(f"Unknown generator '{name}'")
        i = self.index[name]
        return LiePolynomial(self, {(i,): Fraction(1)}, self.generators[i].degree)

    def gen(self, i : int) -> LiePolynomial:
        return LiePolynomial(self, {(i,): Fraction(1)}, self.generators[i].degree)

    def bracket(self, p : LiePolynomial, q : LiePolynomial) -> LiePolynomial:
        assert p.algebra is self and q.algebra is self, "Operands belong to a different algebra"
        if p.degree is None or q.degree is None:
            raise ValueError("Brackets need homogeneous operands")
        d = p.degree + q.degree
        self._check_cutoff(d)
        return LiePolynomial(self, _tensor_commutator(p.terms, p.degree, q.terms, q.degree), d)

    ###############################################################################################
    # Hall basis
    ###############################################################################################

    def basis(self, d : int):
        """
        Hall basis of the degree-d component (list of HallElement). Candidates are offered in Hall
        order (generators, then standard bracketings [u,v] with u <= v, the square [u,u] only for
        odd u) followed by the spanning brackets [g, b]; the linearly independent ones are kept.
        """
        self._check_cutoff(d)
        if d in self._basis:
            return self._basis[d]
        assert d >= 1, "Degrees start at 1"
        echelon = SparseEchelon()
        basis = []

        def offer(tree, expansion):
            if expansion and echelon.add(expansion, len(basis)):
                basis.append(HallElement(tree, d, expansion))

        for i, g in enumerate(self.generators):
            if g.degree == d:
                offer(i, {(i,): Fraction(1)})
        ordered = [(e, du, k) for du in range(1, d) for k, e in enumerate(self.basis(du))]
        for u, du, ku in ordered:
            dv = d - du
            if dv < du:
                continue
            for kv, v in enumerate(self.basis(dv)):
                if (dv, kv) < (du, ku):
                    continue
                if (dv, kv) == (du, ku) and du % 2 == 0:
                    continue
                if isinstance(v.tree, tuple):
                    left = v.tree[0]
                    left_key = self._tree_key(left)
                    if left_key is not None and left_key > (du, ku):
                        continue
                offer((u.tree, v.tree), _tensor_commutator(u.expansion, du, v.expansion, dv))
        for i, g in enumerate(self.generators):
            if g.degree < d:
                for b in self.basis(d - g.degree):
                    offer((i, b.tree), _tensor_commutator({(i,): Fraction(1)}, g.degree, b.expansion, b.degree))
        self._basis[d] = basis
        self._echelon[d] = echelon
        return basis

    def _tree_key(self, tree):
        if not isinstance(tree, tuple):
            return (self.generators[tree].degree, self._generator_rank(tree))
        d = self.tree_degree(tree)
        for k, e in enumerate(self.basis(d)):
            if e.tree == tree:
                return (d, k)
        return None

    def _generator_rank(self, i):
        d = self.generators[i].degree
        for k, e in enumerate(self.basis(d)):
            if e.tree == i:
                return k
        return 0

    def tree_degree(self, tree) -> int:
        if not isinstance(tree, tuple):
            return self.generators[tree].degree
        return self.tree_degree(tree[0]) + self.tree_degree(tree[1])

    def dim(self, d : int) -> int:
        return len(self.basis(d))

    def basis_element(self, d : int, k : int) -> LiePolynomial:
        return LiePolynomial(self, self.basis(d)[k].expansion, d)

    def coordinates(self, p : LiePolynomial):
        """
        Hall coordinates of a homogeneous element (dense vector).
        """
        if p.degree is None:
            raise ValueError("Normal forms need a homogeneous element")
        d = p.degree
        n = self.dim(d)
        if p.is_zero():
            return zero_vector(n)
        combo = self._echelon[d].coordinates(p.terms)
        if combo is None:
            raise ValueError("Element does not lie in the free Lie algebra")
        return sparse_to_dense(combo, n)

    def from_coordinates(self, d : int, coords) -> LiePolynomial:
        terms = {}
        for k, c in enumerate(coords):
            if c != 0:
                terms = _tensor_add(terms, self.basis(d)[k].expansion, c)
        return LiePolynomial(self, terms, d)

    def tree_to_str(self, tree) -> str:
        if not isinstance(tree, tuple):
            return self.generators[tree].name
        return f"[{self.tree_to_str(tree[0])},{self.tree_to_str(tree[1])}]"

###################################################################################################
# Homomorphisms
###################################################################################################

def apply_homomorphism(p : LiePolynomial, images, target : FreeLieAlgebra, degree=None) -> LiePolynomial:
    """
    Applies the Lie homomorphism determined by images[i] (a LiePolynomial of target, or its
    expansion dict) for generator i of p's algebra.
    """
    images = [im.terms if isinstance(im, LiePolynomial) else im for im in images]
    memo = {(): {(): Fraction(1)}}

    def image_of(word):
        if word not in memo:
            memo[word] = _tensor_mul(image_of(word[:-1]), images[word[-1]])
        return memo[word]

    terms = {}
    for w, c in p.terms.items():
        terms = _tensor_add(terms, image_of(w), c)
    return LiePolynomial(target, terms, p.degree if degree is None else degree)

###################################################################################################
# Operations
###################################################################################################

def hall_basis(gens, D : int):
    """
    Returns {d: [bracket expression]} for d = 1..D.
    """
    assert D >= 1, "D must be at least 1"
    algebra = FreeLieAlgebra(gens)
    return {d: [algebra.tree_to_str(e.tree) for e in algebra.basis(d)] for d in range(1, D + 1)}

def lie_dim_oracle(gens, d : int) -> int:
    """
    Dimension of the degree-d Lie part of the free associative algebra, computed as the rank of
    all left-normed graded commutators [g1,[g2,[...,gm]]] of generators.
    """
    gens = list(gens)
    rows = []

    def extend(suffix, expansion, degree):
        if degree == d:
            rows.append(expansion)
            return
        for g_index, g in enumerate(gens):
            if degree + g.degree <= d:
                extend((g_index,) + suffix,
                       _tensor_commutator({(g_index,): Fraction(1)}, g.degree, expansion, degree),
                       degree + g.degree)

    for g_index, g in enumerate(gens):
        if g.degree <= d:
            extend((g_index,), {(g_index,): Fraction(1)}, g.degree)
    words = sorted({w for r in rows for w in r})
    column = {w: j for j, w in enumerate(words)}
    m = zeros(len(rows), len(words))
    for i, r in enumerate(rows):
        for w, c in r.items():
            m[i, column[w]] = c
    return rank(m)

def bracket(p : LiePolynomial, q : LiePolynomial) -> LiePolynomial:
    return p.algebra.bracket(p, q)

def normal_form(p : LiePolynomial):
    """
    Hall-basis coordinates of p.
    """
    return p.algebra.coordinates(p)

def lie_part_degree_dims(gens, D : int):
    algebra = FreeLieAlgebra(gens)
    return [algebra.dim(d) for d in range(1, D + 1)]

###################################################################################################
# Expression grammar
###################################################################################################

class _Gen:
    def __init__(self, t):
        self.name = t[0]

class _Bracket:
    def __init__(self, t):
        self.left, self.right = t[0], t[1]

class _Term:
    def __init__(self, t):
        self.coef = Fraction(t[0]) if len(t) == 2 else Fraction(1)
        self.atom = t[-1]

class _Sum:
    def __init__(self, t):
        self.terms = []
        sign = 1
        for tok in t:
            if isinstance(tok, str):
                sign = -1 if tok == "-" else 1
            else:
                self.terms.append((sign, tok))
                sign = 1

class _Zero:
    def __init__(self, t):
        pass

def _build_grammar():
    integer = pp.Word(pp.nums)
    rational = pp.Combine(integer + pp.Optional(pp.Literal("/") + integer))
    ident = pp.Regex(r"[A-Za-z_][A-Za-z0-9_.]*").set_parse_action(_Gen)
    lbr, rbr, comma, star = map(pp.Suppress, "[],*")
    expr = pp.Forward()
    bracket_ = (lbr + expr + comma + expr + rbr).set_parse_action(_Bracket)
    atom = ident | bracket_
    term = (pp.Optional(rational + star) + atom).set_parse_action(_Term)
    sign = pp.one_of("+ -")
    expr <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(_Sum)
    zero = pp.Literal("0").set_parse_action(_Zero)
    return (zero + pp.StringEnd()) | expr

_GRAMMAR = _build_grammar()

def _evaluate(node, algebra):
    if isinstance(node, _Gen):
        return algebra.element(node.name)
    if isinstance(node, _Bracket):
        return algebra.bracket(_evaluate(node.left, algebra), _evaluate(node.right, algebra))
    if isinstance(node, _Term):
        return node.coef * _evaluate(node.atom, algebra)
    total = None
    for sign, term in node.terms:
        value = sign * _evaluate(term, algebra)
        if total is not None and total.degree != value.degree:
            raise PresentationError(f"Inhomogeneous expression: degrees {total.degree} and {value.degree}")
        total = value if total is None else total + value
        total.degree = value.degree
    return total

def parse_lie_expression(text : str, algebra : FreeLieAlgebra, degree=None) -> LiePolynomial:
    """
    Parses an expression of the Lie grammar, e.g. "[x,y] - 1/2*[x,[x,y]]". The literal "0" parses
    to the zero element of the given degree.
    """
    try:
        tokens = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise PresentationError(f"Cannot parse '{text}' at line {e.lineno}, column {e.col}: {e.msg}")
    node = tokens[0]
    if isinstance(node, _Zero):
        return LiePolynomial.zero(algebra, degree)
    p = _evaluate(node, algebra)
    if degree is not None and p.degree != degree:
        raise PresentationError(f"Expression '{text}' has degree {p.degree}, expected {degree}")
    return p

def to_expression(p : LiePolynomial) -> str:
    """
    Prints p in the Lie grammar using its Hall coordinates.
    """
    if p.is_zero():
        return "0"
    coords = p.algebra.coordinates(p)
    parts = []
    for k, c in enumerate(coords):
        if c == 0:
            continue
        tree = p.algebra.tree_to_str(p.algebra.basis(p.degree)[k].tree)
        mag = abs(c)
        body = tree if mag == 1 else f"{fraction_str(mag)}*{tree}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)

###################################################################################################
# Presented algebras
###################################################################################################

class QuotientBasis:
    """
    Degree-d component of a presented algebra: Hall indices of the complement basis and the
    projection matrix (dim Lambda_d x dim free_d) from Hall coordinates.
    """

    def __init__(self, degree, hall_indices, projection, ideal):
        self.degree = degree
        self.hall_indices = hall_indices
        self.projection = projection
        self.ideal = ideal          # rows: Hall coordinates of an ideal basis

    @property
    def dim(self) -> int:
        return len(self.hall_indices)


class PresentedLieAlgebra:
    """
    Lambda = L(generators) / (relations), computed degreewise through the cutoff D.
    """

    def __init__(self, generators, relations, degree_cutoff : int,
                 pivot_order : PivotOrder = PivotOrder.Ascending_s):
        assert degree_cutoff >= 1, "Degree cutoff must be at least 1"
        self.free = FreeLieAlgebra(generators, cutoff=degree_cutoff)
        self.generators = self.free.generators
        self.degree_cutoff = int(degree_cutoff)
        self.pivot_order = pivot_order
        self.relations = []
        for r in relations:
            if isinstance(r, str):
                try:
                    r = parse_lie_expression(r, self.free)
                except CutoffError:
                    warnings.warn(f"Relation '{r}' lies above the cutoff and is ignored", CutoffWarning)
                    continue
            if r.degree is None:
                raise PresentationError("Relations must be homogeneous")
            if r.degree > self.degree_cutoff:
                warnings.warn(f"Relation of degree {r.degree} lies above the cutoff and is ignored", CutoffWarning)
                continue
            self.relations.append(r)
        self._ideal = {}
        self._quotient = {}

    def with_cutoff(self, D : int):
        relations = [to_expression(r) for r in self.relations]
        return PresentedLieAlgebra(self.generators, relations, D, self.pivot_order)

    def ideal_basis(self, d : int):
        """
        Basis (list of LiePolynomial) of the degree-d part of the relation ideal, spanned by the
        relations of degree d and the brackets [g, u] of generators with lower ideal elements.
        """
        self.free._check_cutoff(d)
        if d in self._ideal:
            return self._ideal[d]
        echelon = SparseEchelon()
        basis = []
        candidates = [r for r in self.relations if r.degree == d]
        for i, g in enumerate(self.generators):
            if g.degree < d:
                candidates += [self.free.bracket(self.free.gen(i), u) for u in self.ideal_basis(d - g.degree)]
        for c in candidates:
            if echelon.add(c.terms, len(basis)):
                basis.append(c)
        self._ideal[d] = basis
        return basis

    def quotient(self, d : int) -> QuotientBasis:
        if d in self._quotient:
            return self._quotient[d]
        n = self.free.dim(d)
        ideal = zeros(len(self.ideal_basis(d)), n)
        for i, u in enumerate(self.ideal_basis(d)):
            ideal[i] = self.free.coordinates(u)
        space = QuotientSpace(identity(n), ideal, self.pivot_order)
        projection = zeros(space.dim, n)
        for j in range(n):
            unit = zero_vector(n)
            unit[j] = Fraction(1)
            projection[:, j] = space.coordinates(unit)
        q = QuotientBasis(d, space.representative_indices, projection, ideal)
        self._quotient[d] = q
        return q

    def dim(self, d : int) -> int:
        return self.quotient(d).dim

    def dims(self):
        return [self.dim(d) for d in range(1, self.degree_cutoff + 1)]

    def project(self, p : LiePolynomial):
        """
        Coordinates of the image of p in Lambda_d.
        """
        return matvec(self.quotient(p.degree).projection, self.free.coordinates(p))

    def in_ideal(self, p : LiePolynomial) -> bool:
        return is_zero(self.project(p))

    def abelianization_dims(self):
        """
        dim (Lambda/[Lambda,Lambda])_d: generators of degree d modulo linear parts of relations.
        """
        dims = []
        for d in range(1, self.degree_cutoff + 1):
            gens = [i for i, g in enumerate(self.generators) if g.degree == d]
            col = {i: j for j, i in enumerate(gens)}
            rows = self.ideal_basis(d)
            m = zeros(len(rows), len(gens))
            for r, u in enumerate(rows):
                for i, c in u.linear_part().items():
                    m[r, col[i]] = c
            dims.append(len(gens) - rank(m))
        return dims

def quotient_basis(algebra : PresentedLieAlgebra, d : int) -> QuotientBasis:
    if d > algebra.degree_cutoff:
        raise CutoffError(f"Degree {d} exceeds the degree cutoff {algebra.degree_cutoff}")
    return algebra.quotient(d)

###################################################################################################
# Loop modules
###################################################################################################

class LoopModule:
    """
    Coefficient module (Omega^m Lambda)_d = Lambda_{d+m}, with trivial action.
    """

    def __init__(self, base : PresentedLieAlgebra, shift : int, D : int):
        assert shift >= 0, "Loop shift must be non-negative"
        if D + shift > base.degree_cutoff:
            raise CutoffError(f"Omega^{shift} through degree {D} needs Lambda through degree "
                              f"{D + shift}, the cutoff is {base.degree_cutoff}")
        self.base = base
        self.shift = int(shift)
        self.D = int(D)

    def dim(self, d : int) -> int:
        if d < 1 or d > self.D:
            return 0
        return self.base.dim(d + self.shift)

    def dims(self):
        return [self.dim(d) for d in range(1, self.D + 1)]

    def label(self) -> str:
        return f"Omega^{self.shift}"

def loop_module(algebra : PresentedLieAlgebra, m : int, D : int) -> LoopModule:
    """
    Omega^m of algebra through degree D. The algebra is recomputed with a larger cutoff if D + m
    exceeds its own.
    """
    if D + m > algebra.degree_cutoff:
        warnings.warn(f"Omega^{m} through degree {D} extends the presentation cutoff from "
                      f"{algebra.degree_cutoff} to {D + m}", CutoffWarning)
        algebra = algebra.with_cutoff(D + m)
    return LoopModule(algebra, m, D)

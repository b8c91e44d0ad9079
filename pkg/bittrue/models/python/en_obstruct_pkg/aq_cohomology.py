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
# Andre-Quillen cochains of a presented graded Lie algebra, computed on a CW resolution.
#
# A cochain of level n and internal degree d is a K_d x |Gbar_n(d)| matrix (one column per basis
# generator of level n and degree d). The differential is precomposition with the abelianized
# attaching map: (delta phi) = phi . A_{n+1}(d), where column j of A_{n+1}(d) is the linear part of
# the attaching value of the j-th generator of level n+1 on the level-n basis. The coefficient
# module acts trivially.
###################################################################################################

from fractions import Fraction

from .en_obstruct_types import *
from .rational_matrix import *
from .graded_lie import *
from .simplicial_cw import *

###################################################################################################
# Linearization
###################################################################################################

def basis_of_degree(X : TruncatedCWObject, n : int, d : int):
    return [g for g in X.basis[n] if g.degree == d]

def linearize(X : TruncatedCWObject, p : LiePolynomial, n : int):
    """
    Coefficients of p on the basis generators of level n (in X.basis[n] order). Brackets and
    degenerate letters are dropped.
    """
    level = X.level(n)
    p = rebase(p, level)
    position = {g.name: k for k, g in enumerate(X.basis[n])}
    v = zero_vector(len(X.basis[n]))
    for i, c in p.linear_part().items():
        s = level.symbols[i]
        if not s.is_degenerate:
            v[position[s.name]] = c
    return v

def linearize_in_degree(X : TruncatedCWObject, p : LiePolynomial, n : int):
    """
    linearize restricted to the generators of degree p.degree.
    """
    v = linearize(X, p, n)
    return as_vector([v[k] for k, g in enumerate(X.basis[n]) if g.degree == p.degree])

def abelianized_differential(X : TruncatedCWObject, n : int, d : int):
    """
    Matrix |Gbar_{n-1}(d)| x |Gbar_n(d)| of linearize o attach.
    """
    gens = basis_of_degree(X, n, d)
    rows = len(basis_of_degree(X, n - 1, d))
    m = zeros(rows, len(gens))
    for j, g in enumerate(gens):
        m[:, j] = linearize_in_degree(X, X.attach_value(g), n - 1)
    return m

def aq_homology_dims(X : TruncatedCWObject):
    """
    {n: [dim H_n(d) for d = 1..D]} of the abelianized complex for 0 <= n < N.
    """
    result = {}
    for n in range(X.N):
        dims = []
        for d in range(1, X.D + 1):
            g = len(basis_of_degree(X, n, d))
            lower = rank(abelianized_differential(X, n, d)) if n >= 1 else 0
            upper = rank(abelianized_differential(X, n + 1, d))
            dims.append(g - lower - upper)
        result[n] = dims
    return result

###################################################################################################
# Coefficient modules
###################################################################################################

class HomotopyModule:
    """
    pi_k of a truncated object, through its degree cutoff.
    """

    def __init__(self, X : TruncatedCWObject, k : int):
        self.X = X
        self.k = int(k)
        self.D = X.D
        self._data = homotopy_data(X, k)

    def dim(self, d : int) -> int:
        if d < 1 or d > self.D:
            return 0
        return self._data[d].dim

    def dims(self):
        return [self.dim(d) for d in range(1, self.D + 1)]

    def coordinates(self, d : int, v):
        return self._data[d].coordinates(v)

    def lift(self, d : int, coords):
        """
        A representative cycle (Hall coordinates) of the class with the given coordinates.
        """
        return self._data[d].space.lift(coords)

    def label(self) -> str:
        return f"pi_{self.k}"

###################################################################################################
# Cochain complex
###################################################################################################

class AQCochainComplex:
    """
    Cochains C^n for 1 <= n <= N with coefficients in module (an object with dim(d) and D).
    """

    def __init__(self, X : TruncatedCWObject, module, D=None):
        self.X = X
        self.module = module
        self.D = min(X.D, module.D) if D is None else int(D)
        if self.D > module.D:
            raise CutoffError(f"Coefficients are known through degree {module.D}, not {self.D}")
        self._a = {}

    @property
    def N(self) -> int:
        return self.X.N

    def generators(self, n : int, d : int):
        return basis_of_degree(self.X, n, d)

    def A(self, n : int, d : int):
        """
        Abelianized attaching matrix of level n.
        """
        assert 1 <= n <= self.N, f"No attaching map on level {n}"
        key = (n, d)
        if key not in self._a:
            self._a[key] = abelianized_differential(self.X, n, d)
        return self._a[key]

    def cochain_shape(self, n : int, d : int):
        return (self.module.dim(d), len(self.generators(n, d)))

    def zero_cochain(self, n : int, d : int):
        return zeros(*self.cochain_shape(n, d))

    def delta(self, n : int, d : int, phi):
        """
        delta^n phi = phi . A_{n+1}(d), a cochain of level n+1.
        """
        assert phi.shape == self.cochain_shape(n, d), f"Cochain has shape {phi.shape}"
        if n >= self.N:
            return zeros(self.module.dim(d), 0)
        return matmul(phi, self.A(n + 1, d))

    def delta_matrix(self, n : int, d : int):
        """
        delta^n on row-major flattened cochains.
        """
        k, g = self.cochain_shape(n, d)
        g_next = len(self.generators(n + 1, d)) if n < self.N else 0
        m = zeros(k * g_next, k * g)
        if n >= self.N or g_next == 0 or g == 0:
            return m
        a = self.A(n + 1, d)
        for r in range(k):
            m[r * g_next:(r + 1) * g_next, r * g:(r + 1) * g] = a.T
        return m

    def check_square_zero(self) -> bool:
        for n in range(1, self.N - 1):
            for d in range(1, self.D + 1):
                if not is_zero(matmul(self.delta_matrix(n + 1, d), self.delta_matrix(n, d))):
                    return False
        return True

    def cohomology_dim(self, n : int, d : int) -> int:
        return cohomology_dim(self, n, d)

def build_aq_complex(X : TruncatedCWObject, module, D=None) -> AQCochainComplex:
    if X.N < 2:
        raise ValueError(f"Cochains through level {X.N} support no cohomology in dimensions >= 2")
    cx = AQCochainComplex(X, module, D)
    assert cx.check_square_zero(), "delta o delta must vanish"
    return cx

def cohomology_dim(cx : AQCochainComplex, n : int, d : int) -> int:
    """
    dim ker delta^n - rank delta^{n-1} in internal degree d, for 2 <= n <= N-1.
    """
    if n < 2 or n > cx.N - 1:
        raise ValueError(f"Cohomology is exposed for 2 <= n <= {cx.N - 1}, got n = {n}")
    if d < 1 or d > cx.D:
        raise CutoffError(f"Degree {d} is outside 1..{cx.D}")
    k, g = cx.cochain_shape(n, d)
    kernel = k * g - rank(cx.delta_matrix(n, d))
    return kernel - rank(cx.delta_matrix(n - 1, d))

def cohomology_dims(cx : AQCochainComplex, n : int):
    return [cohomology_dim(cx, n, d) for d in range(1, cx.D + 1)]

###################################################################################################
# Classes
###################################################################################################

class ObstructionData:
    """
    Chain-level data behind an obstruction cocycle.
        chain_values = {generator name: Hall coordinates of d_0 o attach}
        nonzero      = some chain value is nonzero
        correction   = {generator name: LiePolynomial c} with d_0 c = d_0 attach and zero linear part
                       on the basis, or None when no such correction exists
    """

    def __init__(self, chain_values, correction):
        self.chain_values = chain_values
        self.nonzero = any(not is_zero(v) for v in chain_values.values())
        self.correction = correction

    @property
    def correctable(self) -> bool:
        return self.correction is not None


class AQClass:
    """
    A cochain of level n: {d: matrix} over the internal degrees of the complex.
    """

    def __init__(self, complex : AQCochainComplex, level : int, cochain=None, data=None):
        self.complex = complex
        self.level = int(level)
        self.cochain = {}
        for d in range(1, complex.D + 1):
            phi = (cochain or {}).get(d)
            self.cochain[d] = phi if phi is not None else complex.zero_cochain(level, d)
            assert self.cochain[d].shape == complex.cochain_shape(level, d), \
                f"Cochain in degree {d} has shape {self.cochain[d].shape}"
        self.data = data

    def _check(self, other):
        assert self.complex is other.complex and self.level == other.level, "Classes of different complexes"

    def __add__(self, other):
        self._check(other)
        return AQClass(self.complex, self.level, {d: self.cochain[d] + other.cochain[d] for d in self.cochain})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return AQClass(self.complex, self.level, {d: c * m for d, m in self.cochain.items()})

    def is_zero_cochain(self) -> bool:
        return all(is_zero(m) for m in self.cochain.values())

    def is_cocycle(self) -> bool:
        return all(is_zero(self.complex.delta(self.level, d, m)) for d, m in self.cochain.items())

    def column(self, name : str):
        """
        Value on one basis generator.
        """
        X = self.complex.X
        g = X.generator(name)
        assert g is not None and g.level == self.level, f"{name} is not a level-{self.level} generator"
        k = [h.name for h in basis_of_degree(X, self.level, g.degree)].index(name)
        return self.cochain[g.degree][:, k].copy()

    def to_dict(self):
        result = {}
        for d, m in self.cochain.items():
            for k, g in enumerate(self.complex.generators(self.level, d)):
                result[g.name] = [fraction_str(x) for x in m[:, k]]
        return result


class CoboundaryResult:
    """
    witness:     {d: cochain of level n-1} with delta(witness) = c, or None
    certificate: {d: (rank delta, rank [delta | c])} for the degrees where no witness exists
    """

    def __init__(self, witness, certificate):
        self.witness = witness
        self.certificate = certificate

    @property
    def found(self) -> bool:
        return self.witness is not None

def is_coboundary(c : AQClass) -> CoboundaryResult:
    """
    Solves delta^{n-1} psi = c degreewise.
    """
    cx = c.complex
    n = c.level
    witness = {}
    certificate = {}
    for d, phi in c.cochain.items():
        k, g = phi.shape
        b = as_vector(list(phi.flat))
        if n - 1 < 1:
            if not is_zero(b):
                certificate[d] = (0, 1)
            continue
        a = cx.delta_matrix(n - 1, d)
        x = solve(a, b)
        if x is None:
            certificate[d] = column_space_rank_certificate(a, b)
            continue
        rows, cols = cx.cochain_shape(n - 1, d)
        psi = zeros(rows, cols)
        for i in range(rows):
            for j in range(cols):
                psi[i, j] = x[i * cols + j]
        witness[d] = psi
    if certificate:
        return CoboundaryResult(None, certificate)
    return CoboundaryResult(witness, {})

def classes_equal(a : AQClass, b : AQClass) -> bool:
    return is_coboundary(a - b).found

###################################################################################################
# Obstruction cocycles
###################################################################################################

def attach_values(X : TruncatedCWObject, level : int, attach):
    """
    {name: LiePolynomial of level-1} for the basis of `level`, overridden by attach.
    """
    values = {g.name: X.attach_value(g) for g in X.basis[level]}
    for name, value in (attach or {}).items():
        if name not in values:
            raise PresentationError(f"'{name}' is not a level-{level} generator")
        g = X.generator(name)
        if isinstance(value, str):
            value = X.parse(value, level - 1, g.degree)
        elif value.is_zero():
            value = LiePolynomial.zero(X.level(level - 1).algebra, g.degree)
        else:
            value = rebase(value, X.level(level - 1))
        values[name] = value
    return values

def _require_moore_chains(X, n, values):
    for name, v in values.items():
        check_moore_chain(X, n, name, v)

def _check_band(X : TruncatedCWObject, top : int):
    nonzero = {}
    for k in range(1, top + 1):
        for d, h in homotopy_data(X, k).items():
            if h.dim:
                nonzero[(k, d)] = h.dim
    if nonzero:
        raise ResolutionBandError(f"Homotopy does not vanish in the band 1..{top}: {nonzero}", nonzero)

def k_invariant_cocycle(res : TruncatedCWObject, n : int, attach=None) -> AQClass:
    """
    The cocycle x -> [d_0(d0bar x)] on the basis of level n+2, with values in pi_n of the
    n-truncation, where d_0 of a level-(n+1) Moore chain need not bound. d0bar x (the resolution's
    own, overridden by attach) must be a Moore chain.
    """
    assert res.N >= n + 2, f"Needs levels through {n + 2}"
    values = attach_values(res, n + 2, attach)
    _require_moore_chains(res, n + 1, values)
    module = HomotopyModule(truncate(res, n), n)
    cx = AQCochainComplex(res, module)
    cochain = {}
    chain_values = {}
    for d in range(1, cx.D + 1):
        phi = cx.zero_cochain(n + 2, d)
        for k, g in enumerate(cx.generators(n + 2, d)):
            v = res.coordinates(res.face(values[g.name], n + 1, 0), n)
            chain_values[g.name] = v
            coords = module.coordinates(d, v)
            assert coords is not None, "d_0 of a Moore chain is a Moore cycle"
            phi[:, k] = coords
        cochain[d] = phi
    return AQClass(cx, n + 2, cochain, ObstructionData(chain_values, None))

def _basis_linear_columns(X : TruncatedCWObject, n : int, d : int):
    algebra = X.level(n).algebra
    return [k for k, e in enumerate(algebra.basis(d))
            if not isinstance(e.tree, tuple) and not X.level(n).symbols[e.tree].is_degenerate]

def correction_chains(X : TruncatedCWObject, n : int, d : int):
    """
    Rows spanning the Moore chains of level n, degree d with zero linear part on the basis
    generators (degenerate letters may occur linearly).
    """
    chains = X.moore(n, d).chains
    cols = _basis_linear_columns(X, n, d)
    if cols and chains.shape[0]:
        combos = nullspace(chains[:, cols].T.copy())
        chains = matmul(combos, chains)
    return chains

def _correction(trunc : TruncatedCWObject, n : int, d : int, target):
    """
    A Moore chain c of level n+1 with zero linear part on the basis and d_0 c = target, or None.
    """
    chains = correction_chains(trunc, n + 1, d)
    images = matmul(chains, trunc.face_matrix(n + 1, 0, d)) if chains.shape[0] else zeros(0, len(target))
    x = solve(images.T.copy(), target)
    if x is None:
        return None
    return trunc.element(n + 1, d, matvec(chains.T.copy(), x))


class ResidueModule:
    """
    d_0(C_{n+1}) / d_0(C_{n+1}^0) of a truncated object, through its degree cutoff, where C^0 are
    the Moore chains with zero linear part on the basis. d_0 o attach of a level-(n+2) generator
    has residue 0 exactly when attach can be corrected by such a chain into a Moore cycle.
    """

    def __init__(self, X : TruncatedCWObject, n : int):
        assert X.N >= n + 1, f"Needs levels through {n + 1}"
        self.X = X
        self.n = int(n)
        self.D = X.D
        self._spaces = {}
        for d in range(1, self.D + 1):
            chains = correction_chains(X, n + 1, d)
            width = X.level(n).algebra.dim(d)
            sub = matmul(chains, X.face_matrix(n + 1, 0, d)) if chains.shape[0] else zeros(0, width)
            self._spaces[d] = QuotientSpace(X.moore(n + 1, d).boundary, sub, X.pivot_order)

    def dim(self, d : int) -> int:
        if d < 1 or d > self.D:
            return 0
        return self._spaces[d].dim

    def dims(self):
        return [self.dim(d) for d in range(1, self.D + 1)]

    def coordinates(self, d : int, v):
        return self._spaces[d].coordinates(v)

    def lift(self, d : int, coords):
        return self._spaces[d].lift(coords)

    def label(self) -> str:
        return f"dC_{self.n + 1}/dC0_{self.n + 1}"

def beta_obstruction(res : TruncatedCWObject, n : int, attach=None) -> AQClass:
    """
    Existence obstruction for the level-(n+2) attaching map `attach` ({name: value}, defaulting to
    the resolution's own) over the (n+1)-truncation. The value on x is the residue of d_0(attach x)
    in ResidueModule; the cochain vanishes exactly when attach can be corrected, without changing
    its linear part, into a cycle-valued map. The obstruction data carries d_0 o attach and the
    correction.
    """
    assert n >= 0, "n must be non-negative"
    if res.N < n + 2:
        raise ValueError(f"beta_{n} needs the basis of level {n + 2}")
    trunc = truncate(res, n + 1)
    _check_band(trunc, n)
    own = attach_values(res, n + 2, None)
    values = attach_values(res, n + 2, attach)
    _require_moore_chains(res, n + 1, values)
    for name, v in values.items():
        if not (linearize(res, v, n + 1) == linearize(res, own[name], n + 1)).all():
            raise LinearizationMismatchError(f"attach({name}) does not linearize to the algebraic attaching map")
    module = ResidueModule(trunc, n)
    cx = AQCochainComplex(res, module)
    cochain = {}
    chain_values = {}
    correction = {}
    for d in range(1, cx.D + 1):
        phi = cx.zero_cochain(n + 2, d)
        for k, g in enumerate(cx.generators(n + 2, d)):
            target = res.coordinates(res.face(values[g.name], n + 1, 0), n)
            chain_values[g.name] = target
            coords = module.coordinates(d, target)
            assert coords is not None, "d_0 of a Moore chain lies in the boundaries"
            phi[:, k] = coords
            if correction is None:
                continue
            if is_zero(target):
                correction[g.name] = LiePolynomial.zero(trunc.level(n + 1).algebra, d)
                continue
            c = _correction(trunc, n, d, target) if is_zero(coords) else None
            if c is None:
                correction = None
            else:
                correction[g.name] = c
        cochain[d] = phi
    return AQClass(cx, n + 2, cochain, ObstructionData(chain_values, correction))

def presentation_of(X : TruncatedCWObject) -> PresentedLieAlgebra:
    """
    The presentation X resolves, or pi_0 of X read off levels 0 and 1.
    """
    if X.presentation is not None:
        return X.presentation
    gens = [GradedGenerator(g.name, g.degree) for g in X.basis[0]]
    relations = [to_expression(X.attach_value(g)) for g in X.basis[1]] if X.N >= 1 else []
    return PresentedLieAlgebra(gens, relations, X.D)

def loop_complex(res : TruncatedCWObject, n : int) -> AQCochainComplex:
    """
    Cochains of res with coefficients in Omega^n Lambda, through the degrees the presentation
    supports.
    """
    base = presentation_of(res)
    D = min(res.D, base.degree_cutoff - n)
    if D < 1:
        raise CutoffError(f"Omega^{n} needs the presentation above degree {base.degree_cutoff}")
    return AQCochainComplex(res, loop_module(base, n, D))

def delta_difference(res : TruncatedCWObject, n : int, a, b) -> AQClass:
    """
    Difference class of two cycle-valued attaching maps a, b ({name: value} on the basis of level
    n+2) realizing the same linearization: dbar = a - b, with values in pi_{n+1} of the
    (n+2)-truncation of res. A difference that bounds in res has zero value.
    """
    if res.N < n + 2:
        raise ValueError(f"The difference class needs the basis of level {n + 2}")
    va = attach_values(res, n + 2, a)
    vb = attach_values(res, n + 2, b)
    for values in (va, vb):
        _require_moore_chains(res, n + 1, values)
        for name, v in values.items():
            if not res.face(v, n + 1, 0).is_zero():
                raise MooreChainError(f"attach({name}) is not a Moore cycle (d_0 o attach = 0 is violated)")
    for name in va:
        if not (linearize(res, va[name], n + 1) == linearize(res, vb[name], n + 1)).all():
            raise LinearizationMismatchError(f"The two attaching values of {name} have different linear parts")
    module = HomotopyModule(difference_object(res, n), n + 1)
    cx = AQCochainComplex(res, module)
    cochain = {}
    chain_values = {}
    for d in range(1, cx.D + 1):
        phi = cx.zero_cochain(n + 2, d)
        for k, g in enumerate(cx.generators(n + 2, d)):
            v = res.coordinates(va[g.name] - vb[g.name], n + 1)
            chain_values[g.name] = v
            phi[:, k] = module.coordinates(d, v)
        cochain[d] = phi
    return AQClass(cx, n + 2, cochain, ObstructionData(chain_values, None))

def difference_object(res : TruncatedCWObject, n : int) -> TruncatedCWObject:
    """
    The (n+2)-truncation: its pi_{n+1} is Z_{n+1} modulo the boundaries of the resolution's own
    level n+2.
    """
    return truncate(res, n + 2)

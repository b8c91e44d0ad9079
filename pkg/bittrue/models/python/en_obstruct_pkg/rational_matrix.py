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
# Exact linear algebra over the rationals.
#
# Dense matrices are numpy object arrays holding fractions.Fraction (the same object-dtype
# technique used for arbitrary-precision integers in wide fixed-point arithmetic). Row reduction
# and rank are delegated to sympy's DomainMatrix over QQ. Vectors whose coordinates are sparse
# (e.g. tensor words of a free Lie algebra) are reduced incrementally with SparseEchelon.
###################################################################################################

from fractions import Fraction
import numpy as np
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .en_obstruct_types import *

###################################################################################################
# Private helpers
###################################################################################################

def _to_qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)

def _from_qq(x):
    return Fraction(int(x.numerator), int(x.denominator))

###################################################################################################
# Construction
###################################################################################################

def zeros(m : int, n : int):
    """
    Returns an m x n matrix of exact zeros.
    """
    a = np.empty((m, n), dtype=object)
    a[...] = Fraction(0)
    return a

def zero_vector(n : int):
    a = np.empty((n,), dtype=object)
    a[...] = Fraction(0)
    return a

def identity(n : int):
    a = zeros(n, n)
    for i in range(n):
        a[i, i] = Fraction(1)
    return a

def as_matrix(rows, shape=None):
    """
    Converts nested sequences (or an array) of numbers into an exact object matrix. An explicit
    shape is required for matrices with a zero dimension.
    """
    if shape is not None and (shape[0] == 0 or shape[1] == 0):
        return zeros(shape[0], shape[1])
    rows = [list(row) for row in rows]
    if len(rows) == 0:
        return zeros(0, 0)
    a = zeros(len(rows), len(rows[0]))
    for i, row in enumerate(rows):
        assert len(row) == a.shape[1], "All rows must have the same length"
        for j, x in enumerate(row):
            a[i, j] = Fraction(x)
    if shape is not None:
        assert a.shape == tuple(shape), f"Expected shape {tuple(shape)}, got {a.shape}"
    return a

def as_vector(values):
    a = np.empty((len(values),), dtype=object)
    for i, x in enumerate(values):
        a[i] = Fraction(x)
    return a

def is_zero(a) -> bool:
    return all(x == 0 for x in np.asarray(a).flat)

def matmul(a, b):
    """
    Exact matrix product. Handles zero-sized operands (numpy object matmul returns int 0 there).
    """
    assert a.shape[1] == b.shape[0], f"Shape mismatch {a.shape} @ {b.shape}"
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    return a @ b

def matvec(a, v):
    assert a.shape[1] == v.shape[0], f"Shape mismatch {a.shape} @ {v.shape}"
    if a.shape[0] == 0 or a.shape[1] == 0:
        return zero_vector(a.shape[0])
    return a @ v

###################################################################################################
# sympy conversion
###################################################################################################

def to_domain_matrix(a):
    """
    Converts an exact object matrix to a sparse DomainMatrix over QQ.
    """
    m, n = a.shape
    rows = {}
    for i in range(m):
        row = {j: _to_qq(a[i, j]) for j in range(n) if a[i, j] != 0}
        if row:
            rows[i] = row
    return DomainMatrix(rows, (m, n), QQ)

def from_domain_matrix(dm):
    """
    Converts a DomainMatrix over QQ back to an exact object matrix.
    """
    m, n = dm.shape
    a = zeros(m, n)
    for i, row in dm.to_sparse().rep.items():
        for j, x in row.items():
            a[i, j] = _from_qq(x)
    return a

###################################################################################################
# Row reduction
###################################################################################################

def rref(a):
    """
    Returns (R, pivots): the reduced row echelon form of a and its pivot columns.
    """
    m, n = a.shape
    if m == 0 or n == 0:
        return zeros(m, n), ()
    r, pivots = to_domain_matrix(a).rref()
    return from_domain_matrix(r), tuple(pivots)

def rank(a) -> int:
    m, n = a.shape
    if m == 0 or n == 0:
        return 0
    return int(to_domain_matrix(a).rank())

def nullspace(a):
    """
    Returns a matrix whose rows form a basis of {x : a x = 0}. The basis is the standard one read
    off the reduced row echelon form (one vector per free column, in column order).
    """
    m, n = a.shape
    if m == 0:
        return identity(n)
    r, pivots = rref(a)
    free = [j for j in range(n) if j not in pivots]
    basis = zeros(len(free), n)
    for k, f in enumerate(free):
        basis[k, f] = Fraction(1)
        for i, p in enumerate(pivots):
            basis[k, p] = -r[i, f]
    return basis

def solve(a, b):
    """
    Returns one exact solution x of a x = b (free variables set to zero), or None if the system is
    inconsistent.
    """
    m, n = a.shape
    assert b.shape == (m,), f"Right-hand side must have shape ({m},)"
    if m == 0:
        return zero_vector(n)
    aug = zeros(m, n + 1)
    aug[:, :n] = a
    aug[:, n] = b
    r, pivots = rref(aug)
    if n in pivots:
        return None
    x = zero_vector(n)
    for i, p in enumerate(pivots):
        x[p] = r[i, n]
    return x

def column_space_rank_certificate(a, b):
    """
    Returns (rank(a), rank([a|b])); the two differ exactly when a x = b is infeasible.
    """
    m, n = a.shape
    aug = zeros(m, n + 1)
    aug[:, :n] = a
    aug[:, n] = b
    return rank(a), rank(aug)

###################################################################################################
# Incremental sparse echelon
###################################################################################################

class SparseEchelon:
    """
    Incremental echelon basis of sparse vectors. A vector is a dict {key: Fraction} with
    comparable keys. Each stored row remembers how it is combined from the labelled input vectors,
    so membership tests also return coordinates.
    """

    def __init__(self):
        self._rows = []         # [(pivot, row, combo)]

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec):
        """
        Returns (residual, combo) with vec = residual + sum(combo[label] * input[label]).
        """
        residual = {k: Fraction(v) for k, v in vec.items() if v != 0}
        combo = {}
        for pivot, row, row_combo in self._rows:
            c = residual.get(pivot)
            if c is None:
                continue
            c = c / row[pivot]
            for k, v in row.items():
                x = residual.get(k, 0) - c * v
                if x == 0:
                    residual.pop(k, None)
                else:
                    residual[k] = x
            for label, v in row_combo.items():
                x = combo.get(label, 0) + c * v
                if x == 0:
                    combo.pop(label, None)
                else:
                    combo[label] = x
        return residual, combo

    def add(self, vec, label) -> bool:
        """
        Adds vec under the given label. Returns False (and stores nothing) if vec is dependent.
        """
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        row_combo = {k: -v for k, v in combo.items()}
        row_combo[label] = row_combo.get(label, 0) + 1
        self._rows.append((max(residual), residual, row_combo))
        return True

    def contains(self, vec) -> bool:
        residual, _ = self.reduce(vec)
        return not residual

    def coordinates(self, vec):
        """
        Returns {label: coefficient} expressing vec in the added vectors, or None if vec is not in
        their span.
        """
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return combo

def dense_to_sparse(v):
    return {j: Fraction(x) for j, x in enumerate(v) if x != 0}

def sparse_to_dense(d, n : int):
    v = zero_vector(n)
    for j, x in d.items():
        v[j] = Fraction(x)
    return v

###################################################################################################
# Quotient spaces
###################################################################################################

class QuotientSpace:
    """
    The quotient Z / B of the span Z of `ambient` rows by the span B of `sub` rows (B inside Z).
    Representatives of a quotient basis are chosen among the ambient rows, in the given pivot
    order, as those that extend an echelon basis of B.
    """

    def __init__(self, ambient, sub, order : PivotOrder = PivotOrder.Ascending_s):
        self.width = ambient.shape[1] if ambient.ndim == 2 else 0
        self._echelon = SparseEchelon()
        for i in range(sub.shape[0]):
            self._echelon.add(dense_to_sparse(sub[i]), ("sub", i))
        self.sub_rank = len(self._echelon)
        indices = list(range(ambient.shape[0]))
        if order is PivotOrder.Descending_s:
            indices.reverse()
        chosen = []
        for i in indices:
            if self._echelon.add(dense_to_sparse(ambient[i]), ("rep", len(chosen))):
                chosen.append(i)
        self.representative_indices = chosen
        self.representatives = zeros(len(chosen), self.width)
        for k, i in enumerate(chosen):
            self.representatives[k] = ambient[i]

    @property
    def dim(self) -> int:
        return len(self.representative_indices)

    def coordinates(self, v):
        """
        Returns the quotient coordinates of v, or None if v does not lie in Z.
        """
        combo = self._echelon.coordinates(dense_to_sparse(v))
        if combo is None:
            return None
        coords = zero_vector(self.dim)
        for label, x in combo.items():
            if label[0] == "rep":
                coords[label[1]] = x
        return coords

    def lift(self, coords):
        """
        Returns the representative combination with the given quotient coordinates.
        """
        assert len(coords) == self.dim, "Coordinate vector has the wrong length"
        v = zero_vector(self.width)
        for k, c in enumerate(coords):
            if c != 0:
                v = v + c * self.representatives[k]
        return v

###################################################################################################
# Formatting
###################################################################################################

def fraction_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

def matrix_to_lists(a):
    return [[fraction_str(x) for x in row] for row in a]

def matrix_from_lists(rows, shape):
    return as_matrix([[Fraction(x) for x in row] for row in rows], shape)

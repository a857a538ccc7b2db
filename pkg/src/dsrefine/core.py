"""Subspaces of k^n in canonical reduced row-echelon form.

Every :class:`Subspace` stores the unique RREF basis of the space it
represents, so equality of subspaces is equality of the stored tuples.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from . import kernels
from .errors import InputError, PreconditionError
from .field import FieldSpec


def _rref_fraction(rows, ncols):
    mat = [list(r) for r in rows]
    m = len(mat)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        piv = r
        while piv < m and mat[piv][c] == 0:
            piv += 1
        if piv == m:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        lead = mat[r][c]
        if lead != 1:
            mat[r] = [x / lead for x in mat[r]]
        row = mat[r]
        for i in range(m):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], row)]
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def rref(rows, ncols, field):
    """Row-reduce ``rows`` (entries already in ``field``); drops zero rows."""
    rows = list(rows)
    if not rows:
        return [], []
    if field.p is not None:
        return kernels.rref_mod_p(rows, ncols, field.p)
    return _rref_fraction(rows, ncols)


def matmul(a, b, field):
    if field.p is not None:
        return kernels.matmul_mod_p(a, b, field.p)
    cols = list(zip(*b)) if b else []
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def rank(rows, ncols, field):
    return len(rref(rows, ncols, field)[1])


def inverse(matrix, field):
    """Inverse of a square matrix, or ``None`` when it is singular."""
    n = len(matrix)
    one, zero = field.one, field.zero
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug, 2 * n, field)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def kernel_rows(rows, ncols, field):
    """Basis of ``{c : sum_k c[k] * rows[k] = 0}`` (left kernel)."""
    m = len(rows)
    one, zero = field.one, field.zero
    aug = [list(r) + [one if i == j else zero for j in range(m)] for i, r in enumerate(rows)]
    red, pivots = rref(aug, ncols + m, field)
    return [row[ncols:] for row, c in zip(red, pivots) if c >= ncols]


@dataclass(frozen=True)
class Subspace:
    field: FieldSpec
    n: int
    basis: tuple

    @property
    def dim(self):
        return len(self.basis)

    @cached_property
    def pivots(self):
        return tuple(next(i for i, x in enumerate(row) if x != 0) for row in self.basis)

    def is_zero(self):
        return not self.basis

    def reduce(self, v):
        """Residual of ``v`` after clearing this space's pivot columns."""
        v = list(v)
        p = self.field.p
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                if p is None:
                    v = [x - f * y for x, y in zip(v, row)]
                else:
                    v = [(x - f * y) % p for x, y in zip(v, row)]
        return v

    def contains(self, v):
        return not any(self.reduce(v))

    def __le__(self, other):
        _check_compatible(self, other)
        return all(other.contains(row) for row in self.basis)

    def __repr__(self):
        rows = ", ".join("(" + ",".join(str(x) for x in row) + ")" for row in self.basis)
        return f"Subspace({self.field}^{self.n}, [{rows}])"


def _check_compatible(u, w):
    if u.n != w.n:
        raise PreconditionError(f"ambient dimension mismatch: {u.n} vs {w.n}")
    if u.field != w.field:
        raise PreconditionError(f"field mismatch: {u.field} vs {w.field}")


def span_canonicalize(vectors, field, n=None):
    """Canonical subspace spanned by ``vectors``; entries are coerced into ``field``."""
    vectors = list(vectors)
    if n is None:
        if not vectors:
            raise InputError("ambient dimension is required for an empty span")
        n = len(vectors[0])
    rows = []
    for v in vectors:
        if len(v) != n:
            raise InputError(f"vector of length {len(v)} in ambient dimension {n}")
        rows.append(field.vector(v))
    basis, _ = rref(rows, n, field)
    return Subspace(field, n, tuple(tuple(r) for r in basis))


def _from_rows(rows, field, n):
    basis, _ = rref(rows, n, field)
    return Subspace(field, n, tuple(tuple(r) for r in basis))


def zero_subspace(field, n):
    return Subspace(field, n, ())


def full_space(field, n):
    one, zero = field.one, field.zero
    return Subspace(field, n, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def subspace_sum(u, w):
    _check_compatible(u, w)
    if u.is_zero():
        return w
    if w.is_zero():
        return u
    return _from_rows(list(u.basis) + list(w.basis), u.field, u.n)


def sum_all(spaces, field, n):
    rows = [row for s in spaces for row in s.basis]
    return _from_rows(rows, field, n)


def subspace_intersect(u, w):
    """Intersection by the Zassenhaus stacking ``[u | u]`` over ``[w | 0]``."""
    _check_compatible(u, w)
    if u.is_zero() or w.is_zero():
        return zero_subspace(u.field, u.n)
    n = u.n
    zero = u.field.zero
    stacked = [list(r) + list(r) for r in u.basis] + [list(r) + [zero] * n for r in w.basis]
    red, pivots = rref(stacked, 2 * n, u.field)
    rows = [row[n:] for row, c in zip(red, pivots) if c >= n]
    return _from_rows(rows, u.field, n)


def is_independent(spaces):
    """True when the sum of ``spaces`` is direct."""
    spaces = list(spaces)
    if not spaces:
        return True
    total = sum(s.dim for s in spaces)
    return rank([row for s in spaces for row in s.basis], spaces[0].n, spaces[0].field) == total


def complement_in(u, w):
    """Complement of ``u`` inside ``w``: greedily add ``w``'s canonical basis rows."""
    _check_compatible(u, w)
    if not u <= w:
        raise PreconditionError("complement_in: U is not contained in W")
    current = u
    picked = []
    for row in w.basis:
        if current.dim == w.dim:
            break
        if not current.contains(row):
            picked.append(row)
            current = _from_rows(list(current.basis) + [row], u.field, u.n)
    return _from_rows(picked, u.field, u.n)

"""Internal direct-sum decompositions of k^n."""

from dataclasses import dataclass
from functools import cached_property

from .core import Subspace, _from_rows, inverse, matmul, rank
from .errors import InputError


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    reasons: tuple = ()

    def __bool__(self):
        return self.valid


@dataclass(frozen=True)
class Decomposition:
    """Ordered, labeled summands of k^n; ``distinguished`` indexes A or B."""

    field: object
    n: int
    summands: tuple
    distinguished: int = 0

    @property
    def labels(self):
        return tuple(label for label, _ in self.summands)

    @property
    def distinguished_label(self):
        return self.summands[self.distinguished][0]

    @property
    def distinguished_space(self):
        return self.summands[self.distinguished][1]

    def index(self, label):
        for i, (name, _) in enumerate(self.summands):
            if name == label:
                return i
        raise InputError(f"unknown summand label {label!r}")

    def space(self, label):
        return self.summands[self.index(label)][1]

    @cached_property
    def report(self):
        return _validate(self)

    @cached_property
    def _offsets(self):
        offsets = [0]
        for _, s in self.summands:
            offsets.append(offsets[-1] + s.dim)
        return offsets

    @cached_property
    def _inverse(self):
        if not self.report.valid:
            raise InputError("invalid decomposition: " + "; ".join(self.report.reasons))
        stacked = [list(row) for _, s in self.summands for row in s.basis]
        return inverse(stacked, self.field)

    def coefficients(self, rows):
        """Coordinates of each row against the concatenated summand bases."""
        rows = [list(r) for r in rows]
        if not rows:
            return []
        return matmul(rows, self._inverse, self.field)

    def projection(self, rows, keep):
        """Sum of the components of each row in the summands indexed by ``keep``."""
        coeffs = self.coefficients(rows)
        out = [[self.field.zero] * self.n for _ in rows]
        if not coeffs:
            return out
        for i in sorted(keep):
            lo, hi = self._offsets[i], self._offsets[i + 1]
            if lo == hi:
                continue
            block = [list(r) for r in self.summands[i][1].basis]
            part = matmul([c[lo:hi] for c in coeffs], block, self.field)
            out = [_add(a, b, self.field) for a, b in zip(out, part)]
        return out


def _add(a, b, field):
    if field.p is None:
        return [x + y for x, y in zip(a, b)]
    return [(x + y) % field.p for x, y in zip(a, b)]


def make_decomposition(field, n, summands, distinguished=0):
    """Build a decomposition from ``(label, Subspace)`` pairs.

    ``distinguished`` may be an index or a label.  Structural problems
    (duplicate labels, foreign subspaces) raise; independence and spanning
    are left to :func:`validate_decomposition`.
    """
    summands = tuple((str(label), s) for label, s in summands)
    labels = [label for label, _ in summands]
    if len(set(labels)) != len(labels):
        raise InputError(f"duplicate summand labels in {labels}")
    for label, s in summands:
        if not isinstance(s, Subspace) or s.n != n or s.field != field:
            raise InputError(f"summand {label!r} is not a subspace of {field}^{n}")
    if isinstance(distinguished, str):
        if distinguished not in labels:
            raise InputError(f"distinguished label {distinguished!r} not among {labels}")
        distinguished = labels.index(distinguished)
    if not 0 <= distinguished < len(summands):
        raise InputError("distinguished index out of range")
    return Decomposition(field, n, summands, distinguished)


def _validate(d):
    reasons = []
    total = sum(s.dim for _, s in d.summands)
    if total != d.n:
        reasons.append(f"summand dimensions sum to {total}, expected {d.n}")
    stacked = [row for _, s in d.summands for row in s.basis]
    r = rank(stacked, d.n, d.field) if stacked else 0
    if r < total:
        reasons.append("summands are not independent")
    if r < d.n:
        reasons.append("summands do not span the ambient space")
    return ValidationReport(not reasons, tuple(reasons))


def validate_decomposition(d):
    return d.report


def coordinates(v, d):
    """Unique components of ``v``, one vector per summand, summing to ``v``."""
    v = d.field.vector(v)
    if len(v) != d.n:
        raise InputError(f"vector of length {len(v)} in ambient dimension {d.n}")
    (coeff,) = d.coefficients([v])
    comps = []
    for i, (_, s) in enumerate(d.summands):
        lo, hi = d._offsets[i], d._offsets[i + 1]
        if lo == hi:
            comps.append(tuple([d.field.zero] * d.n))
        else:
            (c,) = matmul([coeff[lo:hi]], [list(r) for r in s.basis], d.field)
            comps.append(tuple(c))
    return tuple(comps)


def submodule_support(u, d):
    """Indices of summands in which some generator of ``u`` has a nonzero component."""
    if u.n != d.n or u.field != d.field:
        raise InputError("subspace and decomposition live in different spaces")
    coeffs = d.coefficients(u.basis)
    support = set()
    for i in range(len(d.summands)):
        lo, hi = d._offsets[i], d._offsets[i + 1]
        if any(any(c[lo:hi]) for c in coeffs):
            support.add(i)
    return frozenset(support)


def pull_back_decomposition(iso, external_summand_dims, distinguished, field):
    """Decomposition of k^n by inverse images of coordinate blocks.

    ``iso`` acts on row vectors, ``v -> v @ iso``; the inverse image of
    a coordinate block is spanned by the matching rows of ``iso^-1``.
    """
    n = len(iso)
    mat = [list(field.vector(row)) for row in iso]
    if any(len(row) != n for row in mat):
        raise InputError("isomorphism matrix must be square")
    dims = [(str(label), int(k)) for label, k in external_summand_dims]
    if any(k < 0 for _, k in dims) or sum(k for _, k in dims) != n:
        raise InputError(f"block dimensions {[k for _, k in dims]} do not sum to {n}")
    inv = inverse(mat, field)
    if inv is None:
        raise InputError("isomorphism matrix is singular")
    summands = []
    start = 0
    for label, k in dims:
        summands.append((label, _from_rows(inv[start:start + k], field, n)))
        start += k
    return make_decomposition(field, n, summands, distinguished)

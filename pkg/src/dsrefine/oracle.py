"""Brute-force ground truth over F_2 and F_3 in dimension at most 4.

Everything here works on explicit element sets, never on row reduction,
so it stays an independent check of :mod:`dsrefine.core` and
:mod:`dsrefine.refine`.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .core import Subspace, complement_in, sum_all
from .errors import InputError, PreconditionError
from .refine import theorem_refine

ORACLE_PRIMES = (2, 3)
ORACLE_MAX_DIM = 4


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


@dataclass(frozen=True)
class SubspaceCatalog:
    field: object
    n: int
    subspaces: tuple

    def expected_size(self):
        return sum(gaussian_binomial(self.n, k, self.field.p) for k in range(self.n + 1))


def _check_range(field, n):
    if field.p not in ORACLE_PRIMES or not 0 <= n <= ORACLE_MAX_DIM:
        raise PreconditionError(f"exhaustive oracle supports p in {ORACLE_PRIMES}, n <= {ORACLE_MAX_DIM}")


@lru_cache(maxsize=None)
def enumerate_subspaces(field, n):
    """Every subspace of F_p^n, built directly as an RREF shape plus free entries."""
    _check_range(field, n)
    p = field.p
    out = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
            for values in product(range(p), repeat=len(free)):
                rows = [[0] * n for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), val in zip(free, values):
                    rows[r][c] = val
                out.append(Subspace(field, n, tuple(tuple(row) for row in rows)))
    return SubspaceCatalog(field, n, tuple(out))


def elements(space):
    """All vectors of a subspace over a small prime field."""
    p, n = space.field.p, space.n
    out = set()
    for coeffs in product(range(p), repeat=space.dim):
        v = [0] * n
        for c, row in zip(coeffs, space.basis):
            if c:
                v = [(x + c * y) % p for x, y in zip(v, row)]
        out.add(tuple(v))
    return frozenset(out)


def sumset(*sets, p, n):
    acc = {tuple([0] * n)}
    for s in sets:
        acc = {tuple((x + y) % p for x, y in zip(u, w)) for u in acc for w in s}
    return frozenset(acc)


def _subsets(indices):
    for r in range(len(indices) + 1):
        yield from combinations(indices, r)


def passing_tuples(inst, catalog=None):
    """Every ``(J0, I0, Y)`` for which ``A (+) Y = B (+) sum_{J0} D_j`` with ``Y`` a summand of ``sum_{I0} C_i``.

    ``Y`` is reported as its element set.
    """
    field, n = inst.field, inst.n
    _check_range(field, n)
    if catalog is None:
        catalog = enumerate_subspaces(field, n)
    elif (catalog.field, catalog.n) != (field, n):
        raise InputError("catalog does not match the instance's space")
    p = field.p
    side1, side2 = inst.side1, inst.side2
    zero = tuple([0] * n)
    a_el = elements(side1.distinguished_space)
    b_el = elements(side2.distinguished_space)
    d_el = {i: elements(s) for i, (_, s) in enumerate(side2.summands)}
    c_el = {i: elements(s) for i, (_, s) in enumerate(side1.summands)}
    cat_el = [(s, elements(s)) for s in catalog.subspaces]
    js = [i for i in range(len(side2.summands)) if i != side2.distinguished]
    is_ = [i for i in range(len(side1.summands)) if i != side1.distinguished]

    found = set()
    for j0 in _subsets(js):
        parts = [b_el] + [d_el[j] for j in j0]
        target = sumset(*parts, p=p, n=n)
        # direct iff no collapse: |sum| equals the product of the part sizes
        expected = 1
        for s in parts:
            expected *= len(s)
        if len(target) != expected or not a_el <= target:
            continue
        for i0 in _subsets(is_):
            x_el = sumset(*[c_el[i] for i in i0], p=p, n=n)
            room = x_el & target
            x_space = None
            for y, y_el in cat_el:
                if len(y_el) * len(a_el) != len(target) or not y_el <= room:
                    continue
                if a_el & y_el != {zero} or sumset(a_el, y_el, p=p, n=n) != target:
                    continue
                if x_space is None:
                    x_space = sum_all([side1.summands[i][1] for i in i0], field, n)
                comp_el = elements(complement_in(y, x_space))
                if comp_el & y_el != {zero} or sumset(y_el, comp_el, p=p, n=n) != x_el:
                    continue
                found.add((
                    tuple(sorted(side2.summands[j][0] for j in j0)),
                    tuple(sorted(side1.summands[i][0] for i in i0)),
                    y_el,
                ))
    return found


def oracle_theorem_check(inst, catalog=None):
    """True iff some valid tuple exists and the algorithm's tuple is one of them."""
    if inst.field.p != 2 or inst.n > ORACLE_MAX_DIM:
        raise InputError("oracle_theorem_check needs an F_2 instance with n <= 4")
    found = passing_tuples(inst, catalog)
    cert = theorem_refine(inst)
    return bool(found) and (cert.J0, cert.I0, elements(cert.Y)) in found


def parity_obstruction_check(dim_a, dim_b, block_dim=2, max_blocks=10):
    """No ``s, t <= max_blocks`` with ``dim_a + block_dim*s == dim_b + block_dim*t``.

    Adding even-dimensional blocks never changes parity, so when ``dim_a`` and
    ``dim_b`` have opposite parity no finite truncation can balance them.
    """
    if block_dim != 2:
        raise PreconditionError("the parity obstruction uses 2-dimensional blocks")
    if min(dim_a, dim_b, max_blocks) < 0:
        raise PreconditionError("dimensions and block counts must be non-negative")
    if (dim_a - dim_b) % 2 == 0:
        raise PreconditionError(f"dims {dim_a} and {dim_b} have the same parity; no obstruction to check")
    return all(
        dim_a + block_dim * s != dim_b + block_dim * t
        for s in range(max_blocks + 1)
        for t in range(max_blocks + 1)
    )

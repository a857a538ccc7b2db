"""Finite refinement of two direct-sum decompositions.

Given ``A (+) C_1 (+) ... = M = B (+) D_1 (+) ...``, :func:`theorem_refine`
finds finite label sets ``J0``, ``I0`` and a summand ``Y`` of
``sum_{I0} C_i`` with ``A (+) Y = B (+) sum_{J0} D_j``, together with a
complement of ``Y`` and the list of identities checked on the way.
"""

from dataclasses import dataclass

from .core import (
    _from_rows,
    is_independent,
    kernel_rows,
    matmul,
    subspace_intersect,
    subspace_sum,
    sum_all,
    zero_subspace,
)
from .decomp import submodule_support
from .errors import InputError, InternalError, PreconditionError


@dataclass(frozen=True)
class RefinementInstance:
    field: object
    n: int
    side1: object
    side2: object


@dataclass(frozen=True)
class RefinementCertificate:
    J0: tuple
    I0: tuple
    Y: object
    Y_complement: object
    report: tuple = ()

    @property
    def passed(self):
        return all(ok for _, ok in self.report)


def make_instance(side1, side2):
    if side1.field != side2.field or side1.n != side2.n:
        raise InputError("the two sides decompose different spaces")
    for name, side in (("side1", side1), ("side2", side2)):
        if not side.report.valid:
            raise InputError(f"{name} is not a direct-sum decomposition: " + "; ".join(side.report.reasons))
    return RefinementInstance(side1.field, side1.n, side1, side2)


def _direct_sum_equals(parts, whole):
    return is_independent(parts) and sum_all(parts, whole.field, whole.n) == whole


def lemma_split(s, t, p):
    """For ``S (+) T`` and ``S <= P <= S + T`` return ``T n P``, so ``P = S (+) (T n P)``."""
    if not is_independent([s, t]):
        raise PreconditionError("lemma_split: S n T is not zero")
    if not s <= p:
        raise PreconditionError("lemma_split: S is not contained in P")
    if not p <= subspace_sum(s, t):
        raise PreconditionError("lemma_split: P is not contained in S + T")
    out = subspace_intersect(t, p)
    if subspace_sum(s, out) != p or not is_independent([s, out]):
        raise InternalError("lemma_split: P != S (+) (T n P)")
    return out


def _record(checks, name, ok):
    checks.append((name, bool(ok)))
    if not ok:
        raise InternalError(f"identity failed: {name}")


def proposition_refine(a, x, b, v, checks=None, names=("A", "X", "B", "V")):
    """Split ``X`` along the chain ``A <= B <= A (+) X <= B (+) V``.

    Returns ``(X n B, X n (A + V))`` where ``B = A (+) (X n B)`` and
    ``X = (X n B) (+) (X n (A + V))``.  Each identity used on the way is
    appended to ``checks`` as ``(name, passed)``, with the four spaces
    written as ``names``.
    """
    if checks is None:
        checks = []
    na, nx, nb, nv = names
    if not is_independent([a, x]):
        raise PreconditionError(f"{na} + {nx} is not direct")
    if not is_independent([b, v]):
        raise PreconditionError(f"{nb} + {nv} is not direct")
    ax = subspace_sum(a, x)
    if not a <= b:
        raise PreconditionError(f"chain broken: {na} is not contained in {nb}")
    if not b <= ax:
        raise PreconditionError(f"chain broken: {nb} is not contained in {na} + {nx}")
    if not ax <= subspace_sum(b, v):
        raise PreconditionError(f"chain broken: {na} + {nx} is not contained in {nb} + {nv}")

    try:
        xb = lemma_split(a, x, b)
        vax = lemma_split(b, v, ax)
    except PreconditionError as exc:
        raise InternalError(f"lemma_split rejected a valid chain: {exc}") from exc
    ax_name = f"({na} (+) {nx})"
    vax_name = f"({nv} n {ax_name})"
    xb_name = f"({nx} n {nb})"
    _record(checks, f"{nb} = {na} (+) {xb_name}", _direct_sum_equals([a, xb], b))
    _record(checks, f"{ax_name} = {nb} (+) {vax_name}", _direct_sum_equals([b, vax], ax))
    _record(checks, f"{ax_name} = {na} (+) {xb_name} (+) {vax_name}", _direct_sum_equals([a, xb, vax], ax))

    shrunk = subspace_sum(a, vax)
    try:
        rest = lemma_split(xb, shrunk, x)
    except PreconditionError as exc:
        raise InternalError(f"third split rejected: {exc}") from exc
    shrunk_name = f"(({na} (+) {vax_name}) n {nx})"
    xav_name = f"({nx} n ({na} (+) {nv}))"
    _record(checks, f"{nx} = {xb_name} (+) {shrunk_name}", _direct_sum_equals([xb, rest], x))

    xav = subspace_intersect(x, subspace_sum(a, v))
    _record(checks, f"{xav_name} = {shrunk_name}", xav == rest)
    _record(checks, f"{nx} = {xb_name} (+) {xav_name}", _direct_sum_equals([xb, xav], x))
    return xb, xav


def _note(trace, space):
    if trace is not None:
        trace.append(("formed", space.dim))
    return space


def _take(trace, side_name, side, index):
    if trace is not None:
        trace.append(("summand", side_name, side.summands[index][0]))
    return side.summands[index][1]


def theorem_refine(inst, trace=None):
    """Compute a refinement certificate for ``inst``.

    Only ``A``, ``B``, the ``D_j`` in the support of ``A`` and the ``C_i`` in
    the support of ``B + sum_{J0} D_j`` are ever read as subspaces; other
    summands enter only through the coordinate solves behind
    :func:`submodule_support` and ``Decomposition.projection``.  Pass a list
    as ``trace`` to record those reads and the dimension of every subspace
    formed.
    """
    side1, side2 = inst.side1, inst.side2
    for name, side in (("side1", side1), ("side2", side2)):
        if not side.report.valid:
            raise InputError(f"{name} is not a direct-sum decomposition: " + "; ".join(side.report.reasons))
    field, n = inst.field, inst.n
    ia, ib = side1.distinguished, side2.distinguished
    checks = []

    a = _take(trace, "side1", side1, ia)
    b = _take(trace, "side2", side2, ib)
    j0 = sorted(submodule_support(a, side2) - {ib})
    b_prime = _note(trace, sum_all([b] + [_take(trace, "side2", side2, j) for j in j0], field, n))
    _record(checks, "B' = B (+) sum(D_J0) is direct", is_independent([b] + [side2.summands[j][1] for j in j0]))
    _record(checks, "A <= B'", a <= b_prime)

    i0 = sorted(submodule_support(b_prime, side1) - {ia})
    cs = [_take(trace, "side1", side1, i) for i in i0]
    x = _note(trace, sum_all(cs, field, n))
    _record(checks, "X = sum(C_I0) is direct", is_independent(cs))
    ax = _note(trace, subspace_sum(a, x))
    _record(checks, "B' <= A (+) X", b_prime <= ax)

    # V = sum of the D_j outside J0; V n (A + X) is spanned by w - proj_{B'}(w), w in A + X.
    keep = {ib, *j0}
    proj = side2.projection(ax.basis, keep)
    v_local = _note(trace, _from_rows([_sub(w, pw, field) for w, pw in zip(ax.basis, proj)], field, n))

    y, y_comp = proposition_refine(a, x, b_prime, v_local, checks, names=("A", "X", "B'", "V"))
    _note(trace, y)
    _note(trace, y_comp)

    # Independent route: X n (A + V) = {x in X : proj_{B'}(x) in A}.
    if x.dim:
        residues = [a.reduce(px) for px in side2.projection(x.basis, keep)]
        coeffs = kernel_rows(residues, n, field)
        direct = _from_rows(matmul(coeffs, [list(r) for r in x.basis], field) if coeffs else [], field, n)
    else:
        direct = zero_subspace(field, n)
    _record(checks, "complement = X n (A (+) sum(D_j, j not in J0))", direct == y_comp)
    _record(checks, "A (+) Y = B (+) sum(D_J0)", _direct_sum_equals([a, y], b_prime))
    _record(checks, "Y (+) complement = X", _direct_sum_equals([y, y_comp], x))

    cert = RefinementCertificate(
        J0=tuple(sorted(side2.summands[j][0] for j in j0)),
        I0=tuple(sorted(side1.summands[i][0] for i in i0)),
        Y=y,
        Y_complement=y_comp,
        report=tuple(checks),
    )
    if not verify_certificate(inst, cert):
        raise InternalError("certificate failed independent verification")
    return cert


def _sub(u, w, field):
    if field.p is None:
        return [s - t for s, t in zip(u, w)]
    return [(s - t) % field.p for s, t in zip(u, w)]


def verify_certificate(inst, cert):
    """Re-check a certificate from the raw summand bases alone."""
    side1, side2 = inst.side1, inst.side2
    for label in cert.J0:
        if label not in side2.labels or label == side2.distinguished_label:
            raise InputError(f"J0 label {label!r} is not a non-distinguished summand of side2")
    for label in cert.I0:
        if label not in side1.labels or label == side1.distinguished_label:
            raise InputError(f"I0 label {label!r} is not a non-distinguished summand of side1")
    field, n = inst.field, inst.n
    for s in (cert.Y, cert.Y_complement):
        if s.field != field or s.n != n:
            return False

    a = side1.distinguished_space
    b = side2.distinguished_space
    ds = [side2.space(label) for label in cert.J0]
    cs = [side1.space(label) for label in cert.I0]
    x = sum_all(cs, field, n)
    y, yc = cert.Y, cert.Y_complement

    return (
        subspace_sum(a, y) == sum_all([b] + ds, field, n)
        and subspace_intersect(a, y).is_zero()
        and is_independent([b] + ds)
        and subspace_sum(y, yc) == x
        and subspace_intersect(y, yc).is_zero()
        and y <= x
    )

"""Oracle cross-checks run by ``dsrefine selftest``."""

import time

from .core import subspace_intersect, subspace_sum
from .field import FieldSpec
from .gen import SplitMix64, random_genspec, random_instance
from .oracle import (
    ORACLE_MAX_DIM,
    elements,
    enumerate_subspaces,
    oracle_theorem_check,
    parity_obstruction_check,
    sumset,
)
from .refine import theorem_refine, verify_certificate


def check_catalogs(max_dim):
    for p in (2, 3):
        for n in range(max_dim + 1):
            cat = enumerate_subspaces(FieldSpec.prime(p), n)
            if len(cat.subspaces) != cat.expected_size() or len(set(cat.subspaces)) != len(cat.subspaces):
                return False, f"F_{p}^{n}: {len(cat.subspaces)} subspaces, expected {cat.expected_size()}"
    return True, f"catalog sizes match Gaussian binomials for n <= {max_dim}"


def check_arithmetic(max_dim):
    field = FieldSpec.prime(2)
    pairs = 0
    for n in range(min(max_dim, 3) + 1):
        cat = enumerate_subspaces(field, n)
        els = {s: elements(s) for s in cat.subspaces}
        for u in cat.subspaces:
            for w in cat.subspaces:
                pairs += 1
                s, i = subspace_sum(u, w), subspace_intersect(u, w)
                if elements(s) != sumset(els[u], els[w], p=2, n=n) or elements(i) != els[u] & els[w]:
                    return False, f"mismatch on {u} and {w}"
                if s.dim + i.dim != u.dim + w.dim:
                    return False, f"dimension law fails on {u} and {w}"
    return True, f"{pairs} subspace pairs agree with element enumeration"


def check_oracle_theorem(trials, max_dim):
    field = FieldSpec.prime(2)
    for t in range(trials):
        inst = random_instance(random_genspec(SplitMix64(t), field, max_n=max_dim))
        if not oracle_theorem_check(inst):
            return False, f"trial {t}: exhaustive search does not confirm the refinement"
    return True, f"{trials} F_2 instances confirmed by exhaustive search"


def check_refinement(trials, p):
    field = FieldSpec.prime(p)
    for t in range(trials):
        inst = random_instance(random_genspec(SplitMix64(t), field))
        if not verify_certificate(inst, theorem_refine(inst)):
            return False, f"trial {t}: certificate rejected"
    return True, f"{trials} random instances refined and verified"


def check_parity():
    ok = parity_obstruction_check(1, 2, 2, 10) and parity_obstruction_check(3, 4, 2, 10)
    return ok, "odd/even distinguished dimensions never balance"


def run(trials=100, oracle_max_dim=ORACLE_MAX_DIM):
    """Yield ``(name, passed, detail, seconds)`` per check, in a fixed order."""
    oracle_max_dim = min(oracle_max_dim, ORACLE_MAX_DIM)
    checks = [
        ("catalog", lambda: check_catalogs(oracle_max_dim)),
        ("arithmetic-oracle", lambda: check_arithmetic(oracle_max_dim)),
        ("theorem-oracle", lambda: check_oracle_theorem(trials, oracle_max_dim)),
        ("refine-F2", lambda: check_refinement(trials, 2)),
        ("refine-F3", lambda: check_refinement(trials, 3)),
        ("refine-F101", lambda: check_refinement(trials, 101)),
        ("parity-obstruction", check_parity),
    ]
    for name, fn in checks:
        start = time.perf_counter()
        ok, detail = fn()
        yield name, ok, detail, time.perf_counter() - start

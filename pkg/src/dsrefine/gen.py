"""Seeded instance generation.

All randomness comes from :class:`SplitMix64` so that a seed fixes the
instance on every platform:

    state <- state + 0x9E3779B97F4A7C15            (mod 2**64)
    z <- (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9
    z <- (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)

Bounded draws reject the top ``2**64 mod m`` outputs, then reduce mod m.
"""

from dataclasses import dataclass

from .core import _from_rows, complement_in, matmul, rank, subspace_sum
from .decomp import make_decomposition, submodule_support
from .errors import InputError
from .refine import make_instance

MASK64 = (1 << 64) - 1
RATIONAL_ENTRY_RANGE = 2  # Q entries are drawn from [-2, 2]
MAX_REJECTIONS = 10_000


class SplitMix64:
    def __init__(self, seed):
        self.state = seed & MASK64

    def next_u64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m):
        """Uniform integer in ``[0, m)``."""
        if m <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - ((1 << 64) % m)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % m

    def between(self, lo, hi):
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)


@dataclass(frozen=True)
class GenSpec:
    seed: int
    field: object
    n: int
    blocks1: tuple
    blocks2: tuple

    def __post_init__(self):
        if not 0 <= self.seed <= MASK64:
            raise InputError("seed must be an unsigned 64-bit integer")
        for name, blocks in (("blocks1", self.blocks1), ("blocks2", self.blocks2)):
            if not blocks:
                raise InputError(f"{name} is empty")
            if sum(blocks) != self.n:
                raise InputError(f"{name} sums to {sum(blocks)} != {self.n}")
            if blocks[0] < 0 or any(k < 1 for k in blocks[1:]):
                raise InputError(f"{name}: non-distinguished blocks need dimension >= 1")


def _entry(rng, field):
    if field.p is not None:
        return rng.below(field.p)
    return field.coerce(rng.between(-RATIONAL_ENTRY_RANGE, RATIONAL_ENTRY_RANGE))


def random_matrix(rng, field, rows, cols):
    return [[_entry(rng, field) for _ in range(cols)] for _ in range(rows)]


def random_invertible(rng, field, n):
    for _ in range(MAX_REJECTIONS):
        m = random_matrix(rng, field, n, n)
        if rank(m, n, field) == n:
            return m
    raise RuntimeError("rejection sampling for an invertible matrix did not terminate")


def _side(field, n, rows, blocks, prefix, distinguished):
    summands = []
    start = 0
    for k, size in enumerate(blocks):
        label = distinguished if k == 0 else f"{prefix}{k}"
        summands.append((label, _from_rows(rows[start:start + size], field, n)))
        start += size
    return make_decomposition(field, n, summands, 0)


def random_instance(spec):
    """Both sides are block partitions of independently sampled invertible matrices."""
    rng = SplitMix64(spec.seed)
    g1 = random_invertible(rng, spec.field, spec.n)
    g2 = random_invertible(rng, spec.field, spec.n)
    side1 = _side(spec.field, spec.n, g1, spec.blocks1, "C", "A")
    side2 = _side(spec.field, spec.n, g2, spec.blocks2, "D", "B")
    return make_instance(side1, side2)


def planted_instance(spec, true_J0_size, true_I0_size):
    """Instance whose only mixing happens inside ``A + C_1..C_i = B + D_1..D_j``.

    The planted sets are the first ``true_I0_size`` C-blocks and the first
    ``true_J0_size`` D-blocks.  Every later C-block coincides with the
    D-block in the same position, so the remaining block lists must agree.
    """
    b1, b2 = list(spec.blocks1), list(spec.blocks2)
    if true_J0_size < 0 or true_I0_size < 0:
        raise InputError("planted sizes must be non-negative")
    if true_I0_size > len(b1) - 1 or true_J0_size > len(b2) - 1:
        raise InputError("planted sizes exceed the available blocks")
    region1 = b1[: 1 + true_I0_size]
    region2 = b2[: 1 + true_J0_size]
    if sum(region1) != sum(region2):
        raise InputError(f"planted regions have dimensions {sum(region1)} and {sum(region2)}")
    if b1[1 + true_I0_size:] != b2[1 + true_J0_size:]:
        raise InputError("blocks outside the planted regions must match on both sides")

    field, n = spec.field, spec.n
    rng = SplitMix64(spec.seed)
    g = random_invertible(rng, field, n)
    r = sum(region1)
    region_rows = g[:r]
    side1 = _side(field, n, g, b1, "C", "A")

    # Mix the region so that A's generators reach every planted D-block.
    dim_a = b1[0]
    for _ in range(MAX_REJECTIONS):
        h = random_invertible(rng, field, r)
        mixed = _matmul_rows(h, region_rows, field)
        side2 = _side(field, n, mixed + g[r:], b2, "D", "B")
        if dim_a == 0 or true_J0_size == 0 or _reaches_all(side1, side2, true_J0_size):
            return make_instance(side1, side2)
    raise RuntimeError("could not plant a mixing of the requested support")


def _matmul_rows(h, rows, field):
    return matmul(h, [list(row) for row in rows], field)


def _reaches_all(side1, side2, j):
    return set(range(1, j + 1)) <= submodule_support(side1.distinguished_space, side2)


def random_genspec(rng, field, max_n=24, max_summands=8, max_distinguished=4, seed=None):
    """Draw a block layout for the random-instance harness.

    ``n`` is uniform in ``1..max_n``; each side gets a distinguished block of
    dimension ``0..max_distinguished`` and up to ``max_summands - 1`` further
    blocks (at least one whenever dimensions remain).
    """
    n = rng.between(1, max_n)
    blocks = []
    for _ in range(2):
        d = rng.below(min(max_distinguished, n) + 1)
        rest = n - d
        k = rng.between(min(1, rest), min(max_summands - 1, rest))
        blocks.append((d, *_partition(rng, rest, k)))
    if seed is None:
        seed = rng.next_u64()
    return GenSpec(seed, field, n, blocks[0], blocks[1])


def _partition(rng, total, parts):
    """Random composition of ``total`` into ``parts`` positive integers."""
    if parts == 0:
        return []
    cuts = set()
    while len(cuts) < parts - 1:
        cuts.add(rng.between(1, total - 1))
    edges = [0, *sorted(cuts), total]
    return [edges[i + 1] - edges[i] for i in range(parts)]


def _combination(rng, field, rows, n):
    v = [field.zero] * n
    for row in rows:
        c = _entry(rng, field)
        if c:
            v = [field.coerce(x + c * y) for x, y in zip(v, row)]
    return v


def random_chain(rng, field, n):
    """Random ``(A, X, B, V)`` with ``A <= B <= A + X <= B + V``, both sums direct, ``X != 0``.

    ``X`` and ``V`` are twisted by random elements of ``A`` and ``B`` so they
    are generally not aligned with any coordinate basis, and ``B + V`` may be
    a proper subspace of k^n.
    """
    g = random_invertible(rng, field, n)
    u = rng.between(1, n)
    w = rng.between(1, u)
    a_dim = rng.between(0, w - 1)
    b_dim = rng.between(a_dim, w)
    a = _from_rows(g[:a_dim], field, n)
    b = a
    while b.dim < b_dim:
        b = subspace_sum(b, _from_rows([_combination(rng, field, g[:w], n)], field, n))
    x = _from_rows(
        [[field.coerce(s + t) for s, t in zip(g[k], _combination(rng, field, a.basis, n))] for k in range(a_dim, w)],
        field,
        n,
    )
    rest = complement_in(b, _from_rows(g[:u], field, n))
    v = _from_rows(
        [[field.coerce(s + t) for s, t in zip(row, _combination(rng, field, b.basis, n))] for row in rest.basis],
        field,
        n,
    )
    return a, x, b, v

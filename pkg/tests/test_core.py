from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dsrefine import (
    FieldSpec,
    InputError,
    PreconditionError,
    complement_in,
    full_space,
    span_canonicalize,
    subspace_intersect,
    subspace_sum,
    zero_subspace,
)
from dsrefine.oracle import elements, sumset

from conftest import F2, F3, Q, e, span


# -- span_canonicalize -----------------------------------------------------

def test_duplicate_rows_collapse(backend):
    s = span(F2, (1, 1), (1, 1))
    assert s.basis == ((1, 1),) and s.dim == 1


def test_empty_span_is_zero():
    s = span_canonicalize([], F2, n=3)
    assert s.dim == 0 and s.basis == ()
    with pytest.raises(InputError):
        span_canonicalize([], F2)


def test_span_of_three_dependent_vectors(backend):
    vectors = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
    s = span(F2, *vectors)
    # oracle: every F_2 combination of the three inputs
    expected = set()
    for mask in range(8):
        v = [0, 0, 0]
        for k in range(3):
            if mask >> k & 1:
                v = [(x + y) % 2 for x, y in zip(v, vectors[k])]
        expected.add(tuple(v))
    assert expected == {(0, 0, 0), (1, 1, 0), (0, 1, 1), (1, 0, 1)}
    assert elements(s) == expected
    assert s.basis == ((1, 0, 1), (0, 1, 1))


def test_span_errors():
    with pytest.raises(InputError, match="length"):
        span_canonicalize([(1, 0), (1, 0, 0)], F2)
    with pytest.raises(InputError, match="denominator"):
        span_canonicalize([(Fraction(1, 2), 0)], FieldSpec.prime(2))


def test_rational_span_is_exact():
    s = span(Q, (2, 4, 6), (1, 3, 5))
    assert s.basis == ((1, 0, -1), (0, 1, 2))
    assert all(isinstance(x, Fraction) for row in s.basis for x in row)


# -- sum / intersection ----------------------------------------------------

def test_sum_examples(backend):
    assert subspace_sum(span(F2, e(2, 1)), span(F2, e(2, 1, 2))) == full_space(F2, 2)
    u = span(F2, e(3, 1), e(3, 2))
    assert subspace_sum(u, zero_subspace(F2, 3)) == u


def test_sum_of_two_planes_is_everything(backend):
    u = span(F2, e(3, 1, 2), e(3, 3))
    w = span(F2, e(3, 2, 3), e(3, 1))
    brute = sumset(elements(u), elements(w), p=2, n=3)
    assert len(brute) == 8
    assert subspace_sum(u, w) == full_space(F2, 3)


def test_intersection_examples(backend):
    u = span(F2, e(3, 1, 2), e(3, 3))
    assert subspace_intersect(u, u) == u
    assert subspace_intersect(span(F2, e(2, 1)), span(F2, e(2, 2))).is_zero()
    w = span(F2, e(3, 2, 3), e(3, 1))
    brute = elements(u) & elements(w)
    assert brute == {(0, 0, 0), (1, 1, 1)}
    assert subspace_intersect(u, w) == span(F2, (1, 1, 1))


def test_ambient_mismatch():
    with pytest.raises(PreconditionError):
        subspace_sum(span(F2, (1, 0)), span(F2, (1, 0, 0)))
    with pytest.raises(PreconditionError):
        subspace_intersect(span(F2, (1, 0)), span(F3, (1, 0)))


# -- complement_in ---------------------------------------------------------

def test_complement_examples(backend):
    w = full_space(F2, 2)
    assert complement_in(w, w).is_zero()
    assert complement_in(zero_subspace(F2, 2), w) == w
    c = complement_in(span(F2, (1, 1)), w)
    assert c == span(F2, e(2, 1))
    assert subspace_sum(span(F2, (1, 1)), c) == w
    assert subspace_intersect(span(F2, (1, 1)), c).is_zero()


def test_complement_requires_containment():
    with pytest.raises(PreconditionError):
        complement_in(span(F2, e(2, 1)), span(F2, e(2, 2)))


# -- properties --------------------------------------------------------------

@st.composite
def subspace_pairs(draw, fields=(F2, F3, FieldSpec.prime(101), Q)):
    field = draw(st.sampled_from(fields))
    n = draw(st.integers(0, 6))
    lo, hi = (-3, 3) if field.p is None else (0, field.p - 1)
    vec = st.lists(st.integers(lo, hi), min_size=n, max_size=n)
    u = span_canonicalize(draw(st.lists(vec, max_size=n + 1)), field, n)
    w = span_canonicalize(draw(st.lists(vec, max_size=n + 1)), field, n)
    return u, w


@given(subspace_pairs())
@settings(max_examples=200)
def test_modular_dimension_law(pair):
    u, w = pair
    assert subspace_sum(u, w).dim + subspace_intersect(u, w).dim == u.dim + w.dim


@given(subspace_pairs())
def test_canonical_form_is_fixed_point(pair):
    u, _ = pair
    assert span_canonicalize(u.basis, u.field, u.n) == u
    for row, c in zip(u.basis, u.pivots):
        assert row[c] == 1
        assert all(other[c] == 0 for other in u.basis if other is not row)
    assert list(u.pivots) == sorted(set(u.pivots))


@given(subspace_pairs())
def test_complement_is_a_complement(pair):
    u, w = pair
    big = subspace_sum(u, w)
    c = complement_in(u, big)
    assert subspace_sum(u, c) == big
    assert subspace_intersect(u, c).is_zero()


@given(subspace_pairs(fields=(F2, F3)))
@settings(max_examples=100)
def test_sum_and_intersection_match_enumeration(pair):
    u, w = pair
    if u.n > 4:
        return
    p = u.field.p
    assert elements(subspace_sum(u, w)) == sumset(elements(u), elements(w), p=p, n=u.n)
    assert elements(subspace_intersect(u, w)) == elements(u) & elements(w)

from fractions import Fraction

import pytest

from dsrefine import FieldSpec, InputError


def test_rejects_composite():
    with pytest.raises(InputError, match="not prime"):
        FieldSpec.prime(4)
    with pytest.raises(InputError):
        FieldSpec.prime(1)


def test_coerce_prime():
    f = FieldSpec.prime(7)
    assert f.coerce(-1) == 6
    assert f.coerce(Fraction(1, 2)) == 4
    assert f.coerce("3/2") == 5


def test_coerce_rejects_denominator_divisible_by_p():
    with pytest.raises(InputError, match="denominator"):
        FieldSpec.prime(3).coerce(Fraction(1, 3))


def test_parse_is_strict_about_range():
    f = FieldSpec.prime(5)
    assert f.parse(4) == 4
    with pytest.raises(InputError, match="out of range"):
        f.parse(5)
    with pytest.raises(InputError):
        f.parse(1.5)


def test_rational_format_roundtrip():
    q = FieldSpec.rational()
    for x in (Fraction(0), Fraction(-3, 2), Fraction(5)):
        assert q.parse(q.format(x)) == x
    assert q.format(Fraction(4, 1)) == "4"
    with pytest.raises(InputError):
        q.parse(0.5)


def test_json_and_cli_forms():
    assert FieldSpec.from_json({"kind": "prime", "p": 3}) == FieldSpec.prime(3)
    assert FieldSpec.from_json({"kind": "rational"}) == FieldSpec.rational()
    assert FieldSpec.from_cli("Q") == FieldSpec.rational()
    assert FieldSpec.from_cli("101").p == 101
    with pytest.raises(InputError):
        FieldSpec.from_json({"kind": "ring"})

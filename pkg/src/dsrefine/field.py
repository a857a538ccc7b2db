"""Exact scalars: integers mod a prime, or rationals."""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError


@lru_cache(maxsize=None)
def _is_prime(p):
    from sympy import isprime

    return bool(isprime(p))


@dataclass(frozen=True)
class FieldSpec:
    """Either F_p (``p`` set) or the rationals (``p is None``)."""

    p: "int | None" = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise InputError(f"field characteristic must be an integer, got {self.p!r}")
            if not _is_prime(self.p):
                raise InputError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p):
        return cls(p)

    @classmethod
    def rational(cls):
        return cls(None)

    @property
    def is_prime(self):
        return self.p is not None

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def __str__(self):
        return f"F_{self.p}" if self.p is not None else "Q"

    def coerce(self, x):
        """Map an int, Fraction or ``"a/b"`` string into the field."""
        if isinstance(x, str):
            try:
                x = Fraction(x.strip())
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"cannot parse {x!r} as a number") from exc
        if isinstance(x, bool):
            raise InputError(f"boolean {x!r} is not a field element")
        if self.p is None:
            if not isinstance(x, (int, Fraction)):
                raise InputError(f"{x!r} is not an exact number")
            return Fraction(x)
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise InputError(f"{x} has a denominator divisible by {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        raise InputError(f"{x!r} is not an exact number")

    def vector(self, entries):
        return tuple(self.coerce(x) for x in entries)

    def format(self, x):
        """Serialized form: ints for F_p, ``"a"`` or ``"a/b"`` strings for Q."""
        if self.p is not None:
            return int(x)
        return str(Fraction(x))

    def parse(self, token):
        """Strict inverse of :meth:`format` used by the file readers."""
        if self.p is not None:
            if isinstance(token, str):
                try:
                    token = int(token.strip())
                except ValueError as exc:
                    raise InputError(f"F_{self.p} entry {token!r} is not an integer") from exc
            if isinstance(token, bool) or not isinstance(token, int):
                raise InputError(f"F_{self.p} entry {token!r} is not an integer")
            if not 0 <= token < self.p:
                raise InputError(f"F_{self.p} entry {token} out of range [0, {self.p})")
            return token
        if isinstance(token, bool) or not isinstance(token, (int, str)):
            raise InputError(f"rational entry {token!r} must be an integer or an 'a/b' string")
        return self.coerce(token)

    def to_json(self):
        if self.p is not None:
            return {"kind": "prime", "p": self.p}
        return {"kind": "rational"}

    @classmethod
    def from_json(cls, doc):
        if not isinstance(doc, dict) or "kind" not in doc:
            raise InputError("field must be an object with a 'kind' key")
        if doc["kind"] == "prime":
            if "p" not in doc:
                raise InputError("prime field needs 'p'")
            return cls(doc["p"])
        if doc["kind"] == "rational":
            return cls(None)
        raise InputError(f"unknown field kind {doc['kind']!r}")

    @classmethod
    def from_cli(cls, text):
        """``"Q"`` for the rationals, otherwise a prime such as ``"101"``."""
        if text.strip().upper() == "Q":
            return cls(None)
        try:
            return cls(int(text))
        except ValueError as exc:
            raise InputError(f"--field expects a prime or Q, got {text!r}") from exc

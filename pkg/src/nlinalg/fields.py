"""Scalar fields: exact rationals, prime fields Z_p, and machine reals.

A FieldDescriptor names one field and supplies coercion, zero tests and text
rendering for its scalars; a FieldValue pairs one scalar with its descriptor.
Rational payloads are fractions.Fraction in lowest terms with positive
denominator, prime-field payloads are residues in [0, p), real payloads are
floats.  Equality is exact over the exact fields and uses an absolute
tolerance over the reals; the tolerance lives on the descriptor and is zero
exactly when the field is not real.

Scalar text syntax (shared by all file formats): integers ``-12``, rationals
``3/7`` (auto-reduced), decimals ``0.25`` (real field only), prime-field
residues plain integers reduced mod p.  Field headers: ``field Q``,
``field R``, ``field Z 7``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import FieldMismatch, MalformedScalar, NonPrimeModulus

RATIONAL = "Q"
REAL = "R"
PRIME = "Zp"

DEFAULT_REAL_TOLERANCE = 1e-9

_INT_RE = re.compile(r"[+-]?\d+\Z")
_FRACTION_RE = re.compile(r"[+-]?\d+/\d+\Z")
_DECIMAL_RE = re.compile(r"[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\Z")


def is_prime(n: int) -> bool:
    """Trial-division primality test; the moduli here are always small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


class FieldDescriptor:
    """One of Q, R or Z_p, plus the real-field comparison tolerance."""

    __slots__ = ("kind", "p", "tolerance")

    def __init__(self, kind: str, p: int | None = None, tolerance: float = 0.0):
        if kind not in (RATIONAL, REAL, PRIME):
            raise ValueError(f"unknown field kind {kind!r}")
        if kind == PRIME:
            if p is None or not is_prime(p):
                raise NonPrimeModulus(f"modulus {p} is not prime")
        elif p is not None:
            raise ValueError("only prime fields carry a modulus")
        if kind == REAL:
            if tolerance < 0:
                raise ValueError("tolerance must be nonnegative")
        elif tolerance != 0:
            raise ValueError("only the real field carries a tolerance")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "tolerance", tolerance)

    def __setattr__(self, name, value):
        raise AttributeError("FieldDescriptor is immutable")

    @classmethod
    def rational(cls) -> "FieldDescriptor":
        return cls(RATIONAL)

    @classmethod
    def real(cls, tolerance: float = DEFAULT_REAL_TOLERANCE) -> "FieldDescriptor":
        return cls(REAL, tolerance=tolerance)

    @classmethod
    def prime(cls, p: int) -> "FieldDescriptor":
        return cls(PRIME, p=p)

    # Identity ignores the tolerance: two real descriptors with different
    # tolerances still describe the same field.
    def same_field(self, other: "FieldDescriptor") -> bool:
        return self.kind == other.kind and self.p == other.p

    def require_same(self, other: "FieldDescriptor"):
        if not self.same_field(other):
            raise FieldMismatch(f"{self} vs {other}")

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and self.same_field(other)

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == PRIME:
            return f"Z_{self.p}"
        return self.kind

    @property
    def exact(self) -> bool:
        return self.kind != REAL

    @property
    def ordered(self) -> bool:
        return self.kind != PRIME

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == PRIME else 0

    # -- scalar construction -------------------------------------------------

    def value(self, x) -> "FieldValue":
        """Coerce x (int, Fraction, float, str or FieldValue) into this field."""
        if isinstance(x, FieldValue):
            self.require_same(x.field)
            return x
        if isinstance(x, str):
            return self.parse_scalar(x)
        if self.kind == RATIONAL:
            if isinstance(x, float):
                raise FieldMismatch("floats are not exact rationals")
            return FieldValue(self, Fraction(x))
        if self.kind == PRIME:
            if not isinstance(x, int):
                raise FieldMismatch(f"prime-field scalar expected, got {x!r}")
            return FieldValue(self, x % self.p)
        return FieldValue(self, float(x))

    @property
    def zero(self) -> "FieldValue":
        return self.value(0)

    @property
    def one(self) -> "FieldValue":
        return self.value(1)

    # -- payload-level comparisons --------------------------------------------

    def eq_raw(self, a, b) -> bool:
        if self.kind == REAL:
            return abs(a - b) <= self.tolerance
        return a == b

    def is_zero_raw(self, a) -> bool:
        if self.kind == REAL:
            return abs(a) <= self.tolerance
        return a == 0

    # -- text -----------------------------------------------------------------

    def header(self) -> str:
        if self.kind == RATIONAL:
            return "Q"
        if self.kind == REAL:
            return "R"
        return f"Z {self.p}"

    @classmethod
    def from_header(cls, text: str,
                    tolerance: float = DEFAULT_REAL_TOLERANCE) -> "FieldDescriptor":
        parts = text.split()
        if parts == ["Q"]:
            return cls.rational()
        if parts == ["R"]:
            return cls.real(tolerance)
        if len(parts) == 2 and parts[0] == "Z" and _INT_RE.match(parts[1]):
            return cls.prime(int(parts[1]))
        raise MalformedScalar(f"unrecognized field header {text!r}")

    def parse_scalar(self, token: str) -> "FieldValue":
        if self.kind == RATIONAL:
            if _INT_RE.match(token):
                return FieldValue(self, Fraction(int(token)))
            if _FRACTION_RE.match(token):
                num, den = token.split("/")
                if int(den) == 0:
                    raise MalformedScalar(f"zero denominator in {token!r}")
                return FieldValue(self, Fraction(int(num), int(den)))
            raise MalformedScalar(f"bad rational scalar {token!r}")
        if self.kind == PRIME:
            if _INT_RE.match(token):
                return FieldValue(self, int(token) % self.p)
            raise MalformedScalar(f"bad prime-field scalar {token!r}")
        if _DECIMAL_RE.match(token):
            return FieldValue(self, float(token))
        raise MalformedScalar(f"bad real scalar {token!r}")

    def format_scalar(self, v: "FieldValue") -> str:
        if self.kind == RATIONAL:
            return str(v.v)
        if self.kind == PRIME:
            return str(v.v)
        return repr(v.v)


class FieldValue:
    """A scalar carrying its field; supports the usual arithmetic operators."""

    __slots__ = ("field", "v")

    def __init__(self, field: FieldDescriptor, payload):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "v", payload)

    def __setattr__(self, name, value):
        raise AttributeError("FieldValue is immutable")

    def _coerce(self, other) -> "FieldValue":
        if isinstance(other, FieldValue):
            self.field.require_same(other.field)
            return other
        return self.field.value(other)

    def __add__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.kind == PRIME:
            return FieldValue(f, (self.v + o.v) % f.p)
        return FieldValue(f, self.v + o.v)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.kind == PRIME:
            return FieldValue(f, (self.v - o.v) % f.p)
        return FieldValue(f, self.v - o.v)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.kind == PRIME:
            return FieldValue(f, (self.v * o.v) % f.p)
        return FieldValue(f, self.v * o.v)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        f = self.field
        if f.kind == PRIME:
            if o.v == 0:
                raise ZeroDivisionError("division by zero residue")
            return FieldValue(f, (self.v * pow(o.v, -1, f.p)) % f.p)
        return FieldValue(f, self.v / o.v)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        f = self.field
        if f.kind == PRIME:
            return FieldValue(f, (-self.v) % f.p)
        return FieldValue(f, -self.v)

    def __pow__(self, k: int):
        f = self.field
        if f.kind == PRIME:
            if k < 0 and self.v == 0:
                raise ZeroDivisionError("division by zero residue")
            return FieldValue(f, pow(self.v, k, f.p) if k >= 0
                              else pow(pow(self.v, -1, f.p), -k, f.p))
        return FieldValue(f, self.v ** k)

    def inverse(self) -> "FieldValue":
        return self.field.one / self

    def is_zero(self) -> bool:
        return self.field.is_zero_raw(self.v)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except (FieldMismatch, MalformedScalar, TypeError, ValueError):
            return NotImplemented
        return self.field.eq_raw(self.v, o.v)

    def __hash__(self):
        if not self.field.exact:
            raise TypeError("real field values are not hashable "
                            "(tolerance-based equality)")
        return hash((self.field.kind, self.field.p, self.v))

    # Ordering: natural over Q and R; by residue over Z_p (used only for
    # deterministic sorting, not as a field order).
    def __lt__(self, other):
        return self.v < self._coerce(other).v

    def __le__(self, other):
        return self.v <= self._coerce(other).v

    def __gt__(self, other):
        return self.v > self._coerce(other).v

    def __ge__(self, other):
        return self.v >= self._coerce(other).v

    def __repr__(self):
        return self.field.format_scalar(self)

    def __str__(self):
        return self.field.format_scalar(self)

    def to_float(self) -> float:
        if self.field.kind == PRIME:
            raise FieldMismatch("prime-field residues have no float embedding")
        return float(self.v)

"""Dense univariate polynomials over one scalar field.

Coefficients are stored ascending with trailing zeros stripped; the zero
polynomial has an empty coefficient tuple and degree -1.  Division, GCD and
root extraction are exact over the rational and prime fields; the real field
gets arithmetic only (no root extraction, which belongs to the float path of
the Markov module).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .errors import (
    DivisionByZeroPolynomial,
    ExactFieldRequired,
    FieldMismatch,
    ZeroPolynomial,
)
from .fields import PRIME, RATIONAL, FieldDescriptor, FieldValue


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldDescriptor, coeffs=()):
        values = [field.value(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ----------------------------------------------------------

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def constant(cls, field, c) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def x(cls, field) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def linear(cls, root: FieldValue) -> "Polynomial":
        """The monic factor x - root."""
        return cls(root.field, (-root, root.field.one))

    @classmethod
    def from_roots(cls, field, roots_with_multiplicity) -> "Polynomial":
        p = cls.constant(field, 1)
        for root, mult in roots_with_multiplicity:
            p = p * cls.linear(field.value(root)) ** mult
        return p

    # -- structure ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> FieldValue:
        if self.is_zero:
            return self.field.zero
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return not self.is_zero and self.leading == self.field.one

    def coefficient(self, k: int) -> FieldValue:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if not self.field.same_field(other.field):
            return False
        if len(self.coeffs) != len(other.coeffs):
            return False
        return all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.field, tuple(c.v for c in self.coeffs)))

    # -- arithmetic ----------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise FieldMismatch(f"expected polynomial, got {other!r}")
        self.field.require_same(other.field)

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field,
            [self.coefficient(k) + other.coefficient(k) for k in range(n)],
        )

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            self.field,
            [self.coefficient(k) - other.coefficient(k) for k in range(n)],
        )

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            if self.is_zero or other.is_zero:
                return Polynomial.zero(self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
            return Polynomial(self.field, out)
        c = self.field.value(other)
        return Polynomial(self.field, [c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Polynomial.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other: "Polynomial"):
        self._check(other)
        if other.is_zero:
            raise DivisionByZeroPolynomial("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial.zero(self.field), self
        quot = [self.field.zero] * (dq + 1)
        lead = other.leading
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top.is_zero():
                continue
            q = top / lead
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return Polynomial(self.field, quot), Polynomial(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero or self.is_monic:
            return self
        inv = self.field.one / self.leading
        return self * inv

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.field,
            [self.coeffs[k] * k for k in range(1, len(self.coeffs))],
        )

    def __call__(self, x) -> FieldValue:
        x = self.field.value(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- rendering -------------------------------------------------------------------

    def __repr__(self):
        return self.to_str()

    def to_str(self) -> str:
        """Dense rendering, descending powers: ``x^2 - 3x + 2``."""
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c.is_zero():
                continue
            text = self.field.format_scalar(c)
            negative = text.startswith("-")
            if negative:
                text = text[1:]
            if k > 0 and text == "1":
                text = ""
            if k == 0:
                term = text or "1"
            elif k == 1:
                term = f"{text}x"
            else:
                term = f"{text}x^{k}"
            if not parts:
                parts.append(f"-{term}" if negative else term)
            else:
                parts.append(f" - {term}" if negative else f" + {term}")
        return "".join(parts)

    def factored_str(self) -> str:
        """``(x-1)(x-2)^2`` when the polynomial splits in its field, else dense."""
        if self.is_zero or not self.field.exact:
            return self.to_str()
        roots, cofactor = rational_roots(self)
        if cofactor.degree != 0:
            return self.to_str()
        parts = []
        lead = cofactor.coeffs[0]
        if not lead == self.field.one:
            parts.append(self.field.format_scalar(lead))
        for root, mult in roots:
            if root.is_zero():
                base = "x"
            else:
                text = self.field.format_scalar(root)
                base = f"(x+{text[1:]})" if text.startswith("-") else f"(x-{text})"
            parts.append(base if mult == 1 else f"{base}^{mult}")
        if not parts:
            return self.field.format_scalar(lead)
        return "".join(parts)


# -- GCD ------------------------------------------------------------------------

def _primitive_int_coeffs(p: Polynomial) -> list[int]:
    """Scale a rational polynomial to integer coefficients with content 1."""
    denom = 1
    for c in p.coeffs:
        denom = denom * c.v.denominator // int_gcd(denom, c.v.denominator)
    ints = [int(c.v * denom) for c in p.coeffs]
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    return [c // content for c in ints] if content else ints


def _int_poly_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer polynomials (ascending coefficients)."""
    a = list(a)
    d = len(a) - len(b)
    lead = b[-1]
    for k in range(d, -1, -1):
        top = a[k + len(b) - 1]
        a = [c * lead for c in a]
        for j, bj in enumerate(b):
            a[k + j] -= top * bj
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(b):
            break
    while a and a[-1] == 0:
        a.pop()
    return a


def _subresultant_gcd(a: list[int], b: list[int]) -> list[int]:
    """Subresultant PRS over the integers; keeps coefficients small."""
    if len(a) < len(b):
        a, b = b, a
    g = h = 1
    while b:
        delta = len(a) - len(b)
        r = _int_poly_prem(a, b)
        if not r:
            break
        divisor = g * h ** delta
        a, b = b, [c // divisor for c in r]
        g = a[-1]
        h = g ** delta // h ** (delta - 1) if delta > 0 else h
    content = 0
    for c in a:
        content = int_gcd(content, abs(c))
    return [c // content for c in a] if content else a


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic GCD over an exact field.

    Rational inputs go through the subresultant PRS on their primitive
    integer forms to avoid intermediate coefficient blowup; prime-field
    inputs use the plain Euclidean algorithm.
    """
    a._check(b)
    field = a.field
    if not field.exact:
        raise ExactFieldRequired("polynomial gcd needs an exact field")
    if a.is_zero:
        return b.monic()
    if b.is_zero:
        return a.monic()
    if field.kind == RATIONAL:
        g = _subresultant_gcd(_primitive_int_coeffs(a), _primitive_int_coeffs(b))
        return Polynomial(field, [Fraction(c) for c in g]).monic()
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


# -- root extraction -------------------------------------------------------------

def _int_divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def rational_roots(p: Polynomial):
    """All in-field roots of p with multiplicities, plus the root-free cofactor.

    Over the rationals the candidates come from the rational-root theorem on
    the primitive integer form; over a prime field every residue is tested.
    Returns (sorted list of (root, multiplicity), cofactor) with
    p == prod (x - root)^multiplicity * cofactor exactly.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot extract roots of the zero polynomial")
    field = p.field
    if not field.exact:
        raise ExactFieldRequired("root extraction needs an exact field")

    if field.kind == PRIME:
        candidates = [field.value(r) for r in range(field.p)]
    else:
        low = 0
        while p.coeffs[low].is_zero():
            low += 1
        ints = _primitive_int_coeffs(Polynomial(field, p.coeffs[low:]))
        candidates = [field.zero]
        seen = set()
        for num in _int_divisors(ints[0]):
            for den in _int_divisors(ints[-1]):
                r = Fraction(num, den)
                if r not in seen:
                    seen.add(r)
                    candidates.append(field.value(r))
                    candidates.append(field.value(-r))

    roots = {}
    quotient = p
    for r in candidates:
        if quotient.degree < 1:
            break
        while quotient.degree >= 1 and quotient(r).is_zero():
            quotient = quotient // Polynomial.linear(r)
            roots[r] = roots.get(r, 0) + 1
    return sorted(roots.items()), quotient


def squarefree_parts(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Decompose p into monic squarefree factors with multiplicities.

    Yun's algorithm; valid over the rationals, and over Z_p when the degree
    stays below the characteristic.  Otherwise the whole (monic) polynomial
    is returned as a single part, which is always a sound fallback.
    """
    field = p.field
    if p.is_zero:
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    f = p.monic()
    if f.degree < 1:
        return []
    if field.kind == PRIME and field.p <= f.degree:
        return [(f, 1)]
    df = f.derivative()
    a = poly_gcd(f, df)
    if a.degree == 0:
        return [(f, 1)]
    b = f // a
    d = (df // a) - b.derivative()
    parts = []
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            parts.append((g, i))
        b = b // g
        d = (d // g) - b.derivative()
        i += 1
    return parts

from fractions import Fraction

import pytest

from nlinalg import FieldDescriptor
from nlinalg.errors import FieldMismatch, MalformedScalar, NonPrimeModulus

from conftest import Q, R, Z5, Z7, rng


def test_rational_payload_lowest_terms():
    v = Q.value(Fraction(6, -4))
    assert v.v == Fraction(-3, 2)
    assert v.v.denominator == 2


def test_prime_field_reduces_mod_p():
    assert Z5.value(7).v == 2
    assert Z5.value(-1).v == 4


def test_non_prime_modulus_rejected():
    with pytest.raises(NonPrimeModulus):
        FieldDescriptor.prime(4)
    with pytest.raises(NonPrimeModulus):
        FieldDescriptor.prime(1)


def test_tolerance_only_on_reals():
    assert Q.tolerance == 0.0
    assert R.tolerance == 1e-9
    with pytest.raises(ValueError):
        FieldDescriptor("Q", tolerance=1e-9)


def test_field_mismatch_raises():
    with pytest.raises(FieldMismatch):
        Q.value(1) + Z5.value(1)


def test_real_equality_uses_tolerance():
    a = R.value(1.0)
    b = R.value(1.0 + 1e-12)
    assert a == b
    assert not (a == R.value(1.1))


def test_exact_equality_is_exact():
    assert Q.value(Fraction(1, 3)) == Q.value(Fraction(2, 6))
    assert not (Q.value(Fraction(1, 3)) == Q.value(Fraction(1, 3) + Fraction(1, 10**12)))


def test_prime_field_matches_integer_arithmetic_mod_p():
    r = rng(1552)
    p = 7
    for _ in range(1000):
        a, b = r.randrange(p), r.randrange(p)
        fa, fb = Z7.value(a), Z7.value(b)
        assert (fa + fb).v == (a + b) % p
        assert (fa * fb).v == (a * b) % p
        if a != 0:
            assert (fa.inverse() * fa).v == 1


def test_division_by_zero_residue():
    with pytest.raises(ZeroDivisionError):
        Z5.value(1) / Z5.value(0)


def test_scalar_text_round_trip():
    for token in ["-12", "3/7", "0", "5"]:
        v = Q.parse_scalar(token)
        assert Q.format_scalar(v) == token
    assert Q.format_scalar(Q.parse_scalar("6/4")) == "3/2"
    assert R.format_scalar(R.parse_scalar("0.25")) == "0.25"
    assert Z5.format_scalar(Z5.parse_scalar("7")) == "2"


def test_scalar_text_rejections():
    with pytest.raises(MalformedScalar):
        Q.parse_scalar("0.25")  # decimals are real-only
    with pytest.raises(MalformedScalar):
        Q.parse_scalar("x")
    with pytest.raises(MalformedScalar):
        Z5.parse_scalar("1/2")


def test_field_headers():
    assert Q.header() == "Q"
    assert R.header() == "R"
    assert Z7.header() == "Z 7"
    assert FieldDescriptor.from_header("Z 7") == Z7
    with pytest.raises(MalformedScalar):
        FieldDescriptor.from_header("Z 4")


def test_ordering_for_sorting():
    values = [Q.value(3), Q.value(-1), Q.value(Fraction(1, 2))]
    assert [str(v) for v in sorted(values)] == ["-1", "1/2", "3"]

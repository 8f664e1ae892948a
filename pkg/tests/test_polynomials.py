from fractions import Fraction

import pytest

from nlinalg import Polynomial, poly_gcd, rational_roots, squarefree_parts
from nlinalg.errors import DivisionByZeroPolynomial, ZeroPolynomial

from conftest import Q, Z5, rng


def poly(coeffs, field=Q):
    return Polynomial(field, coeffs)


def test_expand_product():
    a = Polynomial.linear(Q.value(1))
    b = Polynomial.linear(Q.value(2))
    assert a * b == poly([2, -3, 1])


def test_divmod_exact_factor():
    p = poly([2, -3, 1])  # (x-1)(x-2)
    q, r = divmod(p, Polynomial.linear(Q.value(1)))
    assert q == poly([-2, 1])
    assert r.is_zero


def test_divmod_remainder_degree():
    p = poly([1, 0, 0, 1])
    d = poly([1, 1])
    q, r = divmod(p, d)
    assert r.degree < d.degree
    assert q * d + r == p


def test_mul_over_z5():
    # (x+2)(x+3) has constant 6 = 1 and linear 5 = 0 mod 5
    a = poly([2, 1], Z5)
    b = poly([3, 1], Z5)
    assert a * b == poly([1, 0, 1], Z5)


def test_zero_divisor_raises():
    with pytest.raises(DivisionByZeroPolynomial):
        divmod(poly([1, 1]), Polynomial.zero(Q))


def test_divmod_inverts_product():
    r = rng(220)
    for _ in range(60):
        a = poly([Fraction(r.randint(-4, 4), r.randint(1, 3))
                  for _ in range(r.randint(1, 5))])
        b = poly([Fraction(r.randint(-4, 4), r.randint(1, 3))
                  for _ in range(r.randint(1, 4))])
        if a.is_zero or b.is_zero:
            continue
        q, rem = divmod(a * b, b)
        assert q == a
        assert rem.is_zero


def test_rational_roots_simple():
    roots, cofactor = rational_roots(poly([2, -3, 1]))
    assert [(str(v), m) for v, m in roots] == [("1", 1), ("2", 1)]
    assert cofactor.degree == 0


def test_rational_roots_irrational_cofactor():
    roots, cofactor = rational_roots(poly([-2, 0, 1]))  # x^2 - 2
    assert roots == []
    assert cofactor == poly([-2, 0, 1])


def test_rational_roots_with_multiplicity():
    p = Polynomial.from_roots(Q, [(2, 2), (1, 1)])
    roots, cofactor = rational_roots(p)
    assert [(str(v), m) for v, m in roots] == [("1", 1), ("2", 2)]
    assert cofactor.degree == 0


def test_root_multiplicity_sharp():
    # (x-r)^m divides exactly, (x-r)^(m+1) does not
    r = rng(221)
    for _ in range(30):
        root = Fraction(r.randint(-3, 3), r.randint(1, 2))
        m = r.randint(1, 3)
        extra = poly([1, 0, 1])  # no rational roots
        p = Polynomial.linear(Q.value(root)) ** m * extra
        roots, _ = rational_roots(p)
        found = {str(v): mult for v, mult in roots}
        assert found[str(Q.value(root))] == m
        factor = Polynomial.linear(Q.value(root))
        assert (p % factor ** m).is_zero
        assert not (p % factor ** (m + 1)).is_zero


def test_rational_roots_zero_root_and_prime_field():
    p = poly([0, 0, 1, 1])  # x^2 (x+1)
    roots, cofactor = rational_roots(p)
    assert {str(v): m for v, m in roots} == {"0": 2, "-1": 1}
    assert cofactor.degree == 0

    p5 = Polynomial.from_roots(Z5, [(2, 1), (3, 2)])
    roots5, cof5 = rational_roots(p5)
    assert {v.v: m for v, m in roots5} == {2: 1, 3: 2}
    assert cof5.degree == 0

    with pytest.raises(ZeroPolynomial):
        rational_roots(Polynomial.zero(Q))


def test_poly_gcd_subresultant():
    a = Polynomial.from_roots(Q, [(1, 2), (3, 1)])
    b = Polynomial.from_roots(Q, [(1, 1), (4, 1)])
    g = poly_gcd(a, b)
    assert g == Polynomial.linear(Q.value(1))

    # coprime polynomials
    assert poly_gcd(poly([1, 1]), poly([2, 1])).degree == 0


def test_poly_gcd_random_products():
    r = rng(222)
    for _ in range(40):
        common = Polynomial.from_roots(
            Q, [(r.randint(-3, 3), r.randint(1, 2))]
        )
        a = common * poly([1, 0, 1])
        b = common * poly([r.randint(1, 3), 1])
        g = poly_gcd(a, b)
        assert (a % g).is_zero
        assert (b % g).is_zero
        assert (g % common.monic()).is_zero


def test_squarefree_parts():
    p = Polynomial.from_roots(Q, [(1, 1), (2, 3)]) * poly([2, 0, 1]) ** 2
    parts = squarefree_parts(p)
    rebuilt = Polynomial.constant(Q, 1)
    for factor, mult in parts:
        rebuilt = rebuilt * factor ** mult
    assert rebuilt == p.monic()
    assert sorted(m for _, m in parts) == [1, 2, 3]


def test_rendering():
    assert poly([2, -3, 1]).to_str() == "x^2 - 3x + 2"
    assert poly([0]).to_str() == "0"
    assert poly([-1, 0, 1]).factored_str() == "(x+1)(x-1)"
    assert (Polynomial.from_roots(Q, [(2, 2), (1, 1)])).factored_str() == "(x-1)(x-2)^2"
    assert poly([-2, 0, 1]).factored_str() == "x^2 - 2"
    assert poly([0, 1]).factored_str() == "x"


def test_evaluation_horner():
    p = poly([2, -3, 1])
    assert p(Q.value(5)).v == Fraction(12)
    assert p(Q.value(1)).is_zero()

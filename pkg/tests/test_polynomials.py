import random
from fractions import Fraction

import pytest
import sympy

from flagspec.polynomials import (
    IntPolynomial,
    count_roots_in,
    exact_div,
    poly_eval,
    poly_gcd,
    poly_mul,
    square_free_part,
    sturm_chain,
)

X = sympy.Symbol("x")


def to_sympy(p: IntPolynomial):
    return sympy.Poly(list(reversed(p.coeffs)), X)


def rand_poly(rng: random.Random, degree: int) -> IntPolynomial:
    coeffs = [rng.randint(-6, 6) for _ in range(degree)]
    coeffs.append(rng.choice([1, 2, -3]))
    return IntPolynomial(coeffs)


def test_construction_normalizes():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    z = IntPolynomial([0, 0])
    assert z.is_zero and z.degree == -1
    assert IntPolynomial([5]).degree == 0


def test_arithmetic_and_evaluation():
    p = IntPolynomial([1, 0, 1])  # 1 + x^2
    q = IntPolynomial([-1, 1])    # x - 1
    assert (p + q).coeffs == (0, 1, 1)
    assert (p - q).coeffs == (2, -1, 1)
    assert (p * q).coeffs == (-1, 1, -1, 1)
    assert (p * 3).coeffs == (3, 0, 3)
    assert p.evaluate(2) == 5
    assert p.evaluate(Fraction(1, 2)) == Fraction(5, 4)
    assert poly_eval([1, 0, 1], 2) == 5
    assert poly_mul([1, 1], [1, 1]) == [1, 2, 1]


def test_derivative_content_primitive():
    p = IntPolynomial([4, 0, 8])
    assert p.derivative().coeffs == (0, 16)
    assert p.content() == 4
    assert p.primitive().coeffs == (1, 0, 2)


def test_monic_and_coefficient_access():
    p = IntPolynomial([-3, 0, 0, 1])
    assert p.is_monic and p.leading == 1
    assert p.coefficient(0) == -3
    assert p.coefficient(2) == 0
    assert p.coefficient(7) == 0


def test_exact_division():
    num = IntPolynomial([-1, 0, 1])       # (x-1)(x+1)
    assert exact_div(num, IntPolynomial([-1, 1])).coeffs == (1, 1)
    with pytest.raises(ValueError):
        exact_div(num, IntPolynomial([3, 1]))  # remainder
    with pytest.raises(ValueError):
        exact_div(IntPolynomial([1, 1]), IntPolynomial([2]))  # non-integral


def test_gcd_matches_sympy():
    rng = random.Random(5)
    for _ in range(25):
        a = rand_poly(rng, rng.randint(0, 5))
        b = rand_poly(rng, rng.randint(0, 5))
        common = rand_poly(rng, rng.randint(0, 3))
        ours = poly_gcd(a * common, b * common)
        theirs = sympy.gcd(to_sympy(a * common), to_sympy(b * common))
        # both primitive with positive leading coefficient
        assert to_sympy(ours) == sympy.Poly(theirs.as_expr(), X).primitive()[1]


def test_square_free_part():
    factor = IntPolynomial([-1, 1])  # x - 1
    p = factor * factor * IntPolynomial([2, 1])
    sf = square_free_part(p)
    assert sf == factor * IntPolynomial([2, 1])
    rng = random.Random(11)
    for _ in range(15):
        q = rand_poly(rng, rng.randint(1, 4))
        squared = q * q
        out = to_sympy(square_free_part(squared)).as_expr()
        # the result divides the input and carries no repeated roots
        assert sympy.div(to_sympy(squared).as_expr(), out, X)[1] == 0
        assert sympy.degree(sympy.gcd(out, sympy.diff(out, X)), X) <= 0


def test_sturm_root_counts():
    p = IntPolynomial([-2, 0, 1])  # x^2 - 2
    assert count_roots_in(p, Fraction(1), Fraction(2)) == 1
    assert count_roots_in(p, Fraction(-2), Fraction(0)) == 1
    assert count_roots_in(p, Fraction(0), Fraction(1)) == 0
    # half-open (lo, hi]: a root exactly at hi counts, at lo it does not
    q = IntPolynomial([-4, 0, 1])  # roots at +-2
    assert count_roots_in(q, Fraction(0), Fraction(2)) == 1
    assert count_roots_in(q, Fraction(2), Fraction(3)) == 0


def test_sturm_counts_match_sympy():
    rng = random.Random(23)
    for _ in range(20):
        p = rand_poly(rng, rng.randint(1, 6))
        if p.is_zero:
            continue
        sp = to_sympy(p)
        bounds = sorted(rng.sample(range(-8, 9), 2))
        lo, hi = Fraction(bounds[0]), Fraction(bounds[1])
        # choose endpoints that are not roots so open/closed agrees
        if sp.eval(bounds[0]) == 0 or sp.eval(bounds[1]) == 0:
            continue
        ours = count_roots_in(p, lo, hi)
        theirs = sp.count_roots(inf=bounds[0], sup=bounds[1])
        assert ours == theirs


def test_sturm_chain_shape():
    p = IntPolynomial([-2, 0, 1])
    chain = sturm_chain(p)
    assert chain[0] == p
    assert chain[1] == p.derivative()
    assert chain[-1].degree == 0

import random

import pytest
from fractions import Fraction

from grasspencils.fields import PrimeField, RATIONALS, is_prime, next_prime
from grasspencils.poly import SparsePolynomial, monomials_of_degree

F5 = PrimeField(5)


def test_difference_of_squares():
    x = SparsePolynomial.variable(2, 0)
    y = SparsePolynomial.variable(2, 1)
    assert (x + y) * (x - y) == x * x - y * y
    assert ((x + y) * (x - y)).terms == {(2, 0): 1, (0, 2): -1}


def test_multiplication_by_zero_annihilates():
    a = SparsePolynomial(3, RATIONALS, {(1, 0, 2): 7, (0, 1, 0): -3})
    zero = SparsePolynomial.zero(3)
    assert (a * zero).terms == {}
    assert not a * zero


def test_laurent_square():
    # (t1^-1 + t2)^2 = t1^-2 + 2 t1^-1 t2 + t2^2
    f = SparsePolynomial(2, RATIONALS, {(-1, 0): 1, (0, 1): 1})
    assert (f ** 2).terms == {(-2, 0): 1, (-1, 1): 2, (0, 2): 1}


def test_constant_term_read_off():
    f = SparsePolynomial(2, RATIONALS, {(0, 0): 3, (1, -1): 5})
    assert f.constant_term() == 3
    g = SparsePolynomial(2, RATIONALS, {(1, 0): 1, (0, 1): 1})
    assert g.constant_term() == 0


def test_context_errors():
    a = SparsePolynomial.variable(2, 0)
    b = SparsePolynomial.variable(3, 0)
    c = SparsePolynomial.variable(2, 0, field=F5)
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * c


def test_no_zero_terms_stored():
    a = SparsePolynomial(1, RATIONALS, {(1,): 1})
    b = SparsePolynomial(1, RATIONALS, {(1,): -1, (0,): 2})
    assert (a + b).terms == {(0,): 2}
    # mod-p wraparound also cleans up
    c = SparsePolynomial(1, F5, {(2,): 3})
    d = SparsePolynomial(1, F5, {(2,): 2})
    assert (c + d).terms == {}


def _random_poly(rng, nvars, field, laurent=False):
    terms = {}
    for _ in range(rng.randint(0, 4)):
        lo = -2 if laurent else 0
        e = tuple(rng.randint(lo, 3) for _ in range(nvars))
        terms[e] = rng.randint(-6, 6)
    return SparsePolynomial(nvars, field, terms)


@pytest.mark.parametrize("field", [RATIONALS, F5, PrimeField(101)])
def test_ring_axioms_randomized(field):
    rng = random.Random(20240 + (field.modulus or 0))
    for _ in range(300):
        a = _random_poly(rng, 3, field, laurent=True)
        b = _random_poly(rng, 3, field, laurent=True)
        c = _random_poly(rng, 3, field, laurent=True)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c


def test_partial_derivative():
    f = SparsePolynomial(2, RATIONALS, {(3, 1): 2, (0, 2): 1, (0, 0): 5})
    assert f.partial(0).terms == {(2, 1): 6}
    assert f.partial(1).terms == {(3, 0): 2, (0, 1): 2}
    # Laurent exponents differentiate like any other power
    g = SparsePolynomial(1, RATIONALS, {(-2,): 1})
    assert g.partial(0).terms == {(-3,): -2}


def test_evaluate_rational_and_modular():
    f = SparsePolynomial(2, RATIONALS, {(1, 1): 1, (0, 0): 1})
    assert f.evaluate([Fraction(1, 2), Fraction(4)]) == 3
    g = f.convert(F5)
    assert g.evaluate([2, 4]) == (2 * 4 + 1) % 5


def test_monomials_of_degree_order_and_count():
    mons = list(monomials_of_degree(3, 2))
    # descending lexicographic within the degree
    assert mons == [(2, 0, 0), (1, 1, 0), (1, 0, 1),
                    (0, 2, 0), (0, 1, 1), (0, 0, 2)]
    assert len(list(monomials_of_degree(6, 4))) == 126
    assert len(list(monomials_of_degree(10, 5))) == 2002


def test_convert_reduces_mod_p():
    f = SparsePolynomial(1, RATIONALS, {(1,): Fraction(1, 2), (0,): 5})
    g = f.convert(F5)
    assert g.terms == {(1,): 3}  # 1/2 = 3 mod 5; constant 5 = 0 drops


def test_primality_helpers():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(2 ** 31 - 1)
    assert not is_prime(2 ** 31)
    p = next_prime(2 ** 30)
    assert p > 2 ** 30 and is_prime(p)

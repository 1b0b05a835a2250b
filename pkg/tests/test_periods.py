from fractions import Fraction
from math import factorial

import pytest

from grasspencils.grassmann import build_pencil
from grasspencils.periods import (LT_LOWER, LT_UPPER, build_period_kernel,
                                  default_kernel, hasse_witt,
                                  hypergeometric_truncation,
                                  period_coefficients, truncation_search)
from grasspencils.pointcount import PointCountRecord, count_table

def test_kernel_construction_checks():
    kernel = build_period_kernel()
    assert kernel.kernel.constant_term() == 0
    assert kernel.checks["kernel_terms"] == 10
    assert kernel.kernel.num_terms() == 10


def test_kernel_at_all_ones():
    # B(1,1,1,1) = 1 + t*L(1,1,1,1) and the bracket sums to 21 there
    kernel = build_period_kernel()
    assert kernel.kernel.evaluate([1, 1, 1, 1]) == 21


def test_constant_term_of_kernel_square():
    # the first nontrivial series coefficient, read off directly
    L = default_kernel().kernel
    assert (L * L).constant_term() == 12


def test_series_coefficients_match_expected():
    coeffs = period_coefficients(default_kernel(), 10)
    assert coeffs == [1, 0, 12, 0, 492, 0, 32880, 0, 2743020, 0, 257986512]


def test_odd_coefficients_vanish():
    coeffs = period_coefficients(default_kernel(), 20)
    assert all(coeffs[k] == 0 for k in range(1, 21, 2))


def _constant_term_by_composition(kernel_poly, k):
    """Independent oracle: multinomial bookkeeping over term selections.

    ct(L^k) = sum over multisets of k kernel terms whose exponent vectors
    cancel, of the multinomial coefficient times the coefficient product.
    """
    items = list(kernel_poly.terms.items())

    def rec(pos, remaining, vec_sum, coeff_prod, used):
        if pos == len(items):
            if remaining == 0 and all(v == 0 for v in vec_sum):
                weight = factorial(k)
                for u in used:
                    weight //= factorial(u)
                return weight * coeff_prod
            return 0
        total = 0
        exp, coef = items[pos]
        for take in range(remaining + 1):
            new_vec = tuple(v + take * e for v, e in zip(vec_sum, exp))
            total += rec(pos + 1, remaining - take, new_vec,
                         coeff_prod * coef ** take, used + [take])
        return total

    return rec(0, k, (0, 0, 0, 0), Fraction(1), [])


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_coefficients_against_composition_oracle(k):
    kernel = default_kernel()
    expected = (-1) ** k * _constant_term_by_composition(kernel.kernel, k)
    assert period_coefficients(kernel, k)[k] == expected


def test_hasse_witt_values():
    assert hasse_witt(5, 1) == 0   # 1 + 12 + 492 = 505 = 0 mod 5
    assert hasse_witt(7, 1) == 2   # 33385 = 2 mod 7
    assert hasse_witt(11, 1) == 8


def test_hasse_witt_congruence_with_counts():
    spec = build_pencil(2, 4)
    for p in (5, 7, 11):
        for rec in count_table(spec, p):
            assert (1 - hasse_witt(p, rec.t)) % p == rec.residue


def test_hasse_witt_congruence_beyond_tabulated_primes():
    # the congruence is a theorem about the family, not about three primes;
    # p = 13 needs coefficients through c_12, past the tabulated range
    spec = build_pencil(2, 4)
    for rec in count_table(spec, 13):
        assert (1 - hasse_witt(13, rec.t)) % 13 == rec.residue


def test_hasse_witt_rejects_bad_prime():
    with pytest.raises(ValueError):
        hasse_witt(9, 1)
    with pytest.raises(ValueError):
        hasse_witt(2, 1)


def test_hypergeometric_at_zero():
    for p in (5, 7, 11):
        assert hypergeometric_truncation(LT_UPPER, LT_LOWER, p, 0) == 1


def test_hypergeometric_against_exact_rational_series():
    # independent route: exact Pochhammer ratios over Q, reduced at the end
    for p in (5, 7, 11, 13):
        coeffs = []
        for k in range(p):
            num = Fraction(1)
            for a in LT_UPPER:
                for i in range(k):
                    num *= a + i
            den = Fraction(factorial(k))
            for b in LT_LOWER:
                for i in range(k):
                    den *= b + i
            coeffs.append(num / den)
        # degree-1 coefficient is (1/4)(1/2)(3/4)(1/2) = 3/64
        assert coeffs[1] == Fraction(3, 64)
        for z in range(p):
            exact = sum(c * z ** k for k, c in enumerate(coeffs))
            reduced = (exact.numerator
                       * pow(exact.denominator % p, -1, p)) % p
            assert hypergeometric_truncation(LT_UPPER, LT_LOWER, p, z) \
                == reduced
    # 3/64 is 2 mod 5
    assert Fraction(3, 64).numerator * pow(64, -1, 5) % 5 == 2


def test_hypergeometric_geometric_sanity():
    # 1F0(1;;z) truncates to the plain geometric sum
    for p in (5, 11):
        for z in range(p):
            expected = sum(pow(z, k, p) for k in range(p)) % p
            assert hypergeometric_truncation([Fraction(1)], [], p, z) \
                == expected


def test_hypergeometric_rejects_bad_denominator():
    with pytest.raises(ZeroDivisionError):
        hypergeometric_truncation([Fraction(1, 5)], [], 5, 1)


def test_truncation_search_empty_for_arrow_pencil():
    spec = build_pencil(2, 4)
    for p in (5, 7, 11):
        assert truncation_search(p, count_table(spec, p)) == []


def test_truncation_search_requires_complete_counts():
    spec = build_pencil(2, 4)
    with pytest.raises(ValueError):
        truncation_search(5, count_table(spec, 5)[:-1])
    with pytest.raises(ValueError):
        truncation_search(7, count_table(spec, 5))


def test_truncation_search_finds_planted_relation():
    # positive control: residues manufactured from the truncation itself
    # must be recovered, so the empty result above is not vacuous
    p, a, b = 7, 3, 2
    records = []
    for t in range(1, p):
        z = a * pow(t, b, p) % p
        residue = (1 - hypergeometric_truncation(LT_UPPER, LT_LOWER, p, z)) % p
        records.append(PointCountRecord(p=p, t=t, count=residue,
                                        residue=residue))
    hits = truncation_search(p, records)
    assert (a, b) in hits


def test_period_coefficients_validation():
    with pytest.raises(ValueError):
        period_coefficients(default_kernel(), -1)

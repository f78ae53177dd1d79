import pytest

from subpack.errors import ParameterError
from subpack.gf import enumerate_subspaces
from subpack.qcalc import gaussian_binomial, q_int


def product_formula(n, k, q):
    # independent oracle: full numerator/denominator products
    if k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


def test_reference_values():
    assert gaussian_binomial(6, 1, 2) == 63
    assert gaussian_binomial(4, 1, 2) == 15
    assert gaussian_binomial(9, 1, 2) * 34 == 17374
    assert gaussian_binomial(7, 2, 2) == 2667
    assert gaussian_binomial(8, 2, 2) == 10795


def test_trivial_edges():
    for q in (2, 3, 4):
        for n in range(7):
            assert gaussian_binomial(n, 0, q) == 1
            assert gaussian_binomial(n, n, q) == 1
    assert gaussian_binomial(3, 5, 2) == 0


def test_against_product_formula():
    for q in (2, 3, 4, 5):
        for n in range(11):
            for k in range(n + 1):
                assert gaussian_binomial(n, k, q) == product_formula(n, k, q)


def test_q_pascal_identity():
    for q in (2, 3, 4, 5):
        for n in range(1, 13):
            for k in range(1, n + 1):
                lhs = gaussian_binomial(n, k, q)
                rhs = q ** k * gaussian_binomial(n - 1, k, q) + gaussian_binomial(n - 1, k - 1, q)
                assert lhs == rhs


def test_symmetry():
    for q in (2, 3, 4, 5):
        for n in range(13):
            for k in range(n + 1):
                assert gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q)


def test_q_int():
    assert q_int(2, 2) == 3
    assert q_int(5, 2) == sum(2 ** i for i in range(5)) == 31
    assert q_int(6, 2) == 63
    assert q_int(0, 3) == 0


def test_counting_matches_enumeration():
    for q in (2, 3, 4):
        nmax = 6 if q == 2 else 5
        for n in range(nmax + 1):
            for k in range(n + 1):
                count = sum(1 for _ in enumerate_subspaces(n, k, q))
                assert count == gaussian_binomial(n, k, q)


def test_rejects_bad_arguments():
    with pytest.raises(ParameterError):
        gaussian_binomial(-1, 0, 2)
    with pytest.raises(ParameterError):
        gaussian_binomial(3, 1, 1)

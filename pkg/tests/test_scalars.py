import pytest
from hypothesis import given, strategies as st

from hopfcoh.errors import NoSuchRoot, NotPrime
from hopfcoh.scalars import is_prime, make_prime_field, multiplicative_order, primitive_root_of_unity, zeta_binomial

SMALL_PRIMES = [2, 3, 5, 7, 11, 13]


def test_is_prime_small_table():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("p", [0, 1, 4, 6, 9, 15])
def test_non_primes_rejected(p):
    with pytest.raises(NotPrime):
        make_prime_field(p)


@given(st.sampled_from(SMALL_PRIMES), st.integers(), st.integers(), st.integers())
def test_field_axioms(p, a, b, c):
    F = make_prime_field(p)
    x, y, z = F(a), F(b), F(c)
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x + (-x) == F.zero()
    if x != F.zero():
        assert x * x.inverse() == F.one()


@pytest.mark.parametrize("p,n", [(5, 2), (5, 4), (7, 3), (7, 6), (13, 3)])
def test_primitive_root_has_exact_order(p, n):
    z = primitive_root_of_unity(make_prime_field(p), n)
    assert multiplicative_order(int(z), p) == n


def test_fifth_roots_of_order_three_do_not_exist():
    with pytest.raises(NoSuchRoot):
        primitive_root_of_unity(make_prime_field(5), 3)


def test_zeta_binomial_at_one_is_ordinary_binomial():
    from math import comb

    F = make_prime_field(7)
    for i in range(6):
        for s in range(i + 1):
            assert int(zeta_binomial(i, s, F(1))) == comb(i, s) % 7


@pytest.mark.parametrize("p,n", [(5, 2), (7, 3), (13, 4)])
def test_zeta_binomial_vanishes_at_order(p, n):
    # (x + y)^n = x^n + y^n for zeta-commuting x, y
    z = primitive_root_of_unity(make_prime_field(p), n)
    assert all(int(zeta_binomial(n, s, z)) == 0 for s in range(1, n))


def test_zeta_binomial_rejects_bad_range():
    with pytest.raises(ValueError):
        zeta_binomial(2, 3, make_prime_field(5)(2))


@pytest.mark.parametrize("p", [5, 7, 13])
def test_zeta_binomial_pascal_rule_up_to_twelve(p):
    F = make_prime_field(p)
    for z in range(1, p):
        zeta = F(z)
        for i in range(1, 13):
            for s in range(1, i):
                lhs = zeta_binomial(i, s, zeta)
                rhs = zeta_binomial(i - 1, s - 1, zeta) + zeta**s * zeta_binomial(i - 1, s, zeta)
                assert lhs == rhs


def test_zeta_binomial_golden():
    # (3 choose 1) at zeta = 2 in F_7 is 1 + 2 + 4 = 0; (4 choose 2)_q = (1+q^2)(1+q+q^2)
    F = make_prime_field(7)
    assert [int(zeta_binomial(3, s, F(2))) for s in range(4)] == [1, 0, 0, 1]
    assert [int(zeta_binomial(4, s, F(3))) for s in range(5)] == [1, 5, 4, 5, 1]

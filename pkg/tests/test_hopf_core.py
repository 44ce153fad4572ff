import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfcoh.hopf_core import HopfData, check_hopf, grouplikes, units
from hopfcoh.linalg import LinearMap
from hopfcoh.models import cyclic_group, function_algebra, group_algebra, taft_algebra


@pytest.mark.parametrize("n,p", [(2, 5), (3, 7), (2, 3), (4, 5)])
def test_taft_is_a_hopf_algebra(n, p):
    H, _ = taft_algebra(n, p)
    assert check_hopf(H, require_coop=True).ok


@pytest.mark.parametrize("n,p", [(2, 5), (2, 3)])
def test_taft_grouplikes_are_powers_of_g(n, p):
    H, _ = taft_algebra(n, p)
    gr = grouplikes(H)
    # g^a h^0 sits at index a * n
    assert sorted(int(np.flatnonzero(x.vec)[0]) for x in gr) == [a * n for a in range(n)]
    assert all(len(np.flatnonzero(x.vec)) == 1 for x in gr)


def test_grouplike_search_respects_budget():
    from hopfcoh.errors import BudgetExceeded

    H, _ = taft_algebra(3, 7)
    with pytest.raises(BudgetExceeded):
        grouplikes(H)


def test_group_algebra_grouplikes():
    H = group_algebra(cyclic_group(3), 7)
    assert len(grouplikes(H)) == 3


def test_function_algebra_grouplikes_are_characters():
    # Hom(Z/3, F_7^x) has 3 elements
    assert len(grouplikes(function_algebra(cyclic_group(3), 7))) == 3
    # Hom(Z/3, F_5^x) is trivial
    assert len(grouplikes(function_algebra(cyclic_group(3), 5))) == 1


def test_units_of_taft_2_5():
    # H_4 = k[g] x| k[h]/h^2: units are invertible elements of the group part plus the radical
    H, _ = taft_algebra(2, 5)
    count = len(units(H.algebra))
    assert count == 16 * 25  # (F_5^x)^2 choices on k[Z/2], times the radical h*k[Z/2]


def test_corrupted_antipode_is_reported():
    H, _ = taft_algebra(2, 5)
    bad = LinearMap.from_dense(H.sigma.dom, H.sigma.cod, H.p, np.eye(H.dim, dtype=np.int64))
    broken = HopfData(H.algebra, H.coalgebra, bad, name="broken")
    rep = check_hopf(broken)
    assert not rep.ok
    assert any("antipode" in f.axiom for f in rep.failures)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=12, max_size=12))
def test_taft_multiplication_associative_on_samples(xs):
    H, _ = taft_algebra(2, 5)
    a, b, c = (np.array(xs[i * 4 : i * 4 + 4]) for i in range(3))
    A = H.algebra
    assert np.array_equal(A.mul(A.mul(a, b), c), A.mul(a, A.mul(b, c)))


def test_serialization_roundtrip():
    H, _ = taft_algebra(2, 5)
    H2 = HopfData.from_dict(H.to_dict())
    assert H2.mu == H.mu and H2.delta == H.delta and H2.sigma == H.sigma

import numpy as np
import pytest

from hopfcoh.errors import NotAnAction, NotPrime
from hopfcoh.hopf_core import check_hopf
from hopfcoh.models import (
    FiniteGroup,
    GroupAction,
    action_from_coaction,
    comodule_from_group_action,
    cyclic_group,
    function_algebra,
    function_algebra_action,
    group_algebra,
    semidirect,
    taft_pair,
    trivial_action,
)
from hopfcoh.radford import check_comodule_algebra


def test_s3_is_nonabelian_of_order_six(s3):
    G, A, act, D = s3
    assert D.order == 6 and not D.is_abelian()


def test_trivial_action_gives_direct_product():
    G, A = cyclic_group(2), cyclic_group(3)
    D = semidirect(G, A, trivial_action(G, A))
    assert D.is_abelian() and D.order == 6


def test_function_algebra_idempotents():
    D = cyclic_group(3)
    H = function_algebra(D, 5)
    A = H.algebra
    e = np.eye(3, dtype=np.int64)
    for d in range(3):
        assert np.array_equal(A.mul(e[d], e[d]), e[d])
    assert np.array_equal(A.one, np.ones(3, dtype=np.int64))
    assert check_hopf(H).ok


def test_group_algebra_is_cocommutative_hopf():
    assert check_hopf(group_algebra(cyclic_group(4), 5), require_coop=True).ok


def test_kA_coaction_formula(s3, s3_pair):
    G, A, act, _ = s3
    rho = s3_pair.braided.coaction.dense()
    nG = G.order
    for a in A:
        col = rho[:, a]
        expected = np.zeros_like(col)
        for h in G:
            expected[act(h, a) * nG + h] = 1
        assert np.array_equal(col, expected)


def test_comodule_from_action_roundtrip(s3):
    G, A, act, D = s3
    C = cyclic_group(3)
    table = [C.inverse if d // 3 else np.arange(3) for d in D]
    F, maps = function_algebra_action(D, GroupAction(D, C, table), 5)
    Fc = comodule_from_group_action(D, F, maps, 5)
    assert check_comodule_algebra(Fc.algebra, Fc.hopf, Fc.rho_H).ok
    assert action_from_coaction(Fc) == maps


def test_bad_action_rejected():
    G, C = cyclic_group(2), cyclic_group(3)
    with pytest.raises(NotAnAction):
        GroupAction(G, C, [[0, 1, 2], [0, 1, 1]])


def test_bad_group_rejected():
    with pytest.raises(ValueError):
        FiniteGroup("bad", "ab", [[0, 0], [0, 0]])


def test_taft_needs_a_prime():
    with pytest.raises(NotPrime):
        taft_pair(2, 9)

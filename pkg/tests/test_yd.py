import numpy as np

from hopfcoh.linalg import LinearMap, identity
from hopfcoh.models import group_algebra, cyclic_group
from hopfcoh.yd import (
    YDObject,
    braiding_is_invertible,
    braiding_tau,
    check_braiding_colinear,
    check_comodule,
    check_module,
    check_prebraiding,
    check_tau_relations,
    check_yd,
    flip_is_tau,
    regular_comodule,
    tensor_coaction,
    trivial_comodule,
    trivial_module,
)


def test_taft_E_is_yetter_drinfeld(taft2, taft3):
    for P in (taft2, taft3):
        E = P.braided
        assert check_module(E.module).ok
        assert check_comodule(E.comodule).ok
        assert check_yd(E.yd).ok


def test_function_algebra_pair_is_yetter_drinfeld(s3_pair):
    assert check_yd(s3_pair.braided.yd).ok


def test_trivial_structures_are_yetter_drinfeld():
    H = group_algebra(cyclic_group(2), 5)
    yd = YDObject(trivial_module(H.space, H), trivial_comodule(H.space, H))
    assert check_yd(yd).ok
    assert flip_is_tau(yd.module, yd.comodule)


def test_braiding_relations_on_E(taft2):
    E = taft2.braided
    I = identity(E.space, E.p)
    assert check_prebraiding(E.module, E.module, E.comodule, E.comodule, I, I).ok
    assert check_tau_relations(E.module, E.comodule).ok
    assert check_braiding_colinear(E.yd, E.comodule).ok
    assert braiding_is_invertible(E.module, E.comodule)


def test_braiding_is_not_the_flip_on_E(taft2):
    E = taft2.braided
    assert not flip_is_tau(E.module, E.comodule)


def test_prebraiding_detects_a_non_colinear_map(taft2):
    E = taft2.braided
    I = identity(E.space, E.p)
    # y -> 1 does not respect degrees
    bad = LinearMap.from_dense((E.space,), (E.space,), E.p, np.array([[1, 1], [0, 0]]))
    rep = check_prebraiding(E.module, E.module, E.comodule, E.comodule, I, bad)
    assert not rep.ok


def test_braided_coaction_matches_plain_for_trivial_action():
    H = group_algebra(cyclic_group(3), 7)
    M = trivial_module(H.space, H)
    N = regular_comodule(H)
    plain = tensor_coaction(N, N)
    braided = tensor_coaction(N, N, braided=True)
    assert plain.coaction == braided.coaction
    assert braiding_tau(M, N) is not None

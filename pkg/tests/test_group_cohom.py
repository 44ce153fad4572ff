import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfcoh.errors import BudgetExceeded
from hopfcoh.group_cohom import (
    GroupCocycle,
    act_on_cocycles,
    cross_check_hopf_vs_group,
    group_box_set,
    group_h0,
    group_h1,
    group_z1,
    group_z1_array,
    semidirect_compatible,
    verify_semidirect_decomposition,
)
from hopfcoh.models import (
    GroupAction,
    cyclic_group,
    embed_left,
    embed_right,
    inversion_action,
    restrict_action,
    semidirect_action,
    trivial_action,
    trivial_group,
)

Z2, Z3 = cyclic_group(2, "s", "Z2"), cyclic_group(3, "r", "Z3")


def natural_c3(s3):
    G, A, act, D = s3
    C = cyclic_group(3, "c", "C3")
    return C, semidirect_action(D, G, A, inversion_action(G, C), trivial_action(A, C))


def test_h0_examples():
    assert group_h0(Z2, Z3, trivial_action(Z2, Z3)) == [0, 1, 2]
    assert group_h0(Z2, Z3, inversion_action(Z2, Z3)) == [0]


def test_z1_examples():
    inv = inversion_action(Z2, Z3)
    z = group_z1(Z2, Z3, inv)
    assert len(z) == 3
    assert GroupCocycle("Z2", (0, 0)) in z
    one = trivial_group()
    assert len(group_z1(one, Z3, trivial_action(one, Z3))) == 1


def test_h1_examples():
    assert group_h1(Z2, Z3, inversion_action(Z2, Z3)).h1_count == 1
    assert group_h1(Z2, Z2, trivial_action(Z2, Z2)).h1_count == 2
    one = trivial_group()
    assert group_h1(Z3, one, trivial_action(Z3, one)).h1_count == 1


def test_h1_with_trivial_action_counts_conjugacy_classes_of_homs(s3):
    # Hom(Z/2, S3) has 4 elements falling into 2 conjugacy classes
    D = s3[3]
    rep = group_h1(Z2, D, trivial_action(Z2, D))
    assert len(rep.z1) == 4 and rep.h1_count == 2


def test_budget():
    with pytest.raises(BudgetExceeded):
        group_z1_array(Z3, Z3, trivial_action(Z3, Z3), budget=5)


SMALL = [
    (Z2, Z3, lambda: inversion_action(Z2, Z3)),
    (Z2, Z2, lambda: trivial_action(Z2, Z2)),
    (Z3, Z3, lambda: trivial_action(Z3, Z3)),
    (cyclic_group(4), Z3, lambda: inversion_action(cyclic_group(4), Z3)),
]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(range(len(SMALL))), st.data())
def test_action_is_a_right_action_preserving_z1(k, data):
    D, C, mk = SMALL[k]
    a = GroupAction(D, C, mk().table)
    T = group_z1_array(D, C, a)
    keys = {row.tobytes() for row in T}
    x = data.draw(st.integers(0, C.order - 1))
    y = data.draw(st.integers(0, C.order - 1))
    assert np.array_equal(act_on_cocycles(T, C.identity, C, a), T)
    moved = act_on_cocycles(T, x, C, a)
    assert all(row.tobytes() in keys for row in moved)
    assert np.array_equal(act_on_cocycles(moved, y, C, a), act_on_cocycles(T, C.mul(x, y), C, a))


def test_box_set_examples(s3):
    G, A, act, D = s3
    C, nat = natural_c3(s3)
    on_G, on_A = restrict_action(nat, G, embed_left(G, A)), restrict_action(nat, A, embed_right(G, A))
    assert semidirect_compatible(G, A, act, on_G, on_A)
    box = group_box_set(G, A, act, C, on_G, on_A)
    assert box.distinguished >= 0
    assert len(box) == len(group_z1(D, C, nat))


def test_box_set_with_trivial_G():
    one = trivial_group()
    C = cyclic_group(3, "c")
    box = group_box_set(one, Z3, trivial_action(one, Z3), C, trivial_action(one, C), trivial_action(Z3, C))
    assert len(box) == len(group_z1(Z3, C, trivial_action(Z3, C)))


@pytest.mark.parametrize("coeff", ["natural", "trivial action", "trivial group"])
def test_semidirect_decomposition(s3, coeff):
    G, A, act, D = s3
    if coeff == "natural":
        C, a = natural_c3(s3)
    elif coeff == "trivial action":
        C = cyclic_group(3, "c")
        a = trivial_action(D, C)
    else:
        C = trivial_group()
        a = trivial_action(D, C)
    rep = verify_semidirect_decomposition(G, A, act, C, a)
    assert rep.ok, rep.checks.failures
    assert rep.data["h1_D"] == rep.data["box_classes"]


def test_semidirect_with_trivial_A():
    one = trivial_group()
    C = cyclic_group(3, "c")
    D_act = trivial_action(cyclic_group(2), one)
    from hopfcoh.models import semidirect

    D = semidirect(Z2, one, trivial_action(Z2, one))
    rep = verify_semidirect_decomposition(Z2, one, trivial_action(Z2, one), C, trivial_action(D, C))
    assert rep.ok and D_act.is_trivial()


@pytest.mark.parametrize("p", [2, 3])
def test_cross_check_cyclic(p):
    rep = cross_check_hopf_vs_group(Z2, trivial_action(Z2, cyclic_group(2, "c")), p)
    assert rep.ok, rep.checks.failures
    if p == 3:
        assert rep.data["units"] == 4


def test_cross_check_trivial_domain():
    one = trivial_group()
    rep = cross_check_hopf_vs_group(one, trivial_action(one, cyclic_group(2, "c")), 3)
    assert rep.ok and rep.data["group_h1"] == 1


def test_cross_check_s3_over_f2_is_trivial(s3):
    G, A, act, D = s3
    C, nat = natural_c3(s3)
    rep = cross_check_hopf_vs_group(D, nat, 2, semidirect_data=(G, A, act))
    assert rep.ok
    assert rep.data["units"] == 1 and rep.data["hopf_h1"] == rep.data["group_h1"] == 1


def test_cocycle_serialization():
    c = GroupCocycle("Z2", (0, 2))
    assert json.loads(json.dumps(c.to_dict())) == {"domain": "Z2", "values": [0, 2]}
    assert GroupCocycle.from_dict(c.to_dict()) == c

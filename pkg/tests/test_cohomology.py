import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hopfcoh.errors import BudgetExceeded, IncompatiblePair, PrerequisiteFailed
from hopfcoh.hopf_core import grouplikes, unit_pairs
from hopfcoh.linalg import identity, tensor
from hopfcoh.models import cyclic_group, group_algebra, kA_in_yd, trivial_group
from hopfcoh.radford import BraidedHopfData, ComoduleAlgebraData, self_coefficients, trivial_braided, trivial_comodule_algebra
from hopfcoh.yd import YDObject, trivial_comodule, trivial_module
from hopfcoh.cohomology import (
    act,
    assemble_batch,
    assemble_pair,
    build_box_set,
    build_C,
    build_Cstar,
    build_setting,
    check_diagram,
    check_twisted,
    coinvariants,
    compute_h0,
    compute_h1,
    compute_z1,
    split_pair,
    tensor_coinvariant_dimension,
    verify_decomposition,
    verify_exact_sequence,
)


@pytest.fixture(scope="module")
def kZ3():
    return group_algebra(cyclic_group(3), 7)


@pytest.fixture(scope="module")
def taft_C(taft2):
    return build_C(taft2.taft, taft2.comodule_algebra)


@pytest.fixture(scope="module")
def star_EE(taft2):
    E = taft2.braided
    return build_Cstar(E, self_coefficients(E))


def test_trivial_coefficients_have_equal_cofaces(kZ3):
    d = build_C(kZ3, trivial_comodule_algebra(kZ3))
    assert d.low[0] == d.low[1]


def test_regular_coefficients_use_the_comultiplication(kZ3):
    F = ComoduleAlgebraData(kZ3.algebra, hopf=kZ3, rho_H=kZ3.delta)
    d = build_C(kZ3, F)
    assert d.low[0].mat.toarray().tolist() == kZ3.delta.mat.toarray().tolist()


def test_diagrams_are_pre_cosimplicial(taft2_setting):
    s = taft2_setting
    for d in (s.C_H, s.C_star, s.C_HE, s.T.diagram):
        assert check_diagram(d).ok
    assert check_twisted(s.T, s.C_star).ok


def test_star_diagram_dimensions(star_EE):
    assert [A.dim for A in star_EE.diagram.levels] == [2, 4, 8]


def test_star_diagram_over_trivial_H_is_the_plain_one():
    # E = k[Z/2] viewed in YD over k: the braiding is the flip
    k = group_algebra(trivial_group(), 5)
    H = group_algebra(cyclic_group(2), 5)
    yd = YDObject(trivial_module(H.space, k), trivial_comodule(H.space, k))
    E = BraidedHopfData(yd, H.mu, H.eta, H.delta, H.eps, H.sigma, name="E")
    F = ComoduleAlgebraData(
        H.algebra, hopf=k, rho_H=tensor(identity(H.space, 5), k.eta), braided=E, rho_E=H.delta, kind="radford"
    )
    star = build_Cstar(E, F).diagram
    plain = build_C(E.as_plain_hopf(), ComoduleAlgebraData(H.algebra, hopf=E.as_plain_hopf(), rho_H=H.delta))
    for a, b in zip(star.levels, plain.levels):
        assert a.mult.mat.toarray().tolist() == b.mult.mat.toarray().tolist()
    for f, g in zip(star.low + star.high, plain.low + plain.high):
        assert f.mat.toarray().tolist() == g.mat.toarray().tolist()
    assert compute_h1(star).h1_count == compute_h1(plain).h1_count


def test_h0_examples(taft_C, star_EE, kZ3):
    assert len(compute_h0(taft_C)) == 4
    assert len(compute_h0(star_EE.diagram)) == 4
    assert len(compute_h0(build_C(kZ3, trivial_comodule_algebra(kZ3)))) == 6


def test_z1_with_trivial_coefficients_is_grouplikes(kZ3):
    d = build_C(kZ3, trivial_comodule_algebra(kZ3))
    z = compute_z1(d)
    assert len(z) == 3
    assert {tuple(v) for v in z.vectors} == {tuple(g.vec) for g in grouplikes(kZ3)}


def test_z1_taft_search_size_and_distinguished(taft_C):
    z = compute_z1(taft_C)
    assert z.method == "normalized" and z.searched == 5**6
    assert np.array_equal(z.vectors[z.distinguished], taft_C.levels[1].one)


def test_normalized_equals_unnormalized(taft_C, star_EE, kZ3):
    for d in (taft_C, star_EE.diagram, build_C(kZ3, trivial_comodule_algebra(kZ3))):
        a, b = compute_z1(d, method="normalized"), compute_z1(d, method="unnormalized")
        assert np.array_equal(a.vectors, b.vectors)


def test_reduced_equals_normalized(taft_C, taft2_setting):
    for d in (taft_C, taft2_setting.C_HE):
        assert np.array_equal(compute_z1(d, method="reduced").vectors, compute_z1(d, method="normalized").vectors)


def test_budget_is_enforced(taft_C):
    with pytest.raises(BudgetExceeded):
        compute_z1(taft_C, budget=100, method="normalized")


def test_h1_examples(taft_C, star_EE, kZ3):
    assert compute_h1(taft_C).h1_count == 2
    assert compute_h1(build_C(kZ3, trivial_comodule_algebra(kZ3))).h1_count == 3
    assert compute_h1(star_EE.diagram).h1_count == 1


def test_h1_report_shape(taft_C):
    rep = compute_h1(taft_C).to_dict()
    assert rep["z1_count"] == 10 and len(rep["h0"]) == 4
    assert sum(c["orbit_size"] for c in rep["h1_classes"]) == 10
    assert sum(c["distinguished"] for c in rep["h1_classes"]) == 1
    reps = [c["rep"] for c in rep["h1_classes"]]
    assert reps == sorted(reps)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_action_is_a_right_action(taft_C, data):
    z = compute_z1(taft_C)
    pairs = unit_pairs(taft_C.levels[0])
    A0 = taft_C.levels[0]
    X = z.cocycles[data.draw(st.integers(0, len(z) - 1))]
    (x, _), (y, _) = (pairs[data.draw(st.integers(0, len(pairs) - 1))] for _ in range(2))
    one = A0.element(A0.one)
    assert act(X, one, taft_C) == X
    assert act(act(X, x, taft_C), y, taft_C) == act(X, A0.element(A0.mul(x.vec, y.vec)), taft_C)
    assert tuple(act(X, x, taft_C).vec) in {tuple(v) for v in z.vectors}


def test_action_on_trivial_coefficients_is_trivial(kZ3):
    d = build_C(kZ3, trivial_comodule_algebra(kZ3))
    z = compute_z1(d)
    for X in z.cocycles:
        for x, _ in unit_pairs(d.levels[0]):
            assert act(X, x, d) == X


def test_box_set(taft2_setting):
    box = build_box_set(taft2_setting)
    assert box.distinguished >= 0
    assert box.predicates_agree
    assert len(box) == 10


def test_split_and_assemble(taft2_setting):
    s = taft2_setting
    one = s.C_HE.levels[1].element(s.C_HE.levels[1].one)
    XH, XE = split_pair(s, one)
    assert np.array_equal(XH.vec, s.C_H.levels[1].one) and np.array_equal(XE.vec, s.C_star.levels[1].one)
    assert assemble_pair(s, XH, XE) == one
    z = compute_z1(s.C_HE)
    for X in z.cocycles:
        assert assemble_pair(s, *split_pair(s, X)) == X


def test_split_rejects_non_cocycles(taft2_setting):
    s = taft2_setting
    A1 = s.C_HE.levels[1]
    with pytest.raises(PrerequisiteFailed):
        split_pair(s, A1.element(np.zeros(A1.dim, dtype=np.int64)))


def test_assemble_rejects_incompatible_pairs(taft2_setting):
    s = taft2_setting
    zH, zE = compute_z1(s.C_H), compute_z1(s.C_star)
    box = build_box_set(s, z1_H=zH, z1_E=zE)
    compatible = set(box.pairs)
    bad = next((i, j) for i in range(len(zH)) for j in range(len(zE)) if (i, j) not in compatible)
    with pytest.raises(IncompatiblePair):
        assemble_pair(s, zH.cocycles[bad[0]], zE.cocycles[bad[1]])


def test_trivial_E_makes_assembly_the_identity(taft2):
    H = taft2.group_hopf
    k = trivial_braided(H)
    Fp = taft2.braided
    F = ComoduleAlgebraData(
        Fp.algebra, hopf=H, rho_H=Fp.coaction, braided=k, rho_E=tensor(identity(Fp.space, 5), k.eta), kind="radford"
    )
    s = build_setting(H, k, F)
    z = compute_z1(s.C_H)
    ones = np.tile(s.C_star.levels[1].one, (len(z), 1))
    assert np.array_equal(assemble_batch(s, z.vectors, ones), z.vectors)
    assert verify_decomposition(H, k, F).ok


def test_coinvariants(taft2):
    E = taft2.braided
    F = self_coefficients(E)
    assert coinvariants(F, E, taft2.group_hopf).algebra.dim == 1
    H = taft2.group_hopf
    trivial = ComoduleAlgebraData(
        F.algebra, hopf=H, rho_H=F.rho_H, braided=E, rho_E=tensor(identity(F.space, 5), E.eta), kind="radford"
    )
    assert coinvariants(trivial, E, H).algebra.dim == 2
    for i in range(3):
        assert tensor_coinvariant_dimension(F, E, H, i) == 2**i


def test_decomposition_on_taft(taft2):
    E = taft2.braided
    rep = verify_decomposition(taft2.group_hopf, E, self_coefficients(E))
    assert rep.ok, rep.checks.failures


def test_exact_sequence_on_taft(taft2):
    E = taft2.braided
    rep = verify_exact_sequence(taft2.group_hopf, E, self_coefficients(E))
    assert rep.ok, rep.checks.failures
    assert rep.data["h1_CE"] == 2


def test_decomposition_and_sequence_on_function_algebras(s3):
    G, A, a, _ = s3
    fp = kA_in_yd(G, A, a, 3)
    F = self_coefficients(fp.braided)
    assert verify_decomposition(fp.hopf, fp.braided, F).ok
    assert verify_exact_sequence(fp.hopf, fp.braided, F).ok

import numpy as np
import pytest

from hopfcoh.hopf_core import check_hopf
from hopfcoh.linalg import LinearMap
from hopfcoh.models import group_algebra, cyclic_group, structure_constant_match
from hopfcoh.radford import (
    ComoduleAlgebraData,
    assemble_coaction,
    check_bialgebra_morphism,
    check_braided_hopf,
    check_radford_comodule_algebra,
    radford_maps,
    radford_product,
    self_coefficients,
    split_coaction,
    star_extension,
    trivial_braided,
    trivial_comodule_algebra,
)


@pytest.mark.parametrize("which", ["taft2", "taft3"])
def test_braided_E_and_biproduct(which, request):
    P = request.getfixturevalue(which)
    assert check_braided_hopf(P.braided).ok
    HE = radford_product(P.group_hopf, P.braided)
    assert check_hopf(HE, require_coop=True).ok
    assert structure_constant_match(HE, P.taft, P.correspondence).ok


def test_function_algebra_biproduct(s3_pair):
    HE = radford_product(s3_pair.hopf, s3_pair.braided)
    assert structure_constant_match(HE, s3_pair.function_D, s3_pair.correspondence).ok


def test_trivial_braided_gives_back_H():
    H = group_algebra(cyclic_group(3), 7)
    HE = radford_product(H, trivial_braided(H))
    assert structure_constant_match(HE, H, list(range(3))).ok


def test_inclusions_and_projections_are_bialgebra_maps(taft2):
    H, E = taft2.group_hopf, taft2.braided
    HE = radford_product(H, E)
    maps = radford_maps(H, E, HE)
    assert check_bialgebra_morphism(maps["H->H*E"], H, HE, "inclusion").ok
    assert check_bialgebra_morphism(maps["H*E->H"], HE, H, "projection").ok


def test_split_and_assemble_coactions_are_inverse(taft2):
    H, E = taft2.group_hopf, taft2.braided
    HE = radford_product(H, E)
    F = self_coefficients(E)
    assembled = assemble_coaction(F, E, HE)
    back = split_coaction(ComoduleAlgebraData(F.algebra, product=HE, rho_HE=assembled.rho_HE, braided=E, hopf=H), E)
    assert back.rho_H == F.rho_H and back.rho_E == F.rho_E


@pytest.mark.parametrize("which,dims", [("taft2", (2, 4, 8)), ("taft3", (3, 9, 27))])
def test_star_extensions(which, dims, request):
    E = request.getfixturevalue(which).braided
    F = self_coefficients(E)
    FE = star_extension(F, E)
    FEE = star_extension(FE, E)
    assert (F.dim, FE.dim, FEE.dim) == dims
    assert check_radford_comodule_algebra(FE, E).ok


def test_trivial_coefficients_are_radford(taft2):
    E = taft2.braided
    assert check_radford_comodule_algebra(trivial_comodule_algebra(taft2.group_hopf, E), E).ok


def test_broken_E_coaction_is_detected(taft2):
    E = taft2.braided
    F = self_coefficients(E)
    wrong = LinearMap.from_dense(F.rho_E.dom, F.rho_E.cod, F.p, np.eye(4, 2, dtype=np.int64))
    bad = ComoduleAlgebraData(F.algebra, hopf=F.hopf, rho_H=F.rho_H, braided=E, rho_E=wrong, kind="radford")
    assert not check_radford_comodule_algebra(bad, E).ok

"""Hopf algebras in the Yetter-Drinfeld category, Radford products H*E and
Radford comodule algebras.

Formulas, with h, h' in H and x, x' in E:

    (h*x)(h'*x')  = h h'_1 * (x.h'_2) x'
    Delta(h*x)    = (h_1 * (x_1)_0) x (h_2 (x_1)_1 * x_2)
    S(h*x)        = (1 * S_E(x_0)) (S_H(h x_1) * 1)

and for a Radford E-comodule algebra F, the algebra F*E lives on F x E with

    (f x e)(f' x e') = f f'_0 x (e.f'_1) e'

the tensor-product H-coaction and the E-coaction id_F x Delta_E.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PrerequisiteFailed
from .hopf_core import (
    AlgebraData,
    CheckReport,
    CoalgebraData,
    HopfData,
    check_algebra,
    check_coalgebra,
    check_hopf,
)
from .linalg import (
    BasedSpace,
    LinearMap,
    chain,
    identity,
    merge_spaces,
    permute_factors,
    tensor,
)
from .yd import (
    HComodule,
    HModule,
    YDObject,
    braiding_tau,
    check_yd,
    is_comodule_morphism,
    is_module_morphism,
    tensor_coaction,
    tensor_module,
    trivial_comodule,
    trivial_module,
    unit_space,
)


class BraidedHopfData:
    """A Hopf algebra E in the Yetter-Drinfeld category of H."""

    def __init__(self, yd: YDObject, mult, unit, comult, counit, antipode, name: str | None = None):
        self.yd = yd
        self.algebra = AlgebraData(yd.space, mult, unit)
        self.coalgebra = CoalgebraData(yd.space, comult, counit)
        self.antipode = antipode
        self.name = name or yd.space.name

    space = property(lambda self: self.yd.space)
    hopf = property(lambda self: self.yd.hopf)
    p = property(lambda self: self.yd.hopf.p)
    dim = property(lambda self: self.yd.space.dim)
    mu = property(lambda self: self.algebra.mult)
    eta = property(lambda self: self.algebra.unit)
    delta = property(lambda self: self.coalgebra.comult)
    eps = property(lambda self: self.coalgebra.counit)
    sigma = property(lambda self: self.antipode)
    action = property(lambda self: self.yd.module.action)
    coaction = property(lambda self: self.yd.comodule.coaction)

    @property
    def module(self) -> HModule:
        return self.yd.module

    @property
    def comodule(self) -> HComodule:
        return self.yd.comodule

    def tau_EE(self) -> LinearMap:
        return braiding_tau(self.module, self.comodule)

    def as_plain_hopf(self) -> HopfData:
        """E viewed as an ordinary Hopf algebra (meaningful when tau is the flip)."""
        return HopfData(self.algebra, self.coalgebra, self.antipode, name=self.name)

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.p},
            "space": self.space.to_dict(),
            "mult": self.mu.to_dict(),
            "unit": self.eta.to_dict(),
            "comult": self.delta.to_dict(),
            "counit": self.eps.to_dict(),
            "antipode": self.sigma.to_dict(),
            "action": self.action.to_dict(),
            "coaction": self.coaction.to_dict(),
        }


def trivial_braided(H: HopfData) -> BraidedHopfData:
    """The ground field k as a Hopf algebra in YD_H."""
    k = unit_space()
    p = H.p
    idk = identity(k, p)
    yd = YDObject(trivial_module(k, H), trivial_comodule(k, H))
    return BraidedHopfData(
        yd,
        idk.retyped(dom=(k, k)),
        idk.retyped(dom=()),
        idk.retyped(cod=(k, k)),
        idk.retyped(cod=()),
        idk,
        name="k",
    )


def _unit_module(H: HopfData) -> HModule:
    return trivial_module(unit_space(), H)


def _unit_comodule(H: HopfData) -> HComodule:
    return trivial_comodule(unit_space(), H)


def _braided_mult_square(E: BraidedHopfData) -> LinearMap:
    """(mu x mu)(id x tau_{E,E} x id): E^4 -> E^2."""
    p, S = E.p, E.space
    return tensor(E.mu, E.mu) @ tensor(identity(S, p), E.tau_EE(), identity(S, p))


def check_braided_hopf(E: BraidedHopfData) -> CheckReport:
    H, p, S = E.hopf, E.p, E.space
    rep = CheckReport(f"braided Hopf algebra {E.name}")
    rep.extend(check_yd(E.yd))
    rep.extend(check_algebra(E.algebra))
    rep.extend(check_coalgebra(E.coalgebra))

    EE_mod = tensor_module(E.module, E.module)
    EE_com = tensor_coaction(E.comodule, E.comodule)
    k_mod, k_com = _unit_module(H), _unit_comodule(H)
    k = unit_space()

    def mod_ok(name, f, src, dst):
        rep.record(f"{name} is H-linear", is_module_morphism(f, src, dst))

    def com_ok(name, f, src, dst):
        rep.record(f"{name} is H-colinear", is_comodule_morphism(f, src, dst))

    mu = E.mu.retyped(dom=(EE_mod.space,))
    delta = E.delta.retyped(cod=(EE_mod.space,))
    eta = E.eta.retyped(dom=(k,))
    eps = E.eps.retyped(cod=(k,))
    mod_ok("multiplication", mu, EE_mod, E.module)
    com_ok("multiplication", mu, EE_com, E.comodule)
    mod_ok("unit", eta, k_mod, E.module)
    com_ok("unit", eta, k_com, E.comodule)
    mod_ok("comultiplication", delta, E.module, EE_mod)
    com_ok("comultiplication", delta, E.comodule, EE_com)
    mod_ok("counit", eps, E.module, k_mod)
    com_ok("counit", eps, E.comodule, k_com)
    mod_ok("antipode", E.sigma, E.module, E.module)
    com_ok("antipode", E.sigma, E.comodule, E.comodule)

    rep.equal("braided comultiplication is multiplicative", E.delta @ E.mu, _braided_mult_square(E) @ tensor(E.delta, E.delta))
    rep.equal("comultiplication is unital", E.delta @ E.eta, tensor(E.eta, E.eta))
    rep.equal("counit is multiplicative", E.eps @ E.mu, tensor(E.eps, E.eps))
    rep.equal("counit is unital", E.eps @ E.eta, identity((), p))
    idE = identity(S, p)
    unit_counit = E.eta @ E.eps
    rep.equal("antipode left", chain(E.mu, tensor(E.sigma, idE), E.delta), unit_counit)
    rep.equal("antipode right", chain(E.mu, tensor(idE, E.sigma), E.delta), unit_counit)
    return rep


# -- comodule algebras -----------------------------------------------------------


@dataclass
class ComoduleAlgebraData:
    """An algebra with any nonempty subset of coactions over H, E and H*E.

    ``kind`` is "plain" for an ordinary H- (or H*E-) comodule algebra and
    "radford" when the E-coaction is meant in the braided sense.
    """

    algebra: AlgebraData
    hopf: HopfData | None = None
    rho_H: LinearMap | None = None
    braided: BraidedHopfData | None = None
    rho_E: LinearMap | None = None
    product: HopfData | None = None
    rho_HE: LinearMap | None = None
    kind: str = "plain"
    name: str = ""

    def __post_init__(self):
        if self.rho_H is None and self.rho_E is None and self.rho_HE is None:
            raise ValueError("a comodule algebra needs at least one coaction")
        if not self.name:
            self.name = self.algebra.space.name

    space = property(lambda self: self.algebra.space)
    p = property(lambda self: self.algebra.p)
    dim = property(lambda self: self.algebra.dim)

    def h_comodule(self) -> HComodule:
        return HComodule(self.space, self.rho_H, self.hopf)

    def to_dict(self) -> dict:
        d = {"field": {"p": self.p}, "kind": self.kind, "algebra": self.algebra.to_dict(), "coactions": {}}
        for key, rho in (("H", self.rho_H), ("E", self.rho_E), ("H*E", self.rho_HE)):
            if rho is not None:
                d["coactions"][key] = rho.to_dict()
        return d


def check_comodule_algebra(F: AlgebraData, H: HopfData, rho: LinearMap, subject: str | None = None) -> CheckReport:
    """Ordinary comodule algebra: rho coassociative, counital and an algebra map."""
    p, A, K = F.p, F.space, H.space
    rep = CheckReport(subject or f"{K.name}-comodule algebra {A.name}")
    idA, idK = identity(A, p), identity(K, p)
    rep.equal("coaction coassociative", tensor(rho, idK) @ rho, tensor(idA, H.delta) @ rho)
    rep.equal("coaction counital", (tensor(idA, H.eps) @ rho).retyped(cod=(A,)), idA)
    mult_AK = tensor(F.mult, H.mu) @ permute_factors((A, K, A, K), [0, 2, 1, 3], p)
    rep.equal("coaction multiplicative", rho @ F.mult, mult_AK @ tensor(rho, rho))
    rep.equal("coaction unital", rho @ F.unit, tensor(F.unit, H.eta))
    return rep


def star_multiplication(F: AlgebraData, F_com: HComodule, E: BraidedHopfData) -> LinearMap:
    """(f x e)(f' x e') = f f'_0 x (e.f'_1) e' on F x E."""
    p = F.p
    tau_EF = braiding_tau(E.module, F_com)
    return tensor(F.mult, E.mu) @ tensor(identity(F.space, p), tau_EF, identity(E.space, p))


def check_radford_comodule_algebra(F: ComoduleAlgebraData, E: BraidedHopfData) -> CheckReport:
    if F.rho_H is None or F.rho_E is None:
        raise PrerequisiteFailed("a Radford comodule algebra needs both an H- and an E-coaction")
    p, A = F.p, F.space
    rep = CheckReport(f"Radford {E.name}-comodule algebra {A.name}")
    idA, idE = identity(A, p), identity(E.space, p)
    H = E.hopf
    rho_E = F.rho_E
    rep.equal("H-coaction coassociative", tensor(F.rho_H, identity(H.space, p)) @ F.rho_H, tensor(idA, H.delta) @ F.rho_H)
    rep.equal("H-coaction counital", (tensor(idA, H.eps) @ F.rho_H).retyped(cod=(A,)), idA)
    rep.equal("E-coaction coassociative", tensor(rho_E, idE) @ rho_E, tensor(idA, E.delta) @ rho_E)
    rep.equal("E-coaction counital", (tensor(idA, E.eps) @ rho_E).retyped(cod=(A,)), idA)
    F_com = F.h_comodule()
    rep.equal(
        "E-coaction multiplicative (braided)",
        rho_E @ F.algebra.mult,
        star_multiplication(F.algebra, F_com, E) @ tensor(rho_E, rho_E),
    )
    rep.equal("E-coaction unital", rho_E @ F.algebra.unit, tensor(F.algebra.unit, E.eta))
    FE = tensor_coaction(F_com, E.comodule)
    rep.equal(
        "E-coaction H-colinear",
        FE.coaction.retyped(dom=(A, E.space), cod=(A, E.space, H.space)) @ rho_E,
        tensor(rho_E, identity(H.space, p)) @ F.rho_H,
    )
    return rep


# -- Radford product ---------------------------------------------------------------


def _star_space(H: BasedSpace, E: BasedSpace) -> BasedSpace:
    return merge_spaces(H, E, name=f"{H.name}⋆{E.name}", sep="⋆")


def radford_product(H: HopfData, E: BraidedHopfData, check: bool = True) -> HopfData:
    """The Hopf algebra H*E on H x E (h-index major, e-index minor)."""
    if check:
        rh = check_hopf(H, require_coop=True)
        if not rh.ok:
            raise PrerequisiteFailed(f"{H.name} fails the Hopf axioms", rh)
        re = check_braided_hopf(E)
        if not re.ok:
            raise PrerequisiteFailed(f"{E.name} fails the braided Hopf axioms", re)
    p, Hs, Es = H.p, H.space, E.space
    S = _star_space(Hs, Es)
    idH, idE = identity(Hs, p), identity(Es, p)

    mult = chain(
        tensor(idH, E.mu),
        tensor(H.mu, E.action, idE),
        permute_factors((Hs, Es, Hs, Hs, Es), [0, 2, 1, 3, 4], p),
        tensor(idH, idE, H.delta, idE),
    )
    comult = chain(
        tensor(idH, idE, H.mu, idE),
        permute_factors((Hs, Hs, Es, Hs, Es), [0, 2, 1, 3, 4], p),
        tensor(idH, idH, E.coaction, idE),
        tensor(H.delta, E.delta),
    )
    unit = tensor(H.eta, E.eta)
    counit = tensor(H.eps, E.eps)
    mult_S = mult.retyped(dom=(S, S), cod=(S,))

    # S(h*x) = (1 * S_E(x_0)) (S_H(h x_1) * 1)
    left = tensor(H.eta, idE) @ E.sigma  # E -> H x E
    right = tensor(idH, E.eta) @ H.sigma @ H.mu  # H x H -> H x E
    antipode = chain(
        mult,
        tensor(left, right),
        permute_factors((Hs, Es, Hs), [1, 0, 2], p),
        tensor(idH, E.coaction),
    )
    alg = AlgebraData(S, mult_S, unit.retyped(cod=(S,)))
    coalg = CoalgebraData(S, comult.retyped(dom=(S,), cod=(S, S)), counit.retyped(dom=(S,)))
    return HopfData(alg, coalg, antipode.retyped(dom=(S,), cod=(S,)), name=f"{H.name}⋆{E.name}")


def radford_maps(H: HopfData, E: BraidedHopfData, HE: HopfData) -> dict[str, LinearMap]:
    """Inclusions and projections between H, H*E and E."""
    p = H.p
    S = HE.space
    idH, idE = identity(H.space, p), identity(E.space, p)
    return {
        "H->H*E": tensor(idH, E.eta).retyped(cod=(S,)),
        "H*E->H": tensor(idH, E.eps).retyped(dom=(S,)),
        "E->H*E": tensor(H.eta, idE).retyped(cod=(S,)),
        "H*E->E": tensor(H.eps, idE).retyped(dom=(S,)),
    }


def check_bialgebra_morphism(f: LinearMap, src: HopfData, dst: HopfData, subject: str) -> CheckReport:
    rep = CheckReport(subject)
    rep.equal("multiplicative", f @ src.mu, dst.mu @ tensor(f, f))
    rep.equal("unital", f @ src.eta, dst.eta)
    rep.equal("comultiplicative", dst.delta @ f, tensor(f, f) @ src.delta)
    rep.equal("counital", dst.eps @ f, src.eps)
    return rep


# -- Radford comodule algebras over H*E --------------------------------------------


def split_coaction(F: ComoduleAlgebraData, E: BraidedHopfData, check: bool = True) -> ComoduleAlgebraData:
    """From an H*E-coaction to the pair (rho_H, rho_E)."""
    HE, H = F.product, E.hopf
    if F.rho_HE is None or HE is None:
        raise PrerequisiteFailed("no H*E-coaction to split")
    if check:
        rep = check_comodule_algebra(F.algebra, HE, F.rho_HE)
        if not rep.ok:
            raise PrerequisiteFailed(f"{F.name} is not an {HE.name}-comodule algebra", rep)
    p, A = F.p, F.space
    rho = F.rho_HE.retyped(cod=(A, H.space, E.space))
    rho_H = tensor(identity((A, H.space), p), E.eps) @ rho
    rho_E = tensor(identity(A, p), H.eps, identity(E.space, p)) @ rho
    return ComoduleAlgebraData(
        F.algebra, hopf=H, rho_H=rho_H, braided=E, rho_E=rho_E, product=HE, rho_HE=F.rho_HE, kind="radford", name=F.name
    )


def assemble_coaction(F: ComoduleAlgebraData, E: BraidedHopfData, HE: HopfData, check: bool = True) -> ComoduleAlgebraData:
    """rho_{H*E} = (rho_H x id_E) rho_E."""
    if F.rho_H is None or F.rho_E is None:
        raise PrerequisiteFailed("need both rho_H and rho_E to assemble")
    H = E.hopf
    if check:
        rep = check_comodule_algebra(F.algebra, H, F.rho_H)
        rep.extend(check_radford_comodule_algebra(F, E))
        if not rep.ok:
            raise PrerequisiteFailed(f"{F.name} fails the comodule algebra checks", rep)
    p, A = F.p, F.space
    rho = (tensor(F.rho_H, identity(E.space, p)) @ F.rho_E).retyped(cod=(A, HE.space))
    out = ComoduleAlgebraData(
        F.algebra, hopf=H, rho_H=F.rho_H, braided=E, rho_E=F.rho_E, product=HE, rho_HE=rho, kind="radford", name=F.name
    )
    if check:
        rep = check_comodule_algebra(F.algebra, HE, rho)
        if not rep.ok:
            raise PrerequisiteFailed("assembled coaction is not a comodule algebra structure", rep)
    return out


def star_extension(F: ComoduleAlgebraData, E: BraidedHopfData, check: bool = True) -> ComoduleAlgebraData:
    """The Radford E-comodule algebra F*E on F x E."""
    if check:
        rep = check_radford_comodule_algebra(F, E)
        if not rep.ok:
            raise PrerequisiteFailed(f"{F.name} is not a Radford {E.name}-comodule algebra", rep)
    p, A, H = F.p, F.space, E.hopf
    S = merge_spaces(A, E.space, name=f"{A.name}⋆{E.name}", sep="⋆")
    F_com = F.h_comodule()
    mult = star_multiplication(F.algebra, F_com, E).retyped(dom=(S, S), cod=(S,))
    unit = tensor(F.algebra.unit, E.eta).retyped(cod=(S,))
    rho_H = tensor_coaction(F_com, E.comodule).coaction.retyped(dom=(S,), cod=(S, H.space))
    rho_E = tensor(identity(A, p), E.delta).retyped(dom=(S,), cod=(S, E.space))
    return ComoduleAlgebraData(
        AlgebraData(S, mult, unit), hopf=H, rho_H=rho_H, braided=E, rho_E=rho_E, kind="radford", name=S.name
    )


def trivial_comodule_algebra(H: HopfData, E: BraidedHopfData | None = None) -> ComoduleAlgebraData:
    """k with trivial coactions."""
    k = unit_space()
    p = H.p
    idk = identity(k, p)
    alg = AlgebraData(k, idk.retyped(dom=(k, k)), idk.retyped(dom=()))
    rho_H = tensor(idk, H.eta)
    rho_E = tensor(idk, E.eta) if E is not None else None
    return ComoduleAlgebraData(alg, hopf=H, rho_H=rho_H, braided=E, rho_E=rho_E, kind="radford" if E else "plain", name="k")


def self_coefficients(E: BraidedHopfData) -> ComoduleAlgebraData:
    """E as a Radford comodule algebra over itself (rho_H its YD coaction, rho_E = Delta_E)."""
    return ComoduleAlgebraData(
        E.algebra, hopf=E.hopf, rho_H=E.coaction, braided=E, rho_E=E.delta, kind="radford", name=E.name
    )

"""Right H-modules, right H-comodules, Yetter-Drinfeld objects and the braiding.

Conventions: modules act on the right (m.h), comodules coact on the right
(n -> n0 x n1), and the braiding is tau(m x n) = n0 x m.n1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeMismatch
from .hopf_core import CheckReport, HopfData
from .linalg import (
    BasedSpace,
    LinearMap,
    chain,
    flip,
    identity,
    merge_spaces,
    permute_factors,
    rank,
    tensor,
)


@dataclass
class HModule:
    space: BasedSpace
    action: LinearMap  # M x H -> M
    hopf: HopfData

    def __post_init__(self):
        if self.action.dom != (self.space, self.hopf.space) or self.action.cod != (self.space,):
            raise ShapeMismatch(f"action must be {self.space}x{self.hopf.space} -> {self.space}")


@dataclass
class HComodule:
    space: BasedSpace
    coaction: LinearMap  # N -> N x H
    hopf: HopfData

    def __post_init__(self):
        if self.coaction.dom != (self.space,) or self.coaction.cod != (self.space, self.hopf.space):
            raise ShapeMismatch(f"coaction must be {self.space} -> {self.space}x{self.hopf.space}")


@dataclass
class YDObject:
    module: HModule
    comodule: HComodule

    def __post_init__(self):
        if self.module.space != self.comodule.space:
            raise ShapeMismatch("module and comodule structures live on different spaces")

    @property
    def space(self) -> BasedSpace:
        return self.module.space

    @property
    def hopf(self) -> HopfData:
        return self.module.hopf


# -- standard structures ---------------------------------------------------


def regular_module(H: HopfData) -> HModule:
    return HModule(H.space, H.mu, H)


def regular_comodule(H: HopfData) -> HComodule:
    return HComodule(H.space, H.delta, H)


def trivial_module(space: BasedSpace, H: HopfData) -> HModule:
    """m.h = eps(h) m."""
    return HModule(space, tensor(identity(space, H.p), H.eps), H)


def trivial_comodule(space: BasedSpace, H: HopfData) -> HComodule:
    """n -> n x 1."""
    return HComodule(space, tensor(identity(space, H.p), H.eta), H)


def unit_space() -> BasedSpace:
    return BasedSpace("k", 1, ("1",))


def tensor_module(M: HModule, Mp: HModule) -> HModule:
    """(m x m').h = m.h1 x m'.h2 on the merged space M x M'."""
    H, p = M.hopf, M.hopf.p
    act = chain(
        tensor(M.action, Mp.action),
        permute_factors((M.space, Mp.space, H.space, H.space), [0, 2, 1, 3], p),
        tensor(identity((M.space, Mp.space), p), H.delta),
    )
    space = merge_spaces(M.space, Mp.space)
    return HModule(space, act.retyped(dom=(space, H.space), cod=(space,)), H)


def _tensor_coaction_map(N: HComodule, Np: HComodule) -> LinearMap:
    """n x n' -> n0 x n'0 x n1 n'1 as a map N x N' -> N x N' x H."""
    H, p = N.hopf, N.hopf.p
    return chain(
        tensor(identity((N.space, Np.space), p), H.mu),
        permute_factors((N.space, H.space, Np.space, H.space), [0, 2, 1, 3], p),
        tensor(N.coaction, Np.coaction),
    )


def tensor_coaction(N: HComodule, Np: HComodule, braided: bool = False) -> HComodule:
    """Comodule structure on N x N'.

    The plain form is n0 x n'0 x n1 n'1.  The braided form routes the H-leg
    of N past N' with the braiding against H's regular module structure:
    (id_N x tau_{H,N'})(rho_N x id_N').  The two agree.
    """
    H, p = N.hopf, N.hopf.p
    if braided:
        tau_HN = braiding_tau(regular_module(H), Np)
        rho = tensor(identity(N.space, p), tau_HN) @ tensor(N.coaction, identity(Np.space, p))
    else:
        rho = _tensor_coaction_map(N, Np)
    space = merge_spaces(N.space, Np.space)
    return HComodule(space, rho.retyped(dom=(space,), cod=(space, H.space)), H)


def braiding_tau(M: HModule, N: HComodule) -> LinearMap:
    """tau_{M,N}: M x N -> N x M, m x n -> n0 x m.n1."""
    if M.hopf is not N.hopf and M.hopf.space != N.hopf.space:
        raise ShapeMismatch("module and comodule over different Hopf algebras")
    p = M.hopf.p
    H = M.hopf.space
    return chain(
        tensor(identity(N.space, p), M.action),
        permute_factors((M.space, N.space, H), [1, 0, 2], p),
        tensor(identity(M.space, p), N.coaction),
    )


# -- checks --------------------------------------------------------------------


def check_module(M: HModule, subject: str | None = None) -> CheckReport:
    H, p = M.hopf, M.hopf.p
    rep = CheckReport(subject or f"H-module {M.space.name}")
    idM = identity(M.space, p)
    rep.equal("action associative", M.action @ tensor(M.action, identity(H.space, p)), M.action @ tensor(idM, H.mu))
    rep.equal("action unital", (M.action @ tensor(idM, H.eta)).retyped(dom=(M.space,)), idM)
    return rep


def check_comodule(N: HComodule, subject: str | None = None) -> CheckReport:
    H, p = N.hopf, N.hopf.p
    rep = CheckReport(subject or f"H-comodule {N.space.name}")
    idN = identity(N.space, p)
    rep.equal(
        "coaction coassociative",
        tensor(N.coaction, identity(H.space, p)) @ N.coaction,
        tensor(idN, H.delta) @ N.coaction,
    )
    rep.equal("coaction counital", (tensor(idN, H.eps) @ N.coaction).retyped(cod=(N.space,)), idN)
    return rep


def is_module_morphism(phi: LinearMap, M: HModule, Mp: HModule) -> bool:
    p = M.hopf.p
    return phi @ M.action == Mp.action @ tensor(phi, identity(M.hopf.space, p))


def is_comodule_morphism(psi: LinearMap, N: HComodule, Np: HComodule) -> bool:
    p = N.hopf.p
    return Np.coaction @ psi == tensor(psi, identity(N.hopf.space, p)) @ N.coaction


def check_prebraiding(
    M: HModule, Mp: HModule, N: HComodule, Np: HComodule, phi: LinearMap, psi: LinearMap
) -> CheckReport:
    """Naturality and hexagon identities of tau plus its unit/counit relations."""
    p = M.hopf.p
    rep = CheckReport("pre-braiding")
    if not rep.record("phi is a module morphism", is_module_morphism(phi, M, Mp)):
        return rep
    if not rep.record("psi is a comodule morphism", is_comodule_morphism(psi, N, Np)):
        return rep
    idN, idM = identity(N.space, p), identity(M.space, p)

    # hexagon for a tensor product of modules
    MM = tensor_module(M, Mp)
    lhs = braiding_tau(MM, N)
    rhs = tensor(braiding_tau(M, N), identity(Mp.space, p)) @ tensor(idM, braiding_tau(Mp, N))
    rep.equal("hexagon in the module variable", lhs, rhs.retyped(dom=lhs.dom, cod=lhs.cod))

    # hexagon for a tensor product of comodules
    NN = tensor_coaction(N, Np)
    lhs = braiding_tau(M, NN)
    rhs = tensor(identity(N.space, p), braiding_tau(M, Np)) @ tensor(braiding_tau(M, N), identity(Np.space, p))
    rep.equal("hexagon in the comodule variable", lhs, rhs.retyped(dom=lhs.dom, cod=lhs.cod))

    rep.equal(
        "naturality in the module variable",
        braiding_tau(Mp, N) @ tensor(phi, idN),
        tensor(idN, phi) @ braiding_tau(M, N),
    )
    rep.equal(
        "naturality in the comodule variable",
        braiding_tau(M, Np) @ tensor(idM, psi),
        tensor(psi, idM) @ braiding_tau(M, N),
    )
    rep.extend(check_tau_relations(M, N))
    return rep


def check_tau_relations(M: HModule, N: HComodule) -> CheckReport:
    """Auxiliary relations tying tau to the unit, counit and regular structures of H."""
    H, p = M.hopf, M.hopf.p
    rep = CheckReport("tau relations")
    idM, idN, idH = identity(M.space, p), identity(N.space, p), identity(H.space, p)
    tau_MH = braiding_tau(M, regular_comodule(H))
    tau_HN = braiding_tau(regular_module(H), N)
    rep.equal(
        "tau against regular comodule: h1 x m.h2",
        tau_MH,
        chain(tensor(idH, M.action), permute_factors((M.space, H.space, H.space), [1, 0, 2], p), tensor(idM, H.delta)),
    )
    rep.equal(
        "tau against regular module: n0 x h n1",
        tau_HN,
        chain(tensor(idN, H.mu), permute_factors((H.space, N.space, H.space), [1, 0, 2], p), tensor(idH, N.coaction)),
    )
    rep.equal("unit input recovers coaction", (tau_HN @ tensor(H.eta, idN)).retyped(dom=(N.space,)), N.coaction)
    rep.equal("counit output recovers action", (tensor(H.eps, idM) @ tau_MH).retyped(cod=(M.space,)), M.action)
    k = unit_space()
    rep.equal("unit object on the left", braiding_tau(trivial_module(k, H), N).retyped(dom=(N.space,), cod=(N.space,)), idN)
    rep.equal("unit object on the right", braiding_tau(M, trivial_comodule(k, H)).retyped(dom=(M.space,), cod=(M.space,)), idM)
    return rep


def check_yd(obj: YDObject, subject: str | None = None) -> CheckReport:
    """m0.h1 x m1 h2 = (m.h2)0 x h1 (m.h2)1 as maps M x H -> M x H."""
    M, H, p = obj.space, obj.hopf.space, obj.hopf.p
    hopf = obj.hopf
    act, rho = obj.module.action, obj.comodule.coaction
    idM, idH = identity(M, p), identity(H, p)
    rep = CheckReport(subject or f"Yetter-Drinfeld {M.name}")
    rep.extend(check_module(obj.module))
    rep.extend(check_comodule(obj.comodule))
    lhs = chain(tensor(act, hopf.mu), permute_factors((M, H, H, H), [0, 2, 1, 3], p), tensor(rho, hopf.delta))
    rhs = chain(
        tensor(idM, hopf.mu),
        permute_factors((M, H, H), [0, 2, 1], p),
        tensor(rho, idH),
        tensor(act, idH),
        permute_factors((M, H, H), [0, 2, 1], p),
        tensor(idM, hopf.delta),
    )
    rep.equal("Yetter-Drinfeld compatibility", lhs, rhs)
    return rep


def check_braiding_colinear(E: YDObject, N: HComodule) -> CheckReport:
    """tau_{E,N} commutes with the tensor-product coactions on E x N and N x E."""
    p = E.hopf.p
    rep = CheckReport(f"braiding {E.space.name},{N.space.name} is colinear")
    tau = braiding_tau(E.module, N)
    EN = tensor_coaction(E.comodule, N)
    NE = tensor_coaction(N, E.comodule)
    lhs = NE.coaction.retyped(dom=(N.space, E.space), cod=(N.space, E.space, E.hopf.space)) @ tau
    rhs = tensor(tau, identity(E.hopf.space, p)) @ EN.coaction.retyped(dom=(E.space, N.space), cod=(E.space, N.space, E.hopf.space))
    rep.equal("tau is an H-comodule morphism", lhs, rhs)
    return rep


def braiding_is_invertible(M: HModule, N: HComodule) -> bool:
    tau = braiding_tau(M, N)
    return rank(tau.dense(), tau.p) == tau.shape[0] == tau.shape[1]


def flip_is_tau(M: HModule, N: HComodule) -> bool:
    return braiding_tau(M, N) == flip(M.space, N.space, M.hopf.p)

"""Named instances and the axiom suites that apply to them.

Grammar (fields separated by colons):

    taft:N:P              Taft algebra of dimension N^2 over F_P
    kG:cyclic:N:P         group algebra of Z/N
    kD:s3:P               function algebra of S_3 = Z/2 x| Z/3
    kD:cyclic:N:P         function algebra of Z/N
    s3:inv                Z/2 acting on Z/3 by inversion
    semidirect:M:N:inv    Z/M acting on Z/N by inversion (M even)
    semidirect:M:N:triv   Z/M acting trivially on Z/N
    cyclic:N              the group Z/N (for cross-checks)

Trailing N and P may be left out and supplied by --n and --p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import build_C, build_Cstar, build_setting, check_diagram
from .errors import NotPrime, ParseError
from .hopf_core import CheckReport, HopfData, check_hopf
from .models import (
    FiniteGroup,
    GroupAction,
    cyclic_group,
    function_algebra,
    group_algebra,
    inversion_action,
    kA_in_yd,
    s3_data,
    semidirect,
    semidirect_action,
    structure_constant_match,
    taft_pair,
    trivial_action,
    trivial_group,
)
from .radford import (
    BraidedHopfData,
    ComoduleAlgebraData,
    check_braided_hopf,
    check_comodule_algebra,
    check_radford_comodule_algebra,
    radford_product,
    self_coefficients,
    star_extension,
    trivial_comodule_algebra,
)
from .scalars import is_prime
from .yd import check_braiding_colinear, check_prebraiding, check_tau_relations
from .linalg import identity


@dataclass
class Instance:
    spec: str
    kind: str  # taft, kG, kD, semidirect, cyclic
    n: int | None = None
    p: int | None = None
    m: int | None = None  # order of the acting group for semidirect specs
    action: str | None = None
    family: str | None = None  # for kD: s3 or cyclic

    @property
    def is_hopf(self) -> bool:
        return self.kind in ("taft", "kG", "kD")


def _int(text: str, what: str, spec: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise ParseError(f"{spec}: {what} must be an integer, got {text!r}") from None
    if v < 1:
        raise ParseError(f"{spec}: {what} must be positive")
    return v


def _prime(v: int | None, spec: str) -> int:
    if v is None:
        raise ParseError(f"{spec}: no prime given (append :P or pass --p)")
    if not is_prime(v):
        raise NotPrime(v)
    return v


def parse_instance(spec: str, p: int | None = None, n: int | None = None) -> Instance:
    parts = spec.strip().split(":")
    head = parts[0]
    rest = parts[1:]

    def take(i, what, default):
        if len(rest) > i and rest[i] != "":
            return _int(rest[i], what, spec)
        return default

    if head == "taft":
        if len(rest) > 2:
            raise ParseError(f"{spec}: expected taft:N:P")
        nn, pp = take(0, "N", n), take(1, "P", p)
        if nn is None or nn < 2:
            raise ParseError(f"{spec}: N must be at least 2")
        return Instance(spec, "taft", n=nn, p=_prime(pp, spec))
    if head == "kG":
        if not rest or rest[0] != "cyclic" or len(rest) > 3:
            raise ParseError(f"{spec}: expected kG:cyclic:N:P")
        nn, pp = take(1, "N", n), take(2, "P", p)
        if nn is None:
            raise ParseError(f"{spec}: missing N")
        return Instance(spec, "kG", n=nn, p=_prime(pp, spec), family="cyclic")
    if head == "kD":
        if rest[:1] == ["s3"] and len(rest) <= 2:
            return Instance(spec, "kD", n=6, p=_prime(take(1, "P", p), spec), family="s3")
        if rest[:1] == ["cyclic"] and len(rest) <= 3:
            nn = take(1, "N", n)
            if nn is None:
                raise ParseError(f"{spec}: missing N")
            return Instance(spec, "kD", n=nn, p=_prime(take(2, "P", p), spec), family="cyclic")
        raise ParseError(f"{spec}: expected kD:s3:P or kD:cyclic:N:P")
    if head == "s3":
        if rest != ["inv"]:
            raise ParseError(f"{spec}: expected s3:inv")
        return Instance(spec, "semidirect", n=3, m=2, action="inv", p=p)
    if head == "semidirect":
        if len(rest) != 3 or rest[2] not in ("inv", "triv"):
            raise ParseError(f"{spec}: expected semidirect:M:N:inv or semidirect:M:N:triv")
        mm, nn = _int(rest[0], "M", spec), _int(rest[1], "N", spec)
        if rest[2] == "inv" and mm % 2:
            raise ParseError(f"{spec}: inversion needs M even")
        return Instance(spec, "semidirect", n=nn, m=mm, action=rest[2], p=p)
    if head == "cyclic":
        nn = take(0, "N", n)
        if nn is None or len(rest) > 1:
            raise ParseError(f"{spec}: expected cyclic:N")
        return Instance(spec, "cyclic", n=nn, p=p)
    raise ParseError(f"unknown instance {spec!r}")


# -- builders -------------------------------------------------------------------------


def hopf_of(inst: Instance) -> HopfData:
    if inst.kind == "taft":
        return taft_pair(inst.n, inst.p).taft
    if inst.kind == "kG":
        return group_algebra(cyclic_group(inst.n, "u"), inst.p, name=f"k[Z{inst.n}]")
    if inst.kind == "kD":
        if inst.family == "s3":
            return function_algebra(s3_data()[3], inst.p, name="k^S3")
        return function_algebra(cyclic_group(inst.n, "u"), inst.p, name=f"k^Z{inst.n}")
    raise ParseError(f"{inst.spec} is not a Hopf algebra instance")


@dataclass
class GroupData:
    G: FiniteGroup
    A: FiniteGroup
    act: GroupAction
    D: FiniteGroup


def groups_of(inst: Instance) -> GroupData:
    if inst.kind == "semidirect":
        G = cyclic_group(inst.m, "s", f"Z{inst.m}")
        A = cyclic_group(inst.n, "r", f"Z{inst.n}")
        act = inversion_action(G, A) if inst.action == "inv" else trivial_action(G, A)
        name = "S3" if (inst.m, inst.n, inst.action) == (2, 3, "inv") else None
        return GroupData(G, A, act, semidirect(G, A, act, name=name))
    if inst.kind == "cyclic":
        D = cyclic_group(inst.n, "u", f"Z{inst.n}")
        one = trivial_group()
        return GroupData(D, one, trivial_action(D, one), D)
    if inst.kind == "kD" and inst.family == "s3":
        G, A, act, D = s3_data()
        return GroupData(G, A, act, D)
    raise ParseError(f"{inst.spec} does not name a group")


def natural_coefficients(data: GroupData) -> list[tuple[str, FiniteGroup, GroupAction]]:
    """Small coefficient groups for D = G x| A: Z/N through the action of G,
    Z/N with trivial action, and the trivial group."""
    G, A, D = data.G, data.A, data.D
    out = []
    inverting = G.order % 2 == 0 and data.act.table.tolist() == inversion_action(G, A).table.tolist()
    if A.order > 2 and inverting:
        C = cyclic_group(A.order, "c", f"C{A.order}")
        nat = semidirect_action(D, G, A, inversion_action(G, C), trivial_action(A, C))
        out.append((f"{C.name} natural", C, nat))
    C = cyclic_group(max(A.order, 2), "c", f"C{max(A.order, 2)}")
    out.append((f"{C.name} trivial", C, trivial_action(D, C)))
    one = trivial_group()
    out.append(("trivial group", one, trivial_action(D, one)))
    return out


def cross_coefficients(D: FiniteGroup, G: FiniteGroup | None = None) -> list[tuple[str, GroupAction]]:
    """Tiny coefficient groups C for comparing k^D against D on (k^C)^x."""
    C2, C3 = cyclic_group(2, "c", "C2"), cyclic_group(3, "c", "C3")
    out = [("C2 trivial", trivial_action(D, C2)), ("C3 trivial", trivial_action(D, C3))]
    if G is not None and G.order % 2 == 0:
        # D acts on C3 through its quotient G, the generator inverting
        nA = D.order // G.order
        table = [C3.inverse if (d // nA) % 2 else list(range(3)) for d in D]
        out.append(("C3 inverted", GroupAction(D, C3, table)))
    elif G is None and D.order % 2 == 0:
        out.append(("C3 inverted", inversion_action(D, C3)))
    return out


@dataclass
class Pair:
    """H, a braided Hopf algebra E over it and the matching biproduct target."""

    H: HopfData
    E: BraidedHopfData
    target: HopfData | None  # the Hopf algebra H*E should reproduce
    correspondence: list[int] | None


def pair_of(inst: Instance) -> Pair | None:
    if inst.kind == "taft":
        P = taft_pair(inst.n, inst.p)
        return Pair(P.group_hopf, P.braided, P.taft, P.correspondence)
    if inst.kind == "kD" and inst.family == "s3":
        G, A, act, _ = s3_data()
        fp = kA_in_yd(G, A, act, inst.p)
        return Pair(fp.hopf, fp.braided, fp.function_D, fp.correspondence)
    if inst.kind == "kG" and (inst.p - 1) % inst.n == 0 and inst.n > 1:
        P = taft_pair(inst.n, inst.p)
        return Pair(P.group_hopf, P.braided, P.taft, P.correspondence)
    return None


# -- axiom suites ---------------------------------------------------------------------


def yd_suite(E: BraidedHopfData) -> CheckReport:
    rep = CheckReport(f"Yetter-Drinfeld relations of {E.name}")
    M, N = E.module, E.comodule
    p = E.p
    rep.extend(check_prebraiding(M, M, N, N, identity(E.space, p), identity(E.space, p)))
    rep.extend(check_tau_relations(M, N))
    rep.extend(check_braiding_colinear(E.yd, N))
    return rep


def pair_suite(pair: Pair) -> CheckReport:
    H, E = pair.H, pair.E
    rep = CheckReport(f"{H.name} with {E.name}")
    rep.extend(check_hopf(H, require_coop=True), prefix=f"{H.name}: ")
    rep.extend(check_braided_hopf(E), prefix=f"{E.name}: ")
    rep.extend(yd_suite(E), prefix=f"{E.name}: ")
    HE = radford_product(H, E, check=False)
    rep.extend(check_hopf(HE, require_coop=True), prefix=f"{HE.name}: ")
    if pair.target is not None:
        rep.extend(structure_constant_match(HE, pair.target, pair.correspondence), prefix="biproduct isomorphism: ")
    F = self_coefficients(E)
    rep.extend(check_comodule_algebra(F.algebra, H, F.rho_H), prefix=f"{E.name} over {H.name}: ")
    rep.extend(check_radford_comodule_algebra(F, E), prefix=f"{E.name} over itself: ")
    FE = star_extension(F, E, check=False)
    rep.extend(check_radford_comodule_algebra(FE, E), prefix=f"{FE.name} over {E.name}: ")
    s = build_setting(H, E, F, check=False)
    for d in (s.C_H, s.C_star, s.C_HE, s.T.diagram):
        rep.extend(check_diagram(d), prefix=f"{d.name}: ")
    return rep


def axiom_suite(inst: Instance) -> CheckReport:
    """Every structural check that applies to the instance."""
    rep = CheckReport(f"axioms of {inst.spec}")
    if inst.is_hopf:
        H = hopf_of(inst)
        rep.extend(check_hopf(H, require_coop=True), prefix=f"{H.name}: ")
        k = trivial_comodule_algebra(H)
        rep.extend(check_diagram(build_C(H, k)), prefix="trivial coefficients: ")
        if inst.kind == "taft":
            P = taft_pair(inst.n, inst.p)
            rep.extend(check_comodule_algebra(P.comodule_algebra.algebra, H, P.comodule_algebra.rho_H), prefix=f"{P.comodule_algebra.name} over {H.name}: ")
        pair = pair_of(inst)
        if pair is not None:
            rep.extend(pair_suite(pair))
        return rep
    data = groups_of(inst)
    rep.record(f"{data.D.name} is a group", data.D.order == data.G.order * data.A.order)
    for label, C, act in natural_coefficients(data) if inst.kind == "semidirect" else []:
        rep.record(f"{data.D.name} acts on {label} by automorphisms", act.by_automorphisms)
    return rep


def comodule_for(inst: Instance, coeff: str) -> tuple[HopfData, ComoduleAlgebraData]:
    """(H, F) for the cohomology command: F = E or the trivial algebra k."""
    H = hopf_of(inst)
    if coeff == "trivial":
        return H, trivial_comodule_algebra(H)
    if coeff != "E":
        raise ParseError(f"unknown coefficients {coeff!r}; use E or trivial")
    if inst.kind == "taft":
        return H, taft_pair(inst.n, inst.p).comodule_algebra
    pair = pair_of(inst)
    if pair is None:
        raise ParseError(f"{inst.spec} has no braided coefficients E")
    if inst.kind == "kG":
        return pair.H, self_coefficients(pair.E)
    raise ParseError(f"{inst.spec}: E is not an {H.name}-comodule algebra; use trivial")


def star_diagram_for(inst: Instance):
    pair = pair_of(inst)
    if pair is None:
        raise ParseError(f"{inst.spec} has no braided Hopf algebra")
    return build_Cstar(pair.E, self_coefficients(pair.E)).diagram

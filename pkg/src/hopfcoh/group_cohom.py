"""Non-abelian group cohomology H0, H1 of a finite group D with coefficients
in a finite D-group C.

    Z1(D, C) = {beta : D -> C | beta(dd') = beta(d) . d(beta(d'))}
    (beta <- x)(d) = x^-1 beta(d) d(x)

This is an independent oracle for the Hopf pipeline: with F = k^C the
group side is run on the unit group (k^C)^x.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import connected_components

from .cohomology import VerificationReport, build_C, compute_h1
from .errors import NotAnAction
from .hopf_core import CheckReport, unit_pairs
from .linalg import DEFAULT_BUDGET, check_budget, coordinate_block
from .models import (
    FiniteGroup,
    GroupAction,
    comodule_from_group_action,
    embed_left,
    embed_right,
    function_algebra,
    function_algebra_action,
    restrict_action,
    semidirect,
)


def _budget(budget):
    return DEFAULT_BUDGET if budget is None else budget


@dataclass(frozen=True)
class GroupCocycle:
    domain: str
    values: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"domain": self.domain, "values": list(self.values)}

    @classmethod
    def from_dict(cls, d: dict) -> GroupCocycle:
        return cls(d["domain"], tuple(int(v) for v in d["values"]))


@dataclass
class GGroupStructure:
    D: FiniteGroup
    C: FiniteGroup
    action: GroupAction

    def __post_init__(self):
        if self.action.actor.order != self.D.order or self.action.target.order != self.C.order:
            raise NotAnAction("action does not match the declared groups")
        if not self.action.by_automorphisms:
            raise NotAnAction("coefficients must be acted on by automorphisms")


def semidirect_compatible(G: FiniteGroup, A: FiniteGroup, act_GA: GroupAction, on_G: GroupAction, on_A: GroupAction) -> bool:
    """g(a(x)) = (g.a)(g(x)) for all g, a, x."""
    for g, a in product(G, A):
        left = on_G.table[g][on_A.table[a]]
        right = on_A.table[act_GA(g, a)][on_G.table[g]]
        if not np.array_equal(left, right):
            return False
    return True


# -- H0 and Z1 --------------------------------------------------------------------


def group_h0(D: FiniteGroup, C: FiniteGroup, act: GroupAction) -> list[int]:
    """Elements of C fixed by all of D."""
    return [int(x) for x in C if (act.table[:, x] == x).all()]


def _cocycle_mask(D: FiniteGroup, C: FiniteGroup, act: GroupAction, T: np.ndarray) -> np.ndarray:
    ok = np.ones(len(T), dtype=bool)
    Ct, At = C.table, act.table
    for d, e in product(D, D):
        ok &= Ct[T[:, d], At[d][T[:, e]]] == T[:, D.mul(d, e)]
    return ok


def group_z1_array(D: FiniteGroup, C: FiniteGroup, act: GroupAction, budget: int | None = None) -> np.ndarray:
    """All cocycle tables, rows in lexicographic order of values."""
    n, m = D.order, C.order
    total = m**n
    check_budget(total, _budget(budget))
    keep = []
    for start in range(0, total, 1 << 15):
        T = coordinate_block(m, n, start, min(total, start + (1 << 15)))
        keep.append(T[_cocycle_mask(D, C, act, T)])
    return np.vstack(keep)


def group_z1(D: FiniteGroup, C: FiniteGroup, act: GroupAction, budget: int | None = None) -> list[GroupCocycle]:
    return [GroupCocycle(D.name, tuple(int(v) for v in row)) for row in group_z1_array(D, C, act, budget)]


def act_on_cocycles(T: np.ndarray, x: int, C: FiniteGroup, act: GroupAction) -> np.ndarray:
    """(beta <- x)(d) = x^-1 beta(d) d(x), row-wise."""
    Ct = C.table
    xi = C.inv(x)
    return Ct[Ct[xi, T], act.table[:, x][None, :]]


def _orbits(T: np.ndarray, movers) -> tuple[np.ndarray, bool]:
    index = {row.tobytes(): i for i, row in enumerate(T)}
    rows, cols, stable = [], [], True
    for moved in movers:
        for i, row in enumerate(moved):
            j = index.get(row.tobytes())
            if j is None:
                stable = False
            elif j != i:
                rows.append(i)
                cols.append(j)
    n = len(T)
    g = sp.coo_array((np.ones(len(rows)), (rows, cols)), shape=(n, n))
    return connected_components(g, directed=True, connection="weak")[1], stable


@dataclass
class GroupClass:
    representative: tuple[int, ...]
    members: list[int]
    distinguished: bool


@dataclass
class GroupCohomologyReport:
    D: FiniteGroup
    C: FiniteGroup
    h0: list[int]
    z1: np.ndarray
    classes: list[GroupClass]
    class_of: np.ndarray
    stable: bool
    index: dict = field(default_factory=dict)

    @property
    def h1_count(self) -> int:
        return len(self.classes)

    @property
    def distinguished_class(self) -> int:
        return next(i for i, c in enumerate(self.classes) if c.distinguished)

    def class_of_table(self, row) -> int | None:
        i = self.index.get(np.asarray(row, dtype=np.int64).tobytes())
        return None if i is None else int(self.class_of[i])

    def to_dict(self) -> dict:
        return {
            "domain": self.D.name,
            "coefficients": self.C.name,
            "h0": self.h0,
            "z1_count": len(self.z1),
            "h1_classes": [
                {
                    "rep": GroupCocycle(self.D.name, c.representative).to_dict(),
                    "orbit_size": len(c.members),
                    "distinguished": c.distinguished,
                }
                for c in self.classes
            ],
        }


def classes_under(T: np.ndarray, acting: list[int], C: FiniteGroup, act: GroupAction, constant: int) -> tuple[list[GroupClass], np.ndarray, bool]:
    """Orbits of the rows of T under x in ``acting``; T must be sorted."""
    labels, stable = _orbits(T, (act_on_cocycles(T, x, C, act) for x in acting))
    remap, members = {}, []
    for i, lab in enumerate(labels):
        if lab not in remap:
            remap[lab] = len(members)
            members.append([])
        members[remap[lab]].append(i)
    class_of = np.array([remap[lab] for lab in labels], dtype=np.int64)
    classes = [GroupClass(tuple(int(v) for v in T[m[0]]), m, constant in m) for m in members]
    return classes, class_of, stable


def _constant_index(T: np.ndarray, e: int) -> int:
    hits = np.flatnonzero((T == e).all(axis=1))
    return int(hits[0]) if len(hits) else -1


def group_h1(D: FiniteGroup, C: FiniteGroup, act: GroupAction, budget: int | None = None) -> GroupCohomologyReport:
    T = group_z1_array(D, C, act, budget)
    classes, class_of, stable = classes_under(T, list(C), C, act, _constant_index(T, C.identity))
    index = {row.tobytes(): i for i, row in enumerate(T)}
    return GroupCohomologyReport(D, C, group_h0(D, C, act), T, classes, class_of, stable, index)


# -- semidirect products ----------------------------------------------------------------


@dataclass
class GroupBoxSet:
    pairs: np.ndarray  # rows gamma | alpha
    nG: int
    distinguished: int

    def __len__(self):
        return len(self.pairs)


def _pair_mask(G, A, act_GA, C, on_G, on_A, gam, alp) -> np.ndarray:
    """gamma(g) g(alpha(a)) = alpha(g.a) (g.a)(gamma(g))."""
    Ct = C.table
    ok = np.ones(len(gam), dtype=bool)
    for g, a in product(G, A):
        ga = act_GA(g, a)
        left = Ct[gam[:, g], on_G.table[g][alp[:, a]]]
        right = Ct[alp[:, ga], on_A.table[ga][gam[:, g]]]
        ok &= left == right
    return ok


def group_box_set(G, A, act_GA, C, on_G, on_A, budget: int | None = None, zG=None, zA=None) -> GroupBoxSet:
    budget = _budget(budget)
    zG = group_z1_array(G, C, on_G, budget) if zG is None else zG
    zA = group_z1_array(A, C, on_A, budget) if zA is None else zA
    check_budget(len(zG) * len(zA), budget)
    rows = []
    for gam in zG:
        G_rep = np.repeat(gam[None, :], len(zA), axis=0)
        mask = _pair_mask(G, A, act_GA, C, on_G, on_A, G_rep, zA)
        rows.append(np.hstack([G_rep[mask], zA[mask]]))
    pairs = np.vstack(rows)
    return GroupBoxSet(pairs, G.order, _constant_index(pairs, C.identity))


def _split_table(T, G, A, nA):
    gam = T[:, [g * nA + A.identity for g in G]]
    alp = T[:, [G.identity * nA + a for a in A]]
    return gam, alp


def _assemble_table(gam, alp, G, A, C, on_G):
    nA = A.order
    out = np.empty((len(gam), G.order * nA), dtype=np.int64)
    for g, a in product(G, A):
        out[:, g * nA + a] = C.table[gam[:, g], on_G.table[g][alp[:, a]]]
    return out


def _diagonal_act(P: np.ndarray, x: int, C, nG, on_G, on_A):
    return np.hstack([act_on_cocycles(P[:, :nG], x, C, on_G), act_on_cocycles(P[:, nG:], x, C, on_A)])


def verify_semidirect_decomposition(
    G: FiniteGroup, A: FiniteGroup, act_GA: GroupAction, C: FiniteGroup, act_D: GroupAction, budget: int | None = None
) -> VerificationReport:
    """Cohomology of G x| A with values in C through pairs (gamma, alpha).

    act_D is the action of D = G x| A on C; its restrictions give the G- and
    A-actions.  Also checks the exact sequence H1(G, C^A) -> H1(D, C) ->
    H1(A, C)^G.
    """
    budget = _budget(budget)
    D = semidirect(G, A, act_GA)
    if act_D.actor.order != D.order:
        raise NotAnAction("the coefficient action must be by the semidirect product")
    act_D = GroupAction(D, C, act_D.table)
    on_G = restrict_action(act_D, G, embed_left(G, A))
    on_A = restrict_action(act_D, A, embed_right(G, A))
    rep = CheckReport(f"semidirect decomposition for {D.name} on {C.name}")
    rep.record("G- and A-actions are compatible", semidirect_compatible(G, A, act_GA, on_G, on_A))
    nA, nG = A.order, G.order

    h0D, h0G, h0A = (set(group_h0(X, C, a)) for X, a in ((D, act_D), (G, on_G), (A, on_A)))
    rep.record("H0(D,C) equals H0(G,C) ∩ H0(A,C)", h0D == (h0G & h0A))

    hD = group_h1(D, C, act_D, budget)
    zG = group_z1_array(G, C, on_G, budget)
    zA = group_z1_array(A, C, on_A, budget)
    box = group_box_set(G, A, act_GA, C, on_G, on_A, budget, zG, zA)
    rep.record("constant pair is compatible", box.distinguished >= 0)

    gam, alp = _split_table(hD.z1, G, A, nA)
    split = np.hstack([gam, alp])
    box_index = {row.tobytes(): i for i, row in enumerate(box.pairs)}
    split_idx = [box_index.get(row.tobytes()) for row in split]
    rep.record("restriction lands in compatible pairs", all(i is not None for i in split_idx))
    rep.record("rebuilding after restricting is the identity", np.array_equal(_assemble_table(gam, alp, G, A, C, on_G), hD.z1))
    rebuilt = _assemble_table(box.pairs[:, :nG], box.pairs[:, nG:], G, A, C, on_G)
    rep.record("rebuilt tables are cocycles of D", bool(_cocycle_mask(D, C, act_D, rebuilt).all()) if len(rebuilt) else True)
    rep.record("restricting after rebuilding is the identity", np.array_equal(np.hstack(_split_table(rebuilt, G, A, nA)), box.pairs))
    rep.record("bijection is pointed", split_idx[_constant_index(hD.z1, C.identity)] == box.distinguished)

    equivariant = all(
        np.array_equal(np.hstack(_split_table(act_on_cocycles(hD.z1, x, C, act_D), G, A, nA)), _diagonal_act(split, x, C, nG, on_G, on_A))
        for x in C
    )
    rep.record("restriction is equivariant", equivariant)

    labels, stable = _orbits(box.pairs, (_diagonal_act(box.pairs, x, C, nG, on_G, on_A) for x in C))
    rep.record("compatible pairs are stable under the diagonal action", stable)
    rep.record("Z1(D,C) is stable under the action", hD.stable)
    box_classes = sorted(set(labels.tolist()))
    image, well = {}, True
    for ci, c in enumerate(hD.classes):
        targets = {int(labels[split_idx[m]]) for m in c.members if split_idx[m] is not None}
        well &= len(targets) == 1
        image[ci] = min(targets) if targets else -1
    rep.record("restriction descends to classes", well)
    rep.record("induced map on classes is bijective", sorted(image.values()) == box_classes)
    rep.record("class bijection is pointed", image[hD.distinguished_class] == labels[box.distinguished])

    # exact sequence through the A-invariant subgroup
    CA = sorted(h0A)
    zG_inv = zG[np.isin(zG, CA).all(axis=1)]
    cls_GA, cls_GA_of, _ = classes_under(zG_inv, CA, C, on_G, _constant_index(zG_inv, C.identity))
    hA = group_h1(A, C, on_A, budget)
    iota, well = {}, True
    for ci, c in enumerate(cls_GA):
        const = np.full((len(c.members), nA), C.identity, dtype=np.int64)
        tables = _assemble_table(zG_inv[c.members], const, G, A, C, on_G)
        targets = {hD.class_of_table(t) for t in tables}
        well &= len(targets) == 1 and None not in targets
        iota[ci] = min(t for t in targets if t is not None) if targets - {None} else -1
    rep.record("iota is well defined on classes", well)
    rep.record("iota is injective", len(set(iota.values())) == len(iota))
    pi, well = {}, True
    for ci, c in enumerate(hD.classes):
        targets = {hA.class_of_table(t) for t in alp[c.members]}
        well &= len(targets) == 1 and None not in targets
        pi[ci] = min(targets)
    rep.record("pi is well defined on classes", well)
    invariant = set()
    for ci, c in enumerate(hA.classes):
        alpha = hA.z1[c.members[0]]
        fixed = True
        for g in G:
            moved = np.array([on_G.table[g][alpha[act_GA(G.inv(g), a)]] for a in A], dtype=np.int64)
            fixed &= hA.class_of_table(moved) == ci
        if fixed:
            invariant.add(ci)
    rep.record("pi lands in the G-invariant classes", set(pi.values()) <= invariant)
    fibre = {ci for ci, t in pi.items() if t == hA.distinguished_class}
    rep.record("image of iota equals the fibre of pi over the base point", set(iota.values()) == fibre)

    data = {
        "h0_D": len(h0D),
        "h0_G_cap_A": len(h0G & h0A),
        "z1_D": len(hD.z1),
        "box_pairs": len(box),
        "h1_D": hD.h1_count,
        "box_classes": len(box_classes),
        "h1_G_CA": len(cls_GA),
        "h1_A": hA.h1_count,
        "h1_A_invariant": len(invariant),
    }
    return VerificationReport("semidirect decomposition", rep, data)


# -- comparison with the Hopf pipeline ----------------------------------------------------------


def unit_group(F, name: str | None = None) -> tuple[FiniteGroup, list[np.ndarray]]:
    """The unit group of a commutative algebra, elements in lexicographic order."""
    pairs = unit_pairs(F)
    vecs = [x.vec for x, _ in pairs]
    index = {v.tobytes(): i for i, v in enumerate(vecs)}
    table = [[index[F.mul(a, b).tobytes()] for b in vecs] for a in vecs]
    labels = ["(" + ",".join(str(int(c)) for c in v) + ")" for v in vecs]
    return FiniteGroup(name or f"{F.space.name}^x", labels, table), vecs


def cross_check_hopf_vs_group(
    D: FiniteGroup, act: GroupAction, p: int, budget: int | None = None, semidirect_data: tuple | None = None
) -> VerificationReport:
    """H0 and H1 of k^D with coefficients k^C against group cohomology of D
    with values in (k^C)^x, matched elementwise.

    ``semidirect_data`` = (G, A, act_GA) additionally runs the semidirect
    decomposition on the unit group.
    """
    budget = _budget(budget)
    F, maps = function_algebra_action(D, act, p)
    kD = function_algebra(D, p)
    Fc = comodule_from_group_action(D, F, maps, p, kD)
    d = build_C(kD, Fc)
    hopf = compute_h1(d, budget)

    U, vecs = unit_group(F)
    index = {v.tobytes(): i for i, v in enumerate(vecs)}
    table = [[index[(maps[g].apply_vec(v)).tobytes()] for v in vecs] for g in D]
    actU = GroupAction(D, U, table)
    group = group_h1(D, U, actU, budget)

    rep = CheckReport(f"k^{D.name} with coefficients k^{act.target.name} against {D.name} on units")
    hopf_h0 = sorted(index[x.vec.tobytes()] for x in hopf.h0)
    rep.record("H0 agree elementwise", hopf_h0 == sorted(group.h0))
    # X in k^C x k^D  <->  beta(d) = (id x ev_d) X
    nD = D.order
    tables, ok = [], True
    for X in hopf.z1.vectors:
        cols = X.reshape(F.dim, nD).T
        idx = [index.get(c.tobytes()) for c in cols]
        ok &= None not in idx
        tables.append(idx)
    rep.record("every Hopf cocycle evaluates to unit values", ok)
    if ok:
        tabs = np.array(tables, dtype=np.int64).reshape(-1, nD)
        gidx = [group.index.get(t.tobytes()) for t in tabs]
        rep.record("Z1 agree elementwise", None not in gidx and sorted(gidx) == list(range(len(group.z1))))
        if None not in gidx:
            image, well = {}, True
            for ci, c in enumerate(hopf.classes):
                targets = {int(group.class_of[gidx[m]]) for m in c.members}
                well &= len(targets) == 1
                image[ci] = min(targets)
            rep.record("H1 classes correspond", well and sorted(image.values()) == list(range(group.h1_count)))
            rep.record("distinguished points correspond", image[hopf.distinguished_class] == group.distinguished_class)
    rep.record("H0 sizes agree", len(hopf.h0) == len(group.h0))
    rep.record("H1 sizes agree", hopf.h1_count == group.h1_count)
    data = {
        "units": U.order,
        "hopf_h0": len(hopf.h0),
        "group_h0": len(group.h0),
        "hopf_z1": len(hopf.z1),
        "group_z1": len(group.z1),
        "hopf_h1": hopf.h1_count,
        "group_h1": group.h1_count,
    }
    if semidirect_data is not None:
        G, A, act_GA = semidirect_data
        sub = verify_semidirect_decomposition(G, A, act_GA, U, actU, budget)
        rep.extend(sub.checks, prefix="units: ")
        data["semidirect"] = sub.data
    return VerificationReport("hopf versus group", rep, data)

"""Constructors for the example families: finite groups and their actions,
group and function Hopf algebras, Taft algebras with their braided
factorization, k^A as a Hopf algebra in YD over k^G, and comodule algebras
coming from group actions.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import NotAnAction, PrerequisiteFailed
from .hopf_core import AlgebraData, CheckReport, CoalgebraData, HopfData
from .linalg import BasedSpace, LinearMap, identity, tensor
from .radford import BraidedHopfData, ComoduleAlgebraData
from .scalars import make_prime_field, primitive_root_of_unity, zeta_binomial
from .yd import HComodule, HModule, YDObject


# -- finite groups ---------------------------------------------------------------


class FiniteGroup:
    """A finite group given by its multiplication table on indices 0..n-1."""

    def __init__(self, name: str, labels, table):
        self.name = name
        self.labels = tuple(labels)
        self.table = np.asarray(table, dtype=np.int64)
        n = len(self.labels)
        if self.table.shape != (n, n):
            raise ValueError(f"{name}: table shape {self.table.shape} does not match {n} elements")
        if ((self.table < 0) | (self.table >= n)).any():
            raise ValueError(f"{name}: table entries out of range")
        ids = [e for e in range(n) if (self.table[e] == np.arange(n)).all() and (self.table[:, e] == np.arange(n)).all()]
        if len(ids) != 1:
            raise ValueError(f"{name}: no two-sided identity")
        self.identity = ids[0]
        if not self._associative():
            raise ValueError(f"{name}: multiplication is not associative")
        inv = np.full(n, -1, dtype=np.int64)
        for g in range(n):
            hits = np.flatnonzero(self.table[g] == self.identity)
            if len(hits) != 1 or self.table[hits[0], g] != self.identity:
                raise ValueError(f"{name}: {self.labels[g]} has no inverse")
            inv[g] = hits[0]
        self.inverse = inv

    def _associative(self) -> bool:
        t = self.table
        # (gh)k versus g(hk) for all triples at once
        return bool((t[t, :] == t[:, t]).all())

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def mul(self, g: int, h: int) -> int:
        return int(self.table[g, h])

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def to_dict(self) -> dict:
        return {"name": self.name, "elements": list(self.labels), "table": self.table.tolist()}

    @classmethod
    def from_dict(cls, d: dict) -> FiniteGroup:
        return cls(d.get("name", "G"), d["elements"], d["table"])

    def __repr__(self):
        return f"{self.name}(order {self.order})"


def cyclic_group(n: int, gen: str = "u", name: str | None = None) -> FiniteGroup:
    if n < 1:
        raise ValueError("a cyclic group has order at least 1")
    labels = ["e"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(name or f"Z{n}", labels, table)


def trivial_group(name: str = "1") -> FiniteGroup:
    return FiniteGroup(name, ["e"], [[0]])


class GroupAction:
    """A left action of ``actor`` on the elements of ``target`` by automorphisms.

    ``table[g, a]`` is the index of g.a.  When ``target`` is only used as a
    set, pass ``by_automorphisms=False``.
    """

    def __init__(self, actor: FiniteGroup, target: FiniteGroup, table, by_automorphisms: bool = True):
        self.actor = actor
        self.target = target
        self.table = np.asarray(table, dtype=np.int64)
        self.by_automorphisms = by_automorphisms
        problem = self._problem()
        if problem:
            raise NotAnAction(problem)

    def _problem(self) -> str | None:
        G, A, t = self.actor, self.target, self.table
        if t.shape != (G.order, A.order):
            return f"action table shape {t.shape} does not fit {G} on {A}"
        if not (t[G.identity] == np.arange(A.order)).all():
            return "the identity does not act trivially"
        for g in G:
            if sorted(t[g].tolist()) != list(range(A.order)):
                return f"{G.labels[g]} does not act bijectively"
            for h in G:
                if not (t[G.mul(g, h)] == t[g][t[h]]).all():
                    return f"(gh).a != g.(h.a) for g={G.labels[g]}, h={G.labels[h]}"
            if self.by_automorphisms and not (t[g][A.table] == A.table[t[g]][:, t[g]]).all():
                return f"{G.labels[g]} does not act by group automorphisms"
        return None

    def __call__(self, g: int, a: int) -> int:
        return int(self.table[g, a])

    def is_trivial(self) -> bool:
        return bool((self.table == np.arange(self.target.order)[None, :]).all())

    def to_dict(self) -> dict:
        return {"actor": self.actor.name, "target": self.target.name, "table": self.table.tolist()}


def trivial_action(G: FiniteGroup, A: FiniteGroup) -> GroupAction:
    return GroupAction(G, A, np.tile(np.arange(A.order), (G.order, 1)))


def inversion_action(G: FiniteGroup, A: FiniteGroup) -> GroupAction:
    """G acts on the abelian group A through G -> Z/2, the generator inverting.

    Meaningful when G is cyclic of even order with canonical labelling.
    """
    if G.order % 2:
        raise NotAnAction("inversion needs an actor of even order")
    table = [A.inverse if k % 2 else np.arange(A.order) for k in range(G.order)]
    return GroupAction(G, A, table)


def conjugation_action(D: FiniteGroup) -> GroupAction:
    t = D.table
    table = [[t[t[d, x], D.inverse[d]] for x in D] for d in D]
    return GroupAction(D, D, table)


def semidirect(G: FiniteGroup, A: FiniteGroup, act: GroupAction, name: str | None = None) -> FiniteGroup:
    """G x A with (g,a)(h,b) = (gh, (h^-1 . a) b), indexed g-major, a-minor."""
    if act.actor is not G and act.actor.table.tolist() != G.table.tolist():
        raise NotAnAction("action is not by the given group")
    if not act.by_automorphisms:
        raise NotAnAction("a semidirect product needs an action by automorphisms")
    nA = A.order
    labels = [f"({G.labels[g]},{A.labels[a]})" for g in G for a in A]
    table = np.empty((G.order * nA, G.order * nA), dtype=np.int64)
    for g, a, h, b in product(G, A, G, A):
        gh = G.mul(g, h)
        c = A.mul(act(G.inv(h), a), b)
        table[g * nA + a, h * nA + b] = gh * nA + c
    return FiniteGroup(name or f"{G.name}⋉{A.name}", labels, table)


def embed_left(G: FiniteGroup, A: FiniteGroup) -> list[int]:
    """g -> (g, 1) inside G x| A."""
    return [g * A.order + A.identity for g in G]


def embed_right(G: FiniteGroup, A: FiniteGroup) -> list[int]:
    """a -> (1, a) inside G x| A."""
    return [G.identity * A.order + a for a in A]


def s3_data():
    """(Z/2, Z/3, inversion action, S_3 = Z/2 x| Z/3)."""
    G = cyclic_group(2, "s", "Z2")
    A = cyclic_group(3, "r", "Z3")
    act = inversion_action(G, A)
    return G, A, act, semidirect(G, A, act, name="S3")


def semidirect_action(D: FiniteGroup, G: FiniteGroup, A: FiniteGroup, on_G: GroupAction, on_A: GroupAction) -> GroupAction:
    """The action of D = G x| A on C given by (g,a).x = g.(a.x)."""
    C = on_G.target
    nA = A.order
    table = np.empty((D.order, C.order), dtype=np.int64)
    for g, a in product(G, A):
        table[g * nA + a] = on_G.table[g][on_A.table[a]]
    return GroupAction(D, C, table, by_automorphisms=on_G.by_automorphisms and on_A.by_automorphisms)


def restrict_action(act: GroupAction, sub: FiniteGroup, embedding: list[int]) -> GroupAction:
    return GroupAction(sub, act.target, act.table[embedding], by_automorphisms=act.by_automorphisms)


# -- Hopf algebras of groups ---------------------------------------------------------


def _hopf_from_rules(name, labels, p, mul, unit, comul, counit, antipode) -> HopfData:
    """Assemble HopfData from callables on basis indices returning {index: coef}."""
    S = BasedSpace.from_labels(name, labels)
    n = S.dim
    mult = LinearMap.from_columns((S, S), (S,), p, lambda j: mul(*divmod(j, n)))
    u = LinearMap.from_columns((), (S,), p, lambda j: unit)
    de = LinearMap.from_columns((S,), (S, S), p, lambda j: {a * n + b: c for (a, b), c in comul(j).items()})
    ep = LinearMap.from_columns((S,), (), p, lambda j: {0: counit(j)} if counit(j) % p else {})
    sg = LinearMap.from_columns((S,), (S,), p, antipode)
    return HopfData(AlgebraData(S, mult, u), CoalgebraData(S, de, ep), sg, name=name)


def group_algebra(G: FiniteGroup, p: int, name: str | None = None) -> HopfData:
    make_prime_field(p)
    return _hopf_from_rules(
        name or f"k[{G.name}]",
        G.labels,
        p,
        lambda g, h: {G.mul(g, h): 1},
        {G.identity: 1},
        lambda g: {(g, g): 1},
        lambda g: 1,
        lambda g: {G.inv(g): 1},
    )


def function_algebra(D: FiniteGroup, p: int, name: str | None = None) -> HopfData:
    """k^D: delta_d delta_d' = [d = d'] delta_d, Delta(delta_d) = sum_{uv=d} delta_u x delta_v."""
    make_prime_field(p)
    pairs: dict[int, dict] = {d: {} for d in D}
    for u, v in product(D, D):
        pairs[D.mul(u, v)][(u, v)] = 1
    return _hopf_from_rules(
        name or f"k^{D.name}",
        [f"δ{lab}" for lab in D.labels],
        p,
        lambda d, e: {d: 1} if d == e else {},
        {d: 1 for d in D},
        lambda d: pairs[d],
        lambda d: 1 if d == D.identity else 0,
        lambda d: {D.inv(d): 1},
    )


def function_algebra_only(C: FiniteGroup, p: int, name: str | None = None) -> AlgebraData:
    return function_algebra(C, p, name).algebra


# -- Taft algebras ---------------------------------------------------------------------


@dataclass
class TaftPair:
    n: int
    p: int
    zeta: int
    taft: HopfData  # H_{n^2}, basis g^a h^b at index a*n + b
    comodule_algebra: ComoduleAlgebraData  # E_n inside H_{n^2}, coaction Delta
    group_hopf: HopfData  # k[Z/n]
    braided: BraidedHopfData  # E over k[Z/n]
    correspondence: list[int]  # index of u^a * y^b in k[G]*E -> index of g^a h^b


def _taft_word(n: int, a: int, b: int) -> int:
    return (a % n) * n + b


def taft_algebra(n: int, p: int) -> tuple[HopfData, int]:
    """H_{n^2} with g^n = 1, h^n = 0, hg = zeta gh, g grouplike and
    Delta(h) = h x g + 1 x h, built by multiplying out in H x H."""
    F = make_prime_field(p)
    zeta = primitive_root_of_unity(F, n).value
    N = n * n
    labels = [("1" if a == 0 else ("g" if a == 1 else f"g^{a}")) if b == 0 else
              (("" if a == 0 else ("g" if a == 1 else f"g^{a}")) + ("h" if b == 1 else f"h^{b}"))
              for a in range(n) for b in range(n)]

    def mul_vec(x: dict, y: dict) -> dict:
        out: dict[int, int] = {}
        for i, c in x.items():
            a, b = divmod(i, n)
            for j, d in y.items():
                c2, d2 = divmod(j, n)
                if b + d2 >= n:
                    continue
                k = _taft_word(n, a + c2, b + d2)
                out[k] = (out.get(k, 0) + c * d * pow(zeta, b * c2, p)) % p
        return {k: v for k, v in out.items() if v}

    def mul_pair(X: dict, Y: dict) -> dict:
        out: dict = {}
        for (i1, i2), c in X.items():
            for (j1, j2), d in Y.items():
                for k1, e1 in mul_vec({i1: 1}, {j1: 1}).items():
                    for k2, e2 in mul_vec({i2: 1}, {j2: 1}).items():
                        out[(k1, k2)] = (out.get((k1, k2), 0) + c * d * e1 * e2) % p
        return {k: v for k, v in out.items() if v}

    g, h, one = _taft_word(n, 1, 0), _taft_word(n, 0, 1), 0
    d_g = {(g, g): 1}
    d_h = {(h, g): 1, (one, h): 1}
    comul = {}
    for a in range(n):
        for b in range(n):
            X = {(one, one): 1}
            for _ in range(a):
                X = mul_pair(X, d_g)
            for _ in range(b):
                X = mul_pair(X, d_h)
            comul[a * n + b] = X
    # S(g^a h^b) = S(h)^b S(g)^a with S(g) = g^{n-1}, S(h) = -zeta^{-1} g^{n-1} h
    s_g = {_taft_word(n, n - 1, 0): 1}
    s_h = {_taft_word(n, n - 1, 1): (-pow(zeta, -1, p)) % p}
    anti = {}
    for a in range(n):
        for b in range(n):
            x = {one: 1}
            for _ in range(b):
                x = mul_vec(x, s_h)
            for _ in range(a):
                x = mul_vec(x, s_g)
            anti[a * n + b] = x
    H = _hopf_from_rules(
        f"H{N}",
        labels,
        p,
        lambda i, j: mul_vec({i: 1}, {j: 1}),
        {one: 1},
        lambda i: comul[i],
        lambda i: 1 if i % n == 0 else 0,
        lambda i: anti[i],
    )
    H.dual_generators = taft_dual_generators(n, p, zeta)
    return H, zeta


def taft_dual_generators(n: int, p: int, zeta: int) -> list[np.ndarray]:
    """eps, the character chi(g^a h^b) = zeta^a [b=0] and the skew-primitive
    xi(g^a h^b) = [b=1]; they span a subcoalgebra of the dual that generates it."""
    eps = np.array([1 if i % n == 0 else 0 for i in range(n * n)], dtype=np.int64)
    chi = np.array([pow(zeta, i // n, p) if i % n == 0 else 0 for i in range(n * n)], dtype=np.int64)
    xi = np.array([1 if i % n == 1 else 0 for i in range(n * n)], dtype=np.int64)
    return [eps, chi, xi]


def truncated_polynomial_algebra(n: int, p: int, name: str = "E") -> AlgebraData:
    """k[y]/(y^n) on the basis 1, y, ..., y^{n-1}."""
    labels = ["1" if i == 0 else ("y" if i == 1 else f"y^{i}") for i in range(n)]
    S = BasedSpace.from_labels(f"{name}{n}" if name == "E" else name, labels)
    mult = LinearMap.from_columns((S, S), (S,), p, lambda j: {sum(divmod(j, n)): 1} if sum(divmod(j, n)) < n else {})
    unit = LinearMap.from_columns((), (S,), p, lambda j: {0: 1})
    return AlgebraData(S, mult, unit)


def braided_truncated_polynomial(kG: HopfData, n: int, zeta: int) -> BraidedHopfData:
    """E = k[y]/(y^n) in YD over k[Z/n]: y^i . u^j = zeta^{ij} y^i, rho(y^i) = y^i x u^i."""
    p = kG.p
    alg = truncated_polynomial_algebra(n, p)
    S, Hs = alg.space, kG.space
    z = make_prime_field(p)(zeta)
    action = LinearMap.from_columns((S, Hs), (S,), p, lambda col: {col // n: pow(zeta, (col // n) * (col % n), p)})
    coaction = LinearMap.from_columns((S,), (S, Hs), p, lambda i: {i * n + i: 1})
    comult = LinearMap.from_columns(
        (S,), (S, S), p, lambda i: {s * n + (i - s): zeta_binomial(i, s, z).value for s in range(i + 1)}
    )
    counit = LinearMap.from_columns((S,), (), p, lambda i: {0: 1} if i == 0 else {})
    # (-1)^i zeta^{i(i-1)/2}; i(i-1) is even, so the halving is exact in Z
    antipode = LinearMap.from_columns((S,), (S,), p, lambda i: {i: (-1) ** i * pow(zeta, i * (i - 1) // 2, p)})
    yd = YDObject(HModule(S, action, kG), HComodule(S, coaction, kG))
    return BraidedHopfData(yd, alg.mult, alg.unit, comult, counit, antipode, name=S.name)


def taft_pair(n: int, p: int) -> TaftPair:
    H, zeta = taft_algebra(n, p)
    kG = group_algebra(cyclic_group(n, "u"), p, name=f"k[Z{n}]")
    E = braided_truncated_polynomial(kG, n, zeta)
    # E_n = span{h^b} inside H_{n^2}; its coaction is Delta restricted
    alg = truncated_polynomial_algebra(n, p)
    S = alg.space
    embed = LinearMap.from_columns((S,), (H.space,), p, lambda b: {b: 1})
    # the left leg of Delta(h^b) lies in span{h^c}: re-index it from H to S
    rho = _restrict_left_leg(H, embed, S, n, p)
    Fn = ComoduleAlgebraData(alg, hopf=H, rho_H=rho, kind="plain", name=S.name)
    return TaftPair(n, p, zeta, H, Fn, kG, E, list(range(n * n)))


def _column(f: LinearMap, j: int) -> dict:
    col = f.mat[:, [j]].tocoo()
    return {int(r): int(v) for r, v in zip(col.row, col.data)}


def _restrict_left_leg(H: HopfData, embed: LinearMap, S: BasedSpace, n: int, p: int) -> LinearMap:
    """Delta restricted to span{h^b} as a map S -> S x H."""
    N = H.dim
    D = H.delta @ embed

    def col(b):
        out = {}
        for i, c in _column(D, b).items():
            left, right = divmod(i, N)
            a, e = divmod(left, n)
            if a != 0:
                raise PrerequisiteFailed("E_n is not a left coideal of H_{n^2}")
            out[e * N + right] = c
        return out

    return LinearMap.from_columns((S,), (S, H.space), p, col)


def structure_constant_match(A: HopfData, B: HopfData, perm: list[int]) -> CheckReport:
    """Compare the five structure maps of A and B under basis index map perm: A -> B."""
    p = A.p
    rep = CheckReport(f"{A.name} ≅ {B.name}")
    phi = LinearMap.from_columns((A.space,), (B.space,), p, lambda j: {perm[j]: 1})
    rep.equal("multiplication", phi @ A.mu, B.mu @ tensor(phi, phi))
    rep.equal("unit", phi @ A.eta, B.eta)
    rep.equal("comultiplication", tensor(phi, phi) @ A.delta, B.delta @ phi)
    rep.equal("counit", A.eps, B.eps @ phi)
    rep.equal("antipode", phi @ A.sigma, B.sigma @ phi)
    return rep


# -- k^A in YD over k^G ----------------------------------------------------------------


@dataclass
class FunctionPair:
    G: FiniteGroup
    A: FiniteGroup
    act: GroupAction
    D: FiniteGroup  # G x| A
    hopf: HopfData  # k^G
    braided: BraidedHopfData  # k^A
    function_D: HopfData  # k^{G x| A}
    correspondence: list[int]


def kA_in_yd(G: FiniteGroup, A: FiniteGroup, act: GroupAction, p: int) -> FunctionPair:
    """k^A with trivial k^G-action and rho(delta_a) = sum_h delta_{h.a} x delta_h."""
    kG = function_algebra(G, p)
    kA = function_algebra(A, p)
    S, Hs = kA.space, kG.space
    nG = G.order
    action = tensor(identity(S, p), kG.eps)
    coaction = LinearMap.from_columns((S,), (S, Hs), p, lambda a: {act(h, a) * nG + h: 1 for h in G})
    yd = YDObject(HModule(S, action, kG), HComodule(S, coaction, kG))
    E = BraidedHopfData(yd, kA.mu, kA.eta, kA.delta, kA.eps, kA.sigma, name=kA.name)
    D = semidirect(G, A, act)
    kD = function_algebra(D, p)
    return FunctionPair(G, A, act, D, kG, E, kD, list(range(D.order)))


# -- comodule algebras from group actions ------------------------------------------------


def function_algebra_action(D: FiniteGroup, act: GroupAction, p: int) -> tuple[AlgebraData, list[LinearMap]]:
    """k^C with d.delta_c = delta_{d.c}; these are algebra automorphisms."""
    C = act.target
    alg = function_algebra_only(C, p)
    S = alg.space
    maps = [LinearMap.from_columns((S,), (S,), p, lambda c, d=d: {act(d, c): 1}) for d in D]
    return alg, maps


def _check_action_maps(D: FiniteGroup, F: AlgebraData, maps: list[LinearMap]) -> str | None:
    p, S = F.p, F.space
    if len(maps) != D.order:
        return "one map per group element is required"
    if maps[D.identity] != identity(S, p):
        return "the identity does not act trivially"
    for d, e in product(D, D):
        if maps[D.mul(d, e)] != maps[d] @ maps[e]:
            return f"(de).x != d.(e.x) for d={D.labels[d]}, e={D.labels[e]}"
    for d in D:
        m = maps[d]
        if m @ F.mult != F.mult @ tensor(m, m) or m @ F.unit != F.unit:
            return f"{D.labels[d]} does not act by algebra automorphisms"
    return None


def comodule_from_group_action(D: FiniteGroup, F: AlgebraData, maps: list[LinearMap], p: int, kD: HopfData | None = None) -> ComoduleAlgebraData:
    """rho(x) = sum_d (d.x) x delta_d, a k^D-comodule algebra."""
    problem = _check_action_maps(D, F, maps)
    if problem:
        raise NotAnAction(problem)
    kD = kD or function_algebra(D, p)
    S, nD = F.space, D.order

    def col(j):
        out = {}
        for d in D:
            for i, c in _column(maps[d], j).items():
                out[i * nD + d] = c
        return out

    rho = LinearMap.from_columns((S,), (S, kD.space), p, col)
    return ComoduleAlgebraData(F, hopf=kD, rho_H=rho, kind="plain", name=S.name)


def action_from_coaction(F: ComoduleAlgebraData) -> list[LinearMap]:
    """d.x = (id x ev_d) rho(x), the inverse of comodule_from_group_action."""
    p, S = F.p, F.space
    nD = F.hopf.dim
    out = []
    for d in range(nD):
        ev = LinearMap.from_columns((F.hopf.space,), (), p, lambda j, d=d: {0: 1} if j == d else {})
        out.append((tensor(identity(S, p), ev) @ F.rho_H).retyped(cod=(S,)))
    return out

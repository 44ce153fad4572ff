"""Algebras, coalgebras and Hopf algebras given by structure constants.

Every axiom is checked as an exact equality of canonical sparse maps, so a
check either passes or names the first basis multi-index where it fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import scipy.sparse as sp

from .errors import NotInvertible, ShapeMismatch
from .linalg import (
    BasedSpace,
    Element,
    LinearMap,
    chain,
    check_budget,
    flip,
    identity,
    inverse,
    iter_coordinate_blocks,
    permute_factors,
    solve,
    tensor,
)


@dataclass
class CheckItem:
    axiom: str
    passed: bool
    witness: dict | None = None

    def to_dict(self) -> dict:
        d = {"axiom": self.axiom, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class CheckReport:
    subject: str
    items: list[CheckItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.passed for i in self.items)

    def __bool__(self):
        return self.ok

    @property
    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.passed]

    def item(self, axiom: str) -> CheckItem:
        for i in self.items:
            if i.axiom == axiom:
                return i
        raise KeyError(axiom)

    def record(self, axiom: str, passed: bool, witness=None) -> bool:
        self.items.append(CheckItem(axiom, bool(passed), witness))
        return bool(passed)

    def equal(self, axiom: str, lhs: LinearMap, rhs: LinearMap) -> bool:
        if lhs.dom != rhs.dom or lhs.cod != rhs.cod:
            return self.record(axiom, False, {"shape": f"{lhs} vs {rhs}"})
        return self.record(axiom, lhs == rhs, lhs.first_difference(rhs))

    def extend(self, other: CheckReport, prefix: str = ""):
        for i in other.items:
            self.items.append(CheckItem(prefix + i.axiom, i.passed, i.witness))
        return self

    def to_dict(self) -> dict:
        return {"subject": self.subject, "ok": self.ok, "items": [i.to_dict() for i in self.items]}

    def lines(self) -> list[str]:
        return [f"{'PASS' if i.passed else 'FAIL'} {self.subject}: {i.axiom}" for i in self.items]


class AlgebraData:
    """Unital algebra on a based space: mult A x A -> A and unit k -> A."""

    def __init__(self, space: BasedSpace, mult: LinearMap, unit: LinearMap):
        if mult.dom != (space, space) or mult.cod != (space,):
            raise ShapeMismatch(f"multiplication must be {space}x{space} -> {space}, got {mult}")
        if unit.dom != () or unit.cod != (space,):
            raise ShapeMismatch(f"unit must be k -> {space}, got {unit}")
        self.space = space
        self.mult = mult
        self.unit = unit
        self.p = mult.p

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def one(self) -> np.ndarray:
        return self.unit.dense()[:, 0] % self.p

    @cached_property
    def _triplets(self):
        coo = self.mult.mat.tocoo()
        i, j = np.divmod(coo.col.astype(np.int64), self.dim)
        return i, j, coo.row.astype(np.int64), coo.data.astype(np.int64)

    def mul(self, a, b) -> np.ndarray:
        return self.mult.apply_vec(np.kron(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)))

    def mul_batch(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Row-wise products of two (batch, dim) arrays."""
        i, j, k, c = self._triplets
        n = A.shape[0]
        out = np.zeros((n, self.dim), dtype=np.int64)
        if len(c) == 0 or n == 0:
            return out
        scatter = sp.csr_array((c, (np.arange(len(c)), k)), shape=(len(c), self.dim))
        step = max(1, 4_000_000 // len(c))
        for s in range(0, n, step):
            terms = (A[s : s + step][:, i] * B[s : s + step][:, j]) % self.p
            out[s : s + step] = np.asarray(terms @ scatter) % self.p
        return out

    def left_matrix(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64).reshape(-1, 1)
        lift = sp.kron(sp.csr_array(a), sp.identity(self.dim, dtype=np.int64, format="csr"))
        return np.asarray((self.mult.mat @ lift).toarray()) % self.p

    def inverse_vec(self, a):
        """Two-sided inverse of a, or None."""
        y = solve(self.left_matrix(a), self.one, self.p)
        if y is None:
            return None
        if not np.array_equal(self.mul(y, a), self.one):
            return None
        return y

    def inverse(self, x: Element) -> Element:
        y = self.inverse_vec(x.vec)
        if y is None:
            raise NotInvertible(f"{x} is not invertible in {self.space.name}")
        return Element.from_vec((self.space,), y, self.p)

    def element(self, vec) -> Element:
        return Element.from_vec((self.space,), vec, self.p)

    def to_dict(self) -> dict:
        return {"space": self.space.to_dict(), "mult": self.mult.to_dict(), "unit": self.unit.to_dict()}


class CoalgebraData:
    def __init__(self, space: BasedSpace, comult: LinearMap, counit: LinearMap):
        if comult.dom != (space,) or comult.cod != (space, space):
            raise ShapeMismatch(f"comultiplication must be {space} -> {space}x{space}, got {comult}")
        if counit.dom != (space,) or counit.cod != ():
            raise ShapeMismatch(f"counit must be {space} -> k, got {counit}")
        self.space = space
        self.comult = comult
        self.counit = counit
        self.p = comult.p

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def eps(self) -> np.ndarray:
        return self.counit.dense()[0] % self.p


class HopfData:
    """A Hopf algebra presented by its five structure maps."""

    def __init__(self, algebra: AlgebraData, coalgebra: CoalgebraData, antipode: LinearMap, name: str | None = None):
        if algebra.space != coalgebra.space:
            raise ShapeMismatch("algebra and coalgebra live on different spaces")
        if antipode.dom != (algebra.space,) or antipode.cod != (algebra.space,):
            raise ShapeMismatch(f"antipode must be an endomorphism of {algebra.space}")
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode
        self.name = name or algebra.space.name

    space = property(lambda self: self.algebra.space)
    p = property(lambda self: self.algebra.p)
    dim = property(lambda self: self.algebra.dim)
    mu = property(lambda self: self.algebra.mult)
    eta = property(lambda self: self.algebra.unit)
    delta = property(lambda self: self.coalgebra.comult)
    eps = property(lambda self: self.coalgebra.counit)
    sigma = property(lambda self: self.antipode)

    def antipode_inverse(self) -> LinearMap | None:
        inv = inverse(self.antipode.dense(), self.p)
        if inv is None:
            return None
        return LinearMap.from_dense(self.antipode.dom, self.antipode.cod, self.p, inv)

    def to_dict(self) -> dict:
        return {
            "field": {"p": self.p},
            "space": self.space.to_dict(),
            "mult": self.mu.to_dict(),
            "unit": self.eta.to_dict(),
            "comult": self.delta.to_dict(),
            "counit": self.eps.to_dict(),
            "antipode": self.sigma.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict, name: str | None = None) -> HopfData:
        p = int(d["field"]["p"])
        space = BasedSpace.from_dict(d["space"])
        alg = AlgebraData(space, LinearMap.from_dict(d["mult"], p), LinearMap.from_dict(d["unit"], p))
        coalg = CoalgebraData(space, LinearMap.from_dict(d["comult"], p), LinearMap.from_dict(d["counit"], p))
        return cls(alg, coalg, LinearMap.from_dict(d["antipode"], p), name=name)


def _mid_flip(A, B, p):
    """A x B x A x B -> A x A x B x B."""
    return permute_factors((A, B, A, B), [0, 2, 1, 3], p)


def check_algebra(a: AlgebraData, subject: str | None = None) -> CheckReport:
    A, p, mu, eta = a.space, a.p, a.mult, a.unit
    rep = CheckReport(subject or f"algebra {A.name}")
    idA = identity(A, p)
    rep.equal("associativity", mu @ tensor(mu, idA), mu @ tensor(idA, mu))
    rep.equal("left unit", (mu @ tensor(eta, idA)).retyped(dom=(A,)), idA)
    rep.equal("right unit", (mu @ tensor(idA, eta)).retyped(dom=(A,)), idA)
    return rep


def check_coalgebra(c: CoalgebraData, subject: str | None = None) -> CheckReport:
    C, p, de, ep = c.space, c.p, c.comult, c.counit
    rep = CheckReport(subject or f"coalgebra {C.name}")
    idC = identity(C, p)
    rep.equal("coassociativity", tensor(de, idC) @ de, tensor(idC, de) @ de)
    rep.equal("left counit", (tensor(ep, idC) @ de).retyped(cod=(C,)), idC)
    rep.equal("right counit", (tensor(idC, ep) @ de).retyped(cod=(C,)), idC)
    return rep


def check_bialgebra_compat(h: HopfData, rep: CheckReport) -> CheckReport:
    H, p = h.space, h.p
    mu, eta, de, ep = h.mu, h.eta, h.delta, h.eps
    rep.equal("comultiplication is multiplicative", de @ mu, tensor(mu, mu) @ _mid_flip(H, H, p) @ tensor(de, de))
    rep.equal("comultiplication is unital", de @ eta, tensor(eta, eta).retyped(dom=()))
    rep.equal("counit is multiplicative", ep @ mu, tensor(ep, ep).retyped(cod=()))
    rep.equal("counit is unital", ep @ eta, identity((), p))
    return rep


def convolution(h: HopfData, f: LinearMap, g: LinearMap) -> LinearMap:
    """mu (f x g) Delta."""
    return chain(h.mu, tensor(f, g), h.delta)


def check_hopf(h: HopfData, require_coop: bool = False, subject: str | None = None) -> CheckReport:
    rep = CheckReport(subject or f"Hopf algebra {h.name}")
    rep.extend(check_algebra(h.algebra))
    rep.extend(check_coalgebra(h.coalgebra))
    check_bialgebra_compat(h, rep)
    H, p = h.space, h.p
    idH = identity(H, p)
    unit_counit = h.eta @ h.eps
    rep.equal("antipode left", convolution(h, h.sigma, idH), unit_counit)
    rep.equal("antipode right", convolution(h, idH, h.sigma), unit_counit)
    if require_coop:
        inv = h.antipode_inverse()
        if rep.record("antipode invertible", inv is not None, None if inv is not None else {"rank_deficient": True}):
            cop = flip(H, H, p) @ h.delta
            rep.equal("co-opposite antipode left", chain(h.mu, tensor(inv, idH), cop), unit_counit)
            rep.equal("co-opposite antipode right", chain(h.mu, tensor(idH, inv), cop), unit_counit)
    return rep


def _rowwise_kron(X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    return (X[:, :, None] * Y[:, None, :]).reshape(X.shape[0], -1)


def grouplikes(h: HopfData, budget: int | None = None) -> list[Element]:
    """All x with Delta(x) = x (x) x and eps(x) = 1, by exhaustive search."""
    p, d = h.p, h.dim
    check_budget(p**d, budget)
    eps = h.coalgebra.eps
    out = []
    for X in iter_coordinate_blocks(p, d, budget):
        keep = (X @ eps) % p == 1
        X = X[keep]
        if not len(X):
            continue
        lhs = h.delta.apply_batch(X)
        rhs = _rowwise_kron(X, X) % p
        for row in X[np.all(lhs == rhs, axis=1)]:
            out.append(Element.from_vec((h.space,), row, p))
    return out


def units(a: AlgebraData, budget: int | None = None) -> list[Element]:
    """All two-sided invertible elements, lexicographically ordered."""
    return [x for x, _ in unit_pairs(a, budget)]


def unit_pairs(a: AlgebraData, budget: int | None = None) -> list[tuple[Element, Element]]:
    """(x, x^-1) for every unit x, lexicographically ordered by x."""
    p, d = a.p, a.dim
    check_budget(p**d, budget)
    out = []
    for X in iter_coordinate_blocks(p, d, budget):
        for row in X:
            y = a.inverse_vec(row)
            if y is not None:
                out.append((a.element(row), a.element(y)))
    return out

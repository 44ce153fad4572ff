"""Based vector spaces over F_p and sparse linear maps between tensor products.

Multi-indices linearize with the leftmost factor most significant, so the
flat index of (i1, ..., ir) in V1 x ... x Vr is the mixed-radix number
i1 i2 ... ir.  ``scipy.sparse.kron`` uses the same convention, which is what
makes ``tensor`` a plain Kronecker product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np
import scipy.sparse as sp

from .errors import BudgetExceeded, ShapeMismatch

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class BasedSpace:
    name: str
    dim: int
    basis_labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis_labels", tuple(self.basis_labels))
        if self.dim < 1:
            raise ValueError("a based space has dimension at least 1")
        if len(self.basis_labels) != self.dim:
            raise ValueError(f"{self.name}: {len(self.basis_labels)} labels for dimension {self.dim}")
        if len(set(self.basis_labels)) != self.dim:
            raise ValueError(f"{self.name}: basis labels must be distinct")

    @classmethod
    def from_labels(cls, name: str, labels: Sequence[str]) -> BasedSpace:
        return cls(name, len(labels), tuple(labels))

    def index(self, label: str) -> int:
        return self.basis_labels.index(label)

    def to_dict(self) -> dict:
        return {"name": self.name, "dim": self.dim, "basis_labels": list(self.basis_labels)}

    @classmethod
    def from_dict(cls, d: Mapping) -> BasedSpace:
        return cls(d["name"], int(d["dim"]), tuple(d["basis_labels"]))

    def __repr__(self):
        return f"{self.name}[{self.dim}]"


Factors = tuple[BasedSpace, ...]


def as_factors(spaces) -> Factors:
    if isinstance(spaces, BasedSpace):
        return (spaces,)
    return tuple(spaces)


def total_dim(factors: Iterable[BasedSpace]) -> int:
    return prod(s.dim for s in factors)


def merge_spaces(*spaces: BasedSpace, name: str | None = None, sep: str = "⊗") -> BasedSpace:
    """One based space standing for the tensor product of ``spaces``."""
    if not spaces:
        return BasedSpace("k", 1, ("1",))
    name = name or sep.join(s.name for s in spaces)
    labels = tuple(sep.join(t) for t in itertools.product(*(s.basis_labels for s in spaces)))
    return BasedSpace(name, len(labels), labels)


def flat_index(factors: Sequence[BasedSpace], multi: Sequence[int]) -> int:
    idx = 0
    for s, i in zip(factors, multi):
        if not 0 <= i < s.dim:
            raise IndexError(f"index {i} out of range for {s}")
        idx = idx * s.dim + i
    return idx


def multi_index(factors: Sequence[BasedSpace], flat: int) -> tuple[int, ...]:
    out = []
    for s in reversed(factors):
        flat, r = divmod(flat, s.dim)
        out.append(r)
    return tuple(reversed(out))


def _canonical(mat, p: int) -> sp.csr_array:
    m = sp.csr_array(mat, dtype=np.int64)
    m.data %= p
    m.eliminate_zeros()
    m.sum_duplicates()
    m.sort_indices()
    return m


class LinearMap:
    """A linear map between tensor products of based spaces, stored sparsely.

    ``mat`` has shape (dim cod, dim dom); entries are reduced mod p and zeros
    are never stored, so two maps are equal iff their entry tables are.
    """

    __slots__ = ("dom", "cod", "p", "mat")

    def __init__(self, dom, cod, p: int, mat):
        self.dom = as_factors(dom)
        self.cod = as_factors(cod)
        self.p = p
        m = _canonical(mat, p)
        if m.shape != (total_dim(self.cod), total_dim(self.dom)):
            raise ShapeMismatch(f"matrix shape {m.shape} does not fit {self.dom} -> {self.cod}")
        self.mat = m

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_entries(cls, dom, cod, p: int, entries: Mapping) -> LinearMap:
        dom, cod = as_factors(dom), as_factors(cod)
        rows, cols, vals = [], [], []
        for (cm, dm), v in entries.items():
            rows.append(flat_index(cod, cm))
            cols.append(flat_index(dom, dm))
            vals.append(int(v))
        shape = (total_dim(cod), total_dim(dom))
        return cls(dom, cod, p, sp.coo_array((vals, (rows, cols)), shape=shape))

    @classmethod
    def from_columns(cls, dom, cod, p: int, column: Callable[[int], Mapping[int, int]]) -> LinearMap:
        """Build a map from the image of each flat domain basis index.

        ``column(j)`` returns {flat codomain index: coefficient}.
        """
        dom, cod = as_factors(dom), as_factors(cod)
        rows, cols, vals = [], [], []
        for j in range(total_dim(dom)):
            for i, v in column(j).items():
                rows.append(i)
                cols.append(j)
                vals.append(int(v))
        shape = (total_dim(cod), total_dim(dom))
        return cls(dom, cod, p, sp.coo_array((vals, (rows, cols)), shape=shape))

    @classmethod
    def from_dense(cls, dom, cod, p: int, array) -> LinearMap:
        return cls(dom, cod, p, np.asarray(array, dtype=np.int64))

    # -- structure ----------------------------------------------------------

    @property
    def shape(self):
        return self.mat.shape

    @property
    def nnz(self) -> int:
        return self.mat.nnz

    def dense(self) -> np.ndarray:
        return self.mat.toarray()

    @property
    def entries(self) -> dict:
        coo = self.mat.tocoo()
        return {
            (multi_index(self.cod, int(r)), multi_index(self.dom, int(c))): int(v)
            for r, c, v in zip(coo.row, coo.col, coo.data)
        }

    def retyped(self, dom=None, cod=None) -> LinearMap:
        """Same matrix, regrouped tensor factors (dimensions must agree)."""
        dom = self.dom if dom is None else as_factors(dom)
        cod = self.cod if cod is None else as_factors(cod)
        if total_dim(dom) != total_dim(self.dom) or total_dim(cod) != total_dim(self.cod):
            raise ShapeMismatch(f"cannot regroup {self.dom}->{self.cod} as {dom}->{cod}")
        return LinearMap(dom, cod, self.p, self.mat)

    # -- arithmetic ---------------------------------------------------------

    def __matmul__(self, other: LinearMap) -> LinearMap:
        return compose(self, other)

    def __add__(self, other: LinearMap) -> LinearMap:
        _same_shape(self, other)
        return LinearMap(self.dom, self.cod, self.p, self.mat + other.mat)

    def __sub__(self, other: LinearMap) -> LinearMap:
        _same_shape(self, other)
        return LinearMap(self.dom, self.cod, self.p, self.mat - other.mat)

    def scale(self, c: int) -> LinearMap:
        return LinearMap(self.dom, self.cod, self.p, self.mat * (int(c) % self.p))

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        if self.dom != other.dom or self.cod != other.cod or self.p != other.p:
            return False
        a, b = self.mat, other.mat
        return (
            a.nnz == b.nnz
            and np.array_equal(a.indptr, b.indptr)
            and np.array_equal(a.indices, b.indices)
            and np.array_equal(a.data, b.data)
        )

    __hash__ = None

    def first_difference(self, other: LinearMap):
        """Lexicographically first (dom multi-index, cod multi-index) where the maps differ."""
        _same_shape(self, other)
        diff = _canonical(self.mat - other.mat, self.p).tocsc()
        if diff.nnz == 0:
            return None
        diff.sort_indices()
        col = int(np.flatnonzero(np.diff(diff.indptr))[0])
        row = int(diff.indices[diff.indptr[col]])
        return {
            "dom": list(multi_index(self.dom, col)),
            "cod": list(multi_index(self.cod, row)),
            "left": int(self.mat[row, col]) % self.p,
            "right": int(other.mat[row, col]) % self.p,
        }

    def __call__(self, x: Element) -> Element:
        return apply(self, x)

    def apply_vec(self, v) -> np.ndarray:
        return (self.mat @ np.asarray(v, dtype=np.int64)) % self.p

    def apply_batch(self, V: np.ndarray) -> np.ndarray:
        """Apply to each row of V."""
        return np.asarray((self.mat @ V.T).T, dtype=np.int64) % self.p

    # -- serialization ------------------------------------------------------

    def to_records(self) -> list:
        return [[list(cm), list(dm), v] for (cm, dm), v in sorted(self.entries.items(), key=lambda t: (t[0][1], t[0][0]))]

    def to_dict(self) -> dict:
        return {
            "dom": [s.to_dict() for s in self.dom],
            "cod": [s.to_dict() for s in self.cod],
            "entries": self.to_records(),
        }

    @classmethod
    def from_dict(cls, d: Mapping, p: int) -> LinearMap:
        dom = tuple(BasedSpace.from_dict(s) for s in d["dom"])
        cod = tuple(BasedSpace.from_dict(s) for s in d["cod"])
        return cls.from_entries(dom, cod, p, {(tuple(c), tuple(m)): v for c, m, v in d["entries"]})

    def __repr__(self):
        return f"LinearMap({self.dom} -> {self.cod}, nnz={self.nnz}, p={self.p})"


def _same_shape(f: LinearMap, g: LinearMap):
    if f.dom != g.dom or f.cod != g.cod or f.p != g.p:
        raise ShapeMismatch(f"{f} and {g} have different shapes")


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f after g."""
    if g.cod != f.dom:
        raise ShapeMismatch(f"cannot compose {f} after {g}")
    if f.p != g.p:
        raise ShapeMismatch("maps over different fields")
    return LinearMap(g.dom, f.cod, f.p, f.mat @ g.mat)


def chain(*maps: LinearMap) -> LinearMap:
    """chain(f, g, h) = f after g after h."""
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor(f: LinearMap, g: LinearMap, *more: LinearMap) -> LinearMap:
    if f.p != g.p:
        raise ShapeMismatch("maps over different fields")
    out = LinearMap(f.dom + g.dom, f.cod + g.cod, f.p, sp.kron(f.mat, g.mat, format="csr"))
    for h in more:
        out = tensor(out, h)
    return out


def identity(factors, p: int) -> LinearMap:
    factors = as_factors(factors)
    return LinearMap(factors, factors, p, sp.identity(total_dim(factors), dtype=np.int64, format="csr"))


def zero_map(dom, cod, p: int) -> LinearMap:
    dom, cod = as_factors(dom), as_factors(cod)
    return LinearMap(dom, cod, p, sp.csr_array((total_dim(cod), total_dim(dom)), dtype=np.int64))


def permute_factors(factors, perm: Sequence[int], p: int) -> LinearMap:
    """The map sending v_0 x ... x v_{r-1} to v_{perm[0]} x ... x v_{perm[r-1]}."""
    factors = as_factors(factors)
    if sorted(perm) != list(range(len(factors))):
        raise ValueError(f"{perm} is not a permutation of {len(factors)} factors")
    new = tuple(factors[i] for i in perm)
    n = total_dim(factors)
    cols = np.arange(n)
    digits = np.array(np.unravel_index(cols, [s.dim for s in factors])) if factors else np.zeros((0, n), int)
    rows = np.ravel_multi_index(tuple(digits[i] for i in perm), [s.dim for s in new]) if factors else cols
    return LinearMap(factors, new, p, sp.coo_array((np.ones(n, dtype=np.int64), (rows, cols)), shape=(n, n)))


def flip(M, N, p: int) -> LinearMap:
    """M x N -> N x M, m x n -> n x m."""
    M, N = as_factors(M), as_factors(N)
    r, s = len(M), len(N)
    return permute_factors(M + N, list(range(r, r + s)) + list(range(r)), p)


def covector(factors, p: int, values: Sequence[int]) -> LinearMap:
    """A linear form on ``factors`` given by its values on the basis."""
    factors = as_factors(factors)
    return LinearMap.from_dense(factors, (), p, np.asarray(values, dtype=np.int64).reshape(1, -1))


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class Element:
    space: Factors
    coords: tuple[int, ...]
    p: int

    def __post_init__(self):
        object.__setattr__(self, "space", as_factors(self.space))
        object.__setattr__(self, "coords", tuple(int(c) % self.p for c in self.coords))
        if len(self.coords) != total_dim(self.space):
            raise ShapeMismatch(f"{len(self.coords)} coordinates for {self.space}")

    @classmethod
    def from_vec(cls, space, vec, p: int) -> Element:
        return cls(as_factors(space), tuple(int(v) for v in np.asarray(vec).ravel()), p)

    @classmethod
    def basis(cls, space, index, p: int) -> Element:
        space = as_factors(space)
        n = total_dim(space)
        flat = index if isinstance(index, int) else flat_index(space, index)
        coords = [0] * n
        coords[flat] = 1
        return cls(space, tuple(coords), p)

    @classmethod
    def zero(cls, space, p: int) -> Element:
        space = as_factors(space)
        return cls(space, (0,) * total_dim(space), p)

    @property
    def vec(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def __add__(self, other: Element) -> Element:
        if self.space != other.space:
            raise ShapeMismatch("adding elements of different spaces")
        return Element.from_vec(self.space, self.vec + other.vec, self.p)

    def __sub__(self, other: Element) -> Element:
        if self.space != other.space:
            raise ShapeMismatch("subtracting elements of different spaces")
        return Element.from_vec(self.space, self.vec - other.vec, self.p)

    def scale(self, c: int) -> Element:
        return Element.from_vec(self.space, self.vec * int(c), self.p)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> dict:
        return {multi_index(self.space, i): c for i, c in enumerate(self.coords) if c}

    def to_list(self) -> list[int]:
        return list(self.coords)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coords):
            if c:
                mi = multi_index(self.space, i)
                lab = "⊗".join(s.basis_labels[j] for s, j in zip(self.space, mi)) or "1"
                terms.append(lab if c == 1 else f"{c}*{lab}")
        return " + ".join(terms) if terms else "0"


def tensor_elements(x: Element, y: Element) -> Element:
    return Element.from_vec(x.space + y.space, np.kron(x.vec, y.vec), x.p)


def apply(f: LinearMap, x: Element) -> Element:
    if x.space != f.dom:
        raise ShapeMismatch(f"{f} cannot be applied to an element of {x.space}")
    return Element.from_vec(f.cod, f.apply_vec(x.vec), f.p)


def search_size(p: int, dim: int) -> int:
    return p**dim


def check_budget(needed: int, budget: int | None):
    budget = DEFAULT_BUDGET if budget is None else budget
    if needed > budget:
        raise BudgetExceeded(needed, budget)


def enumerate_elements(space, p: int, budget: int | None = None) -> Iterator[Element]:
    """All p**dim elements of ``space`` in lexicographic coordinate order."""
    space = as_factors(space)
    n = total_dim(space)
    check_budget(p**n, budget)
    for coords in itertools.product(range(p), repeat=n):
        yield Element(space, coords, p)


def coordinate_block(p: int, n: int, start: int, stop: int) -> np.ndarray:
    """Rows start..stop-1 of the lexicographic enumeration of F_p^n."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((len(idx), n), dtype=np.int64)
    for k in range(n - 1, -1, -1):
        idx, out[:, k] = np.divmod(idx, p)
    return out


def iter_coordinate_blocks(p: int, n: int, budget: int | None = None, block: int = 1 << 15):
    """Lexicographic enumeration of F_p^n in numpy blocks."""
    total = p**n
    check_budget(total, budget)
    for start in range(0, total, block):
        yield coordinate_block(p, n, start, min(total, start + block))


# ---------------------------------------------------------------------------
# dense linear algebra over F_p


def rref(A, p: int):
    """Reduced row echelon form mod p; returns (R, pivot columns)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if len(nz) == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = R[r] * pow(int(R[r, c]), -1, p) % p
        others = np.flatnonzero(R[:, c])
        others = others[others != r]
        if len(others):
            R[others] = (R[others] - np.outer(R[others, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(A, p: int) -> int:
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis of {x : A x = 0} as rows."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    n = A.shape[1]
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in piv]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = -R[i, f] % p
    return basis


def solve(A, b, p: int):
    """One solution of A x = b, or None."""
    A = np.atleast_2d(np.asarray(A, dtype=np.int64))
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    R, piv = rref(np.hstack([A, b]), p)
    n = A.shape[1]
    if n in piv:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, c in enumerate(piv):
        x[c] = R[i, n]
    return x


def inverse(A, p: int):
    """Inverse of a square matrix mod p, or None if singular."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[0]
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        return None
    return R[:, n:] % p


def affine_parametrization(A, b, p: int):
    """Solutions of A x = b as x0 + t N with t ranging over F_p^k.

    Returns (x0, N) or None when inconsistent.
    """
    x0 = solve(A, b, p)
    if x0 is None:
        return None
    return x0, nullspace(A, p)


def span_basis(vectors, p: int) -> np.ndarray:
    """Row basis (in rref) of the span of the given vectors."""
    V = np.atleast_2d(np.asarray(vectors, dtype=np.int64))
    R, piv = rref(V, p)
    return R[: len(piv)]

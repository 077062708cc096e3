"""Additive quantification of one-body operators and its iteration across ranks."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .clifford import CliffordElement, SeedSpace, _export, _import
from .errors import DimensionMismatch, NotInSeed, RankGuard
from .grassmann import Element, Monomial, grade_op
from .hfs import ENUM_CAP, Hfs, enumerate_rank, hexp

#: Largest seed dimension accepted by quantify (16 = size of the rank-3 basis).
MAX_SEED_DIM = 16


@dataclass(frozen=True)
class OneBodyOperator:
    """Square matrix ``H[n][n']`` acting on the seed basis (row = output)."""

    seed: SeedSpace
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.matrix)
        d = self.seed.d
        if len(rows) != d or any(len(r) != d for r in rows):
            raise DimensionMismatch(f"matrix must be {d}x{d}")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, seed: SeedSpace) -> "OneBodyOperator":
        d = seed.d
        return cls(seed, tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @classmethod
    def zero(cls, seed: SeedSpace) -> "OneBodyOperator":
        return cls(seed, tuple((0,) * seed.d for _ in range(seed.d)))

    @classmethod
    def projection(cls, seed: SeedSpace, x: Hfs) -> "OneBodyOperator":
        k = seed.index(x) - 1
        d = seed.d
        return cls(seed, tuple(tuple(int(i == j == k) for j in range(d)) for i in range(d)))

    @classmethod
    def unit(cls, seed: SeedSpace, row: Hfs, col: Hfs) -> "OneBodyOperator":
        """Matrix unit sending ``col`` to ``row``."""
        i, j = seed.index(row) - 1, seed.index(col) - 1
        d = seed.d
        return cls(seed, tuple(tuple(int(a == i and b == j) for b in range(d)) for a in range(d)))

    def _check(self, other: "OneBodyOperator") -> None:
        if self.seed != other.seed:
            raise DimensionMismatch("one-body operators on different seeds")

    def __add__(self, other: "OneBodyOperator") -> "OneBodyOperator":
        self._check(other)
        return OneBodyOperator(
            self.seed,
            tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.matrix, other.matrix)),
        )

    def __mul__(self, k) -> "OneBodyOperator":
        return OneBodyOperator(self.seed, tuple(tuple(a * k for a in r) for r in self.matrix))

    __rmul__ = __mul__

    def __sub__(self, other: "OneBodyOperator") -> "OneBodyOperator":
        return self + other * -1

    def __matmul__(self, other: "OneBodyOperator") -> "OneBodyOperator":
        self._check(other)
        d = self.seed.d
        m, n = self.matrix, other.matrix
        return OneBodyOperator(
            self.seed,
            tuple(tuple(sum((m[i][k] * n[k][j] for k in range(d)), Fraction(0)) for j in range(d))
                  for i in range(d)),
        )

    def commutator(self, other: "OneBodyOperator") -> "OneBodyOperator":
        return self @ other - other @ self


class FockOperator:
    """Linear operator on the span of a finite monomial basis, stored by columns."""

    __slots__ = ("basis", "_columns", "_index")

    def __init__(self, basis: Sequence[Monomial], columns: Mapping[Monomial, Element]):
        self.basis = tuple(basis)
        self._index = frozenset(self.basis)
        cols = {}
        for m, img in columns.items():
            if m not in self._index:
                raise DimensionMismatch(f"column {m} outside the basis")
            if img:
                cols[m] = img
        self._columns = cols

    @classmethod
    def identity(cls, basis: Sequence[Monomial]) -> "FockOperator":
        return cls(basis, {m: Element.basis(m) for m in basis})

    @classmethod
    def zero(cls, basis: Sequence[Monomial]) -> "FockOperator":
        return cls(basis, {})

    @classmethod
    def from_entries(cls, basis: Sequence[Monomial],
                     entries: Iterable[tuple[Monomial, Monomial, object]]) -> "FockOperator":
        cols: dict[Monomial, dict[Monomial, Fraction]] = {}
        for row, col, c in entries:
            col_terms = cols.setdefault(col, {})
            col_terms[row] = col_terms.get(row, 0) + Fraction(c)
        return cls(basis, {c: Element(t) for c, t in cols.items()})

    @classmethod
    def from_matrix(cls, basis: Sequence[Monomial], rows: Sequence[Sequence[object]]) -> "FockOperator":
        n = len(basis)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DimensionMismatch(f"matrix must be {n}x{n}")
        return cls.from_entries(
            basis,
            ((basis[i], basis[j], rows[i][j]) for i in range(n) for j in range(n) if rows[i][j]),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def column(self, m: Monomial) -> Element:
        if m not in self._index:
            raise DimensionMismatch(f"{m} outside the operator basis")
        return self._columns.get(m, Element())

    def __call__(self, psi: Element) -> Element:
        return self.apply(psi)

    def apply(self, psi: Element) -> Element:
        out = Element()
        for m, c in psi.terms.items():
            if m not in self._index:
                raise DimensionMismatch(f"{m} outside the operator basis")
            col = self._columns.get(m)
            if col is not None:
                out = out + col * c
        return out

    def entries(self) -> list[tuple[Monomial, Monomial, Fraction]]:
        """Nonzero ``(row, column, coefficient)`` triplets in basis order."""
        out = []
        for col in self.basis:
            img = self._columns.get(col)
            if img is not None:
                out.extend((row, col, c) for row, c in sorted(img.terms.items()))
        return out

    def matrix(self) -> list[list[Fraction]]:
        pos = {m: i for i, m in enumerate(self.basis)}
        n = len(self.basis)
        rows = [[Fraction(0)] * n for _ in range(n)]
        for row, col, c in self.entries():
            if row not in pos:
                raise DimensionMismatch(f"image {row} outside the basis")
            rows[pos[row]][pos[col]] = c
        return rows

    def diagonal(self) -> list[Fraction]:
        return [self.column(m).coefficient(m) for m in self.basis]

    def is_diagonal(self) -> bool:
        return all(set(img.terms) == {m} for m, img in self._columns.items())

    def _check(self, other: "FockOperator") -> None:
        if self._index != other._index:
            raise DimensionMismatch("Fock operators on different bases")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FockOperator):
            return NotImplemented
        return self._index == other._index and self._columns == other._columns

    def __hash__(self):
        return hash((self._index, frozenset(self._columns.items())))

    def __add__(self, other: "FockOperator") -> "FockOperator":
        self._check(other)
        cols = dict(self._columns)
        for m, img in other._columns.items():
            cols[m] = cols.get(m, Element()) + img
        return FockOperator(self.basis, cols)

    def __neg__(self) -> "FockOperator":
        return FockOperator(self.basis, {m: -img for m, img in self._columns.items()})

    def __sub__(self, other: "FockOperator") -> "FockOperator":
        return self + (-other)

    def __mul__(self, k) -> "FockOperator":
        return FockOperator(self.basis, {m: img * k for m, img in self._columns.items()})

    __rmul__ = __mul__

    def __matmul__(self, other: "FockOperator") -> "FockOperator":
        """Composition: ``(self @ other)(psi) == self(other(psi))``."""
        self._check(other)
        return FockOperator(self.basis, {m: self.apply(img) for m, img in other._columns.items()})

    def commutator(self, other: "FockOperator") -> "FockOperator":
        return self @ other - other @ self

    def __repr__(self) -> str:
        return f"FockOperator(dim={self.dim}, nnz={sum(len(c) for c in self._columns.values())})"


def fock_basis(seed: SeedSpace) -> list[Monomial]:
    return seed.basis()


def quantify(h: OneBodyOperator) -> FockOperator:
    """Many-quantum operator ``sum_{n,n'} H[n][n'] iota(v_n) ^ d/d v_{n'}``."""
    seed = h.seed
    d = seed.d
    if d > MAX_SEED_DIM:
        raise RankGuard(f"quantification limited to d <= {MAX_SEED_DIM}")
    labels = seed.labels
    # column n' of H, sparse
    by_col: dict[Hfs, list[tuple[Hfs, Fraction]]] = {}
    for j, lj in enumerate(labels):
        nz = [(labels[i], h.matrix[i][j]) for i in range(d) if h.matrix[i][j]]
        if nz:
            by_col[lj] = nz
    basis = fock_basis(seed)
    columns: dict[Monomial, Element] = {}
    for m in basis:
        acc: dict[Monomial, Fraction] = {}
        unit = {m: Fraction(1)}
        for x in m.children:
            targets = by_col.get(x)
            if not targets:
                continue
            lowered = _export(x, unit)
            for y, c in targets:
                for nm, s in _import(y, lowered).items():
                    v = acc.get(nm, 0) + c * s
                    if v:
                        acc[nm] = v
                    else:
                        del acc[nm]
        if acc:
            columns[m] = Element(acc)
    return FockOperator(basis, columns)


def quantify_clifford(h: OneBodyOperator) -> CliffordElement:
    """The same operator as a Clifford element ``sum H[n][n'] v_n v_{d+n'}``."""
    d = h.seed.d
    terms = {}
    for i in range(d):
        for j in range(d):
            if h.matrix[i][j]:
                terms[(i + 1, d + j + 1)] = h.matrix[i][j]
    return CliffordElement(d, terms)


def occupation(x: Hfs, seed: SeedSpace) -> FockOperator:
    """Occupation number of the seed label ``x``."""
    if x not in seed.labels:
        raise NotInSeed(f"{x} is not a seed label")
    return quantify(OneBodyOperator.projection(seed, x))


def grade_operator(basis: Sequence[Monomial]) -> FockOperator:
    return FockOperator(basis, {m: grade_op(Element.basis(m)) for m in basis})


def rank_basis(r: int) -> list[Monomial]:
    """Basis of the rank-``r`` truncation, ascending by serial."""
    if r > ENUM_CAP:
        raise RankGuard(f"operator bases are materialized only up to rank {ENUM_CAP}")
    return list(enumerate_rank(r))


def rank_of_basis(basis: Sequence[Monomial]) -> int:
    """The rank ``r`` when ``basis`` is exactly the rank-``r`` truncation."""
    for r in range(ENUM_CAP + 1):
        if hexp(r) == len(basis):
            if set(basis) == set(rank_basis(r)):
                return r
            break
    raise DimensionMismatch("operator basis is not a full rank truncation")


def lift_rank(j: FockOperator) -> FockOperator:
    """Quantify ``j`` over the associations of its own basis.

    The basis sets of the rank-``r`` truncation become the seed labels, so the
    result acts on the rank ``r + 1`` truncation.
    """
    r = rank_of_basis(j.basis)
    if r + 1 > ENUM_CAP:
        raise RankGuard(f"lift from rank {r} exceeds rank cap {ENUM_CAP}")
    seed = SeedSpace(tuple(j.basis))
    h = OneBodyOperator(seed, tuple(tuple(row) for row in j.matrix()))
    return quantify(h)


def multiquantify(j: FockOperator, r: int, r_to: int) -> FockOperator:
    if not r < r_to:
        raise ValueError(f"target rank {r_to} must exceed source rank {r}")
    if r_to > ENUM_CAP:
        raise RankGuard(f"target rank {r_to} exceeds rank cap {ENUM_CAP}")
    if rank_of_basis(j.basis) != r:
        raise DimensionMismatch(f"operator is not on the rank-{r} basis")
    for _ in range(r_to - r):
        j = lift_rank(j)
    return j

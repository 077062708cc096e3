"""Clifford algebra of the duplex space and its spinor action on the Grassmann algebra.

Generators are numbered ``1..2d``: ``v_1..v_d`` span the seed space ``V`` and
``v_{d+1}..v_{2d}`` the dual basis.  All generators are null and the only
nonzero anticommutators are ``{v_{d+m}, v_m} = 1``.  A :class:`CliffordElement`
stores normal-ordered products (indices strictly ascending).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .errors import DimensionMismatch, NotInSeed, RankGuard
from .grassmann import Element, Monomial, assoc, reverse, wedge, wedge_all
from .hfs import Hfs, serial_decode

#: Largest seed dimension for spinor application (2**d spinor components).
MAX_APPLY_DIM = 12
#: Largest seed dimension for Clifford products (2**(2d) algebra dimension).
MAX_PRODUCT_DIM = 6

Word = tuple[int, ...]


@dataclass(frozen=True)
class SeedSpace:
    """Ordered basis ``v_1..v_d`` of the seed space, labelled by sets."""

    labels: tuple[Hfs, ...]

    def __post_init__(self):
        if not self.labels:
            raise ValueError("seed space needs at least one label")
        if len(set(self.labels)) != len(self.labels):
            raise ValueError("seed labels must be distinct")

    @classmethod
    def standard(cls, d: int) -> "SeedSpace":
        """Labels are the sets with serials ``0..d-1``."""
        return cls(tuple(serial_decode(n) for n in range(d)))

    @classmethod
    def from_serials(cls, serials: Iterable[int]) -> "SeedSpace":
        return cls(tuple(serial_decode(n) for n in serials))

    @property
    def d(self) -> int:
        return len(self.labels)

    def index(self, label: Hfs) -> int:
        """1-based position of ``label`` in the basis."""
        try:
            return self.labels.index(label) + 1
        except ValueError:
            raise NotInSeed(f"{label} is not a seed label") from None

    def basis(self) -> list[Monomial]:
        """The ``2**d`` monomials over the seed labels, ascending."""
        out = [Hfs.of(sub) for k in range(self.d + 1) for sub in combinations(self.labels, k)]
        return sorted(out)

    def top(self) -> Element:
        """``iota(v_1) ^ ... ^ iota(v_d)`` in seed order."""
        return wedge_all(assoc(v) for v in self.labels)

    def check(self, psi: Element) -> None:
        allowed = set(self.labels)
        for m in psi.monomials():
            if not allowed.issuperset(m.children):
                raise DimensionMismatch(f"monomial {m} is not over the seed basis")


@dataclass(frozen=True)
class DuplexVector:
    primal: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.primal) != len(self.dual):
            raise DimensionMismatch("primal and dual parts differ in length")
        object.__setattr__(self, "primal", tuple(Fraction(x) for x in self.primal))
        object.__setattr__(self, "dual", tuple(Fraction(x) for x in self.dual))


def duplex_norm(w: DuplexVector) -> Fraction:
    """Neutral quadratic form: the dual part contracted with the primal part."""
    return sum((a * b for a, b in zip(w.dual, w.primal)), Fraction(0))


class CliffordElement:
    """Sparse sum of normal-ordered generator products over a duplex of dimension 2d.

    ``*`` is the Clifford product (or scaling by a rational).
    """

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        acc: dict[Word, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for word, c in items:
            word = tuple(word)
            if any(a >= b for a, b in zip(word, word[1:])):
                raise ValueError(f"generator word {word} is not strictly ascending")
            if word and not (1 <= word[0] and word[-1] <= 2 * dim):
                raise DimensionMismatch(f"generator index out of range 1..{2 * dim}: {word}")
            acc[word] = acc.get(word, 0) + Fraction(c)
        self._terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def _raw(cls, dim: int, terms: dict[Word, Fraction]) -> "CliffordElement":
        obj = cls.__new__(cls)
        obj.dim = dim
        obj._terms = terms
        return obj

    @classmethod
    def generator(cls, i: int, dim: int) -> "CliffordElement":
        if not 1 <= i <= 2 * dim:
            raise IndexError(f"generator v_{i} out of range 1..{2 * dim}")
        return cls._raw(dim, {(i,): Fraction(1)})

    @classmethod
    def scalar(cls, c, dim: int) -> "CliffordElement":
        return cls(dim, {(): c})

    @classmethod
    def blade(cls, word: Sequence[int], dim: int) -> "CliffordElement":
        """Product of generators in the given order (any order)."""
        out = cls.scalar(1, dim)
        for i in word:
            out = clifford_mul(out, cls.generator(i, dim))
        return out

    @property
    def terms(self) -> dict[Word, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Word, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def coefficient(self, word: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(word), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            return self._terms == ({(): Fraction(other)} if other else {})
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.dim, frozenset(self._terms.items())))

    def _same(self, other: "CliffordElement") -> None:
        if self.dim != other.dim:
            raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other) -> "CliffordElement":
        if isinstance(other, Rational):
            other = CliffordElement.scalar(other, self.dim)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        self._same(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return CliffordElement._raw(self.dim, out)

    __radd__ = __add__

    def __neg__(self) -> "CliffordElement":
        return CliffordElement._raw(self.dim, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "CliffordElement":
        if isinstance(other, Rational):
            other = CliffordElement.scalar(other, self.dim)
        return self + (-other)

    def __rsub__(self, other) -> "CliffordElement":
        return CliffordElement.scalar(other, self.dim) - self

    def __mul__(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            return clifford_mul(self, other)
        if isinstance(other, Rational):
            k = Fraction(other)
            if not k:
                return CliffordElement._raw(self.dim, {})
            return CliffordElement._raw(self.dim, {w: c * k for w, c in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other) -> "CliffordElement":
        if isinstance(other, Rational):
            return self * other
        return NotImplemented

    def __repr__(self) -> str:
        if not self._terms:
            return f"CliffordElement(d={self.dim}, 0)"
        parts = []
        for w, c in self.items():
            name = "".join(f"v{i}" for i in w) or "1"
            parts.append(f"{c}*{name}")
        return f"CliffordElement(d={self.dim}, " + " + ".join(parts) + ")"

    def to_json(self) -> list:
        return [[f"{c.numerator}/{c.denominator}", list(w)] for w, c in self.items()]

    @classmethod
    def from_json(cls, data: list, dim: int) -> "CliffordElement":
        return cls(dim, [(tuple(int(i) for i in idx), Fraction(c)) for c, idx in data])


def _anti(i: int, j: int, d: int) -> int:
    """Anticommutator ``{v_i, v_j}`` of two generators."""
    return 1 if abs(i - j) == d else 0


@lru_cache(maxsize=1 << 16)
def _lmul_gen(i: int, word: Word, d: int) -> tuple[tuple[int, Word], ...]:
    """``v_i * word`` for an ascending word, as (sign, ascending word) pairs."""
    if not word or i < word[0]:
        return ((1, (i,) + word),)
    first = word[0]
    if i == first:
        return ()
    # v_i v_first = -v_first v_i + {v_i, v_first}
    out: list[tuple[int, Word]] = []
    rest = word[1:]
    if _anti(i, first, d):
        out.append((1, rest))
    for s, w in _lmul_gen(i, rest, d):
        out.append((-s, (first,) + w))
    return tuple(out)


def _lmul(i: int, terms: Mapping[Word, Fraction], d: int) -> dict[Word, Fraction]:
    out: dict[Word, Fraction] = {}
    for w, c in terms.items():
        for s, nw in _lmul_gen(i, w, d):
            v = out.get(nw, 0) + s * c
            if v:
                out[nw] = v
            else:
                del out[nw]
    return out


@lru_cache(maxsize=1 << 16)
def _word_product(a: Word, b: Word, d: int) -> tuple[tuple[Word, Fraction], ...]:
    terms: dict[Word, Fraction] = {b: Fraction(1)}
    for i in reversed(a):
        terms = _lmul(i, terms, d)
    return tuple(terms.items())


def clifford_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    """Clifford product, normal ordered under ``{v_{d+m}, v_n} = delta_mn``."""
    a._same(b)
    d = a.dim
    if d > MAX_PRODUCT_DIM:
        raise RankGuard(f"Clifford products limited to d <= {MAX_PRODUCT_DIM}")
    out: dict[Word, Fraction] = {}
    for wa, ca in a._terms.items():
        for wb, cb in b._terms.items():
            for w, c in _word_product(wa, wb, d):
                v = out.get(w, 0) + c * ca * cb
                if v:
                    out[w] = v
                else:
                    del out[w]
    return CliffordElement._raw(d, out)


def commutator(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return clifford_mul(a, b) - clifford_mul(b, a)


def anticommutator(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return clifford_mul(a, b) + clifford_mul(b, a)


# -- spinor representation on the Grassmann algebra over the seed ---------------

def _import(x: Hfs, terms: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for m, c in terms.items():
        ch = m.children
        if x in ch:
            continue
        k = 0
        while k < len(ch) and ch[k] > x:
            k += 1
        nm = Hfs(ch[:k] + (x,) + ch[k:])
        out[nm] = -c if k & 1 else c
    return out


def _export(x: Hfs, terms: Mapping[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for m, c in terms.items():
        ch = m.children
        if x not in ch:
            continue
        k = ch.index(x)
        out[Hfs(ch[:k] + ch[k + 1:])] = -c if k & 1 else c
    return out


def apply_generator(i: int, psi: Element, seed: SeedSpace) -> Element:
    """Import ``iota(v_i)`` for ``i <= d``; derivative by ``v_{i-d}`` otherwise."""
    d = seed.d
    if not 1 <= i <= 2 * d:
        raise IndexError(f"generator v_{i} out of range 1..{2 * d}")
    if i <= d:
        return Element._raw(_import(seed.labels[i - 1], psi._terms))
    return Element._raw(_export(seed.labels[i - d - 1], psi._terms))


def spinor_apply(a: CliffordElement, psi: Element, seed: SeedSpace) -> Element:
    d = seed.d
    if a.dim != d:
        raise DimensionMismatch(f"operator has d={a.dim}, seed has d={d}")
    if d > MAX_APPLY_DIM:
        raise RankGuard(f"spinor application limited to d <= {MAX_APPLY_DIM}")
    seed.check(psi)
    out: dict[Monomial, Fraction] = {}
    for word, coef in a._terms.items():
        terms = psi._terms
        for i in reversed(word):
            if i <= d:
                terms = _import(seed.labels[i - 1], terms)
            else:
                terms = _export(seed.labels[i - d - 1], terms)
            if not terms:
                break
        for m, c in terms.items():
            v = out.get(m, 0) + coef * c
            if v:
                out[m] = v
            else:
                del out[m]
    return Element._raw(out)


def embed(q: Element, seed: SeedSpace) -> CliffordElement:
    """Write a spinor as a polynomial in the primal generators."""
    seed.check(q)
    out: dict[Word, Fraction] = {}
    for m, c in q._terms.items():
        idx = [seed.index(f) for f in m.children]
        inversions = sum(1 for a, b in combinations(idx, 2) if a > b)
        w = tuple(sorted(idx))
        out[w] = out.get(w, 0) + (-c if inversions & 1 else c)
    return CliffordElement(seed.d, out)


# -- Berezin integral and spinor forms -----------------------------------------

def berezin_top(a: CliffordElement) -> Fraction:
    """Coefficient of ``v_1 v_2 ... v_{2d}``."""
    return a.coefficient(tuple(range(1, 2 * a.dim + 1)))


def reversal(a: CliffordElement) -> CliffordElement:
    """Reverse every generator product.

    Antisymmetrized grade-g parts pick up (-1)**(g(g-1)/2); a normal-ordered
    word containing a dual pair also sheds lower-grade terms on re-ordering.
    """
    out = CliffordElement._raw(a.dim, {})
    for w, c in a._terms.items():
        term = CliffordElement.scalar(c, a.dim)
        for i in w:
            term = clifford_mul(CliffordElement.generator(i, a.dim), term)
        out = out + term
    return out


def beta_literal(qp: Element, q: Element, seed: SeedSpace) -> Fraction:
    """Berezin integral over all 2d generators of the symmetrized product."""
    a, b = embed(qp, seed), embed(q, seed)
    return berezin_top(anticommutator(a, b)) / 2


def beta_chevalley(qp: Element, q: Element, seed: SeedSpace) -> Fraction:
    """Coefficient of ``v_1 ^ ... ^ v_d`` in ``reverse(qp) ^ q``."""
    seed.check(qp)
    seed.check(q)
    top = seed.top()
    (m, sign), = top.terms.items()
    return wedge(reverse(qp), q).coefficient(m) * sign


# -- exterior (antisymmetrized) coordinates and grade projection ---------------

def _half_form(i: int, j: int, d: int) -> Fraction:
    return Fraction(1, 2) if abs(i - j) == d else Fraction(0)


def _ext_wedge(i: int, terms: Mapping[Word, Fraction]) -> dict[Word, Fraction]:
    out: dict[Word, Fraction] = {}
    for w, c in terms.items():
        if i in w:
            continue
        k = 0
        while k < len(w) and w[k] < i:
            k += 1
        nw = w[:k] + (i,) + w[k:]
        out[nw] = out.get(nw, 0) + (-c if k & 1 else c)
    return out


def _ext_contract(i: int, terms: Mapping[Word, Fraction], d: int) -> dict[Word, Fraction]:
    out: dict[Word, Fraction] = {}
    for w, c in terms.items():
        for p, s in enumerate(w):
            g = _half_form(i, s, d)
            if g:
                nw = w[:p] + w[p + 1:]
                out[nw] = out.get(nw, 0) + (-g * c if p & 1 else g * c)
    return out


def _merge(acc: dict[Word, Fraction], terms: Mapping[Word, Fraction], k=1) -> None:
    for w, c in terms.items():
        v = acc.get(w, 0) + k * c
        if v:
            acc[w] = v
        else:
            acc.pop(w, None)


def to_exterior(a: CliffordElement) -> dict[Word, Fraction]:
    """Coordinates of ``a`` in the antisymmetrized basis ``v_i ^ v_j ^ ...``."""
    d = a.dim
    out: dict[Word, Fraction] = {}
    for w, c in a._terms.items():
        terms: dict[Word, Fraction] = {(): c}
        for i in reversed(w):
            nxt = _ext_wedge(i, terms)
            _merge(nxt, _ext_contract(i, terms, d))
            terms = nxt
        _merge(out, terms)
    return out


@lru_cache(maxsize=1 << 14)
def _ext_blade(word: Word, d: int) -> tuple[tuple[Word, Fraction], ...]:
    if not word:
        return (((), Fraction(1)),)
    i, rest = word[0], word[1:]
    acc = _lmul(i, dict(_ext_blade(rest, d)), d)
    for p, s in enumerate(rest):
        g = _half_form(i, s, d)
        if g:
            sub = dict(_ext_blade(rest[:p] + rest[p + 1:], d))
            _merge(acc, sub, g if p & 1 else -g)
    return tuple(acc.items())


def from_exterior(coords: Mapping[Word, object], dim: int) -> CliffordElement:
    out: dict[Word, Fraction] = {}
    for w, c in coords.items():
        _merge(out, dict(_ext_blade(tuple(w), dim)), Fraction(c))
    return CliffordElement._raw(dim, out)


def grade_part(a: CliffordElement, g: int) -> CliffordElement:
    """Grade-``g`` component under the antisymmetrized grading."""
    ext = {w: c for w, c in to_exterior(a).items() if len(w) == g}
    return from_exterior(ext, a.dim)


def grades(a: CliffordElement) -> set[int]:
    return {len(w) for w in to_exterior(a)}

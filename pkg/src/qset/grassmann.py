"""The algebra of quantum sets: a Grassmann algebra over its own associations.

A basis monomial ``iota(f1) ^ iota(f2) ^ ... ^ iota(fg)`` is identified with
the set ``{f1, ..., fg}`` (an :class:`~qset.hfs.Hfs`) whose members are listed
in strictly descending serial order; that order is the +1 orientation.  The
empty set is the unit monomial ``1``.  Coefficients are exact ``Fraction``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

from .hfs import EMPTY, Hfs, serial_decode

Monomial = Hfs
Scalar = int | Fraction


def _parity_merge(a: Sequence[Hfs], b: Sequence[Hfs]) -> tuple[int, tuple[Hfs, ...] | None]:
    """Merge two descending factor lists; return (sign, merged) or (0, None).

    The sign counts the transpositions needed to move each factor of ``b``
    left past the smaller factors of ``a``.
    """
    out: list[Hfs] = []
    i = j = 0
    swaps = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        x, y = a[i], b[j]
        if x == y:
            return 0, None
        if x > y:
            out.append(x)
            i += 1
        else:
            # y jumps over the na - i remaining factors of a
            swaps += na - i
            out.append(y)
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return (-1 if swaps & 1 else 1), tuple(out)


def normalize(factors: Sequence[Hfs]) -> tuple[int, Monomial]:
    """Sort a wedge word of associations into canonical order.

    Returns ``(sign, monomial)``; a repeated factor gives ``(0, EMPTY)``.
    """
    items = list(factors)
    if len(set(items)) != len(items):
        return 0, EMPTY
    # insertion sort, counting transpositions
    sign = 1
    for k in range(1, len(items)):
        j = k
        while j > 0 and items[j - 1] < items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, Hfs(tuple(items))


def wedge_monomials(a: Monomial, b: Monomial) -> tuple[int, Monomial]:
    sign, merged = _parity_merge(a.children, b.children)
    if merged is None:
        return 0, EMPTY
    return sign, Hfs(merged)


class Element:
    """A finite linear combination of basis monomials with rational coefficients.

    Supports ``+``, ``-``, scalar ``*``, and ``^`` for the wedge product.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for m, c in items:
            acc[m] = acc.get(m, 0) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction]) -> "Element":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, m: Monomial | int, coef: Scalar = 1) -> "Element":
        if isinstance(m, int):
            m = serial_decode(m)
        return cls({m: coef})

    @classmethod
    def scalar(cls, c: Scalar) -> "Element":
        return cls({EMPTY: c})

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self) -> list[tuple[Monomial, Fraction]]:
        """Terms sorted by descending monomial (canonical order)."""
        return sorted(self._terms.items(), key=lambda t: t[0], reverse=True)

    def monomials(self) -> list[Monomial]:
        return sorted(self._terms, reverse=True)

    def coefficient(self, m: Monomial | int) -> Fraction:
        if isinstance(m, int):
            m = serial_decode(m)
        return self._terms.get(m, Fraction(0))

    def __iter__(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def max_rank(self) -> int:
        return max((m.rank for m in self._terms), default=0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "Element") -> "Element":
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Element") -> "Element":
        if isinstance(other, (int, Fraction)):
            other = Element.scalar(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Element":
        return Element.scalar(other) - self

    def __mul__(self, k: Scalar) -> "Element":
        if isinstance(k, Element):
            return wedge(self, k)
        if not isinstance(k, Rational):
            return NotImplemented
        k = Fraction(k)
        if not k:
            return ZERO
        return Element._raw({m: c * k for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "Element") -> "Element":
        return wedge(self, other)

    def __repr__(self) -> str:
        if not self._terms:
            return "Element(0)"
        parts = [f"{c}*{m!r}" for m, c in self.items()]
        return "Element(" + " + ".join(parts) + ")"


ZERO = Element()
ONE = Element.scalar(1)


def e(n: int) -> Element:
    """Basis element with serial number ``n``."""
    return Element.basis(serial_decode(n))


def wedge(a: Element, b: Element) -> Element:
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            sign, m = wedge_monomials(ma, mb)
            if sign:
                v = out.get(m, 0) + sign * ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
    return Element._raw(out)


def wedge_all(elements: Iterable[Element]) -> Element:
    acc = ONE
    for el in elements:
        acc = wedge(acc, el)
    return acc


def iota(a: Element) -> Element:
    """Linearized association: each monomial ``m`` goes to the unit set ``{m}``."""
    return Element._raw({Hfs((m,)): c for m, c in a._terms.items()})


def assoc(x: Hfs) -> Element:
    """``iota`` of a single basis set, as an element."""
    return Element._raw({Hfs((x,)): Fraction(1)})


def grade_op(a: Element) -> Element:
    return Element._raw({m: c * m.grade for m, c in a._terms.items() if m.grade})


def grade_project(a: Element, g: int) -> Element:
    return Element._raw({m: c for m, c in a._terms.items() if m.grade == g})


def reverse(a: Element) -> Element:
    """Scale grade-g terms by (-1)**(g(g-1)/2)."""
    return Element._raw(
        {m: (-c if (m.grade * (m.grade - 1) // 2) & 1 else c) for m, c in a._terms.items()}
    )


def derive(x: Hfs, a: Element) -> Element:
    """Left Grassmann derivative with respect to ``iota(x)``."""
    out: dict[Monomial, Fraction] = {}
    for m, c in a._terms.items():
        ch = m.children
        try:
            pos = ch.index(x)
        except ValueError:
            continue
        rest = Hfs(ch[:pos] + ch[pos + 1:])
        out[rest] = -c if pos & 1 else c
    return Element._raw(out)


def dual_pair(d: Element, el: Element) -> Fraction:
    """Bilinear pairing in which every basis monomial is dual to itself."""
    small, big = (d, el) if len(d) <= len(el) else (el, d)
    return sum((c * big._terms.get(m, 0) for m, c in small._terms.items()), Fraction(0))


def truncate_to_rank(a: Element, r: int) -> Element:
    return Element._raw({m: c for m, c in a._terms.items() if m.rank <= r})


# Dual elements share the representation; the alias documents intent at call sites.
DualElement = Element

"""Hereditarily finite sets, the hyperexponential, and the serial codec.

A set is stored as the tuple of its members in strictly descending serial
order.  The serial number of a set is the sum of ``2**serial(member)``; it is
cached for every set of rank <= 5 and left unmaterialized above that.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import RankGuard

#: Highest rank whose serials are materialized (hexp(5) = 2**65536).
RANK_CAP = 5
#: Highest rank that may be enumerated element by element.
ENUM_CAP = 4


def _check_rank(r: int, cap: int) -> None:
    if r < 0:
        raise ValueError(f"rank must be non-negative, got {r}")
    if r > cap:
        raise RankGuard(f"rank {r} exceeds guard {cap}")


@lru_cache(maxsize=None)
def _hexp(r: int) -> int:
    return 1 if r == 0 else 1 << _hexp(r - 1)


def hexp(r: int, max_rank: int = RANK_CAP) -> int:
    """Hyperexponential: hexp(0) = 1, hexp(r + 1) = 2**hexp(r)."""
    _check_rank(r, min(max_rank, RANK_CAP))
    return _hexp(r)


def _compare(a: "Hfs", b: "Hfs") -> int:
    if a is b:
        return 0
    if a._serial is not None and b._serial is not None:
        return (a._serial > b._serial) - (a._serial < b._serial)
    if a.rank != b.rank:
        return (a.rank > b.rank) - (a.rank < b.rank)
    # Both above the serial cap: compare binary expansions from the top place.
    for x, y in zip(a.children, b.children):
        c = _compare(x, y)
        if c:
            return c
    return (len(a.children) > len(b.children)) - (len(a.children) < len(b.children))


class Hfs:
    """A hereditarily finite set in canonical (descending-serial) form.

    Instances are immutable and compare, hash and sort by serial number.
    Use :meth:`of` to build from arbitrary members and :func:`serial_decode`
    to build from a serial.
    """

    __slots__ = ("children", "rank", "_serial", "_hash")

    children: tuple["Hfs", ...]
    rank: int

    def __init__(self, children: tuple["Hfs", ...] = ()):
        # Trusted constructor: children must already be strictly descending.
        self.children = children
        self.rank = 1 + max(c.rank for c in children) if children else 0
        if self.rank <= RANK_CAP:
            self._serial = sum(1 << c._serial for c in children)
            self._hash = hash(self._serial)
        else:
            self._serial = None
            self._hash = hash(children)

    @classmethod
    def of(cls, members: Iterable["Hfs"]) -> "Hfs":
        """Build the set of ``members``; duplicates raise ``ValueError``."""
        items = sorted(members, reverse=True)
        for a, b in zip(items, items[1:]):
            if a == b:
                raise ValueError(f"duplicate member {a}")
        return cls(tuple(items))

    @property
    def serial(self) -> int:
        if self._serial is None:
            raise RankGuard(f"serial of a rank-{self.rank} set is not materialized")
        return self._serial

    @property
    def has_serial(self) -> bool:
        return self._serial is not None

    @property
    def grade(self) -> int:
        return len(self.children)

    def __len__(self) -> int:
        return len(self.children)

    def __iter__(self) -> Iterator["Hfs"]:
        return iter(self.children)

    def __contains__(self, item: object) -> bool:
        return item in self.children

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hfs):
            return NotImplemented
        return self is other or _compare(self, other) == 0

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Hfs") -> bool:
        return _compare(self, other) < 0

    def __le__(self, other: "Hfs") -> bool:
        return _compare(self, other) <= 0

    def __gt__(self, other: "Hfs") -> bool:
        return _compare(self, other) > 0

    def __ge__(self, other: "Hfs") -> bool:
        return _compare(self, other) >= 0

    def braces(self) -> str:
        """Brace text: ``1`` for the empty set, else ``{a,b,...}`` descending."""
        if not self.children:
            return "1"
        return "{" + ",".join(c.braces() for c in self.children) + "}"

    def to_nested(self) -> list:
        """Recursive array of members, each given by its own member array."""
        return [c.to_nested() for c in self.children]

    def __repr__(self) -> str:
        if self._serial is not None and self._serial < 1 << 64:
            return f"Hfs(#{self._serial})"
        return f"Hfs(rank={self.rank}, grade={self.grade})"

    def __str__(self) -> str:
        return self.braces()


EMPTY = Hfs()


@dataclass(frozen=True)
class HyperbinaryDigits:
    """Sparse binary expansion of a serial: the set of occupied places."""

    places: frozenset[int]

    @classmethod
    def from_serial(cls, n: int) -> "HyperbinaryDigits":
        if n < 0:
            raise ValueError("serial must be non-negative")
        return cls(frozenset(_bit_places(n)))

    @property
    def value(self) -> int:
        return sum(1 << p for p in self.places)

    def descending(self) -> tuple[int, ...]:
        return tuple(sorted(self.places, reverse=True))


def _bit_places(n: int) -> list[int]:
    places = []
    while n:
        low = n & -n
        places.append(low.bit_length() - 1)
        n ^= low
    return places


def serial_encode(x: Hfs, max_rank: int = RANK_CAP) -> int:
    _check_rank(x.rank, min(max_rank, RANK_CAP))
    return x.serial


@lru_cache(maxsize=1 << 17)
def _decode_small(n: int) -> Hfs:
    return Hfs(tuple(_decode_small(p) for p in reversed(_bit_places(n))))


def serial_decode(n: int) -> Hfs:
    """Inverse of :func:`serial_encode`; members are the bit places of ``n``."""
    if n < 0:
        raise ValueError("serial must be non-negative")
    if n < 1 << 17:
        return _decode_small(n)
    return Hfs(tuple(serial_decode(p) for p in reversed(_bit_places(n))))


def hyperbinary(x: Hfs) -> HyperbinaryDigits:
    return HyperbinaryDigits(frozenset(c.serial for c in x.children))


def rank(x: Hfs) -> int:
    return x.rank


def tier_range(r: int, max_rank: int = RANK_CAP) -> tuple[int, int]:
    """Half-open serial interval ``[hexp(r-1), hexp(r))`` of tier ``r``."""
    if r < 1:
        raise ValueError("tiers start at rank 1")
    _check_rank(r, min(max_rank, RANK_CAP))
    return _hexp(r - 1), _hexp(r)


def enumerate_rank(r: int) -> Iterator[Hfs]:
    """All sets of rank <= r in ascending serial order."""
    _check_rank(r, ENUM_CAP)
    for n in range(_hexp(r)):
        yield serial_decode(n)


def factor_by_tiers(x: Hfs, cuts: Sequence[int]) -> list[Hfs]:
    """Split ``x`` into one factor per rank band of ``cuts`` (strictly descending).

    Factor ``k`` collects the members ``c`` with ``cuts[k+1] <= rank(c) < cuts[k]``,
    so its association lies in tiers ``cuts[k+1]+1 .. cuts[k]``; the last factor
    takes every member of rank below ``cuts[-1]``.  Members are never re-nested.
    """
    if not cuts:
        raise ValueError("at least one cut is required")
    if any(a <= b for a, b in zip(cuts, cuts[1:])) or cuts[-1] < 0:
        raise ValueError(f"cuts must be strictly descending naturals: {cuts}")
    if x.rank > cuts[0]:
        raise RankGuard(f"rank {x.rank} exceeds top cut {cuts[0]}")
    bounds = list(cuts[1:]) + [0]
    factors: list[list[Hfs]] = [[] for _ in cuts]
    for c in x.children:
        for k, low in enumerate(bounds):
            if c.rank >= low:
                factors[k].append(c)
                break
    return [Hfs(tuple(f)) for f in factors]


def union(parts: Iterable[Hfs]) -> Hfs:
    """Disjoint union of member sets; overlapping members raise ``ValueError``."""
    return Hfs.of(c for p in parts for c in p.children)

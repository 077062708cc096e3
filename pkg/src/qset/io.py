"""JSON interchange for elements, one-body matrices and Fock operators.

Serials travel as decimal strings and coefficients as ``"p/q"`` strings so
that rationals and large serials survive a round trip bit-exactly.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .clifford import SeedSpace
from .grassmann import Element, normalize
from .hfs import Hfs, serial_decode
from .quantify import FockOperator, OneBodyOperator


def fraction_text(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_fraction(s: str | int) -> Fraction:
    return Fraction(s)


def element_to_json(a: Element) -> dict[str, Any]:
    return {
        "terms": [
            {"coef": fraction_text(c), "monomial": [str(f.serial) for f in m.children]}
            for m, c in a.items()
        ]
    }


def element_from_json(data: dict[str, Any]) -> Element:
    terms: dict[Hfs, Fraction] = {}
    for t in data["terms"]:
        sign, m = normalize([serial_decode(int(s)) for s in t["monomial"]])
        if sign:
            terms[m] = terms.get(m, 0) + sign * parse_fraction(t["coef"])
    return Element(terms)


def dumps_element(a: Element) -> str:
    return json.dumps(element_to_json(a))


def loads_element(text: str) -> Element:
    return element_from_json(json.loads(text))


def load_matrix(path: str | Path) -> OneBodyOperator:
    """Read ``{"basis": [serials], "rows": [["p/q", ...], ...]}``."""
    data = json.loads(Path(path).read_text())
    return matrix_from_json(data)


def matrix_from_json(data: dict[str, Any]) -> OneBodyOperator:
    seed = SeedSpace.from_serials(int(s) for s in data["basis"])
    rows = tuple(tuple(parse_fraction(x) for x in row) for row in data["rows"])
    return OneBodyOperator(seed, rows)


def matrix_to_json(h: OneBodyOperator) -> dict[str, Any]:
    return {
        "basis": [str(v.serial) for v in h.seed.labels],
        "rows": [[fraction_text(x) for x in row] for row in h.matrix],
    }


def fock_to_json(op: FockOperator) -> dict[str, Any]:
    return {
        "basis": [str(m.serial) for m in op.basis],
        "entries": [[str(r.serial), str(c.serial), fraction_text(v)] for r, c, v in op.entries()],
    }


def fock_from_json(data: dict[str, Any]) -> FockOperator:
    basis = [serial_decode(int(s)) for s in data["basis"]]
    return FockOperator.from_entries(
        basis,
        ((serial_decode(int(r)), serial_decode(int(c)), parse_fraction(v)) for r, c, v in data["entries"]),
    )

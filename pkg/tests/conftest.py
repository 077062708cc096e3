import random
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from qset import Element, serial_decode  # noqa: E402
from qset.clifford import CliffordElement  # noqa: E402

DATA = Path(__file__).parent / "data"

fractions = st.builds(
    Fraction,
    st.integers(-6, 6).filter(bool),
    st.integers(1, 5),
)


def elements(max_serial: int = 15, max_terms: int = 4):
    """Strategy for random elements over basis serials ``0..max_serial``."""
    return st.dictionaries(
        st.integers(0, max_serial).map(serial_decode), fractions, max_size=max_terms
    ).map(Element)


def clifford_elements(d: int, max_terms: int = 4, max_grade: int | None = None):
    n = 2 * d
    words = st.sets(st.integers(1, n), max_size=max_grade if max_grade is not None else n).map(
        lambda s: tuple(sorted(s)))
    return st.dictionaries(words, fractions, max_size=max_terms).map(
        lambda t: CliffordElement(d, t))


def random_element(rng: random.Random, max_serial: int = 15, max_terms: int = 4) -> Element:
    from oracles import random_fraction

    k = rng.randint(0, max_terms)
    return Element({serial_decode(rng.randint(0, max_serial)): random_fraction(rng) for _ in range(k)})


@pytest.fixture
def rng():
    return random.Random(20261018)


@pytest.fixture(scope="session")
def golden_table():
    rows = []
    for line in (DATA / "table1_serials_0_24.tsv").read_text().splitlines():
        n, r, text = line.split("\t")
        rows.append((int(n), int(r), text))
    return rows

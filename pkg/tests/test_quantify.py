import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import fractions
from qset import (
    ONE,
    DimensionMismatch,
    Element,
    FockOperator,
    NotInSeed,
    OneBodyOperator,
    RankGuard,
    SeedSpace,
    enumerate_rank,
    grade_op,
    lift_rank,
    multiquantify,
    occupation,
    quantify,
    serial_decode,
    spinor_apply,
    wedge,
)
from qset.grassmann import assoc
from qset.quantify import grade_operator, quantify_clifford, rank_basis


def one_body(d, entries):
    return OneBodyOperator(SeedSpace.standard(d), entries)


def matrices(d):
    return st.lists(st.lists(fractions | st.just(Fraction(0)), min_size=d, max_size=d),
                    min_size=d, max_size=d).map(lambda rows: one_body(d, rows))


def seed_elements(d):
    seed = SeedSpace.standard(d)
    return st.dictionaries(st.sampled_from(seed.basis()), fractions, max_size=4).map(Element)


def test_identity_gives_number_operator():
    n = quantify(OneBodyOperator.identity(SeedSpace.standard(2)))
    assert n.is_diagonal()
    assert n.diagonal() == [0, 1, 1, 2]


def test_projection_gives_occupation():
    seed = SeedSpace.standard(2)
    x1 = seed.labels[0]
    n1 = quantify(OneBodyOperator.projection(seed, x1))
    assert n1.diagonal() == [0, 1, 0, 1]
    assert n1 == occupation(x1, seed)


def test_matrix_unit():
    seed = SeedSpace.standard(2)
    x1, x2 = seed.labels
    op = quantify(OneBodyOperator.unit(seed, x1, x2))
    assert op(assoc(x2)) == assoc(x1)
    assert op(assoc(x1)) == Element()
    assert op(assoc(x1) ^ assoc(x2)) == Element()
    assert op(ONE) == Element()


def test_occupation():
    seed = SeedSpace.standard(3)
    x = seed.labels[1]
    nx = occupation(x, seed)
    assert nx(ONE) == Element()
    assert nx(assoc(x)) == assoc(x)
    with pytest.raises(NotInSeed):
        occupation(serial_decode(9), seed)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_occupation_idempotent(d):
    seed = SeedSpace.standard(d)
    for x in seed.labels:
        nx = occupation(x, seed)
        assert nx @ nx == nx
        assert set(nx.diagonal()) <= {0, 1} and nx.is_diagonal()


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(matrices(d), seed_elements(d), seed_elements(d))))
def test_quantify_is_derivation(args):
    h, a, b = args
    q = quantify(h)
    assert q(wedge(a, b)) == wedge(q(a), b) + wedge(a, q(b))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(matrices(d), matrices(d), fractions)))
def test_quantify_linear(args):
    h, k, lam = args
    assert quantify(h + k * lam) == quantify(h) + quantify(k) * lam


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 4).flatmap(lambda d: st.tuples(matrices(d), matrices(d))))
def test_quantify_lie_homomorphism(args):
    h, k = args
    assert quantify(h).commutator(quantify(k)) == quantify(h.commutator(k))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(matrices))
def test_quantify_preserves_grade(h):
    q = quantify(h)
    g = grade_operator(q.basis)
    assert q @ g == g @ q


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4).flatmap(matrices))
def test_quantify_matches_clifford_bilinear(h):
    seed = h.seed
    q = quantify(h)
    c = quantify_clifford(h)
    for m in seed.basis():
        psi = Element.basis(m)
        assert q(psi) == spinor_apply(c, psi, seed)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        OneBodyOperator(SeedSpace.standard(2), ((1, 0),))
    q = quantify(OneBodyOperator.identity(SeedSpace.standard(2)))
    with pytest.raises(DimensionMismatch):
        q(Element.basis(4))


# -- multiquantification --------------------------------------------------------

def test_lift_identity_rank1():
    basis1 = rank_basis(1)
    lifted = lift_rank(FockOperator.identity(basis1))
    assert list(lifted.basis) == list(enumerate_rank(2))
    assert lifted.is_diagonal()
    # eigenvalue = number of rank<=1 associations in the monomial
    assert lifted.diagonal() == [x.grade for x in enumerate_rank(2)]


def test_lift_zero():
    for r in range(3):
        z = FockOperator.zero(rank_basis(r))
        assert lift_rank(z) == FockOperator.zero(rank_basis(r + 1))


def test_multiquantify_identity_rank1_to_rank3():
    j = multiquantify(FockOperator.identity(rank_basis(1)), 1, 3)
    assert j == lift_rank(lift_rank(FockOperator.identity(rank_basis(1))))
    # brute force: each member contributes its own grade
    expected = {x: sum(c.grade for c in x) for x in enumerate_rank(3)}
    assert j.is_diagonal()
    assert dict(zip(j.basis, j.diagonal())) == expected


def test_multiquantify_single_step_and_zero():
    j = FockOperator.identity(rank_basis(2))
    assert multiquantify(j, 2, 3) == lift_rank(j)
    assert multiquantify(FockOperator.zero(rank_basis(0)), 0, 3) == FockOperator.zero(rank_basis(3))


def test_multiquantify_guards():
    with pytest.raises(RankGuard):
        multiquantify(FockOperator.identity(rank_basis(3)), 3, 5)
    with pytest.raises(RankGuard):
        lift_rank(FockOperator.identity(rank_basis(4)))
    with pytest.raises(ValueError):
        multiquantify(FockOperator.identity(rank_basis(2)), 2, 2)
    with pytest.raises(DimensionMismatch):
        multiquantify(FockOperator.identity(rank_basis(2)), 1, 3)


def test_lift_nondiagonal_is_derivation():
    rng = random.Random(7)
    basis = rank_basis(2)
    rows = [[Fraction(rng.randint(-2, 2)) for _ in basis] for _ in basis]
    lifted = lift_rank(FockOperator.from_matrix(basis, rows))
    for _ in range(30):
        a = Element.basis(serial_decode(rng.randrange(16)))
        b = Element.basis(serial_decode(rng.randrange(16)))
        assert lifted(wedge(a, b)) == wedge(lifted(a), b) + wedge(a, lifted(b))


def test_fock_operator_algebra():
    basis = rank_basis(2)
    i = FockOperator.identity(basis)
    g = grade_operator(basis)
    assert (i @ g) == g
    assert (g - g) == FockOperator.zero(basis)
    assert g * 2 == g + g
    assert FockOperator.from_entries(basis, g.entries()) == g
    assert grade_op(Element.basis(basis[3])) == g(Element.basis(basis[3]))

"""Structure constants, invariant form, adjoint representation."""

import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from fmtangent.chevalley import (
    adjoint_rep,
    build_chevalley,
    dump_bracket_table,
    jacobi_defect,
)
from fmtangent.rootsys import CartanType, build_root_system

GOLDEN = Path(__file__).parent / "golden"

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C2", "C3", "D4", "G2", "F4"]


def ca_of(label):
    return build_chevalley(build_root_system(CartanType.parse(label)))


def all_root_pairs_with_root_sum(ca):
    for a in ca.basis_roots:
        for b in ca.basis_roots:
            s = tuple(x + y for x, y in zip(a, b))
            if s in ca.root_index:
                yield a, b


# -- bracket relations -------------------------------------------------


def test_sl2_relations():
    ca = ca_of("A1")
    x, y, h = ca.x((1,)), ca.x((-1,)), ca.h(0)
    assert ca.bracket(x, y) == h
    assert ca.bracket(h, x) == {ca.root_index[(1,)]: 2}
    assert ca.bracket(h, y) == {ca.root_index[(-1,)]: -2}


def test_a2_simple_pair_magnitude():
    ca = ca_of("A2")
    # alpha_2 - alpha_1 is not a root, so p = 0 and |N| = 1
    assert abs(ca.nconst((1, 0), (0, 1))) == 1
    assert ca.p_string((1, 0), (0, 1)) == 0


def test_g2_max_magnitude_is_three():
    ca = ca_of("G2")
    mags = {abs(ca.nconst(a, b)) for a, b in all_root_pairs_with_root_sum(ca)}
    assert max(mags) == 3
    assert mags <= {1, 2, 3}


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_magnitude_rule(label):
    ca = ca_of(label)
    for a, b in all_root_pairs_with_root_sum(ca):
        n = ca.nconst(a, b)
        assert isinstance(n, int)
        assert abs(n) == ca.p_string(a, b) + 1, (a, b)


@pytest.mark.parametrize("label", ["A2", "B2", "G2"])
def test_antisymmetry(label):
    ca = ca_of(label)
    for i in range(ca.dim):
        for j in range(ca.dim):
            if i == j:
                continue
            lhs = dict(ca.bracket_basis(i, j))
            rhs = {k: -v for k, v in ca.bracket_basis(j, i)}
            assert lhs == rhs


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "C2", "G2"])
def test_jacobi_exhaustive_rank_two(label):
    ca = ca_of(label)
    for i, j, k in itertools.combinations(range(ca.dim), 3):
        assert not jacobi_defect(ca, i, j, k), (i, j, k)


def test_bracket_with_cartan():
    ca = ca_of("G2")
    rs = ca.root_system
    for i in range(rs.rank):
        for beta in ca.basis_roots:
            expect = rs._pairing_with_simple_coroot(beta, i)
            got = ca.bracket(ca.h(i), ca.x(beta))
            assert got == ({ca.root_index[beta]: expect} if expect else {})


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "C3"])
def test_x_alpha_x_minus_alpha_is_coroot(label):
    ca = ca_of(label)
    rs = ca.root_system
    nb = 2 * ca.n_pos
    for alpha in ca.basis_roots:
        got = ca.bracket(ca.x(alpha), ca.x(tuple(-c for c in alpha)))
        expect = {
            nb + k: c for k, c in enumerate(rs.coroot(alpha).coords) if c
        }
        assert got == expect


# -- invariant form ----------------------------------------------------


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_form_normalization_on_theta(label):
    ca = ca_of(label)
    neg = tuple(-c for c in ca.theta)
    assert ca.form(ca.x(ca.theta), ca.x(neg)) == 1


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_form_associativity_exhaustive(label):
    ca = ca_of(label)
    for i, j, k in itertools.product(range(ca.dim), repeat=3):
        a, b, c = {i: 1}, {j: 1}, {k: 1}
        assert ca.form(ca.bracket(a, b), c) == ca.form(a, ca.bracket(b, c))


def test_form_associativity_sampled_g2_f4():
    rng = random.Random(11)
    for label in ("G2", "F4"):
        ca = ca_of(label)
        for _ in range(2000):
            i, j, k = (rng.randrange(ca.dim) for _ in range(3))
            a, b, c = {i: 1}, {j: 1}, {k: 1}
            assert ca.form(ca.bracket(a, b), c) == ca.form(a, ca.bracket(b, c))


def test_form_short_root_value():
    # (x_alpha, x_-alpha) = 2/(alpha,alpha); G2 short simple root has
    # squared length 2/3
    ca = ca_of("G2")
    i = ca.root_index[(1, 0)]
    j = ca.root_index[(-1, 0)]
    assert ca.form_basis(i, j) == 3
    assert ca.form_basis(j, i) == 3
    assert ca.form_basis(i, i) == 0


# -- adjoint representation --------------------------------------------


@pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
def test_adjoint_is_homomorphism(label):
    ca = ca_of(label)
    rep = adjoint_rep(ca)
    for i in range(ca.dim):
        for j in range(ca.dim):
            lhs = rep.action[i].commutator(rep.action[j])
            rhs = rep.rho(ca.bracket({i: 1}, {j: 1}))
            assert lhs == rhs, (i, j)


def test_adjoint_examples():
    ca = ca_of("A1")
    rep = adjoint_rep(ca)
    # ad(x_{-a})(x_a) = [x_{-a}, x_a] = -h_1
    col = rep.action[ca.root_index[(-1,)]].column(ca.root_index[(1,)])
    assert col == {ca.h_index(0): -1}
    # trace of ad(h_1) vanishes: roots come in +/- pairs
    ca2 = ca_of("A2")
    rep2 = adjoint_rep(ca2)
    tr = sum(v for (r, c), v in rep2.action[ca2.h_index(0)].entries.items() if r == c)
    assert tr == 0


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_adjoint_lowest_on_highest_nonzero(label):
    ca = ca_of(label)
    rep = adjoint_rep(ca)
    neg = ca.root_index[tuple(-c for c in ca.theta)]
    assert rep.action[neg].column(ca.theta_index)


def test_adjoint_highest_weight_vector():
    ca = ca_of("B2")
    rep = adjoint_rep(ca)
    assert rep.highest_index == ca.theta_index
    for alpha in ca.root_system.positive_roots:
        assert not rep.action[ca.root_index[alpha]].column(rep.highest_index)
    assert rep.highest_weight.coords == tuple(
        ca.root_system._pairing_with_simple_coroot(ca.theta, i)
        for i in range(ca.root_system.rank)
    )


# -- E-series sampling ---------------------------------------------------


def test_e6_random_jacobi_smoke():
    ca = ca_of("E6")
    rng = random.Random(5)
    for _ in range(20_000):
        i, j, k = (rng.randrange(ca.dim) for _ in range(3))
        assert not jacobi_defect(ca, i, j, k)


@pytest.mark.slow
@pytest.mark.parametrize("label", ["E6", "E7", "E8"])
def test_full_jacobi_via_adjoint_identity(label):
    """ad([b,c]) = [ad(b), ad(c)] over all basis pairs covers the Jacobi
    identity for every triple (the third slot ranges over the whole basis
    in the matrix equality)."""
    ca = ca_of(label)
    rep = adjoint_rep(ca)
    for i in range(ca.dim):
        for j in range(i + 1, ca.dim):
            lhs = rep.action[i].commutator(rep.action[j])
            rhs = rep.rho(ca.bracket({i: 1}, {j: 1}))
            assert lhs == rhs, (i, j)


# -- dump -----------------------------------------------------------------


def test_bracket_dump_golden_a2():
    got = dump_bracket_table(ca_of("A2"))
    expected = (GOLDEN / "bracket_table_a2.txt").read_text()
    assert got == expected


def test_bracket_dump_linecount_matches_nonzero_brackets():
    ca = ca_of("B2")
    text = dump_bracket_table(ca)
    nonzero = sum(
        1 for i in range(ca.dim) for j in range(i + 1, ca.dim)
        if ca.bracket_basis(i, j)
    )
    assert len(text.strip().splitlines()) == nonzero

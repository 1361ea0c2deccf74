"""Truncated level-one module, Demazure closure, Polo membership."""

import random
from fractions import Fraction

import pytest

from fmtangent.chevalley import build_chevalley
from fmtangent.demazure import build_truncated_rep, schubert_tangent_dim
from fmtangent.lattice_oracle import LoopElement
from fmtangent.rootsys import CartanType, DomainError, build_root_system

SMALL_TYPES = ["A1", "A2", "B2", "C2", "G2", "A3", "B3"]


def tr_of(label):
    rs = build_root_system(CartanType.parse(label))
    return build_truncated_rep(build_chevalley(rs))


# -- graded dimensions ----------------------------------------------------


@pytest.mark.parametrize(
    "label,dims",
    [("A1", (1, 3, 8)), ("A2", (1, 8, 43))],
)
def test_graded_dims_examples(label, dims):
    tr = tr_of(label)
    assert (tr.graded_dims[0], tr.graded_dims[-1], tr.graded_dims[-2]) == dims


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_graded_dims_formula(label):
    tr = tr_of(label)
    n = tr.algebra.dim
    assert tr.graded_dims == {0: 1, -1: n, -2: n + n * (n + 1) // 2 - 1}


def test_relation_vector_is_pure_symmetric_square():
    tr = tr_of("B2")
    rel = tr.relation_vector()
    th = tr.algebra.theta_index
    assert rel == {("s", th, th): 1}
    assert not any(k[0] == "t2" for k in rel)


def test_relation_class_is_zero():
    # (x_theta t^{-1})^2 v built through the lowering operators lands in
    # the zero class
    tr = tr_of("A2")
    ca = tr.algebra
    xt = ca.x(ca.theta)
    _, first = tr.lower(xt, 1, 0, {0: 1})
    deg, second = tr.lower(xt, 1, -1, first)
    assert deg == -2 and second == {}


# -- action identities -----------------------------------------------------


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_t1_pairs_with_lowering_via_form(label):
    # (x t^1)(y t^{-1}) v = (x|y) v for all basis pairs
    tr = tr_of(label)
    ca = tr.algebra
    for x in range(ca.dim):
        _, vec = tr.lower({x: 1}, 1, 0, {0: 1})
        for z in range(ca.dim):
            d, out = tr.act_t1({z: 1}, -1, vec)
            assert d == 0
            expect = ca.form_basis(z, x)
            assert out.get(0, Fraction(0)) == expect


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_highest_vector_killed_by_t0(label):
    tr = tr_of(label)
    for z in range(tr.algebra.dim):
        assert tr.act_t0({z: 1}, 0, {0: 1}) == {}


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_t1_annihilates_relation_vector(label):
    # well-definedness of the raising action on degree -2 classes
    tr = tr_of(label)
    rel = {("s", tr.algebra.theta_index, tr.algebra.theta_index): 1}
    for z in range(tr.algebra.dim):
        d, out = tr.act_t1({z: 1}, -2, rel)
        assert d == -1 and out == {}, z


def test_normalization_extremal_raises_to_highest():
    for label in SMALL_TYPES:
        tr = tr_of(label)
        ca = tr.algebra
        d, out = tr.act_t1(ca.x(ca.theta), -1, tr.extremal_vector())
        assert d == 0 and out == {0: 1}, label


@pytest.mark.parametrize("label", ["A1", "A2", "B2"])
def test_level_one_bracket_identity_exhaustive(label):
    # [x t, y t^{-1}] = [x,y] t^0 + (x|y) * level, with level one, on all
    # basis vectors w of degree -1
    tr = tr_of(label)
    ca = tr.algebra
    for x in range(ca.dim):
        for y in range(ca.dim):
            for wi in range(ca.dim):
                w = {wi: 1}
                _, yw = tr.lower({y: 1}, 1, -1, w)
                _, t1yw = tr.act_t1({x: 1}, -2, yw)
                _, xw = tr.act_t1({x: 1}, -1, w)
                _, yxw = tr.lower({y: 1}, 1, 0, xw)
                lhs = {k: Fraction(t1yw.get(k, 0)) - Fraction(yxw.get(k, 0))
                       for k in set(t1yw) | set(yxw)}
                rhs = dict(tr.act_t0(ca.bracket({x: 1}, {y: 1}), -1, w))
                f = ca.form_basis(x, y)
                if f:
                    rhs[wi] = rhs.get(wi, 0) + f
                rhs = {k: Fraction(v) for k, v in rhs.items() if v}
                lhs = {k: v for k, v in lhs.items() if v}
                assert lhs == rhs, (x, y, wi)


def test_level_one_bracket_identity_sampled_g2():
    tr = tr_of("G2")
    ca = tr.algebra
    rng = random.Random(17)
    for _ in range(500):
        x, y, wi = (rng.randrange(ca.dim) for _ in range(3))
        w = {wi: 1}
        _, yw = tr.lower({y: 1}, 1, -1, w)
        _, t1yw = tr.act_t1({x: 1}, -2, yw)
        _, xw = tr.act_t1({x: 1}, -1, w)
        _, yxw = tr.lower({y: 1}, 1, 0, xw)
        lhs = {k: Fraction(t1yw.get(k, 0)) - Fraction(yxw.get(k, 0))
               for k in set(t1yw) | set(yxw)}
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = dict(tr.act_t0(ca.bracket({x: 1}, {y: 1}), -1, w))
        f = ca.form_basis(x, y)
        if f:
            rhs[wi] = rhs.get(wi, 0) + f
        rhs = {k: Fraction(v) for k, v in rhs.items() if v}
        assert lhs == rhs


# -- extremal vector --------------------------------------------------------


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_extremal_weight_and_degree(label):
    # t-weight -theta read off through the Cartan action at degree -1
    tr = tr_of(label)
    ca = tr.algebra
    rs = ca.root_system
    ext = tr.extremal_vector()
    theta = ca.theta
    for i in range(rs.rank):
        out = tr.act_t0(ca.h(i), -1, ext)
        expect = -rs._pairing_with_simple_coroot(theta, i)
        assert out == ({k: expect * v for k, v in ext.items()} if expect else {})


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_extremal_is_lowest_weight_vector(label):
    # every negative root vector at t^0 annihilates x_{-theta} t^{-1} v
    tr = tr_of(label)
    ca = tr.algebra
    ext = tr.extremal_vector()
    for alpha in ca.root_system.positive_roots:
        neg = ca.root_index[tuple(-c for c in alpha)]
        assert tr.act_t0({neg: 1}, -1, ext) == {}, alpha


# -- closure and Polo membership --------------------------------------------


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_closure_dims(label):
    tr = tr_of(label)
    cl = tr.demazure_closure()
    assert cl.graded_dims == {0: 1, -1: tr.algebra.dim, -2: 0}
    assert schubert_tangent_dim(tr.algebra) == tr.algebra.dim


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_polo_membership_by_degree(label):
    tr = tr_of(label)
    n = tr.algebra.dim
    assert all(tr.polo_membership(LoopElement.single(-1, {i: 1})) for i in range(n))
    assert not any(tr.polo_membership(LoopElement.single(-2, {i: 1})) for i in range(n))
    assert tr.polo_membership(LoopElement.zero())


def test_polo_mixed_terms():
    tr = tr_of("A2")
    ca = tr.algebra
    good = LoopElement.single(-1, {0: 2, ca.h_index(0): -1})
    assert tr.polo_membership(good)
    mixed = LoopElement.from_dict({-1: {0: 1}, -2: {1: 1}})
    assert not tr.polo_membership(mixed)


def test_polo_rejects_deep_poles():
    tr = tr_of("A1")
    with pytest.raises(DomainError, match="truncation"):
        tr.polo_membership(LoopElement.single(-3, {0: 1}))


@pytest.mark.parametrize("label", SMALL_TYPES)
def test_pbw_nonvanishing_at_degree_minus_two(label):
    # y t^{-2} v != 0 for every nonzero y: the g t^{-2} block is free
    # because the relation vector has no t^{-2} component
    tr = tr_of(label)
    ca = tr.algebra
    rng = random.Random(23)
    for _ in range(50):
        y = {rng.randrange(ca.dim): rng.randint(-3, 3) for _ in range(3)}
        y = {k: v for k, v in y.items() if v}
        if not y:
            continue
        _, vec = tr.lower(y, 2, 0, {0: 1})
        assert vec, y


def test_lower_rejects_outside_truncation():
    tr = tr_of("A1")
    with pytest.raises(DomainError, match="truncation"):
        tr.lower({0: 1}, 2, -1, {0: 1})
    with pytest.raises(DomainError, match="truncation"):
        tr.lower({0: 1}, 1, -2, {("t2", 0): 1})


@pytest.mark.parametrize("label", SMALL_TYPES + ["F4", "D4", "E6"])
def test_routes_agree_at_quasi_minuscule(label):
    """Formula, closure, and report agree type by type: FM total is
    m(theta^vee) * dim(g) and the Schubert side equals the Demazure
    closure dimension at degree -1."""
    from fmtangent.tangent import fm_tangent, m_lambda, quasi_minuscule

    rs = build_root_system(CartanType.parse(label))
    ca = build_chevalley(rs)
    tv = quasi_minuscule(rs)
    report = fm_tangent(rs, tv)
    assert report.total_fm_dim == m_lambda(rs, tv) * rs.dim_g()
    assert report.schubert_dim_at_e == schubert_tangent_dim(ca) == rs.dim_g()

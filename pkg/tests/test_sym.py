import itertools
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kernexp.kernel import Kernel, OpView, compose, dirac, function, op_compose
from kernexp.numeric import ONE, ZERO, ExtRat, product
from kernexp.space import ROOT, Multiset, Pair, Tagged, multiset_web, rooted_web, tuple_label, unit_web, web
from kernexp.sym import (
    GuardExceeded,
    NotSymmetric,
    SymContext,
    barycenter_kernel,
    barycentre,
    check_guard,
    eq_kernel,
    eq_under,
    eq_view,
    gen_power,
    get_guard,
    p_chain,
    p_step,
    rooted_point,
    set_guard,
    sym_power,
    sym_power_cosets,
    symmetrise_check,
    tensor_points,
)

from conftest import chains, fractions, kernels, kernels_between, webs

AB = web("a", "b")
f = function(AB, [Fraction(1, 2), Fraction(1, 3)])
g = function(AB, [Fraction(1, 5), 1])


def sym_power_oracle(kappa, n):
    """Sum over all output tuples, grouped by multiset."""
    entries = {}
    for mx in multiset_web(kappa.dom, n):
        for ys in itertools.product(kappa.cod.atoms, repeat=n):
            key = (mx, Multiset.of(kappa.cod, ys))
            v = product(kappa(x, y) for x, y in zip(mx.atoms, ys))
            entries[key] = entries.get(key, ZERO) + v
    return Kernel(multiset_web(kappa.dom, n), multiset_web(kappa.cod, n), entries)


def test_eq_kernel_examples():
    ctx = SymContext(AB, 2)
    e = eq_kernel(ctx)
    assert e(Pair("a", "b"), Multiset(("a", "b"))) == ONE
    assert e(Pair("b", "a"), Multiset(("a", "b"))) == ONE
    assert e(Pair("a", "a"), Multiset(("a", "b"))) == ZERO
    assert all(len(e.row(x)) == 1 for x in ctx.tuple_web)
    e0 = eq_kernel(SymContext(AB, 0))
    assert e0.entries == {("*", Multiset(())): ONE}


def test_symmetrise_check_examples():
    ctx = SymContext(AB, 2)
    assert symmetrise_check(ctx, OpView.of(tensor_points(AB, [f, f])))
    assert not symmetrise_check(ctx, OpView.of(tensor_points(AB, [f, g])))
    assert symmetrise_check(ctx, barycentre(ctx, OpView.of(tensor_points(AB, [f, g]))))


def test_eq_under_examples():
    ctx = SymContext(AB, 2)
    ff = OpView.of(tensor_points(AB, [f, f]))
    under = eq_under(ctx, ff)
    assert under.underlying(Multiset(("a", "b")), "*") == ExtRat(Fraction(1, 6))
    assert op_compose(eq_view(ctx), under) == ff
    with pytest.raises(NotSymmetric):
        eq_under(ctx, OpView.of(tensor_points(AB, [f, g])))


def test_sym_power_examples():
    p, q, r, s = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(3, 7))
    kappa = Kernel(AB, web("y1", "y2"), {("a", "y1"): p, ("a", "y2"): q, ("b", "y1"): r, ("b", "y2"): s})
    k2 = sym_power(kappa, 2)
    assert k2(Multiset(("a", "b")), Multiset(("y1", "y2"))) == ExtRat(p * s + q * r)
    assert k2(Multiset(("a", "a")), Multiset(("y1", "y2"))) == ExtRat(2 * p * q)
    assert k2(Multiset(("a", "a")), Multiset(("y1", "y1"))) == ExtRat(p * p)
    for n in range(4):
        assert sym_power(dirac(AB), n) == dirac(multiset_web(AB, n))


def test_barycenter_examples():
    ctx = SymContext(AB, 2)
    fg, gf = tensor_points(AB, [f, g]), tensor_points(AB, [g, f])
    s = barycentre(ctx, OpView.of(fg)).underlying
    assert s == (fg + gf).scale(Fraction(1, 2))
    ff = OpView.of(tensor_points(AB, [f, f]))
    assert barycentre(ctx, ff) == ff
    s2 = barycenter_kernel(AB, 2)
    assert compose(s2, s2) == s2


def test_p_step_examples():
    a = web("a")
    step0 = p_step(a, 0).underlying
    assert step0.entries == {(Multiset(()), Multiset((ROOT,))): ONE}
    step1 = p_step(a, 1).underlying
    assert step1(Multiset((Tagged(1, "a"),)), Multiset((Tagged(1, "a"), ROOT))) == ONE
    assert all(len(step1.row(x)) == 1 for x in step1.dom)


def test_p_chain_identity_and_order():
    assert p_chain(AB, 3, 3) == OpView.identity(multiset_web(rooted_web(AB), 3))
    with pytest.raises(ValueError):
        p_chain(AB, 1, 2)


def test_p_chain_on_pair_of_powers():
    # p_{2,1} o <f>^(2) = (1/2) (f1-bar + f2-bar) on grade one
    gp = gen_power(AB, [f, g])
    lhs = compose(gp.underlying, p_chain(AB, 2, 1).underlying)
    fb, gb = rooted_point(f), rooted_point(g)
    expected = (fb + gb).scale(Fraction(1, 2))
    for m in lhs.dom:
        (x,) = m.atoms
        assert lhs(m, "*") == expected(x, "*")


def test_gen_power_with_equal_factors():
    ctx = SymContext(rooted_web(AB), 3)
    fb = rooted_point(f)
    direct = eq_under(ctx, OpView.of(tensor_points(ctx.base, [fb, fb, fb])))
    assert gen_power(AB, [f, f, f]) == direct


def test_gen_power_pair_value():
    gp = gen_power(AB, [f, g]).underlying
    m = Multiset((Tagged(1, "a"), Tagged(1, "b")))
    expected = (Fraction(1, 2) * 1 + Fraction(1, 5) * Fraction(1, 3)) / 2
    assert gp(m, "*") == ExtRat(expected)
    assert gp(Multiset((ROOT, ROOT)), "*") == ONE


def test_guard():
    assert get_guard() == 8
    with pytest.raises(GuardExceeded):
        check_guard(9)
    old = set_guard(10)
    try:
        check_guard(9)
    finally:
        set_guard(old)
    with pytest.raises(GuardExceeded):
        sym_power(dirac(AB), 50)


def test_unit_power():
    ctx = SymContext(unit_web(), 2)
    assert len(ctx.power_web) == 1 and len(ctx.tuple_web) == 1
    assert ctx.tuple_of(tuple_label(("*", "*"))) == ("*", "*")


@given(kernels(2), st.integers(0, 3))
def test_sym_power_forms_agree_with_oracle(kappa, n):
    fib = sym_power(kappa, n)
    assert fib == sym_power_cosets(kappa, n) == sym_power_oracle(kappa, n)


@given(chains(2, max_atoms=2), st.integers(0, 3))
def test_sym_power_is_functorial(ks, n):
    k1, k2 = ks
    assert sym_power(compose(k2, k1), n) == compose(sym_power(k2, n), sym_power(k1, n))


@st.composite
def symmetric_kernels(draw):
    base = draw(webs(2, min_atoms=1))
    n = draw(st.integers(0, 3))
    ctx = SymContext(base, n)
    y = draw(webs(2, min_atoms=1, prefix="y"))
    h = draw(kernels_between(ctx.power_web, y))
    return ctx, h


@given(symmetric_kernels())
def test_equaliser_factorisation_is_unique(data):
    ctx, h = data
    kappa = OpView.of(compose(h, eq_kernel(ctx)))
    under = eq_under(ctx, kappa)
    assert under.underlying == h
    assert op_compose(eq_view(ctx), under) == kappa


@given(st.lists(fractions, min_size=2, max_size=2), st.lists(fractions, min_size=2, max_size=2))
def test_barycentre_is_symmetric(u, v):
    ctx = SymContext(AB, 2)
    gv = barycentre(ctx, OpView.of(tensor_points(AB, [function(AB, u), function(AB, v)])))
    assert symmetrise_check(ctx, gv)
    assert barycentre(ctx, gv) == gv

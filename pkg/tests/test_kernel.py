from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kernexp.kernel import (
    Kernel,
    OpView,
    WebMismatch,
    act_on_function,
    act_on_measure,
    associator,
    characteristic,
    compose,
    compose_all,
    copair,
    dirac,
    function,
    inner,
    injection,
    left_unitor,
    measure,
    op_compose,
    pair,
    projection,
    right_unitor,
    symmetry,
    tensor,
    zero,
)
from kernexp.numeric import INF, ONE, ZERO, ExtRat
from kernexp.space import EMPTY, Pair, Tagged, Web, product_web, unit_web, web

from conftest import chains, ext_rats, kernels, kernels_between, webs


def dense_compose(second, first):
    """Entry-by-entry sum over the middle web; no sparsity shortcuts."""
    out = {}
    for x in first.dom:
        for z in second.cod:
            acc = ZERO
            for y in first.cod:
                acc = acc + first(x, y) * second(y, z)
            out[(x, z)] = acc
    return Kernel(first.dom, second.cod, out)


def test_dirac_examples():
    d = dirac(web("a", "b"))
    assert d.entries == {("a", "a"): ONE, ("b", "b"): ONE}
    assert dirac(EMPTY).nnz == 0


def test_convolution_example():
    k = Kernel(web("x"), web("y1", "y2"), {("x", "y1"): Fraction(1, 2), ("x", "y2"): Fraction(1, 3)})
    i = Kernel(web("y1", "y2"), web("z"), {("y1", "z"): 2, ("y2", "z"): 3})
    assert compose(i, k)("x", "z") == ExtRat(2)


def test_infinity_against_zero_contributes_nothing():
    k = Kernel(web("x"), web("y1", "y2"), {("x", "y1"): INF, ("x", "y2"): 1})
    i = Kernel(web("y1", "y2"), web("z"), {("y2", "z"): 5})
    assert compose(i, k)("x", "z") == ExtRat(5)


def test_compose_mismatch_names_webs():
    k = Kernel(web("a"), web("b"))
    with pytest.raises(WebMismatch) as err:
        compose(k, k)
    assert err.value.left == web("b") and err.value.right == web("a")


def test_duplicate_entries_rejected():
    with pytest.raises(ValueError):
        Kernel(web("a"), web("b"), [(("a", "b"), 1), (("a", "b"), 2)])


def test_unknown_atom_rejected():
    with pytest.raises(KeyError):
        Kernel(web("a"), web("b"), {("c", "b"): 1})


def test_tensor_examples():
    ab = web("a", "b")
    assert tensor(dirac(ab), dirac(ab)) == dirac(product_web(ab, ab))
    h = Kernel(web("a"), web("a"), {("a", "a"): Fraction(1, 2)})
    t = Kernel(web("b"), web("b"), {("b", "b"): Fraction(1, 3)})
    assert tensor(h, t)(Pair("a", "b"), Pair("a", "b")) == ExtRat(Fraction(1, 6))


def test_biproduct_examples():
    a = web("a")
    assert compose(projection([a], 0), injection([a], 0)) == dirac(a)
    parts = [a, web("b")]
    assert compose(projection(parts, 1), injection(parts, 0)) == zero(a, web("b"))
    assert injection([web("a", "b")], 0).nnz == 2
    with pytest.raises(IndexError):
        injection(parts, 2)


def test_pair_and_copair_examples():
    mu = measure(web("a", "b"), [Fraction(1, 2), Fraction(1, 4)])
    parts = [mu.cod, mu.cod]
    assert compose(projection(parts, 0), pair([mu, mu])) == mu
    f = function(web("x"), [2])
    g = function(web("x"), [7])
    assert copair([f, g])(Tagged(1, "x"), "*") == ExtRat(7)


def test_inner_examples():
    w = web("a", "b")
    assert inner(function(w, [1, 1]), measure(w, [Fraction(1, 3), Fraction(2, 3)])) == ONE
    assert inner(function(w, [1, 2]), measure(w, [Fraction(1, 2), Fraction(1, 4)])) == ONE
    assert inner(function(w, [INF, 1]), measure(w, [0, 3])) == ExtRat(3)


def test_inner_shapes():
    w = web("a")
    with pytest.raises(WebMismatch):
        inner(measure(w, [1]), measure(w, [1]))
    with pytest.raises(WebMismatch):
        inner(function(w, [1]), measure(web("b"), [1]))


def test_action_examples():
    mu = measure(web("a", "b"), [1, 2])
    assert act_on_measure(dirac(mu.cod), mu) == mu
    k = Kernel(web("x", "x2"), web("a", "b"), {("x", "a"): Fraction(1, 3), ("x", "b"): Fraction(1, 5), ("x2", "b"): 2})
    chi = characteristic(k.cod, ["b"])
    pulled = act_on_function(k, chi)
    assert pulled("x", "*") == ExtRat(Fraction(1, 5))
    assert pulled("x2", "*") == ExtRat(2)


def test_unitors_and_symmetry():
    a = web("a", "b")
    assert compose(symmetry(a, web("c")), symmetry(web("c"), a)) == dirac(product_web(web("c"), a))
    assert left_unitor(a).nnz == 2 and right_unitor(a).nnz == 2


def test_opview_orientation():
    k = Kernel(web("b"), web("a"), {("b", "a"): 1})
    v = OpView.of(k)
    assert v.source == web("a") and v.target == web("b")
    with pytest.raises(WebMismatch):
        OpView(web("b"), web("a"), k)
    assert op_compose(OpView.identity(v.target), v) == v


@given(kernels())
def test_identity_laws(k):
    assert compose(k, dirac(k.dom)) == k
    assert compose(dirac(k.cod), k) == k


@given(chains(2))
def test_compose_matches_dense_sum(ks):
    k1, k2 = ks
    assert compose(k2, k1) == dense_compose(k2, k1)


@given(chains(3))
def test_associativity(ks):
    k1, k2, k3 = ks
    assert compose(k3, compose(k2, k1)) == compose(compose(k3, k2), k1)
    assert compose_all(k3, k2, k1) == compose(k3, compose(k2, k1))


@given(chains(2, max_atoms=2), chains(2, max_atoms=2))
def test_tensor_interchange(a, b):
    (k1, i1), (k2, i2) = a, b
    lhs = tensor(compose(i1, k1), compose(i2, k2))
    rhs = compose(tensor(i1, i2), tensor(k1, k2))
    assert lhs == rhs


@given(kernels(2), kernels(2))
def test_symmetry_is_natural(k1, k2):
    lhs = compose(symmetry(k1.cod, k2.cod), tensor(k1, k2))
    rhs = compose(tensor(k2, k1), symmetry(k1.dom, k2.dom))
    assert lhs == rhs


@given(kernels(2), kernels(2), kernels(2))
def test_associator_is_natural(k1, k2, k3):
    lhs = compose(associator(k1.cod, k2.cod, k3.cod), tensor(tensor(k1, k2), k3))
    rhs = compose(tensor(k1, tensor(k2, k3)), associator(k1.dom, k2.dom, k3.dom))
    assert lhs == rhs


@given(kernels(3, values=ext_rats))
def test_transpose_involution(k):
    assert k.transpose().transpose() == k


@st.composite
def reciprocity_data(draw):
    x = draw(webs(3, min_atoms=1, prefix="x"))
    y = draw(webs(3, min_atoms=1, prefix="y"))
    k = draw(kernels_between(x, y, ext_rats))
    mu = draw(kernels_between(unit_web(), x, ext_rats))
    f = draw(kernels_between(y, unit_web(), ext_rats))
    return f, k, mu


@given(reciprocity_data())
def test_reciprocity_with_infinities(data):
    f, k, mu = data
    assert inner(f, act_on_measure(k, mu)) == inner(act_on_function(k, f), mu)


@st.composite
def biproduct_data(draw):
    parts = [draw(webs(2, prefix=f"p{i}_")) for i in range(draw(st.integers(1, 3)))]
    b = draw(webs(2, min_atoms=1, prefix="b"))
    gs = [draw(kernels_between(b, p)) for p in parts]
    fs = [draw(kernels_between(p, b)) for p in parts]
    return parts, gs, fs


@given(biproduct_data())
def test_biproduct_laws(data):
    parts, gs, fs = data
    for i, g in enumerate(gs):
        assert compose(projection(parts, i), pair(gs)) == g
        assert compose(copair(fs), injection(parts, i)) == fs[i]
    # pair(g)[b][Tagged(i, a)] = g_i[b][a]
    for i, g in enumerate(gs):
        for (b, a), v in g.items():
            assert pair(gs)(b, Tagged(i, a)) == v


def test_pair_needs_common_domain():
    with pytest.raises(WebMismatch):
        pair([Kernel(web("a"), web("x")), Kernel(web("b"), web("x"))])
    with pytest.raises(ValueError):
        pair([])


def test_web_equality_is_by_atoms():
    assert Web(("a", "b")) == web("a", "b")
    assert Web(("a", "b")) != web("b", "a")

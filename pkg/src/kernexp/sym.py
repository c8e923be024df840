"""Symmetric powers: the equaliser ``eq``, its factorisation, ``kappa^(n)``,
barycenters and the projection chain between rooted powers.

Orientation: everything is stored as a kernel. A morphism ``Y -> X^(x)n`` of
the opposite category is a kernel ``X^(x)n ~> Y`` wrapped in :class:`OpView`.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .kernel import (
    Kernel,
    OpView,
    WebMismatch,
    compose,
    function,
    graph,
    is_function,
    op_compose,
    tensor_all,
)
from .numeric import ONE, ZERO, ExtRat, product
from .space import (
    ROOT,
    Multiset,
    Tagged,
    Web,
    distinct_permutations,
    label_tuple,
    multiset_web,
    rooted_web,
    tuple_label,
    tuple_web,
)

DEFAULT_GUARD = 8


class GuardExceeded(ValueError):
    """A grade or depth is beyond the configured factorial guard."""


class NotSymmetric(ValueError):
    """``eq_under`` was asked to factor a kernel that is not symmetric."""


_guard = DEFAULT_GUARD


def get_guard() -> int:
    return _guard


def set_guard(limit: int) -> int:
    """Set the largest admissible grade; returns the previous value."""
    global _guard
    old, _guard = _guard, int(limit)
    return old


def check_guard(n: int) -> None:
    if n < 0:
        raise ValueError("grade must be nonnegative")
    if n > _guard:
        raise GuardExceeded(f"grade {n} exceeds the factorial guard {_guard}")


@dataclass(frozen=True)
class SymContext:
    base: Web
    n: int
    power_web: Web = field(init=False, repr=False)
    tuple_web: Web = field(init=False, repr=False)

    def __post_init__(self):
        check_guard(self.n)
        object.__setattr__(self, "power_web", multiset_web(self.base, self.n))
        object.__setattr__(self, "tuple_web", tuple_web(self.base, self.n))

    def tuple_of(self, label) -> tuple:
        return label_tuple(label, self.n)

    def multiset_of(self, label) -> Multiset:
        return Multiset.of(self.base, self.tuple_of(label))


def eq_kernel(ctx: SymContext) -> Kernel:
    """``eq``: the kernel ``X^(x)n ~> X^(n)`` sending a tuple to its multiset."""
    return graph(ctx.tuple_web, ctx.power_web, ctx.multiset_of)


def permutation_kernel(ctx: SymContext, perm: Sequence[int]) -> Kernel:
    """The endo-kernel ``(x_1..x_n) |-> delta(x_perm(1), ..., x_perm(n))``."""
    n = ctx.n

    def act(label):
        xs = ctx.tuple_of(label)
        return tuple_label(tuple(xs[perm[i]] for i in range(n)))

    return graph(ctx.tuple_web, ctx.tuple_web, act)


def _require_into_tuple(ctx: SymContext, kappa: OpView) -> None:
    if kappa.target != ctx.tuple_web:
        raise WebMismatch("expected a morphism into the n-fold tensor power", kappa.target, ctx.tuple_web)


def symmetrise_check(ctx: SymContext, kappa: OpView) -> bool:
    """Whether every permutation of the tensor factors leaves ``kappa`` fixed."""
    _require_into_tuple(ctx, kappa)
    k = kappa.underlying
    for perm in itertools.permutations(range(ctx.n)):
        if compose(k, permutation_kernel(ctx, perm)) != k:
            return False
    return True


def eq_under(ctx: SymContext, kappa: OpView) -> OpView:
    """The unique factor ``eq\\kappa : Y -> X^(n)`` with ``eq o eq\\kappa = kappa``."""
    if not symmetrise_check(ctx, kappa):
        raise NotSymmetric("kernel does not equalise the n! symmetries")
    k = kappa.underlying
    rows = {}
    for m in ctx.power_web:
        r = k.row(tuple_label(m.atoms))
        if r:
            rows[m] = dict(r)
    return OpView(kappa.source, ctx.power_web, Kernel._from_rows(ctx.power_web, k.cod, rows))


def eq_view(ctx: SymContext) -> OpView:
    """``eq : X^(n) -> X^(x)n`` in the opposite category."""
    return OpView.of(eq_kernel(ctx))


def sym_power(kappa: Kernel, n: int) -> Kernel:
    """``kappa^(n) : X^(n) ~> Y^(n)``.

    ``entry[m_X][m_Y] = sum over orderings y of m_Y of prod_i kappa(x_i, y_i)``
    with ``x`` the canonical tuple of ``m_X``.
    """
    check_guard(n)
    X, Y = multiset_web(kappa.dom, n), multiset_web(kappa.cod, n)
    rows = {}
    for mx in X:
        xs = mx.atoms
        row_maps = [kappa.row(x) for x in xs]
        if any(not r for r in row_maps):
            continue
        row = {}
        for my in Y:
            acc = ZERO
            for ys in distinct_permutations(my.atoms):
                term = ONE
                for r, y in zip(row_maps, ys):
                    v = r.get(y)
                    if v is None:
                        term = ZERO
                        break
                    term = term * v
                if not term.is_zero:
                    acc = acc + term
            if not acc.is_zero:
                row[my] = acc
        rows[mx] = row
    return Kernel._from_rows(X, Y, rows)


def sym_power_cosets(kappa: Kernel, n: int) -> Kernel:
    """``kappa^(n)`` summed over the cosets of the stabiliser of each output tuple.

    The cosets are enumerated as the distinct images of the canonical tuple
    under all ``n!`` permutations.
    """
    check_guard(n)
    X, Y = multiset_web(kappa.dom, n), multiset_web(kappa.cod, n)
    perms = list(itertools.permutations(range(n)))
    rows = {}
    for mx in X:
        row = {}
        for my in Y:
            images = {tuple(my.atoms[p[i]] for i in range(n)) for p in perms}
            acc = ZERO
            for ys in images:
                acc = acc + product(kappa(x, y) for x, y in zip(mx.atoms, ys))
            if not acc.is_zero:
                row[my] = acc
        rows[mx] = row
    return Kernel._from_rows(X, Y, rows)


def barycenter_kernel(base: Web, n: int) -> Kernel:
    """``s_n``: the endo-kernel ``(1/n!) sum_sigma delta(sigma(x))`` on ``X^(x)n``."""
    ctx = SymContext(base, n)
    w = ExtRat(Fraction(1, factorial(n)))
    rows = {}
    for label in ctx.tuple_web:
        xs = ctx.tuple_of(label)
        row: dict = {}
        for p in itertools.permutations(range(n)):
            y = tuple_label(tuple(xs[i] for i in p))
            row[y] = row.get(y, ZERO) + w
        rows[label] = row
    return Kernel._from_rows(ctx.tuple_web, ctx.tuple_web, rows)


def barycentre(ctx: SymContext, g: OpView) -> OpView:
    """``s_n(g) = s_n o g``; the average of all permuted copies of ``g``."""
    _require_into_tuple(ctx, g)
    return op_compose(OpView.of(barycenter_kernel(ctx.base, ctx.n)), g)


def rooted_kernel(kappa: Kernel) -> Kernel:
    """``kappa & Id_I`` on rooted webs: ``kappa`` on tagged atoms, ``1`` from root to root."""
    rows = {}
    for x in kappa.dom:
        r = kappa.row(x)
        rows[Tagged(1, x)] = {Tagged(1, y): v for y, v in r.items()}
    rows[ROOT] = {ROOT: ONE}
    return Kernel._from_rows(rooted_web(kappa.dom), rooted_web(kappa.cod), rows)


def rooted_point(f: Kernel) -> Kernel:
    """``f-bar = f & Id_I`` for a measurable function ``f`` (value 1 at the root)."""
    if not is_function(f):
        raise WebMismatch("rooted_point expects a measurable function")
    vals = {Tagged(1, x): f(x, "*") for x in f.dom}
    vals[ROOT] = ONE
    return function(rooted_web(f.dom), vals)


def rooted_power_web(base: Web, n: int) -> Web:
    """``<A>^(n) = (A & I)^(n)``."""
    return multiset_web(rooted_web(base), n)


def p_step(base: Web, n: int) -> OpView:
    """``p_{n+1,n} : <A>^(n+1) -> <A>^(n)``, forgetting one root."""
    check_guard(n + 1)
    lo, hi = rooted_power_web(base, n), rooted_power_web(base, n + 1)
    return OpView(hi, lo, graph(lo, hi, lambda m: Multiset(m.atoms + (ROOT,))))


def p_chain(base: Web, n: int, k: int) -> OpView:
    """``p_{n,k} = p_{k+1,k} o ... o p_{n,n-1}``; the identity when ``k == n``."""
    if k > n:
        raise ValueError(f"p_chain needs k <= n, got k={k}, n={n}")
    check_guard(n)
    acc = OpView.identity(rooted_power_web(base, n))
    for j in range(n - 1, k - 1, -1):
        acc = op_compose(p_step(base, j), acc)
    return acc


def gen_power(base: Web, fs: Sequence[Kernel]) -> OpView:
    """``<f>^(n) = eq\\ s_n(f1-bar x ... x fn-bar) : I -> <A>^(n)``."""
    n = len(fs)
    for f in fs:
        if f.dom != base or not is_function(f):
            raise WebMismatch("gen_power expects functions on the base web")
    ctx = SymContext(rooted_web(base), n)
    g = tensor_points(ctx.base, [rooted_point(f) for f in fs])
    return eq_under(ctx, barycentre(ctx, OpView.of(g)))


def tensor_points(base: Web, fs: Sequence[Kernel]) -> Kernel:
    """``f1 x ... x fn`` as a function on the tuple web ``base^(x)n``."""
    for f in fs:
        if f.dom != base or not is_function(f):
            raise WebMismatch("tensor_points expects functions on the base web")
    w = tuple_web(base, len(fs))
    if not fs:
        return function(w, {"*": ONE})
    # tensor_all nests pairs to the left, exactly like tuple labels;
    # only the codomain (an n-fold product of unit webs) needs collapsing
    t = tensor_all(fs)
    return function(w, {x: v for (x, _), v in t.items()})


def injections(k: int, n: int):
    """All injective maps ``[k] -> [n]`` as tuples of images."""
    return itertools.permutations(range(n), k)

"""The truncated free exponential ``!A``.

Every construction here takes an explicit ``depth`` and is exact for all
grades ``<= depth``; grades above the depth are simply absent.

Two descriptions of the exponential on morphisms live side by side:
:func:`bang_kernel` (grade blocks of symmetric powers of a kernel) and
:func:`pcoh_bang_mor` (the multiset-matrix formula on ``M_fin``). A matrix
``t`` with rows indexed by the source web is, as a kernel of the opposite
category, its transpose, so the two agree as
``pcoh_bang_mor(t) == bang_kernel(t.transpose()).transpose()``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, perm
from typing import Sequence

from .kernel import (
    Kernel,
    OpView,
    WebMismatch,
    compose,
    dirac,
    function,
    graph,
    is_function,
    is_measure,
    measure,
    tensor,
)
from .numeric import ONE, ZERO, ExtRat, product
from .space import (
    ROOT,
    Graded,
    Multiset,
    Pair,
    Tagged,
    Web,
    bang_web,
    distinct_permutations,
    multiset_web,
    product_web,
    strip_roots,
)
from .sym import check_guard, rooted_power_web, sym_power


@dataclass(frozen=True)
class BangContext:
    base: Web
    depth: int
    web: Web = field(init=False, repr=False)
    grade_webs: tuple = field(init=False, repr=False)

    def __post_init__(self):
        check_guard(self.depth)
        object.__setattr__(self, "web", bang_web(self.base, self.depth))
        object.__setattr__(
            self, "grade_webs", tuple(multiset_web(self.base, k) for k in range(self.depth + 1))
        )


def G(m: Multiset) -> Graded:
    """``G_{n,inf}``: a rooted multiset to its graded point, dropping roots."""
    core = strip_roots(m)
    return Graded(core.size, core)


def p_inf(ctx: BangContext, n: int) -> OpView:
    """``p_{inf,n} : !A -> <A>^(n)``, stored as the graph of :func:`G`."""
    if n > ctx.depth:
        raise ValueError(f"grade {n} is above the truncation depth {ctx.depth}")
    return OpView(ctx.web, rooted_power_web(ctx.base, n), graph(rooted_power_web(ctx.base, n), ctx.web, G))


def bang_kernel(kappa: Kernel, depth: int) -> Kernel:
    """``!kappa : !X ~> !Y``; block ``k`` on the diagonal is ``kappa^(k)``."""
    check_guard(depth)
    rows = {}
    for k in range(depth + 1):
        block = sym_power(kappa, k)
        for (mx, my), v in block.items():
            rows.setdefault(Graded(k, mx), {})[Graded(k, my)] = v
    return Kernel._from_rows(bang_web(kappa.dom, depth), bang_web(kappa.cod, depth), rows)


def promote(g: Kernel, depth: int) -> Kernel:
    """``&_k g^(k)``: the function ``(n, x1..xn) |-> prod_i g(x_i)`` on ``!A``."""
    if not is_function(g):
        raise WebMismatch("promote expects a measurable function")
    check_guard(depth)
    vals = {}
    for lab in bang_web(g.dom, depth):
        vals[lab] = product(g(x, "*") for x in lab.mset.atoms)
    return function(bang_web(g.dom, depth), vals)


def avg_promote(fs: Sequence[Kernel], depth: int) -> Kernel:
    """The function ``<<f>>_n`` on ``!A`` for ``n = len(fs)``.

    At ``(k, a1..ak)`` with ``k <= n`` it is
    ``n^-k * sum over injections i:[k]->[n] of prod_j f_{i(j)}(a_j)``;
    above grade ``n`` it vanishes.
    """
    n = len(fs)
    if n == 0:
        raise ValueError("avg_promote needs at least one function")
    base = fs[0].dom
    for f in fs:
        if f.dom != base or not is_function(f):
            raise WebMismatch("avg_promote expects functions on one web")
    check_guard(depth)
    vals = {}
    for lab in bang_web(base, depth):
        k = lab.grade
        if k > n:
            continue
        acc = ZERO
        for inj in itertools.permutations(range(n), k):
            acc = acc + product(fs[i](a, "*") for i, a in zip(inj, lab.mset.atoms))
        vals[lab] = acc * ExtRat(Fraction(1, n ** k))
    return function(bang_web(base, depth), vals)


def truncate(f: Kernel, n: int) -> Kernel:
    """Zero out every grade above ``n`` of a function on ``!A`` or ``!A x B``."""

    def grade(label):
        return (label.left if isinstance(label, Pair) else label).grade

    return function(f.dom, {x: v for (x, _), v in f.items() if grade(x) <= n})


def nu_restrict(nu: Kernel, ctx: BangContext, b: Web, n: int) -> Kernel:
    """``nu_n`` on ``<A>^(n) x B``: ``nu_n[(m, y)] = nu[(G(m), y)]``.

    Mass of ``nu`` at grades above ``n`` lies outside the image of ``G`` and
    is dropped.
    """
    if n > ctx.depth:
        raise ValueError(f"grade {n} is above the truncation depth {ctx.depth}")
    expected = product_web(ctx.web, b)
    if not is_measure(nu) or nu.cod != expected:
        raise WebMismatch("nu_restrict expects a measure on !A x B", nu.cod, expected)
    target = product_web(rooted_power_web(ctx.base, n), b)
    return measure(target, {Pair(m, y): nu("*", Pair(G(m), y)) for m in rooted_power_web(ctx.base, n) for y in b})


def pushforward_restriction(nu_n: Kernel, ctx: BangContext, b: Web, n: int) -> Kernel:
    """``nu_n o (p_{inf,n} x B)``, i.e. ``nu_n`` pushed forward along ``G x B``."""
    return compose(tensor(p_inf(ctx, n).underlying, dirac(b)), nu_n)


# multiset-matrix form of the exponential


def multiset_factorial(m: Multiset) -> int:
    out = 1
    for _, k in m.entries:
        out *= factorial(k)
    return out


def matchings(mu: Multiset, nu: Multiset) -> list:
    """``L(mu, nu)``: matrices ``r`` on ``I x J`` with row sums ``mu`` and column sums ``nu``.

    Each matching is a tuple of ``((i, j), r_ij)`` with ``r_ij > 0``, built by
    distributing the copies of each ``i`` over the columns in canonical order.
    """
    if mu.size != nu.size:
        return []
    rows = mu.entries
    cols = nu.entries
    out = []
    remaining = [k for _, k in cols]

    def fill_row(ri, cj, left, acc):
        if cj == len(cols):
            if left == 0:
                yield from fill(ri + 1, acc)
            return
        for take in range(min(left, remaining[cj]), -1, -1):
            remaining[cj] -= take
            nxt = acc + (((rows[ri][0], cols[cj][0]), take),) if take else acc
            yield from fill_row(ri, cj + 1, left - take, nxt)
            remaining[cj] += take

    def fill(ri, acc):
        if ri == len(rows):
            if all(r == 0 for r in remaining):
                yield acc
            return
        yield from fill_row(ri, 0, rows[ri][1], acc)

    out.extend(fill(0, ()))
    return out


def bangt_matching_form(t: Kernel, mu: Multiset, nu: Multiset) -> ExtRat:
    """``sum_{rho in L(mu, nu)} (nu!/rho!) t^rho``."""
    acc = ZERO
    nu_fact = multiset_factorial(nu)
    for rho in matchings(mu, nu):
        rho_fact = 1
        term = ONE
        for (i, j), r in rho:
            rho_fact *= factorial(r)
            term = term * (t(i, j) ** r)
            if term.is_zero:
                break
        if not term.is_zero:
            acc = acc + term * ExtRat(Fraction(nu_fact, rho_fact))
    return acc


def bangt_coset_form(t: Kernel, mu: Multiset, nu: Multiset) -> ExtRat:
    """``sum over sigma in S_n / S_mu of prod_i t(mu_sigma(i), nu_i)``.

    The cosets are the distinct reorderings of the canonical tuple of ``mu``.
    """
    if mu.size != nu.size:
        return ZERO
    acc = ZERO
    for bs in distinct_permutations(mu.atoms):
        term = ONE
        for b, a in zip(bs, nu.atoms):
            term = term * t(b, a)
            if term.is_zero:
                break
        acc = acc + term
    return acc


class FormMismatch(AssertionError):
    """The two expressions of the exponential on morphisms disagree."""


def pcoh_bang_mor(t: Kernel, depth: int, check: bool = True) -> Kernel:
    """``!t`` for a matrix ``t`` with rows indexed by its source web.

    Multisets ``[x1..xn]`` are identified with graded points ``(n, x1..xn)``;
    entries across different grades are zero. With ``check`` set, both forms
    are evaluated and must agree.
    """
    check_guard(depth)
    rows = {}
    for k in range(depth + 1):
        for mu in multiset_web(t.dom, k):
            row = {}
            for nu in multiset_web(t.cod, k):
                v = bangt_matching_form(t, mu, nu)
                if check:
                    w = bangt_coset_form(t, mu, nu)
                    if v != w:
                        raise FormMismatch(f"exponential forms disagree at ({mu!r}, {nu!r}): {v} != {w}")
                if not v.is_zero:
                    row[Graded(k, nu)] = v
            rows[Graded(k, mu)] = row
    return Kernel._from_rows(bang_web(t.dom, depth), bang_web(t.cod, depth), rows)


def pcoh_bang_obj(u: Kernel, depth: int) -> Kernel:
    """``u^!([a1..an]) = prod_i u(a_i)``, on the graded web."""
    return promote(u, depth)


def discretisation_agrees(t: Kernel, depth: int) -> bool:
    """Whether ``!t`` computed on multisets equals the transposed kernel exponential."""
    return pcoh_bang_mor(t, depth) == bang_kernel(t.transpose(), depth).transpose()


def coefficient(n: int, m: int) -> Fraction:
    """``n! / (n^m (n-m)!)``, the ratio between ``<<f>>_n`` and ``p_{n,m} o <f>^(n)``."""
    if m > n:
        raise ValueError("coefficient needs m <= n")
    return Fraction(perm(n, m), n ** m)


def root_padding(m: Multiset, n: int) -> Multiset:
    """The rooted multiset ``(1,a1)..(1,ak)(2,*)^(n-k)`` mapped to ``(k, m)`` by :func:`G`."""
    if m.size > n:
        raise ValueError("multiset larger than the grade")
    return Multiset(tuple(Tagged(1, a) for a in m.atoms) + (ROOT,) * (n - m.size))

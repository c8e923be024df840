"""Seeded property suites.

Each suite takes a seed and a size (``count``) and returns a list of
:class:`Outcome`, one per property. Randomness comes only from a
``random.Random(seed)`` owned by the suite, so a report is reproducible
from its seed.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from . import generate as gen
from .bang import (
    BangContext,
    avg_promote,
    bang_kernel,
    bangt_coset_form,
    bangt_matching_form,
    coefficient,
    discretisation_agrees,
    nu_restrict,
    p_inf,
    promote,
    pushforward_restriction,
    truncate,
)
from .kernel import (
    Kernel,
    OpView,
    compose,
    copair,
    function,
    inner,
    injection,
    op_compose,
    pair,
    projection,
)
from .numeric import ONE, ZERO, ExtRat, product
from .ortho import (
    OrthObject,
    PointVec,
    bang_sources,
    bipolar_check,
    in_bipolar,
    in_polar,
    obj_bang,
    obj_tensor,
    obj_with,
    pairing,
    probes,
    push_point,
    reciprocity_instance,
    vec_tensor,
    vec_with,
)
from .space import (
    ROOT,
    Multiset,
    Web,
    label_tuple,
    multiset_web,
    sum_web,
    tuple_label,
    web,
)
from .sym import (
    NotSymmetric,
    SymContext,
    barycentre,
    eq_kernel,
    eq_under,
    eq_view,
    gen_power,
    injections,
    p_chain,
    p_step,
    rooted_kernel,
    sym_power,
    sym_power_cosets,
)


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    detail: str = ""


class _Prop:
    """Counts checked instances of one property and keeps the first failure."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.failure: Optional[str] = None

    def record(self, ok: bool, info: Callable[[], str] | str = "") -> bool:
        self.count += 1
        if not ok and self.failure is None:
            self.failure = info() if callable(info) else info
        return ok

    def outcome(self) -> Outcome:
        if self.failure is not None:
            return Outcome(self.name, False, f"first failure: {self.failure}")
        if self.count == 0:
            return Outcome(self.name, False, "no instances were checked")
        return Outcome(self.name, True, f"{self.count} checks")


# 1. reciprocity


def _pairing_oracle(f: Kernel, kappa: Kernel, mu: Kernel) -> ExtRat:
    """``sum_x sum_y mu(x) kappa(x, y) f(y)``, summed in the naive order."""
    acc = ZERO
    for x in kappa.dom:
        for y in kappa.cod:
            acc = acc + mu("*", x) * kappa(x, y) * f(y, "*")
    return acc


def suite_reciprocity(seed: int, count: int = 1000) -> list:
    rng = random.Random(seed)
    equal = _Prop("reciprocity: <f | k o mu> = <f o k | mu>")
    oracle = _Prop("reciprocity: both sides match the naive double sum")
    finite = _Prop("reciprocity: infinite entries against zero mass stay finite")
    for _ in range(count):
        X = gen.base_web(rng, 4, prefix="x")
        Y = gen.base_web(rng, 4, prefix="y")
        inf_rows = [x for x in X if rng.random() < 0.3]
        k = gen.kernel(rng, X, Y, inf_rows=inf_rows, inf_prob=0.5)
        mu = gen.rand_measure(rng, X, zeros=inf_rows)
        f = gen.rand_function(rng, Y)
        lhs, rhs = reciprocity_instance(f, k, mu)
        equal.record(lhs == rhs, lambda: f"{lhs} != {rhs} for {k!r}")
        ref = _pairing_oracle(f, k, mu)
        oracle.record(lhs == ref, lambda: f"{lhs} != {ref} for {k!r}")
        if any(not v.is_finite for _, v in k.items()):
            finite.record(lhs.is_finite and rhs.is_finite, lambda: f"infinite pairing for {k!r}")
    return [equal.outcome(), oracle.outcome(), finite.outcome()]


# 2. the two forms of the exponential on multiset matrices


def suite_bangt_forms(seed: int, count: int = 200, max_atoms: int = 3, max_size: int = 4) -> list:
    rng = random.Random(seed)
    prop = _Prop("exponential: matching form = coset form")
    for _ in range(count):
        I = gen.base_web(rng, max_atoms, prefix="i")
        J = gen.base_web(rng, max_atoms, prefix="j")
        t = gen.kernel(rng, I, J)
        for k in range(max_size + 1):
            for mu in multiset_web(I, k):
                for nu in multiset_web(J, k):
                    a, b = bangt_matching_form(t, mu, nu), bangt_coset_form(t, mu, nu)
                    prop.record(a == b, lambda: f"{a} != {b} at ({mu!r}, {nu!r}) for {t!r}")
    return [prop.outcome()]


# 3. discretisation


def suite_discretisation(seed: int, count: int = 100, max_atoms: int = 3, depth: int = 3) -> list:
    rng = random.Random(seed)
    prop = _Prop("discretisation: multiset exponential = transposed kernel exponential")
    for _ in range(count):
        I = gen.base_web(rng, max_atoms, prefix="i")
        J = gen.base_web(rng, max_atoms, prefix="j")
        t = gen.kernel(rng, I, J)
        prop.record(discretisation_agrees(t, depth), lambda: f"disagreement for {t!r}")
    return [prop.outcome()]


# 4. equaliser


def _is_symmetric(ctx: SymContext, k: Kernel) -> bool:
    """Direct check that every row of ``k`` is invariant under reordering the tuple."""
    for label in ctx.tuple_web:
        xs = label_tuple(label, ctx.n)
        row = dict(k.row(label))
        for p in itertools.permutations(range(ctx.n)):
            if dict(k.row(tuple_label(tuple(xs[i] for i in p)))) != row:
                return False
    return True


def _sym_power_oracle(kappa: Kernel, n: int) -> Kernel:
    """``kappa^(n)`` by summing over every output tuple and grouping by multiset."""
    X, Y = multiset_web(kappa.dom, n), multiset_web(kappa.cod, n)
    entries: dict = {}
    for mx in X:
        for ys in itertools.product(kappa.cod.atoms, repeat=n):
            my = Multiset.of(kappa.cod, ys)
            v = product(kappa(x, y) for x, y in zip(mx.atoms, ys))
            entries[(mx, my)] = entries.get((mx, my), ZERO) + v
    return Kernel(X, Y, entries)


def suite_equaliser(seed: int, count: int = 40) -> list:
    rng = random.Random(seed)
    factor = _Prop("equaliser: eq o eq_under(k) = k for symmetric k")
    unique = _Prop("equaliser: the factor through eq is the generating kernel")
    bary = _Prop("equaliser: barycentres are symmetric and factor through eq")
    reject = _Prop("equaliser: eq_under rejects exactly the non-symmetric kernels")
    powers = _Prop("symmetric power: fiber sum = coset sum = brute force")
    rejected = 0
    for i in range(count):
        n = i % 4
        X = gen.base_web(rng, 3, prefix="x")
        Y = gen.base_web(rng, 2, prefix="y")
        ctx = SymContext(X, n)
        eqk = eq_kernel(ctx)

        h = gen.kernel(rng, ctx.power_web, Y)
        kappa = OpView.of(compose(h, eqk))
        f = eq_under(ctx, kappa)
        from_eq = op_compose(eq_view(ctx), f)
        factor.record(from_eq == kappa, lambda: f"n={n}, h={h!r}")
        unique.record(f.underlying == h, lambda: f"n={n}, h={h!r}")

        g = gen.kernel(rng, ctx.tuple_web, Y)
        s = barycentre(ctx, OpView.of(g))
        ok = _is_symmetric(ctx, s.underlying)
        if ok:
            ok = op_compose(eq_view(ctx), eq_under(ctx, s)) == s
        bary.record(ok, lambda: f"n={n}, g={g!r}")

        symmetric = _is_symmetric(ctx, g)
        try:
            eq_under(ctx, OpView.of(g))
            accepted = True
        except NotSymmetric:
            accepted = False
            rejected += 1
        reject.record(accepted == symmetric, lambda: f"n={n}, symmetric={symmetric}, g={g!r}")

        kap = gen.kernel(rng, X, gen.base_web(rng, 3, prefix="y"))
        fib, cos, ref = sym_power(kap, n), sym_power_cosets(kap, n), _sym_power_oracle(kap, n)
        powers.record(fib == cos == ref, lambda: f"n={n}, kappa={kap!r}")
    out = [factor.outcome(), unique.outcome(), bary.outcome(), reject.outcome(), powers.outcome()]
    if rejected == 0:
        out.append(Outcome("equaliser: some non-symmetric kernel was generated", False, "none generated"))
    return out


# 5. naturality


def suite_naturality(seed: int, count: int = 12, max_atoms: int = 3, max_n: int = 3) -> list:
    rng = random.Random(seed)
    square = _Prop("naturality: p_step commutes with rooted symmetric powers")
    cone = _Prop("naturality: p_inf commutes with the exponential")
    for _ in range(count):
        A = gen.base_web(rng, max_atoms, prefix="a")
        B = gen.base_web(rng, max_atoms, prefix="b")
        f = gen.kernel(rng, A, B)
        fr = rooted_kernel(f)
        bf = bang_kernel(f, max_n)
        cA, cB = BangContext(A, max_n), BangContext(B, max_n)
        for n in range(max_n + 1):
            lhs = compose(sym_power(fr, n + 1), p_step(A, n).underlying)
            rhs = compose(p_step(B, n).underlying, sym_power(fr, n))
            square.record(lhs == rhs, lambda: f"n={n}, f={f!r}")
            lhs = compose(bf, p_inf(cA, n).underlying)
            rhs = compose(p_inf(cB, n).underlying, sym_power(fr, n))
            cone.record(lhs == rhs, lambda: f"n={n}, f={f!r}")
    return [square.outcome(), cone.outcome()]


# 6. the projection chain applied to generalised powers


def _pnk_oracle(fs: list, m: Multiset, n: int) -> ExtRat:
    """``(n-k)!/n! * sum over injections i:[k]->[n] of prod_j fbar_{i(j)}(x_j)``."""
    xs = m.atoms
    k = len(xs)

    def fbar(f, x):
        return ONE if x == ROOT else f(x.label, "*")

    acc = ZERO
    for inj in injections(k, n):
        acc = acc + product(fbar(fs[i], x) for i, x in zip(inj, xs))
    return acc * ExtRat(Fraction(factorial(n - k), factorial(n)))


def suite_pnk(seed: int, count: int = 3, max_atoms: int = 2, max_n: int = 4) -> list:
    rng = random.Random(seed)
    prop = _Prop("projection chain: p_{n,k} o <f>^(n) matches the injection sum")
    for n in range(max_n + 1):
        for _ in range(count):
            A = gen.base_web(rng, max_atoms, prefix="a")
            fs = [gen.rand_function(rng, A) for _ in range(n)]
            g = gen_power(A, fs)
            for k in range(n + 1):
                lhs = compose(g.underlying, p_chain(A, n, k).underlying)
                for m in lhs.dom:
                    got, want = lhs(m, "*"), _pnk_oracle(fs, m, n)
                    prop.record(got == want, lambda: f"n={n}, k={k}, m={m!r}: {got} != {want}")
    return [prop.outcome()]


# 7. averaged promotions


def suite_dbra(seed: int, count: int = 100, max_atoms: int = 2, max_n: int = 4) -> list:
    rng = random.Random(seed)
    top = _Prop("averaged promotion: p_inf o <<f>>_n = n!/n^n <f>^(n) on root-free points")
    every = _Prop("averaged promotion: p_inf o <<f>>_n = n!/(n^k (n-k)!) <f>^(n) at k non-root atoms")
    below = _Prop("averaged promotion: <<f>>_n <= promote of the mean")
    mono = _Prop("coefficient n!/(n^m (n-m)!) increases toward 1")
    for n in range(1, max_n + 1):
        for _ in range(3):
            A = gen.base_web(rng, max_atoms, prefix="a")
            fs = [gen.rand_function(rng, A) for _ in range(n)]
            ctx = BangContext(A, n)
            lhs = compose(avg_promote(fs, n), p_inf(ctx, n).underlying)
            rhs = gen_power(A, fs).underlying
            for m in lhs.dom:
                k = sum(1 for x in m.atoms if x != ROOT)
                got = lhs(m, "*")
                want = rhs(m, "*") * ExtRat(coefficient(n, k))
                every.record(got == want, lambda: f"n={n}, m={m!r}: {got} != {want}")
                if k == n:
                    c = ExtRat(Fraction(factorial(n), n ** n))
                    top.record(got == c * rhs(m, "*"), lambda: f"n={n}, m={m!r}")
    for _ in range(count):
        A = gen.base_web(rng, max_atoms, prefix="a")
        n = rng.randint(1, max_n)
        fs = [gen.rand_function(rng, A) for _ in range(n)]
        mean = function(A, [sum((f(x, "*").fraction for f in fs), Fraction(0)) / n for x in A])
        lo, hi = avg_promote(fs, 3), promote(mean, 3)
        below.record(lo.leq(hi), lambda: f"fs={fs!r}")
    for m in range(1, 4):
        prev = Fraction(0)
        for n in range(m, 301):
            c = coefficient(n, m)
            # prod (1 - i/n) >= 1 - sum i/n
            ok = prev <= c <= 1 and 1 - c <= Fraction(m * (m - 1), 2 * n)
            mono.record(ok, lambda: f"m={m}, n={n}: {c}")
            prev = c
    return [top.outcome(), every.outcome(), below.outcome(), mono.outcome()]


# 8. bipolar engine


def _candidates(rng: random.Random, us: list, w: Web, count: int) -> list:
    """Copoints: random, scaled indicators, and measures tight at the generators."""
    out = []
    while len(out) < count:
        kind = len(out) % 3
        if kind == 0:
            y = gen.point(rng, w, max_value=2)
        elif kind == 1:
            i = rng.randrange(len(w))
            c = gen.rat(rng, max_value=3, zero_prob=0)
            y = PointVec(w, tuple(c if j == i else Fraction(0) for j in range(len(w))))
        else:
            y = gen.scale_to_boundary(us, gen.nonzero_point(rng, w)) if us else None
            if y is None:
                y = gen.point(rng, w)
        out.append(y)
    return out


def _hand_examples() -> list:
    one = web("a")
    two = web("a", "b")
    p = lambda w, *vs: PointVec(w, tuple(Fraction(v) for v in vs))  # noqa: E731
    checks = []
    u1 = [p(one, 1)]
    checks.append(("{(1)} contains 1/2", in_bipolar(u1, p(one, Fraction(1, 2)))))
    checks.append(("{(1)} rejects 2", not in_bipolar(u1, p(one, 2))))
    u2 = [p(two, 1, 0), p(two, 0, 1)]
    checks.append(("basis contains (1/2, 1/2)", in_bipolar(u2, p(two, Fraction(1, 2), Fraction(1, 2)))))
    v = bipolar_check(u2, p(two, Fraction(3, 4), Fraction(1, 2)))
    checks.append(
        (
            "basis rejects (3/4, 1/2) with witness (1, 1)",
            not v.member and v.sup == Fraction(5, 4) and v.witness == p(two, 1, 1),
        )
    )
    checks.append(("empty set: zero is a member", in_bipolar([], p(two, 0, 0))))
    checks.append(("empty set: nothing else is", not in_bipolar([], p(two, Fraction(1, 7), 0))))
    return checks


def suite_bipolar(seed: int, count: int = 20, candidates: int = 50) -> list:
    rng = random.Random(seed)
    hand = _Prop("bipolar: hand-derived examples")
    for name, ok in _hand_examples():
        hand.record(ok, name)
    contains = _Prop("bipolar: U is contained in its bipolar")
    triple = _Prop("bipolar: polar = triple polar on sampled copoints")
    certs = _Prop("bipolar: rejection witnesses separate")
    for _ in range(count):
        w = gen.base_web(rng, 3, prefix="a")
        us = list(gen.orth_object(rng, w, max_gens=3).generators)
        for u in us:
            contains.record(in_bipolar(us, u), lambda: f"{u!r} not in bipolar of {us!r}")
        inner_pts = [x for x in probes(us) if in_bipolar(us, x)]
        for y in _candidates(rng, us, w, candidates):
            a = in_polar(us, y)
            b = all(pairing(x, y) <= 1 for x in inner_pts)
            triple.record(a == b, lambda: f"y={y!r}, U={us!r}")
            x = y  # reuse the candidate as a point as well
            v = bipolar_check(us, x)
            if not v.member:
                ok = in_polar(us, v.witness) and pairing(x, v.witness) > 1
                certs.record(ok, lambda: f"x={x!r}, U={us!r}")
    return [hand.outcome(), contains.outcome(), triple.outcome(), certs.outcome()]


# 9. lemmas on small instances


def _scaled(rng: random.Random, x: PointVec) -> PointVec:
    return PointVec(x.web, tuple(v * gen.rat(rng, max_value=1, zero_prob=0.2) for v in x.values))


def _convex(rng: random.Random, us: list) -> PointVec:
    weights = [Fraction(rng.randint(0, 4)) for _ in us]
    if not any(weights):
        weights[0] = Fraction(1)
    total = sum(weights)
    acc = PointVec.zero(us[0].web)
    for wgt, u in zip(weights, us):
        acc = acc + u.scale(wgt / total)
    return acc


def suite_lemmas(seed: int, count: int = 50, samples: int = 6) -> list:
    rng = random.Random(seed)
    stable = _Prop("stable tensor: polar of bipolars' tensor = polar of generators' tensor")
    ccrc = _Prop("image lemma: f maps the bipolar of U into the bipolar of f(U)")
    down = _Prop("downward closure of bipolars")
    prod = _Prop("with: bipolar of pairings = product of bipolars")
    eqp = _Prop("equaliser preserves bipolars of symmetric families")
    for _ in range(count):
        A = gen.base_web(rng, 2, prefix="a")
        B = gen.base_web(rng, 2, prefix="b")
        U = list(gen.orth_object(rng, A).generators)
        V = list(gen.orth_object(rng, B).generators)

        # stable tensor
        T = obj_tensor(OrthObject(A, tuple(U)), OrthObject(B, tuple(V)))
        pu = [x for x in probes(U) if in_bipolar(U, x)]
        pv = [x for x in probes(V) if in_bipolar(V, x)]
        for y in _candidates(rng, list(T.generators), T.web, samples):
            a = in_polar(T.generators, y)
            b = all(pairing(vec_tensor(x, z), y) <= 1 for x in pu for z in pv)
            stable.record(a == b, lambda: f"y={y!r}")

        # image of a bipolar
        fk = gen.kernel(rng, B, A, max_den=6)
        f = OpView.of(fk)
        fU = [push_point(f, u) for u in U]
        for x in pu + [_convex(rng, U) for _ in range(samples)]:
            fx = push_point(f, x)
            ccrc.record(in_bipolar(fU, fx), lambda: f"x={x!r}, f={fk!r}")

        # downward closure
        for _ in range(samples):
            xp = _convex(rng, U) if rng.random() < 0.5 else gen.point(rng, A, max_value=2)
            x = _scaled(rng, xp)
            if in_bipolar(U, xp):
                down.record(in_bipolar(U, x), lambda: f"x={x!r} below {xp!r}")

        # with
        W = obj_with(OrthObject(A, tuple(U)), OrthObject(B, tuple(V)))
        for _ in range(samples):
            x = gen.point(rng, A, max_value=1)
            z = gen.point(rng, B, max_value=1)
            w = vec_with([x, z])
            ok = in_bipolar(W.generators, w) == (in_bipolar(U, x) and in_bipolar(V, z))
            prod.record(ok, lambda: f"x={x!r}, z={z!r}")

        # equaliser on a symmetric family, n = 2
        ctx = SymContext(A, 2)
        fam = []
        for _ in range(rng.randint(1, 3)):
            g = gen.nonzero_point(rng, ctx.tuple_web)
            fam.append(_symmetrise(ctx, g))
        under = [_eq_point(ctx, g) for g in fam]
        for _ in range(samples):
            x = _symmetrise(ctx, gen.point(rng, ctx.tuple_web, max_value=1))
            lhs = in_bipolar(fam, x)
            rhs = in_bipolar(under, _eq_point(ctx, x))
            eqp.record(lhs == rhs, lambda: f"x={x!r}")
    return [stable.outcome(), ccrc.outcome(), down.outcome(), prod.outcome(), eqp.outcome()]


def _symmetrise(ctx: SymContext, g: PointVec) -> PointVec:
    return PointVec.from_kernel(barycentre(ctx, OpView.of(g.as_function())).underlying)


def _eq_point(ctx: SymContext, g: PointVec) -> PointVec:
    return PointVec.from_kernel(eq_under(ctx, OpView.of(g.as_function())).underlying)


# 10. measures on the exponential and their restrictions


def suite_conhold(seed: int, count: int = 20, samples: int = 4, depth: int = 3, gen_bound: int = 2) -> list:
    rng = random.Random(seed)
    polar = _Prop("restriction: each nu_n is orthogonal to the grade-n generators")
    averaged = _Prop("restriction: each nu_n is orthogonal to averaged grade-n generators")
    equal = _Prop("approximation: equality for functions supported on grades <= n")
    bound = _Prop("approximation: restricted pairing is below the full pairing")
    mono = _Prop("approximation: restricted pairing is non-decreasing in n")
    exact = _Prop("approximation: restricted pairing is exact at the truncation depth")
    for _ in range(count):
        A = gen.base_web(rng, 2, prefix="a")
        B = gen.base_web(rng, 2, prefix="b")
        objA = gen.orth_object(rng, A)
        objB = gen.orth_object(rng, B, max_gens=2)
        bangA = obj_bang(objA, depth, gen_bound)
        T = obj_tensor(bangA, objB)
        ctx = BangContext(A, depth)
        sources = bang_sources(objA, gen_bound)
        for _ in range(samples):
            y = gen.scale_to_boundary(list(T.generators), gen.nonzero_point(rng, T.web))
            if y is None:
                continue
            nu = y.as_measure()
            f = gen.rand_function(rng, T.web)
            full = inner(f, nu)
            prev = None
            for n in range(depth + 1):
                nu_n = nu_restrict(nu, ctx, B, n)
                P = p_inf(ctx, n).underlying
                gens_n = []
                for g in sources:
                    pulled = PointVec.from_kernel(compose(promote(g.as_function(), depth), P))
                    gens_n += [vec_tensor(pulled, v) for v in objB.generators]
                nvec = PointVec.from_kernel(nu_n)
                polar.record(in_polar(gens_n, nvec), lambda: f"n={n}, nu={y!r}")
                if 1 <= n <= gen_bound:
                    for fs in itertools.combinations_with_replacement(objA.generators, n):
                        a = compose(avg_promote([u.as_function() for u in fs], depth), P)
                        gs = [vec_tensor(PointVec.from_kernel(a), v) for v in objB.generators]
                        averaged.record(in_polar(gs, nvec), lambda: f"n={n}, nu={y!r}")

                push = pushforward_restriction(nu_n, ctx, B, n)
                fn = truncate(f, n)
                equal.record(inner(fn, nu) == inner(fn, push), lambda: f"n={n}, nu={y!r}")
                val = inner(f, push)
                bound.record(val <= full, lambda: f"n={n}: {val} > {full}")
                if prev is not None:
                    mono.record(prev <= val, lambda: f"n={n}: {prev} > {val}")
                prev = val
            exact.record(prev == full, lambda: f"{prev} != {full}")
    return [polar.outcome(), averaged.outcome(), equal.outcome(), bound.outcome(), mono.outcome(), exact.outcome()]


# 11. generator families of the exponential object


def suite_charlim(seed: int, count: int = 15, samples: int = 4) -> list:
    rng = random.Random(seed)
    literal = _Prop("generators: promoted averages are promotions of members")
    avg_in = _Prop("generators: averaged promotions lie in the promoted-member bipolar")
    prom_in = _Prop("generators: promotions of members lie in the promoted-average bipolar")
    for _ in range(count):
        A = gen.base_web(rng, 2, prefix="a")
        objA = gen.orth_object(rng, A)
        depth = rng.randint(1, 3)
        gen_bound = rng.randint(2, 4)
        ii = obj_bang(objA, depth, gen_bound).generators
        ii_set = {g.values for g in ii}

        # (iii): promotions of sampled members of the bipolar of A
        members = bang_sources(objA, 4) + probes(list(objA.generators))
        members = [g for g in members if in_bipolar(objA.generators, g)]
        iii = [PointVec.from_kernel(promote(g.as_function(), depth)) for g in members]
        iii_set = {g.values for g in iii}
        for g in bang_sources(objA, gen_bound):
            p = PointVec.from_kernel(promote(g.as_function(), depth))
            ok = in_bipolar(objA.generators, g) and p.values in ii_set and p.values in iii_set
            literal.record(ok, lambda: f"source {g!r}")

        for n in range(1, 5):
            for _ in range(samples):
                fs = [rng.choice(objA.generators).as_function() for _ in range(n)]
                a = PointVec.from_kernel(avg_promote(fs, depth))
                avg_in.record(in_bipolar(iii, a), lambda: f"n={n}, fs={fs!r}")

        for g in bang_sources(objA, gen_bound) + probes(list(objA.generators)):
            g = _scaled(rng, g) if rng.random() < 0.5 else g
            p = PointVec.from_kernel(promote(g.as_function(), depth))
            prom_in.record(in_bipolar(ii, p), lambda: f"g={g!r}, gen_bound={gen_bound}")
    return [literal.outcome(), avg_in.outcome(), prom_in.outcome()]


# 12. biproducts


def suite_biproduct(seed: int, count: int = 100) -> list:
    rng = random.Random(seed)
    proj = _Prop("biproduct: proj_i o pair = component_i")
    inj = _Prop("biproduct: copair o inj_i = component_i")
    cross = _Prop("biproduct: proj_i o inj_j is the identity or zero")
    uniq = _Prop("biproduct: pairing the projections recovers the kernel")
    for _ in range(count):
        parts = [gen.base_web(rng, 3, min_atoms=0, prefix=f"p{i}_") for i in range(rng.randint(1, 3))]
        B = gen.base_web(rng, 3, prefix="b")
        gs = [gen.kernel(rng, B, a) for a in parts]
        fs = [gen.kernel(rng, a, B) for a in parts]
        pg, cf = pair(gs), copair(fs)
        for i, a in enumerate(parts):
            proj.record(compose(projection(parts, i), pg) == gs[i], lambda: f"i={i}")
            inj.record(compose(cf, injection(parts, i)) == fs[i], lambda: f"i={i}")
            for j, b in enumerate(parts):
                k = compose(projection(parts, i), injection(parts, j))
                want = Kernel(b, a, {(x, x): 1 for x in a}) if i == j else Kernel(b, a)
                cross.record(k == want, lambda: f"i={i}, j={j}")
        h = gen.kernel(rng, B, sum_web(parts))
        back = pair([compose(projection(parts, i), h) for i in range(len(parts))])
        uniq.record(back == h, lambda: f"h={h!r}")
    return [proj.outcome(), inj.outcome(), cross.outcome(), uniq.outcome()]


SUITES: dict = {
    "reciprocity": suite_reciprocity,
    "bangt-forms": suite_bangt_forms,
    "discretisation": suite_discretisation,
    "equaliser": suite_equaliser,
    "naturality": suite_naturality,
    "pnk": suite_pnk,
    "dbra": suite_dbra,
    "bipolar": suite_bipolar,
    "lemmas": suite_lemmas,
    "conhold": suite_conhold,
    "charlim": suite_charlim,
    "biproduct": suite_biproduct,
}


def run(name: str, seed: int = 0, count: Optional[int] = None) -> list:
    """Run one suite, or every suite for ``"all"``; ``count`` overrides the default size."""
    if name == "all":
        return [o for n in SUITES for o in run(n, seed, count)]
    if name not in SUITES:
        raise KeyError(name)
    fn = SUITES[name]
    return fn(seed) if count is None else fn(seed, count=count)

"""The orthogonality category on finite webs.

A point is a finite nonnegative vector on a web (a measurable function); a
copoint is a measure. They are orthogonal when their pairing is at most 1.
An object is a web with a finite generator list ``U``; it denotes the
bipolar ``U°°``. Membership in ``U°°`` reduces to the LP

    max <x, y>  s.t.  <u, y> <= 1 for u in U,  y >= 0,

since ``x`` lies in ``U°°`` exactly when that maximum is at most 1.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import lp
from .bang import promote
from .kernel import (
    Kernel,
    OpView,
    WebMismatch,
    compose,
    function,
    inner,
    is_function,
    is_measure,
    measure,
)
from .numeric import ExtRat
from .space import Web, product_web, sum_web, unit_web


@dataclass(frozen=True)
class PointVec:
    """A dense finite nonnegative vector indexed by the atoms of ``web``."""

    web: Web
    values: tuple

    def __post_init__(self):
        vals = tuple(_finite(v) for v in self.values)
        if len(vals) != len(self.web):
            raise ValueError(f"expected {len(self.web)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, w: Web) -> "PointVec":
        return cls(w, (Fraction(0),) * len(w))

    @classmethod
    def from_kernel(cls, k: Kernel) -> "PointVec":
        if is_function(k):
            return cls(k.dom, tuple(k(x, "*") for x in k.dom))
        if is_measure(k):
            return cls(k.cod, tuple(k("*", x) for x in k.cod))
        raise WebMismatch("only functions and measures convert to point vectors")

    def as_function(self) -> Kernel:
        return function(self.web, self.values)

    def as_measure(self) -> Kernel:
        return measure(self.web, self.values)

    def __getitem__(self, atom) -> Fraction:
        return self.values[self.web.index[atom]]

    def scale(self, c) -> "PointVec":
        c = Fraction(c)
        return PointVec(self.web, tuple(c * v for v in self.values))

    def __add__(self, other: "PointVec") -> "PointVec":
        _same_web(self.web, other.web)
        return PointVec(self.web, tuple(a + b for a, b in zip(self.values, other.values)))

    def leq(self, other: "PointVec") -> bool:
        _same_web(self.web, other.web)
        return all(a <= b for a, b in zip(self.values, other.values))

    def __repr__(self):
        return "PointVec(" + ", ".join(str(v) for v in self.values) + ")"


def _finite(v) -> Fraction:
    if isinstance(v, ExtRat):
        if not v.is_finite:
            raise ValueError("point vectors must have finite entries")
        return v.fraction
    if isinstance(v, str):
        return _finite(ExtRat(v))
    q = Fraction(v)
    if q < 0:
        raise ValueError("point vectors must be nonnegative")
    return q


def _same_web(a: Web, b: Web) -> None:
    if a != b:
        raise WebMismatch(f"vectors live on different webs: {a!r} != {b!r}", a, b)


def pairing(x: PointVec, y: PointVec) -> Fraction:
    _same_web(x.web, y.web)
    return sum((a * b for a, b in zip(x.values, y.values)), Fraction(0))


def average(vs: Sequence[PointVec]) -> PointVec:
    if not vs:
        raise ValueError("cannot average an empty list")
    acc = vs[0]
    for v in vs[1:]:
        acc = acc + v
    return acc.scale(Fraction(1, len(vs)))


@dataclass(frozen=True)
class OrthObject:
    """A web with a finite generator list, denoting the bipolar of the generators."""

    web: Web
    generators: tuple = ()
    pcoh_valid: Optional[bool] = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        for g in gens:
            _same_web(self.web, g.web)
        object.__setattr__(self, "generators", gens)

    def contains(self, x: PointVec) -> bool:
        return in_bipolar(self.generators, x)


# membership


def in_polar(us: Sequence[PointVec], y: PointVec) -> bool:
    """``y`` is in ``U°``: every generator pairs with ``y`` to at most 1."""
    return all(pairing(u, y) <= 1 for u in us)


@dataclass(frozen=True)
class BipolarVerdict:
    member: bool
    sup: Optional[Fraction]
    """Supremum of ``<x, y>`` over ``y`` in ``U°``; ``None`` when unbounded."""
    witness: Optional[PointVec]
    """For a rejection, a measure ``y`` in ``U°`` with ``<x, y> > 1``."""


def bipolar_check(us: Sequence[PointVec], x: PointVec) -> BipolarVerdict:
    for u in us:
        _same_web(u.web, x.web)
    res = lp.maximize(x.values, [u.values for u in us])
    if isinstance(res, lp.Unbounded):
        ray = PointVec(x.web, res.ray)
        gain = pairing(x, ray)
        witness = ray.scale(Fraction(2) / gain)
        return BipolarVerdict(False, None, witness)
    if res.value <= 1:
        return BipolarVerdict(True, res.value, None)
    return BipolarVerdict(False, res.value, PointVec(x.web, res.witness))


def in_bipolar(us: Sequence[PointVec], x: PointVec) -> bool:
    return bipolar_check(us, x).member


def bipolar_subset(us: Sequence[PointVec], vs: Sequence[PointVec]) -> bool:
    """``U°° ⊆ V°°``, decided generator by generator."""
    return all(in_bipolar(vs, u) for u in us)


def bipolar_equal(us: Sequence[PointVec], vs: Sequence[PointVec]) -> bool:
    return bipolar_subset(us, vs) and bipolar_subset(vs, us)


def pcoh_sup(obj: OrthObject, atom) -> Fraction:
    """``sup {x_a | x in U°°}`` via ``max y_a`` over ``U°``; it is the reciprocal."""
    w = obj.web
    objective = [Fraction(int(a == atom)) for a in w]
    res = lp.maximize(objective, [g.values for g in obj.generators])
    if isinstance(res, lp.Unbounded):
        return Fraction(0)
    return 1 / res.value


def pcoh_check(obj: OrthObject) -> bool:
    """Every atom has a positive finite supremum over the denoted set."""
    return all(pcoh_sup(obj, a) > 0 for a in obj.web)


# object constructors


def obj_unit() -> OrthObject:
    w = unit_web()
    return OrthObject(w, (PointVec(w, (Fraction(1),)),))


def vec_tensor(u: PointVec, v: PointVec) -> PointVec:
    return PointVec(product_web(u.web, v.web), tuple(a * b for a in u.values for b in v.values))


def vec_with(vs: Sequence[PointVec]) -> PointVec:
    return PointVec(sum_web([v.web for v in vs]), tuple(x for v in vs for x in v.values))


def obj_tensor(a: OrthObject, b: OrthObject) -> OrthObject:
    return OrthObject(
        product_web(a.web, b.web),
        tuple(vec_tensor(u, v) for u in a.generators for v in b.generators),
    )


def obj_with(a: OrthObject, b: OrthObject) -> OrthObject:
    return OrthObject(
        sum_web([a.web, b.web]),
        tuple(vec_with([u, v]) for u in a.generators for v in b.generators),
    )


def bang_sources(a: OrthObject, gen_bound: int) -> list:
    """Averages ``(f1 + ... + fn)/n`` of generators, ``1 <= n <= gen_bound``, without repeats."""
    out: list = []
    seen = set()
    for n in range(1, gen_bound + 1):
        for combo in itertools.combinations_with_replacement(a.generators, n):
            g = average(list(combo))
            if g.values not in seen:
                seen.add(g.values)
                out.append(g)
    if not out:
        out.append(PointVec.zero(a.web))
    return out


def obj_bang(a: OrthObject, depth: int, gen_bound: int) -> OrthObject:
    """``!A`` truncated at ``depth``: generators ``promote((f1 + ... + fn)/n)``."""
    if gen_bound < 1:
        raise ValueError("gen_bound must be at least 1")
    gens = []
    seen = set()
    for g in bang_sources(a, gen_bound):
        p = PointVec.from_kernel(promote(g.as_function(), depth))
        if p.values not in seen:
            seen.add(p.values)
            gens.append(p)
    web = gens[0].web
    return OrthObject(web, tuple(gens))


# morphisms


def push_point(f: OpView, u: PointVec) -> Optional[PointVec]:
    """``f o u`` for a point ``u`` of the source; ``None`` if an entry is infinite."""
    if f.source != u.web:
        raise WebMismatch("point does not live on the morphism's source", f.source, u.web)
    k = compose(u.as_function(), f.underlying)
    vals = [k(x, "*") for x in f.target]
    if any(not v.is_finite for v in vals):
        return None
    return PointVec(f.target, tuple(v.fraction for v in vals))


def morphism_check(f: OpView, a: OrthObject, b: OrthObject) -> bool:
    """Whether ``f`` sends every generator of ``a`` into the bipolar of ``b``.

    This suffices for all of ``a``'s bipolar because ``f(U°°) ⊆ (f U)°°``.
    """
    if f.source != a.web or f.target != b.web:
        raise WebMismatch("morphism webs do not match the objects")
    for u in a.generators:
        fu = push_point(f, u)
        if fu is None or not in_bipolar(b.generators, fu):
            return False
    return True


def reciprocity_instance(f: Kernel, kappa: Kernel, mu: Kernel) -> tuple:
    """``(<f | kappa o mu>, <f o kappa | mu>)``."""
    return inner(f, compose(kappa, mu)), inner(compose(f, kappa), mu)


def probes(us: Sequence[PointVec]) -> list:
    """Points of ``U°°`` used to sample it: generators, pairwise averages, halves, zero."""
    if not us:
        return []
    out = list(us)
    out += [average([u, v]) for u, v in itertools.combinations(us, 2)]
    out += [u.scale(Fraction(1, 2)) for u in us]
    out.append(PointVec.zero(us[0].web))
    return out

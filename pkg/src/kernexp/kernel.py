"""Transition kernels between finite webs.

A kernel ``k : A ~> B`` is a sparse nonnegative extended-rational matrix
indexed by ``(a, b)``; absent entries are zero and zeros are never stored,
so equality of kernels is equality of their entry maps.

Measures on ``A`` are kernels ``unit ~> A`` and measurable functions on ``A``
are kernels ``A ~> unit``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .numeric import ONE, ZERO, ExtRat, Number, ext
from .space import (
    UNIT_ATOM,
    Label,
    Pair,
    Tagged,
    Web,
    product_web,
    sum_web,
    unit_web,
)


class WebMismatch(ValueError):
    """Raised when kernels or vectors are combined over different webs."""

    def __init__(self, message: str, left: Web | None = None, right: Web | None = None):
        super().__init__(message)
        self.left = left
        self.right = right


def _mismatch(what: str, left: Web, right: Web) -> WebMismatch:
    return WebMismatch(f"{what}: {left!r} != {right!r}", left, right)


class Kernel:
    """An immutable sparse kernel ``dom ~> cod``."""

    __slots__ = ("dom", "cod", "_rows")

    def __init__(self, dom: Web, cod: Web, entries: Mapping | Iterable = ()):
        rows: dict = {}
        items = entries.items() if isinstance(entries, Mapping) else entries
        for key, value in items:
            x, y = key
            if x not in dom.index:
                raise KeyError(f"{x!r} is not an atom of the domain")
            if y not in cod.index:
                raise KeyError(f"{y!r} is not an atom of the codomain")
            v = ext(value)
            if v.is_zero:
                continue
            row = rows.setdefault(x, {})
            if y in row:
                raise ValueError(f"duplicate entry for {(x, y)!r}")
            row[y] = v
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "_rows", rows)

    @classmethod
    def _from_rows(cls, dom: Web, cod: Web, rows: dict) -> "Kernel":
        obj = object.__new__(cls)
        object.__setattr__(obj, "dom", dom)
        object.__setattr__(obj, "cod", cod)
        object.__setattr__(obj, "_rows", {x: r for x, r in rows.items() if r})
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Kernel is immutable")

    def __call__(self, x: Label, y: Label) -> ExtRat:
        return self._rows.get(x, {}).get(y, ZERO)

    def row(self, x: Label) -> Mapping:
        return self._rows.get(x, {})

    def items(self):
        """Nonzero ``((x, y), value)`` pairs in domain/codomain order."""
        cidx = self.cod.index
        for x in self.dom:
            row = self._rows.get(x)
            if row:
                for y in sorted(row, key=cidx.__getitem__):
                    yield (x, y), row[y]

    @property
    def entries(self) -> dict:
        return dict(self.items())

    @property
    def nnz(self) -> int:
        return sum(len(r) for r in self._rows.values())

    def __eq__(self, other):
        if not isinstance(other, Kernel):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self._rows == other._rows

    def __hash__(self):
        return hash((self.dom, self.cod, frozenset(self.items())))

    def __repr__(self):
        body = ", ".join(f"{x!r}->{y!r}: {v}" for (x, y), v in self.items())
        return f"Kernel({len(self.dom)}x{len(self.cod)}; {body})"

    def __add__(self, other: "Kernel") -> "Kernel":
        if self.dom != other.dom or self.cod != other.cod:
            raise _mismatch("kernel sum over different webs", self.dom, other.dom)
        rows = {x: dict(r) for x, r in self._rows.items()}
        for x, r in other._rows.items():
            tgt = rows.setdefault(x, {})
            for y, v in r.items():
                tgt[y] = tgt.get(y, ZERO) + v
        return Kernel._from_rows(self.dom, self.cod, rows)

    def scale(self, c: Number) -> "Kernel":
        c = ext(c)
        rows = {}
        for x, r in self._rows.items():
            nr = {}
            for y, v in r.items():
                w = c * v
                if not w.is_zero:
                    nr[y] = w
            rows[x] = nr
        return Kernel._from_rows(self.dom, self.cod, rows)

    def transpose(self) -> "Kernel":
        rows: dict = {}
        for x, r in self._rows.items():
            for y, v in r.items():
                rows.setdefault(y, {})[x] = v
        return Kernel._from_rows(self.cod, self.dom, rows)

    def leq(self, other: "Kernel") -> bool:
        """Pointwise order."""
        if self.dom != other.dom or self.cod != other.cod:
            raise _mismatch("comparing kernels over different webs", self.dom, other.dom)
        return all(v <= other(x, y) for (x, y), v in self.items())


def zero(dom: Web, cod: Web) -> Kernel:
    return Kernel._from_rows(dom, cod, {})


def dirac(a: Web) -> Kernel:
    return Kernel._from_rows(a, a, {x: {x: ONE} for x in a})


def from_function(dom: Web, cod: Web, fn: Callable[[Label, Label], Number]) -> Kernel:
    return Kernel(dom, cod, (((x, y), fn(x, y)) for x in dom for y in cod))


def graph(dom: Web, cod: Web, fn: Callable[[Label], Label]) -> Kernel:
    """The deterministic kernel ``x |-> delta(fn(x))``."""
    return Kernel._from_rows(dom, cod, {x: {fn(x): ONE} for x in dom})


def compose(second: Kernel, first: Kernel) -> Kernel:
    """``(second o first)(x, z) = sum_y first(x, y) * second(y, z)``."""
    if first.cod != second.dom:
        raise _mismatch("composition of kernels with mismatched webs", first.cod, second.dom)
    out: dict = {}
    srows = second._rows
    for x, r in first._rows.items():
        acc: dict = {}
        for y, a in r.items():
            sr = srows.get(y)
            if not sr:
                continue
            for z, b in sr.items():
                acc[z] = acc.get(z, ZERO) + a * b
        out[x] = {z: v for z, v in acc.items() if not v.is_zero}
    return Kernel._from_rows(first.dom, second.cod, out)


def compose_all(*kernels: Kernel) -> Kernel:
    """``compose_all(k_n, ..., k_1) = k_n o ... o k_1``."""
    if not kernels:
        raise ValueError("nothing to compose")
    acc = kernels[-1]
    for k in reversed(kernels[:-1]):
        acc = compose(k, acc)
    return acc


def tensor(k1: Kernel, k2: Kernel) -> Kernel:
    rows = {}
    for x1, r1 in k1._rows.items():
        for x2, r2 in k2._rows.items():
            row = {}
            for y1, a in r1.items():
                for y2, b in r2.items():
                    v = a * b
                    if not v.is_zero:
                        row[Pair(y1, y2)] = v
            rows[Pair(x1, x2)] = row
    return Kernel._from_rows(product_web(k1.dom, k2.dom), product_web(k1.cod, k2.cod), rows)


def tensor_all(kernels: Sequence[Kernel]) -> Kernel:
    """Left-nested tensor ``((k1 x k2) x k3) ...``; the empty tensor is the unit identity."""
    if not kernels:
        return dirac(unit_web())
    acc = kernels[0]
    for k in kernels[1:]:
        acc = tensor(acc, k)
    return acc


def symmetry(a: Web, b: Web) -> Kernel:
    """The swap ``A x B ~> B x A``."""
    return graph(product_web(a, b), product_web(b, a), lambda p: Pair(p.right, p.left))


def associator(a: Web, b: Web, c: Web) -> Kernel:
    """``(A x B) x C ~> A x (B x C)``."""
    return graph(
        product_web(product_web(a, b), c),
        product_web(a, product_web(b, c)),
        lambda p: Pair(p.left.left, Pair(p.left.right, p.right)),
    )


def left_unitor(a: Web) -> Kernel:
    """``I x A ~> A``."""
    return graph(product_web(unit_web(), a), a, lambda p: p.right)


def right_unitor(a: Web) -> Kernel:
    """``A x I ~> A``."""
    return graph(product_web(a, unit_web()), a, lambda p: p.left)


def injection(parts: Sequence[Web], j: int) -> Kernel:
    if not 0 <= j < len(parts):
        raise IndexError(f"part index {j} out of range for {len(parts)} parts")
    return graph(parts[j], sum_web(parts), lambda x: Tagged(j, x))


def projection(parts: Sequence[Web], j: int) -> Kernel:
    if not 0 <= j < len(parts):
        raise IndexError(f"part index {j} out of range for {len(parts)} parts")
    s = sum_web(parts)
    return Kernel._from_rows(s, parts[j], {Tagged(j, x): {x: ONE} for x in parts[j]})


def pair(gs: Sequence[Kernel]) -> Kernel:
    """The mediating kernel ``B ~> sum_i A_i`` of kernels ``g_i : B ~> A_i``."""
    if not gs:
        raise ValueError("pair needs at least one kernel; its domain is otherwise undetermined")
    dom = gs[0].dom
    for g in gs:
        if g.dom != dom:
            raise _mismatch("pair of kernels with different domains", dom, g.dom)
    rows: dict = {}
    for i, g in enumerate(gs):
        for x, r in g._rows.items():
            tgt = rows.setdefault(x, {})
            for y, v in r.items():
                tgt[Tagged(i, y)] = v
    return Kernel._from_rows(dom, sum_web([g.cod for g in gs]), rows)


def copair(fs: Sequence[Kernel]) -> Kernel:
    """The kernel ``sum_i A_i ~> B`` acting as ``f_i`` on part ``i``."""
    if not fs:
        raise ValueError("copair needs at least one kernel; its codomain is otherwise undetermined")
    cod = fs[0].cod
    for f in fs:
        if f.cod != cod:
            raise _mismatch("copair of kernels with different codomains", cod, f.cod)
    rows = {}
    for i, f in enumerate(fs):
        for x, r in f._rows.items():
            rows[Tagged(i, x)] = dict(r)
    return Kernel._from_rows(sum_web([f.dom for f in fs]), cod, rows)


def direct_sum(ks: Sequence[Kernel]) -> Kernel:
    """Block-diagonal kernel ``sum_i A_i ~> sum_i B_i``."""
    rows = {}
    for i, k in enumerate(ks):
        for x, r in k._rows.items():
            rows[Tagged(i, x)] = {Tagged(i, y): v for y, v in r.items()}
    return Kernel._from_rows(sum_web([k.dom for k in ks]), sum_web([k.cod for k in ks]), rows)


# measures and measurable functions


def measure(a: Web, values: Mapping | Sequence) -> Kernel:
    """A measure on ``a`` as a kernel ``unit ~> a``."""
    vals = values.items() if isinstance(values, Mapping) else zip(a.atoms, values)
    return Kernel(unit_web(), a, (((UNIT_ATOM, x), v) for x, v in vals))


def function(a: Web, values: Mapping | Sequence) -> Kernel:
    """A measurable function on ``a`` as a kernel ``a ~> unit``."""
    vals = values.items() if isinstance(values, Mapping) else zip(a.atoms, values)
    return Kernel(a, unit_web(), (((x, UNIT_ATOM), v) for x, v in vals))


def is_measure(k: Kernel) -> bool:
    return k.dom == unit_web()


def is_function(k: Kernel) -> bool:
    return k.cod == unit_web()


def inner(f: Kernel, mu: Kernel) -> ExtRat:
    """The pairing ``<f | mu> = sum_x f(x) mu({x})``."""
    if not is_function(f):
        raise WebMismatch("inner: first argument must be a function (codomain = unit web)")
    if not is_measure(mu):
        raise WebMismatch("inner: second argument must be a measure (domain = unit web)")
    if f.dom != mu.cod:
        raise _mismatch("inner product over different webs", f.dom, mu.cod)
    acc = ZERO
    m = mu.row(UNIT_ATOM)
    for x, v in m.items():
        fx = f._rows.get(x)
        if fx:
            acc = acc + fx[UNIT_ATOM] * v
    return acc


def act_on_measure(k: Kernel, mu: Kernel) -> Kernel:
    """Pushforward ``k_* mu``."""
    if not is_measure(mu):
        raise WebMismatch("act_on_measure expects a measure")
    return compose(k, mu)


def act_on_function(k: Kernel, f: Kernel) -> Kernel:
    """Pullback ``k^* f``."""
    if not is_function(f):
        raise WebMismatch("act_on_function expects a function")
    return compose(f, k)


def characteristic(a: Web, subset: Iterable[Label]) -> Kernel:
    return function(a, {x: ONE for x in subset})


@dataclass(frozen=True)
class OpView:
    """A morphism ``source -> target`` of the opposite category.

    It is stored as the kernel ``target ~> source``. Points ``I -> A`` are
    therefore measurable functions on ``A``.
    """

    source: Web
    target: Web
    underlying: Kernel

    def __post_init__(self):
        if self.underlying.dom != self.target or self.underlying.cod != self.source:
            raise WebMismatch("OpView underlying kernel must run target ~> source")

    @classmethod
    def of(cls, k: Kernel) -> "OpView":
        return cls(k.cod, k.dom, k)

    @classmethod
    def identity(cls, a: Web) -> "OpView":
        return cls(a, a, dirac(a))


def op_compose(g: OpView, f: OpView) -> OpView:
    """``g o f`` in the opposite category, i.e. ``f.underlying o g.underlying``."""
    if f.target != g.source:
        raise _mismatch("opposite composition with mismatched webs", f.target, g.source)
    return OpView(f.source, g.target, compose(f.underlying, g.underlying))


def op_point(f: Kernel) -> OpView:
    """A measurable function viewed as a point ``I -> A``."""
    if not is_function(f):
        raise WebMismatch("points of the opposite category are functions")
    return OpView.of(f)

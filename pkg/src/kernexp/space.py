"""Finite webs (discrete measurable spaces) and their derived constructors.

Atom labels follow a small grammar:

* base atoms are plain strings (the unit web's atom is ``"*"``),
* :class:`Pair` for product webs,
* :class:`Tagged` for disjoint unions,
* :data:`ROOT` for the distinguished atom of a rooted web,
* :class:`Multiset` for points of a multiset power,
* :class:`Graded` for points of a truncated bang web.

Atom order is always a deterministic function of the construction, and
multisets are kept in the canonical (sorted by base-web position) form.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Any, Hashable, Iterable, Iterator, Sequence

Label = Hashable

UNIT_ATOM = "*"


@dataclass(frozen=True)
class Pair:
    left: Any
    right: Any

    def __repr__(self):
        return f"({self.left!r}, {self.right!r})"


@dataclass(frozen=True)
class Tagged:
    index: int
    label: Any

    def __repr__(self):
        return f"<{self.index}:{self.label!r}>"


@dataclass(frozen=True)
class _Root:
    def __repr__(self):
        return "Root"


ROOT = _Root()


@dataclass(frozen=True)
class Multiset:
    """A finite bag of atoms stored as its canonical (sorted) tuple."""

    atoms: tuple = ()

    @classmethod
    def of(cls, web: "Web", items: Iterable[Label]) -> "Multiset":
        idx = web.index
        try:
            return cls(tuple(sorted(items, key=idx.__getitem__)))
        except KeyError as exc:
            raise ValueError(f"atom {exc.args[0]!r} is not in the web") from None

    @property
    def size(self) -> int:
        return len(self.atoms)

    @property
    def entries(self) -> tuple:
        """``(atom, multiplicity)`` pairs in canonical order."""
        return tuple((a, len(list(g))) for a, g in itertools.groupby(self.atoms))

    def count(self, atom: Label) -> int:
        return self.atoms.count(atom)

    def __repr__(self):
        return "[" + ",".join(repr(a) for a in self.atoms) + "]"


@dataclass(frozen=True)
class Graded:
    grade: int
    mset: Multiset

    def __repr__(self):
        return f"({self.grade}, {self.mset!r})"


@dataclass(frozen=True, eq=False)
class Web:
    """An ordered, duplicate-free list of atoms."""

    atoms: tuple
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        atoms = tuple(self.atoms)
        object.__setattr__(self, "atoms", atoms)
        index = {a: i for i, a in enumerate(atoms)}
        if len(index) != len(atoms):
            raise ValueError("web atoms must be distinct")
        object.__setattr__(self, "index", index)

    def __eq__(self, other):
        return isinstance(other, Web) and self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __len__(self):
        return len(self.atoms)

    def __iter__(self) -> Iterator:
        return iter(self.atoms)

    def __contains__(self, atom):
        return atom in self.index

    @property
    def size(self) -> int:
        return len(self.atoms)

    def __repr__(self):
        return "Web{" + ", ".join(repr(a) for a in self.atoms) + "}"


def web(*atoms: Label) -> Web:
    return Web(tuple(atoms))


EMPTY = Web(())


def unit_web() -> Web:
    return Web((UNIT_ATOM,))


def product_web(a: Web, b: Web) -> Web:
    return Web(tuple(Pair(x, y) for x in a for y in b))


def sum_web(parts: Sequence[Web]) -> Web:
    return Web(tuple(Tagged(i, x) for i, p in enumerate(parts) for x in p))


def rooted_web(a: Web) -> Web:
    """``A & I``: base atoms tagged ``1`` followed by :data:`ROOT`."""
    return Web(tuple(Tagged(1, x) for x in a) + (ROOT,))


def multiset_web(a: Web, n: int) -> Web:
    if n < 0:
        raise ValueError("grade must be nonnegative")
    return Web(tuple(Multiset(c) for c in itertools.combinations_with_replacement(a.atoms, n)))


def bang_web(a: Web, depth: int) -> Web:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    return Web(tuple(Graded(k, m) for k in range(depth + 1) for m in multiset_web(a, k)))


def tuple_web(a: Web, n: int) -> Web:
    """The n-fold product ``A x ... x A`` with left-nested :class:`Pair` labels.

    ``n == 0`` gives the unit web and ``n == 1`` gives ``a`` itself.
    """
    if n < 0:
        raise ValueError("grade must be nonnegative")
    if n == 0:
        return unit_web()
    return Web(tuple(tuple_label(t) for t in itertools.product(a.atoms, repeat=n)))


def tuple_label(xs: Sequence[Label]) -> Label:
    if len(xs) == 0:
        return UNIT_ATOM
    label = xs[0]
    for x in xs[1:]:
        label = Pair(label, x)
    return label


def label_tuple(label: Label, n: int) -> tuple:
    """Inverse of :func:`tuple_label` for a known arity ``n``."""
    if n == 0:
        return ()
    out = []
    for _ in range(n - 1):
        out.append(label.right)
        label = label.left
    out.append(label)
    return tuple(reversed(out))


def multiset_count(size: int, n: int) -> int:
    """Number of size-``n`` multisets over ``size`` atoms."""
    if n == 0:
        return 1
    return comb(size + n - 1, n)


def distinct_permutations(items: Sequence[Label]) -> Iterator[tuple]:
    """Distinct orderings of ``items``, each produced once.

    The first ordering produced is ``tuple(items)``; when ``items`` is sorted
    the output is in lexicographic order of positions.
    """
    distinct = []
    counts = []
    for x in items:
        for i, d in enumerate(distinct):
            if d == x:
                counts[i] += 1
                break
        else:
            distinct.append(x)
            counts.append(1)
    n = len(items)
    current: list = []

    def rec():
        if len(current) == n:
            yield tuple(current)
            return
        for i, d in enumerate(distinct):
            if counts[i]:
                counts[i] -= 1
                current.append(d)
                yield from rec()
                current.pop()
                counts[i] += 1

    yield from rec()


def fiber(m: Multiset) -> list:
    """All ordered tuples whose underlying multiset is ``m``."""
    return list(distinct_permutations(m.atoms))


def fiber_size(m: Multiset) -> int:
    out = factorial(m.size)
    for _, k in m.entries:
        out //= factorial(k)
    return out


def strip_roots(m: Multiset) -> Multiset:
    """Drop :data:`ROOT` atoms and untag the rest (``(1, x) -> x``)."""
    return Multiset(tuple(a.label for a in m.atoms if a != ROOT))


def add_roots(m: Multiset, count: int = 1) -> Multiset:
    """``m`` plus ``count`` roots; roots sort last in a rooted web."""
    return Multiset(m.atoms + (ROOT,) * count)


def tag_multiset(m: Multiset) -> Multiset:
    """Embed a multiset over ``A`` into the rooted web ``A & I``."""
    return Multiset(tuple(Tagged(1, x) for x in m.atoms))


def graded(m: Multiset) -> Graded:
    return Graded(m.size, m)

"""Seeded random instances for property checks."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from .kernel import Kernel, function, measure
from .numeric import INF
from .ortho import OrthObject, PointVec, pairing
from .space import Web


def rat(rng: random.Random, max_den: int = 12, max_value: int = 2, zero_prob: float = 0.2) -> Fraction:
    """A rational in ``[0, max_value]`` with denominator at most ``max_den``."""
    if rng.random() < zero_prob:
        return Fraction(0)
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(0, max_value * den), den)


def base_web(rng: random.Random, max_atoms: int, min_atoms: int = 1, prefix: str = "a") -> Web:
    n = rng.randint(min_atoms, max_atoms)
    return Web(tuple(f"{prefix}{i}" for i in range(n)))


def kernel(
    rng: random.Random,
    dom: Web,
    cod: Web,
    max_den: int = 12,
    zero_prob: float = 0.2,
    inf_rows: Sequence = (),
    inf_prob: float = 0.0,
) -> Kernel:
    """A random kernel; entries in ``inf_rows`` are infinite with probability ``inf_prob``."""
    entries = []
    for x in dom:
        for y in cod:
            if x in inf_rows and rng.random() < inf_prob:
                entries.append(((x, y), INF))
            else:
                entries.append(((x, y), rat(rng, max_den, zero_prob=zero_prob)))
    return Kernel(dom, cod, entries)


def values(rng: random.Random, w: Web, max_den: int = 12, zero_prob: float = 0.2, max_value: int = 2) -> list:
    return [rat(rng, max_den, max_value, zero_prob) for _ in w]


def rand_measure(rng: random.Random, w: Web, zeros: Sequence = (), **kw) -> Kernel:
    vals = values(rng, w, **kw)
    return measure(w, {x: (0 if x in zeros else v) for x, v in zip(w, vals)})


def rand_function(rng: random.Random, w: Web, **kw) -> Kernel:
    return function(w, values(rng, w, **kw))


def point(rng: random.Random, w: Web, max_den: int = 6, max_value: int = 1, zero_prob: float = 0.2) -> PointVec:
    return PointVec(w, tuple(values(rng, w, max_den, zero_prob, max_value)))


def nonzero_point(rng: random.Random, w: Web, **kw) -> PointVec:
    while True:
        p = point(rng, w, **kw)
        if any(p.values):
            return p


def orth_object(
    rng: random.Random, w: Web, max_gens: int = 3, min_gens: int = 1, pcoh: bool = False
) -> OrthObject:
    """A random object; with ``pcoh`` every atom is covered by some generator."""
    k = rng.randint(min_gens, max_gens)
    gens = [nonzero_point(rng, w) for _ in range(k)]
    if pcoh:
        for i in range(len(w)):
            if all(g.values[i] == 0 for g in gens):
                g = gens[rng.randrange(len(gens))]
                vals = list(g.values)
                vals[i] = Fraction(1, rng.randint(1, 4))
                gens[gens.index(g)] = PointVec(w, tuple(vals))
    return OrthObject(w, tuple(gens))


def scale_to_boundary(us: Sequence[PointVec], y: PointVec) -> Optional[PointVec]:
    """Scale ``y`` so that its largest pairing with ``us`` is exactly 1."""
    top = max((pairing(u, y) for u in us), default=Fraction(0))
    if top == 0:
        return None
    return y.scale(1 / top)


"""Exact transition-kernel semantics for the discrete free exponential.

Finite webs, kernels over nonnegative extended rationals, symmetric powers,
the depth-truncated exponential, and the orthogonality category with
LP-decided bipolar membership.
"""
from .numeric import INF, ONE, ZERO, ExtRat
from .space import Web, web, unit_web
from .kernel import Kernel, OpView, compose, dirac, tensor, inner

__version__ = "0.1.0"

__all__ = [
    "INF",
    "ONE",
    "ZERO",
    "ExtRat",
    "Kernel",
    "OpView",
    "Web",
    "compose",
    "dirac",
    "inner",
    "tensor",
    "unit_web",
    "web",
]

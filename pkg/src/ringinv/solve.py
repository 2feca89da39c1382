"""Exact solver for linear equations in one ring-valued unknown.

An equation is ``(terms, rhs)`` meaning ``sum(a * X * b for a, b in terms) == rhs``,
where ``a`` or ``b`` may be ``None`` for the unit.  Over ``Z_n`` the system is a
set of congruences; over matrix rings it is vectorized and eliminated exactly.
"""

from __future__ import annotations

from math import gcd
from typing import Optional, Sequence

from . import linalg
from .rings import Element, MatrixRing, ModularRing, Ring


def solve(ring: Ring, equations: Sequence) -> Optional[Element]:
    """Return one solution ``X`` or ``None`` if the system is inconsistent."""
    if isinstance(ring, ModularRing):
        return _solve_modular(ring, equations)
    if isinstance(ring, MatrixRing):
        eqs = [
            (
                [(None if a is None else a.payload, None if b is None else b.payload) for a, b in terms],
                rhs.payload,
            )
            for terms, rhs in equations
        ]
        X = linalg.solve_matrix_equations(ring.field, ring.k, eqs)
        return None if X is None else ring(X)
    raise TypeError(f"no solver for {ring!r}")


def _solve_modular(ring: ModularRing, equations) -> Optional[Element]:
    n = ring.n
    x0, step = 0, 1  # current solution set: x0 + step * t
    for terms, rhs in equations:
        c = 0
        for a, b in terms:
            c += (1 if a is None else a.payload) * (1 if b is None else b.payload)
        # c * (x0 + step * t) == rhs  ->  (c * step) t == rhs - c * x0
        t = ring.solve_linear(c * step, rhs.payload - c * x0)
        if t is None:
            return None
        x0 = (x0 + step * t) % n
        step = step * (n // gcd(c * step % n, n)) % n
    return ring(x0)

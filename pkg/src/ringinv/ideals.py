"""Principal ideals, annihilators, corner rings and unit inverses.

One comparison contract covers every ring.  Over ``Z_n`` an ideal is stored as
the divisor ``g`` of ``n`` that generates it (the ideal is ``gZ_n``); over a
matrix ring ``M_k(F)`` a right ideal is determined by a subspace of column
vectors and a left ideal by a subspace of row vectors:

==============  ================================
``aR``          column space of ``a``
``Ra``          row space of ``a``
``a^{-1}(0)``   null space ``{v : a v = 0}``
``a_{-1}(0)``   left null space ``{w : w a = 0}``
==============  ================================

Equality and containment of the ideals is then equality and containment of
the subspaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Optional

from . import linalg
from .errors import PreconditionError
from .rings import Element, MatrixRing, ModularRing, Ring
from .solve import solve

RIGHT, LEFT = "right", "left"
PRINCIPAL, ANNIHILATOR = "principal", "annihilator"


@dataclass(frozen=True, eq=False)
class IdealHandle:
    """A one-sided ideal of a supported ring, comparable with ``==`` and ``<=``."""

    ring: Ring
    side: str
    key: object
    label: str = ""

    def _check(self, other: "IdealHandle") -> None:
        if other.ring != self.ring:
            raise PreconditionError(f"ideals of different rings {self.ring.spec}, {other.ring.spec}")
        if other.side != self.side:
            raise PreconditionError("cannot compare a left ideal with a right ideal")

    def __eq__(self, other):
        if not isinstance(other, IdealHandle):
            return NotImplemented
        self._check(other)
        return self.key == other.key

    def __hash__(self):
        return hash((self.ring.spec, self.side, self.key))

    def __le__(self, other: "IdealHandle") -> bool:
        self._check(other)
        if isinstance(self.ring, ModularRing):
            return self.key % other.key == 0
        return linalg.span_contains(self.ring.field, other.key, self.key)

    def __ge__(self, other: "IdealHandle") -> bool:
        return other <= self

    def meets_trivially(self, other: "IdealHandle") -> bool:
        """True iff the intersection is ``{0}``."""
        self._check(other)
        if isinstance(self.ring, ModularRing):
            n = self.ring.n
            return self.key * other.key // gcd(self.key, other.key) % n == 0
        F = self.ring.field
        return len(self.key) + len(other.key) == linalg.span_sum_dim(F, self.key, other.key)

    def spans_ring(self, other: "IdealHandle") -> bool:
        """True iff ``self + other`` is the whole ring."""
        self._check(other)
        if isinstance(self.ring, ModularRing):
            return gcd(self.key, other.key) == 1
        return linalg.span_sum_dim(self.ring.field, self.key, other.key) == self.ring.k

    def __contains__(self, x: Element) -> bool:
        if isinstance(self.ring, ModularRing):
            return x.payload % self.key == 0
        F = self.ring.field
        vecs = linalg.transpose(x.payload) if self.side == RIGHT else x.payload
        return all(linalg.vector_in_span(F, self.key, v) for v in vecs)

    def elements(self) -> Iterator[Element]:
        """Explicit members, for enumerable rings."""
        if isinstance(self.ring, ModularRing):
            return (self.ring(v) for v in range(0, self.ring.n, self.key))
        return (x for x in self.ring.elements() if x in self)

    def __repr__(self):
        return f"<{self.side} ideal {self.label or self.key} of {self.ring.spec}>"


def ideal(a: Element, side: str = RIGHT, kind: str = PRINCIPAL) -> IdealHandle:
    """``aR`` / ``Ra`` (principal) or ``a^{-1}(0)`` / ``a_{-1}(0)`` (annihilator)."""
    ring = a.ring
    if side not in (RIGHT, LEFT) or kind not in (PRINCIPAL, ANNIHILATOR):
        raise PreconditionError(f"bad ideal request side={side!r} kind={kind!r}")
    label = {
        (RIGHT, PRINCIPAL): f"{a}R",
        (LEFT, PRINCIPAL): f"R{a}",
        (RIGHT, ANNIHILATOR): f"{a}^-1(0)",
        (LEFT, ANNIHILATOR): f"{a}_-1(0)",
    }[side, kind]
    if isinstance(ring, ModularRing):
        g = gcd(a.payload, ring.n)
        key = g if kind == PRINCIPAL else ring.n // g
        return IdealHandle(ring, side, key, label)
    if isinstance(ring, MatrixRing):
        F, k = ring.field, ring.k
        A = a.payload
        if side == RIGHT:
            vecs = linalg.transpose(A) if kind == PRINCIPAL else linalg.nullspace(F, A, k)
        else:
            vecs = A if kind == PRINCIPAL else linalg.nullspace(F, linalg.transpose(A), k)
        return IdealHandle(ring, side, linalg.span_key(F, vecs, k), label)
    raise PreconditionError(f"no ideal representation for {ring!r}")


def right_ideal(a: Element) -> IdealHandle:
    return ideal(a, RIGHT, PRINCIPAL)


def left_ideal(a: Element) -> IdealHandle:
    return ideal(a, LEFT, PRINCIPAL)


def right_annihilator(a: Element) -> IdealHandle:
    return ideal(a, RIGHT, ANNIHILATOR)


def left_annihilator(a: Element) -> IdealHandle:
    return ideal(a, LEFT, ANNIHILATOR)


def direct_sum(h1: IdealHandle, h2: IdealHandle) -> bool:
    """True iff the ring is the internal direct sum ``h1 (+) h2``."""
    return h1.meets_trivially(h2) and h1.spans_ring(h2)


def is_idempotent(p: Element) -> bool:
    return p * p == p


def unit_inverse(a: Element) -> Optional[Element]:
    ring = a.ring
    if isinstance(ring, ModularRing):
        return ring(pow(a.payload, -1, ring.n)) if gcd(a.payload, ring.n) == 1 else None
    if isinstance(ring, MatrixRing):
        inv = linalg.inverse(ring.field, a.payload)
        return None if inv is None else ring(inv)
    raise TypeError(f"unsupported ring {ring!r}")


def is_unit(a: Element) -> bool:
    return unit_inverse(a) is not None


@dataclass(frozen=True)
class CornerRing:
    """The corner ``pRp`` of an idempotent ``p``; its unit is ``p``."""

    p: Element

    def __post_init__(self):
        if not is_idempotent(self.p):
            raise PreconditionError(f"{self.p} is not idempotent")

    @property
    def ambient(self) -> Ring:
        return self.p.ring

    def __contains__(self, x: Element) -> bool:
        return self.p * x * self.p == x

    def elements(self) -> list[Element]:
        p = self.p
        return sorted({p * x * p for x in self.ambient.elements()}, key=self.ambient.index_of)

    def invert(self, x: Element) -> Optional[Element]:
        return corner_invert(self, x)

    def units(self) -> list[Element]:
        return [x for x in self.elements() if corner_invert(self, x) is not None]


def corner_invert(c: CornerRing, x: Element) -> Optional[Element]:
    """Inverse of ``x`` inside ``pRp`` (``w x = x w = p``), or ``None``."""
    p = c.p
    if x not in c:
        raise PreconditionError(f"{x} is not in the corner ring of {p}")
    W = solve(p.ring, [([(x, None)], p), ([(None, x)], p)])
    if W is None:
        return None
    w = p * W * p
    if w * x != p or x * w != p:
        return None
    return w

"""Cayley tables and brute-force data for enumerable rings.

Everything in :class:`RingTables` is computed by enumeration only: ideals are
explicit element sets (stored as bitmasks), inverses are found by scanning the
whole ring.  This makes the tables an oracle independent of the divisor and
subspace machinery in :mod:`ringinv.ideals`.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from typing import Iterable, Optional

import numpy as np

from . import kernels
from .errors import PreconditionError
from .rings import Element, MatrixRing, ModularRing, Ring


def _mask(values: Iterable[int]) -> int:
    m = 0
    for v in values:
        m |= 1 << int(v)
    return m


class RingTables:
    """Index-level view of an enumerable ring (elements are ``0..n-1``)."""

    def __init__(self, ring: Ring, backend=None):
        ring.require_enumerable()
        self.ring = ring
        self.kernels = backend or kernels
        n = self.n = ring.cardinality
        self.elements = [ring.element_at(i) for i in range(n)]
        if isinstance(ring, ModularRing):
            idx = np.arange(n, dtype=np.int64)
            self.add = ((idx[:, None] + idx[None, :]) % n).astype(np.int32)
            self.mul = ((idx[:, None] * idx[None, :]) % n).astype(np.int32)
        elif isinstance(ring, MatrixRing):
            self.add, self.mul = self.kernels.mat_tables(ring.k, ring.field.order)
        else:
            raise TypeError(f"unsupported ring {ring!r}")
        self.zero = ring.index_of(ring.zero)
        self.one = ring.index_of(ring.one)
        self.neg = np.argmax(self.add == self.zero, axis=1).astype(np.int32)
        self.star = np.array([ring.index_of(x.star()) for x in self.elements], dtype=np.int32)
        self._mul_list = self.mul.tolist()
        self._add_list = self.add.tolist()
        self._neg_list = self.neg.tolist()

        mul = self.mul
        self.rp_mask = [_mask(np.unique(mul[a, :])) for a in range(n)]
        self.lp_mask = [_mask(np.unique(mul[:, a])) for a in range(n)]
        self.ra_mask = [_mask(np.flatnonzero(mul[a, :] == self.zero)) for a in range(n)]
        self.la_mask = [_mask(np.flatnonzero(mul[:, a] == self.zero)) for a in range(n)]
        right: dict[int, int] = {}
        left: dict[int, int] = {}
        self.rp = np.array([right.setdefault(m, len(right)) for m in self.rp_mask], dtype=np.int32)
        self.ra = np.array([right.setdefault(m, len(right)) for m in self.ra_mask], dtype=np.int32)
        self.lp = np.array([left.setdefault(m, len(left)) for m in self.lp_mask], dtype=np.int32)
        self.la = np.array([left.setdefault(m, len(left)) for m in self.la_mask], dtype=np.int32)
        self.full_mask = (1 << n) - 1

        units = (mul == self.one) & (mul.T == self.one)
        self.unit_inv = np.where(units.any(axis=1), units.argmax(axis=1), -1).astype(np.int32)
        self.idempotent = np.diagonal(mul) == np.arange(n)

    # element conversion -----------------------------------------------------
    def elt(self, i: int) -> Element:
        return self.elements[i]

    def idx(self, x: Element) -> int:
        return self.ring.index_of(x)

    # arithmetic on indices --------------------------------------------------
    def m(self, *xs: int) -> int:
        ml = self._mul_list
        r = xs[0]
        for x in xs[1:]:
            r = ml[r][x]
        return r

    def a(self, *xs: int) -> int:
        al = self._add_list
        r = xs[0]
        for x in xs[1:]:
            r = al[r][x]
        return r

    def s(self, x: int, y: int) -> int:
        return self._add_list[x][self._neg_list[y]]

    def pow(self, x: int, e: int) -> int:
        r = self.one
        for _ in range(e):
            r = self._mul_list[r][x]
        return r

    def is_unit(self, x: int) -> bool:
        return self.unit_inv[x] >= 0

    # exhaustive searches ----------------------------------------------------
    @cached_property
    def along(self) -> tuple[np.ndarray, np.ndarray]:
        """``(inv, count)`` over all ``(a, d)``: definitional inverse along ``d``."""
        return self.kernels.along_table(self.mul, self.rp, self.lp)

    def along_of(self, a: int, d: int) -> int:
        return int(self.along[0][a, d])

    def along_set(self, d: int) -> frozenset:
        return frozenset(np.flatnonzero(self.along[0][:, d] >= 0).tolist())

    def along_witnesses(self, a: int, d: int) -> list[int]:
        return self.kernels.along_search(self.mul, self.rp, self.lp, a, d)

    @cached_property
    def group(self) -> tuple[np.ndarray, np.ndarray]:
        return self.kernels.group_table(self.mul)

    def group_of(self, a: int) -> int:
        return int(self.group[0][a])

    @cached_property
    def inner(self) -> list[tuple[int, ...]]:
        """All inner inverses of every element, in index order."""
        n = self.n
        aza = self.mul[self.mul, np.arange(n)[:, None]]
        return [tuple(np.flatnonzero(aza[a] == a).tolist()) for a in range(n)]

    @cached_property
    def regular(self) -> list[int]:
        return [a for a in range(self.n) if self.inner[a]]

    @cached_property
    def mp(self) -> tuple[np.ndarray, np.ndarray]:
        """``(inv, count)``: exhaustive Moore-Penrose search for every element."""
        n = self.n
        mul, star = self.mul, self.star
        a = np.arange(n)[:, None]
        b = np.arange(n)[None, :]
        ab, ba = mul, mul.T
        ok = (mul[ab, a] == a) & (mul[ba, b] == b) & (star[ab] == ab) & (star[ba] == ba)
        inv = np.where(ok.any(axis=1), ok.argmax(axis=1), -1).astype(np.int32)
        return inv, ok.sum(axis=1).astype(np.int32)

    def mp_of(self, a: int) -> int:
        return int(self.mp[0][a])

    def comm(self, a: int) -> list[int]:
        return np.flatnonzero(self.mul[a, :] == self.mul[:, a]).tolist()

    def drazin_search(self, a: int) -> list[tuple[int, int]]:
        """Every ``(x, m)`` with ``x`` a Drazin inverse of ``a`` and ``m`` its least valid power."""
        n = self.n
        mul = self.mul
        xs = np.arange(n)
        ok = (mul[a, :] == mul[:, a]) & (mul[mul[xs, a], xs] == xs)
        found = []
        for x in np.flatnonzero(ok).tolist():
            p = self.one
            for m in range(n + 1):
                if self.m(p, x, a) == p:
                    found.append((x, m))
                    break
                p = self.m(p, a)
        return found

    @cached_property
    def qnil(self) -> np.ndarray:
        """Boolean mask of quasinilpotent elements (exhaustive over commutants)."""
        out = np.zeros(self.n, dtype=bool)
        for a in range(self.n):
            c = self.comm(a)
            vals = self.add[self.one, self.mul[c, a]]
            out[a] = bool((self.unit_inv[vals] >= 0).all())
        return out

    # corners and ideal helpers ---------------------------------------------
    def corner(self, p: int) -> list[int]:
        if not self.idempotent[p]:
            raise PreconditionError(f"{self.elt(p)} is not idempotent")
        return sorted(set(self.mul[self.mul[p, :], p].tolist()))

    def corner_inv(self, p: int, x: int) -> int:
        for w in self.corner(p):
            if self.m(w, x) == p and self.m(x, w) == p:
                return w
        return -1

    def corner_units(self, p: int) -> list[int]:
        return [x for x in self.corner(p) if self.corner_inv(p, x) >= 0]

    def sumset(self, *sets: Iterable[int]) -> frozenset:
        acc = {self.zero}
        for s in sets:
            s = list(s)
            acc = {self._add_list[x][y] for x in acc for y in s}
        return frozenset(acc)

    def left_mult_set(self, x: int) -> set:
        """``x R`` as a set of indices."""
        return set(self.mul[x, :].tolist())

    def right_mult_set(self, x: int) -> set:
        """``R x``."""
        return set(self.mul[:, x].tolist())

    def sandwich_set(self, x: int, y: int) -> set:
        """``x R y``."""
        return set(self.mul[self.mul[x, :], y].tolist())

    @staticmethod
    def subset(m1: int, m2: int) -> bool:
        return m1 & ~m2 == 0


@lru_cache(maxsize=32)
def tables(ring: Ring) -> RingTables:
    """Cached tables for an enumerable ring."""
    return RingTables(ring)


def index_or_none(t: RingTables, i: int) -> Optional[Element]:
    return None if i < 0 else t.elt(i)

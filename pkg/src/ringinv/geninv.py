"""Classical generalized inverses: inner, outer, group, Drazin, gD, Moore-Penrose, EP.

Enumerable rings are searched exhaustively through :mod:`ringinv.finite`;
other rings are handled by exact linear algebra.  Every returned witness has
been checked against its defining equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import linalg
from .errors import ConsistencyError, NoInvolutionError, PreconditionError
from .finite import tables
from .ideals import unit_inverse
from .rings import Element, MatrixRing, ModularRing
from .solve import solve


# --- inner and outer ---------------------------------------------------------

def inner_inverses(a: Element) -> Iterator[Element]:
    """Elements ``z`` with ``a z a = a``.

    Exhaustive (index order) on enumerable rings; otherwise at most one
    witness obtained by solving the linear system ``a X a = a``.
    """
    ring = a.ring
    if ring.enumerable:
        t = tables(ring)
        for z in t.inner[t.idx(a)]:
            yield t.elt(z)
        return
    z = solve(ring, [([(a, a)], a)])
    if z is not None:
        yield z


def inner_inverse(a: Element) -> Optional[Element]:
    """First inner inverse in enumeration order, or the linear-algebra witness."""
    return next(inner_inverses(a), None)


def is_regular(a: Element) -> bool:
    return inner_inverse(a) is not None


def is_outer_inverse(b: Element, a: Element) -> bool:
    return b * a * b == b


def is_inner_inverse(z: Element, a: Element) -> bool:
    return a * z * a == a


# --- group inverse -----------------------------------------------------------

@dataclass(frozen=True)
class GroupInverseResult:
    inverse: Element
    spectral_idempotent: Element


def _is_group_inverse(b: Element, a: Element) -> bool:
    return a * b * a == a and b * a * b == b and a * b == b * a


def group_inverse_by_solving(a: Element) -> Optional[Element]:
    """``a = a^2 x`` and ``a = y a^2`` both solvable  =>  ``a# = y a x``."""
    a2 = a * a
    x = solve(a.ring, [([(a2, None)], a)])
    if x is None:
        return None
    y = solve(a.ring, [([(None, a2)], a)])
    if y is None:
        return None
    g = y * a * x
    if not _is_group_inverse(g, a):
        raise ConsistencyError(f"group inverse witness for {a} fails its equations")
    return g


def group_inverse(a: Element) -> Optional[GroupInverseResult]:
    ring = a.ring
    if ring.enumerable:
        t = tables(ring)
        i = t.idx(a)
        if t.group[1][i] > 1:
            raise ConsistencyError(f"{a} has {t.group[1][i]} group inverses")
        j = t.group_of(i)
        g = None if j < 0 else t.elt(j)
    else:
        g = group_inverse_by_solving(a)
    if g is None:
        return None
    return GroupInverseResult(g, ring.one - g * a)


def group_inverse_via_idempotent(a: Element) -> Optional[Element]:
    """Group inverse through an idempotent ``p`` with ``a = (1-p)a(1-p)`` invertible in the corner.

    Enumerable rings only; scans all idempotents.
    """
    from .ideals import CornerRing, corner_invert

    ring = a.ring
    for p in ring.elements():
        if p * p != p:
            continue
        q = ring.one - p
        if q * a * q != a:
            continue
        w = corner_invert(CornerRing(q), a)
        if w is not None:
            return w
    return None


# --- Drazin ------------------------------------------------------------------

@dataclass(frozen=True)
class DrazinResult:
    """``index`` is 0 for units; ``positive_index`` is ``max(index, 1)``."""

    inverse: Element
    index: int
    spectral_idempotent: Element

    @property
    def positive_index(self) -> int:
        return max(self.index, 1)


def _power_bound(a: Element) -> int:
    ring = a.ring
    if isinstance(ring, MatrixRing):
        return ring.k + 1
    if isinstance(ring, ModularRing):
        return ring.n.bit_length() + 1
    return ring.cardinality + 1


def drazin_inverse(a: Element) -> Optional[DrazinResult]:
    """Drazin inverse via the first group invertible power: ``a^d = a^(k-1) (a^k)#``."""
    ring = a.ring
    power = a
    x = None
    for k in range(1, _power_bound(a) + 1):
        g = group_inverse(power)
        if g is not None:
            x = a ** (k - 1) * g.inverse
            break
        power = power * a
    if x is None:
        return None
    if not (x * a * x == x and a * x == x * a):
        raise ConsistencyError(f"Drazin witness for {a} fails its equations")
    p = ring.one
    m = 0
    while p * x * a != p:
        p = p * a
        m += 1
        if m > _power_bound(a):
            raise ConsistencyError(f"no Drazin index found for {a}")
    return DrazinResult(x, m, ring.one - a * x)


def is_quasinilpotent(a: Element) -> bool:
    """``1 + x a`` is a unit for every ``x`` commuting with ``a``.  Enumerable rings only."""
    ring = a.ring
    ring.require_enumerable()
    t = tables(ring)
    return bool(t.qnil[t.idx(a)])


@dataclass(frozen=True)
class GeneralizedDrazinResult:
    inverse: Element
    spectral_idempotent: Element


def generalized_drazin_inverse(a: Element) -> Optional[GeneralizedDrazinResult]:
    """Search ``comm^2(a)`` for ``b`` with ``a b^2 = b`` and ``a - a^2 b`` quasinilpotent."""
    ring = a.ring
    ring.require_enumerable()
    t = tables(ring)
    i = t.idx(a)
    comm = t.comm(i)
    comm2 = [x for x in range(t.n) if all(t.m(x, y) == t.m(y, x) for y in comm)]
    found = []
    for b in comm2:
        if t.m(i, b, b) != b:
            continue
        if t.qnil[t.s(i, t.m(i, i, b))]:
            found.append(b)
    if len(found) > 1:
        raise ConsistencyError(f"{a} has {len(found)} generalized Drazin inverses")
    if not found:
        return None
    b = t.elt(found[0])
    return GeneralizedDrazinResult(b, ring.one - a * b)


# --- Moore-Penrose -----------------------------------------------------------

@dataclass(frozen=True)
class MoorePenroseResult:
    inverse: Element


def is_mp_inverse(b: Element, a: Element) -> bool:
    ab, ba = a * b, b * a
    return a * b * a == a and b * a * b == b and ab.star() == ab and ba.star() == ba


def _mp_rank_factorization(a: Element) -> Optional[Element]:
    ring = a.ring
    F = ring.field
    if a.is_zero:
        return ring.zero
    C, G = linalg.rank_factorization(F, a.payload)
    Ct, Gt = linalg.transpose(C), linalg.transpose(G)
    CtC = linalg.inverse(F, linalg.matmul(F, Ct, C))
    GGt = linalg.inverse(F, linalg.matmul(F, G, Gt))
    if CtC is None or GGt is None:
        return None
    m = linalg.matmul
    return ring(m(F, m(F, m(F, Gt, GGt), CtC), Ct))


def mp_inverse(a: Element) -> Optional[MoorePenroseResult]:
    """Unique solution of the four Penrose equations, or ``None``."""
    ring = a.ring
    if not ring.has_involution:
        raise NoInvolutionError(f"{ring.spec} has no involution")
    if ring.enumerable:
        t = tables(ring)
        i = t.idx(a)
        if t.mp[1][i] > 1:
            raise ConsistencyError(f"{a} has {t.mp[1][i]} Moore-Penrose inverses")
        j = t.mp_of(i)
        b = None if j < 0 else t.elt(j)
    elif isinstance(ring, MatrixRing):
        b = _mp_rank_factorization(a)
    else:
        # identity involution on a commutative ring: Penrose equations reduce to the group ones
        g = group_inverse(a)
        b = None if g is None else g.inverse
    if b is None:
        return None
    if not is_mp_inverse(b, a):
        raise ConsistencyError(f"Moore-Penrose witness for {a} fails its equations")
    return MoorePenroseResult(b)


def mp_inverse_by_formula(a: Element) -> Optional[Element]:
    """Non-search Moore-Penrose route (rank factorization or group inverse)."""
    ring = a.ring
    if isinstance(ring, MatrixRing):
        return _mp_rank_factorization(a)
    return group_inverse_by_solving(a)


def is_ep(a: Element) -> bool:
    r = mp_inverse(a)
    if r is None:
        raise PreconditionError(f"{a} is not Moore-Penrose invertible")
    return a * r.inverse == r.inverse * a


__all__ = [
    "DrazinResult",
    "GeneralizedDrazinResult",
    "GroupInverseResult",
    "MoorePenroseResult",
    "drazin_inverse",
    "generalized_drazin_inverse",
    "group_inverse",
    "group_inverse_by_solving",
    "group_inverse_via_idempotent",
    "inner_inverse",
    "inner_inverses",
    "is_ep",
    "is_inner_inverse",
    "is_mp_inverse",
    "is_outer_inverse",
    "is_quasinilpotent",
    "is_regular",
    "mp_inverse",
    "mp_inverse_by_formula",
    "unit_inverse",
]

"""The inverse of ``a`` along ``d``.

``b`` is the inverse of ``a`` along ``d`` when ``b a b = b``, ``bR = dR`` and
``Rb = Rd``; it is unique when it exists.  Four independent routes compute it:

``definitional``
    exhaustive search of the ring for ``b`` (enumerable rings only).
``corner``
    invert ``d a d d-`` in the corner ring ``(d d-) R (d d-)`` and multiply by
    ``d``; the dual corner ``(d- d) R (d- d)`` is computed too and must agree.
``unit``
    ``(d a + 1 - d d-)^-1 d``, which equals ``d (a d + 1 - d- d)^-1``.
``dxd``
    ``d x d`` for an inner inverse ``x`` of ``d a d``.

Here ``d-`` is any inner inverse of ``d``.  The module also materializes the
set of all elements invertible along ``d``, its decompositions, and the
characterizations of commuting and inner inverses along ``d``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import ConsistencyError, NotRegularError, PreconditionError
from .finite import tables
from .geninv import group_inverse, inner_inverse, inner_inverses, mp_inverse
from .ideals import (
    CornerRing,
    corner_invert,
    direct_sum,
    is_idempotent,
    left_annihilator,
    left_ideal,
    right_annihilator,
    right_ideal,
    unit_inverse,
)
from .rings import Element

ROUTES = ("definitional", "corner", "unit", "dxd")


@dataclass(frozen=True)
class AlongResult:
    inverse: Element
    route: str
    witnesses: dict = field(default_factory=dict, compare=False)


def is_inverse_along(b: Element, a: Element, d: Element) -> bool:
    return (
        b * a * b == b
        and right_ideal(b) == right_ideal(d)
        and left_ideal(b) == left_ideal(d)
    )


def _inner_of(d: Element, dbar: Optional[Element]) -> Element:
    if dbar is None:
        dbar = inner_inverse(d)
        if dbar is None:
            raise NotRegularError(f"{d} is not regular")
    elif d * dbar * d != d:
        raise PreconditionError(f"{dbar} is not an inner inverse of {d}")
    return dbar


# --- the four routes ---------------------------------------------------------

def inverse_along_definitional(a: Element, d: Element) -> Optional[AlongResult]:
    """Brute-force search over the whole ring."""
    ring = a.ring
    ring.require_enumerable()
    t = tables(ring)
    found = t.along_witnesses(t.idx(a), t.idx(d))
    if len(found) > 1:
        raise ConsistencyError(f"{a} has {len(found)} inverses along {d}")
    if not found:
        return None
    return AlongResult(t.elt(found[0]), "definitional", {"witness_count": 1})


def inverse_along_corner(
    a: Element, d: Element, dbar: Optional[Element] = None
) -> Optional[AlongResult]:
    dbar = _inner_of(d, dbar)
    e, f = d * dbar, dbar * d
    x = corner_invert(CornerRing(e), d * a * d * dbar)
    y = corner_invert(CornerRing(f), dbar * d * a * d)
    if (x is None) != (y is None):
        raise ConsistencyError(f"corner routes disagree on existence for a={a}, d={d}")
    if x is None:
        return None
    b = x * d
    if d * y != b:
        raise ConsistencyError(f"corner routes disagree: {b} vs {d * y}")
    if x != b * dbar or y != dbar * b:
        raise ConsistencyError(f"corner inverses are not a||d d- and d- a||d for a={a}, d={d}")
    return AlongResult(b, "corner", {"dbar": dbar, "x": x, "y": y})


def inverse_along_unit_formula(
    a: Element, d: Element, dbar: Optional[Element] = None
) -> Optional[AlongResult]:
    dbar = _inner_of(d, dbar)
    one = a.ring.one
    u = d * a + one - d * dbar
    v = a * d + one - dbar * d
    ui, vi = unit_inverse(u), unit_inverse(v)
    if (ui is None) != (vi is None):
        raise ConsistencyError(f"unit formulas disagree on existence for a={a}, d={d}")
    if ui is None:
        if inverse_along_corner(a, d, dbar) is not None:
            raise ConsistencyError(f"unit formula misses an inverse along {d} for a={a}")
        return None
    b = ui * d
    if d * vi != b:
        raise ConsistencyError(f"unit formulas disagree: {b} vs {d * vi}")
    return AlongResult(b, "unit", {"dbar": dbar, "left_unit": u, "right_unit": v})


def inverse_along_inner(a: Element, d: Element) -> Optional[AlongResult]:
    """``d x d`` with ``x`` an inner inverse of ``d a d``.

    Existence is settled by checking the candidate against the definition;
    on enumerable rings every inner inverse of ``d a d`` is tried and all
    must give the same result.
    """
    dad = d * a * d
    xs = list(inner_inverses(dad))
    if not xs:
        return None
    b = d * xs[0] * d
    if not is_inverse_along(b, a, d):
        return None
    for x in xs[1:]:
        if d * x * d != b:
            raise ConsistencyError(f"d x d depends on the inner inverse x of {dad}")
    return AlongResult(b, "dxd", {"x": xs[0], "inner_count": len(xs)})


def inverse_along(
    a: Element, d: Element, route: str = "corner", dbar: Optional[Element] = None
) -> Optional[AlongResult]:
    if route == "definitional":
        return inverse_along_definitional(a, d)
    if route == "corner":
        return inverse_along_corner(a, d, dbar)
    if route == "unit":
        return inverse_along_unit_formula(a, d, dbar)
    if route == "dxd":
        return inverse_along_inner(a, d)
    raise PreconditionError(f"unknown route {route!r}; expected one of {ROUTES}")


def _along(a: Element, d: Element) -> Optional[Element]:
    if a.ring.enumerable:
        t = tables(a.ring)
        return _elt(t, t.along_of(t.idx(a), t.idx(d)))
    if inner_inverse(d) is None:
        return None
    r = inverse_along_corner(a, d)
    return None if r is None else r.inverse


def _elt(t, i: int) -> Optional[Element]:
    return None if i < 0 else t.elt(i)


def _require_along(a: Element, d: Element) -> Element:
    b = _along(a, d)
    if b is None:
        raise PreconditionError(f"{a} is not invertible along {d}")
    return b


# --- the set of invertibles along d -----------------------------------------

def invertibles_along(d: Element) -> list[Element]:
    """Every ``a`` invertible along ``d``, in index order (empty if ``d`` is not regular)."""
    ring = d.ring
    ring.require_enumerable()
    t = tables(ring)
    return [t.elt(i) for i in sorted(t.along_set(t.idx(d)))]


def along_set_decomposition(
    d: Element, dbar: Optional[Element] = None, side: str = "left"
) -> list[Element]:
    """Materialize a sum-of-pieces description of the invertibles along ``d``.

    ``left``:       d- (e R e)^-1 + (1 - d- d) R d d- + R (1 - d d-),   e = d d-
    ``right``:      (f R f)^-1 d- + d- d R (1 - d d-) + (1 - d- d) R,    f = d- d
    ``idempotent``: (pRp)^-1 + pR(1-p) + (1-p)Rp + (1-p)R(1-p),          p = d
    """
    ring = d.ring
    ring.require_enumerable()
    t = tables(ring)
    if side == "idempotent":
        if not is_idempotent(d):
            raise PreconditionError(f"{d} is not idempotent")
        if dbar is not None and dbar != d:
            raise PreconditionError("the idempotent decomposition uses d- = d")
        p = t.idx(d)
        if p == t.zero:
            return list(ring.elements())
        if p == t.one:
            return [t.elt(i) for i in range(t.n) if t.is_unit(i)]
        q = t.s(t.one, p)
        pieces = [t.corner_units(p), t.sandwich_set(p, q), t.sandwich_set(q, p), t.sandwich_set(q, q)]
    else:
        dbar = _inner_of(d, dbar)
        di, bi = t.idx(d), t.idx(dbar)
        e, f = t.m(di, bi), t.m(bi, di)
        one_e, one_f = t.s(t.one, e), t.s(t.one, f)
        if side == "left":
            pieces = [
                {t.m(bi, v) for v in t.corner_units(e)},
                t.sandwich_set(one_f, e),
                t.right_mult_set(one_e),
            ]
        elif side == "right":
            pieces = [
                {t.m(z, bi) for z in t.corner_units(f)},
                t.sandwich_set(f, one_e),
                t.left_mult_set(one_f),
            ]
        else:
            raise PreconditionError(f"unknown side {side!r}")
    if not pieces[0]:
        return []
    return [t.elt(i) for i in sorted(t.sumset(*pieces))]


@dataclass(frozen=True)
class AlongDecomposition:
    s: Element
    t: Element
    flavor: str


def decompose_along(
    a: Element, d: Element, dbar: Optional[Element] = None, flavor: str = "left"
) -> Optional[AlongDecomposition]:
    """Split ``a`` into a group invertible part carrying ``a||d`` and a remainder.

    ``left``:       a = d- s + t,  s# d = a||d,  p_s = 1 - d d-,  d- d t d d- = 0
    ``right``:      a = u d- + v,  d u# = a||d,  p_u = 1 - d- d,  d- d v d d- = 0
    ``idempotent``: a = s + t,     s# = a||p,    p_s = 1 - p,     p t p = 0
    """
    one = a.ring.one
    if flavor == "idempotent":
        if not is_idempotent(d):
            raise PreconditionError(f"{d} is not idempotent")
        dbar = d
    else:
        dbar = _inner_of(d, dbar)
    r = inverse_along_corner(a, d, dbar)
    if r is None:
        return None
    b = r.inverse
    if flavor == "left":
        s = d * a * d * dbar
        rest = a - dbar * s
        idem, zero_check = one - d * dbar, dbar * d * rest * d * dbar
    elif flavor == "right":
        s = dbar * d * a * d
        rest = a - s * dbar
        idem, zero_check = one - dbar * d, dbar * d * rest * d * dbar
    elif flavor == "idempotent":
        s = d * a * d
        rest = a - s
        idem, zero_check = one - d, d * rest * d
    else:
        raise PreconditionError(f"unknown flavor {flavor!r}")
    g = group_inverse(s)
    if g is None or g.spectral_idempotent != idem or not zero_check.is_zero:
        raise ConsistencyError(f"decomposition of {a} along {d} violates its constraints")
    recovered = {"left": g.inverse * d, "right": d * g.inverse, "idempotent": g.inverse}[flavor]
    if recovered != b:
        raise ConsistencyError(f"decomposition of {a} along {d} does not recover the inverse")
    return AlongDecomposition(s, rest, flavor)


# --- characterizations -------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    """Truth values of the ideal-theoretic characterizations of ``b = a||d``.

    ``outer_block`` needs only ``b a b = b``; ``regular_block`` also needs
    ``d`` regular and is ``None`` otherwise.
    """

    outer_block: dict
    regular_block: Optional[dict]

    @property
    def value(self) -> bool:
        return self.outer_block["i"]


def check_equivalences(a: Element, b: Element, d: Element) -> EquivalenceReport:
    if b * a * b != b:
        raise PreconditionError(f"{b} is not an outer inverse of {a}")
    bR, dR = right_ideal(b), right_ideal(d)
    Rb, Rd = left_ideal(b), left_ideal(d)
    bA, dA = right_annihilator(b), right_annihilator(d)  # b^-1(0), d^-1(0)
    bL, dL = left_annihilator(b), left_annihilator(d)  # b_-1(0), d_-1(0)
    defn = bR == dR and Rb == Rd
    outer = {
        "i": defn,
        "ii": Rd == Rb and bR <= dR and bL <= dL,
        "iii": bR == dR and Rb <= Rd and bA <= dA,
        "iv": Rb <= Rd and bR <= dR and bL <= dL and bA <= dA,
    }
    if len(set(outer.values())) != 1:
        raise ConsistencyError(f"outer-inverse characterizations disagree: {outer}")
    regular = None
    if inner_inverse(d) is not None:
        regular = {
            "i": defn,
            "ii": Rd == Rb and dR <= bR and dL <= bL,
            "iii": bR == dR and Rd <= Rb and dA <= bA,
            "iv": Rb == Rd and bL == dL,
            "v": Rb <= Rd and dR <= bR and bA <= dA and dL <= bL,
            "vi": Rd <= Rb and bR <= dR and bL <= dL and dA <= bA,
            "vii": Rd <= Rb and dR <= bR and dA <= bA and dL <= bL,
            "viii": bR == dR and bA == dA,
            "ix": Rb <= Rd and bA <= dA and bL == dL,
            "x": Rd <= Rb and dA <= bA and bL == dL,
            "xi": dR <= bR and dL <= bL and bA == dA,
            "xii": bR <= dR and bL <= dL and bA == dA,
            "xiii": bA == dA and bL == dL,
        }
        if len(set(regular.values())) != 1:
            raise ConsistencyError(f"regular-d characterizations disagree: {regular}")
    return EquivalenceReport(outer, regular)


def reverse_order_law_counterexample(d: Element) -> Optional[tuple[Element, Element]]:
    """First pair ``(a, b)`` in ``R||d`` with ``ab`` not invertible along ``d`` or
    ``(ab)||d != b||d a||d``; ``None`` when the law holds for every pair."""
    ring = d.ring
    ring.require_enumerable()
    if inner_inverse(d) is None:
        raise NotRegularError(f"{d} is not regular")
    t = tables(ring)
    inv = t.along[0][:, t.idx(d)].tolist()
    members = [i for i in range(t.n) if inv[i] >= 0]
    for x in members:
        for y in members:
            b = inv[t.m(x, y)]
            if b < 0 or b != t.m(inv[y], inv[x]):
                return t.elt(x), t.elt(y)
    return None


def reverse_order_law_holds(d: Element) -> bool:
    """Whether ``(ab)||d = b||d a||d`` for all ``a, b`` invertible along ``d``.

    The law forces ``d`` to be group invertible (asserted).  The converse fails
    in noncommutative rings: along a nontrivial idempotent of M_2(Z_2) the
    product of two invertibles can leave ``R||d``.
    """
    holds = reverse_order_law_counterexample(d) is None
    if holds and group_inverse(d) is None:
        raise ConsistencyError(f"reverse order law holds along {d}, which is not group invertible")
    return holds


@dataclass(frozen=True)
class UnitTranslationReport:
    along_d: bool
    along_ud: bool
    along_du: bool
    left_identity: Optional[bool]
    right_identity: Optional[bool]

    @property
    def ok(self) -> bool:
        same = self.along_d == self.along_ud == self.along_du
        ids = self.left_identity is not False and self.right_identity is not False
        return same and ids


def translate_by_unit(a: Element, d: Element, u: Element) -> UnitTranslationReport:
    """Compare ``a||d`` with ``(a u^-1)||(u d)`` and ``(u^-1 a)||(d u)``."""
    ui = unit_inverse(u)
    if ui is None:
        raise PreconditionError(f"{u} is not a unit")
    if inner_inverse(d) is None:
        raise NotRegularError(f"{d} is not regular")
    b = _along(a, d)
    b_ud = _along(a * ui, u * d)
    b_du = _along(ui * a, d * u)
    left = right = None
    if b is not None and b_ud is not None:
        left = b_ud == u * b
    if b is not None and b_du is not None:
        right = b_du == b * u
    return UnitTranslationReport(b is not None, b_ud is not None, b_du is not None, left, right)


@dataclass(frozen=True)
class CommutingReport:
    """``commuting``: a a||d = a||d a.  The other fields are its characterizations."""

    commuting: bool
    group_and_commutes_with_spectral: bool
    corner_split: bool
    ideal_criterion: bool

    @property
    def consistent(self) -> bool:
        return len({self.commuting, self.group_and_commutes_with_spectral,
                    self.corner_split, self.ideal_criterion}) == 1


def is_commuting_along(a: Element, d: Element) -> CommutingReport:
    b = _require_along(a, d)
    commuting = a * b == b * a
    g = group_inverse(d)
    spectral = corner = False
    if g is not None:
        p = g.spectral_idempotent
        q = a.ring.one - p
        spectral = a * p == p * a
        x, m = q * a * q, p * a * p
        corner = a == x + m and corner_invert(CornerRing(q), x) is not None
    ideal_crit = (d * a) in left_ideal(d) and (a * d) in right_ideal(d)
    report = CommutingReport(commuting, spectral, corner, ideal_crit)
    if not report.consistent:
        raise ConsistencyError(f"commuting characterizations disagree for a={a}, d={d}: {report}")
    return report


@dataclass(frozen=True)
class InnerCriteriaReport:
    inner: bool
    right_direct_sum: bool
    left_direct_sum: bool
    reflexive_on_compression: Optional[bool]
    group_formula: Optional[bool]
    mp_formula: Optional[bool]


def inner_inverse_criteria(a: Element, d: Element, dbar: Optional[Element] = None) -> InnerCriteriaReport:
    """When is ``a||d`` also an inner inverse of ``a``, and what follows from it."""
    b = _require_along(a, d)
    inner = a * b * a == a
    rsum = direct_sum(right_ideal(d), right_annihilator(a))
    lsum = direct_sum(left_ideal(d), left_annihilator(a))
    if not inner == rsum == lsum:
        raise ConsistencyError(f"inner-inverse criteria disagree for a={a}, d={d}")
    refl = gf = mf = None
    if inner:
        dbar = _inner_of(d, dbar)
        c = dbar * d * a * d * dbar
        refl = c * b * c == c and b * c * b == b
        g = group_inverse(d)
        if g is not None:
            h = group_inverse(g.inverse * d * a * d * g.inverse)
            gf = h is not None and h.inverse == b
        if a.ring.has_involution:
            m = mp_inverse(d)
            if m is not None:
                h = mp_inverse(m.inverse * d * a * d * m.inverse)
                mf = h is not None and h.inverse == b
    return InnerCriteriaReport(inner, rsum, lsum, refl, gf, mf)


def classical_from_inner(a: Element, mode: str = "group") -> dict:
    """Group / Moore-Penrose inverse recovered from inner inverses; every check must hold."""
    checks: dict[str, bool] = {}
    if mode == "group":
        g = group_inverse(a)
        if g is None:
            raise PreconditionError(f"{a} is not group invertible")
        gi = g.inverse
        checks["a abar a# = a# = a# abar a"] = all(
            a * z * gi == gi == gi * z * a for z in inner_inverses(a)
        )
        xs = list(inner_inverses(a ** 3))
        checks["a# = a x a for x inner of a^3"] = bool(xs) and all(a * x * a == gi for x in xs)
        if a.ring.has_involution:
            m = mp_inverse(a)
            if m is not None and a * m.inverse == m.inverse * a:
                h = mp_inverse(m.inverse * a ** 3 * m.inverse)
                checks["EP: a# = (a+ a^3 a+)+"] = h is not None and h.inverse == gi
    elif mode == "mp":
        if not a.ring.has_involution:
            raise PreconditionError(f"{a.ring.spec} has no involution")
        m = mp_inverse(a)
        if m is None:
            raise PreconditionError(f"{a} is not Moore-Penrose invertible")
        mi, s = m.inverse, a.star()
        checks["a+ (a abar)* = a+ = (abar a)* a+"] = all(
            mi * (a * z).star() == mi == (z * a).star() * mi for z in inner_inverses(a)
        )
        xs = list(inner_inverses(s * a * s))
        checks["a+ = a* x a* for x inner of a* a a*"] = bool(xs) and all(s * x * s == mi for x in xs)
        if a * mi == mi * a:
            g = group_inverse(a)
            gi = g.inverse
            h = group_inverse((a * gi).star() * a * (gi * a).star())
            checks["EP: a+ = ((a a#)* a (a# a)*)#"] = h is not None and h.inverse == mi
    else:
        raise PreconditionError(f"unknown mode {mode!r}")
    return checks

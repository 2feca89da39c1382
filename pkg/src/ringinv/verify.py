"""Exhaustive theorem checks and element census over enumerable rings.

Each catalog entry quantifies one statement about inverses along an element
over every element of a finite ring (free variables beyond the third are
drawn from a budgeted stratum on rings larger than ``full_cap``).  Checks run
at index level against brute-force Cayley-table data and, wherever a library
routine exists for the same quantity, compare the two.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import along as al
from . import geninv as gi
from .errors import ConsistencyError, UnknownTheoremError
from .finite import RingTables, tables
from .ideals import direct_sum, left_annihilator, left_ideal, right_annihilator, right_ideal
from .rings import Ring

FULL_CAP = 16
SAMPLE_SIZE = 24
MAX_FAILURES = 50
DBAR_CHOICES = 4  # the first inner inverse plus up to three alternatives


@dataclass
class TheoremReport:
    theorem_id: str
    ring: str
    status: str
    instances_checked: int
    failures: list = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "theorem_id": self.theorem_id,
            "ring": self.ring,
            "status": self.status,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
        }
        if self.notes:
            out["notes"] = self.notes
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


class Sweep:
    """Bookkeeping and index-level helpers for one catalog run."""

    def __init__(self, ring: Ring, seed: int = 0, full_cap: int = FULL_CAP, sample_size: int = SAMPLE_SIZE):
        self.ring = ring
        self.t: RingTables = tables(ring)
        self.seed = seed
        self.full_cap = full_cap
        self.sample_size = sample_size
        self.instances = 0
        self.failures: list = []
        self.failure_count = 0
        self.notes: list = []
        self.applicable = True

    # bookkeeping
    def tick(self, k: int = 1) -> None:
        self.instances += k

    def check(self, cond: bool, label: str, **witness) -> bool:
        if not cond:
            self.failure_count += 1
            if len(self.failures) < MAX_FAILURES:
                self.failures.append([label] + [f"{k}={self.fmt(v)}" for k, v in witness.items()])
        return cond

    def guard(self, label: str, fn: Callable, **witness):
        """Run a library call; a consistency error becomes a recorded failure."""
        try:
            return fn()
        except ConsistencyError as exc:
            self.check(False, f"{label}: {exc}", **witness)
            return None

    def fmt(self, v) -> str:
        if isinstance(v, int) and not isinstance(v, bool):
            return str(self.t.elt(v)) if 0 <= v < self.t.n else str(v)
        return str(v)

    # ring data
    @property
    def all(self) -> range:
        return range(self.t.n)

    def el(self, i: int):
        return self.t.elt(i)

    def dbars(self, d: int) -> tuple:
        return self.t.inner[d][:DBAR_CHOICES]

    def along(self, a: int, d: int) -> int:
        return self.t.along_of(a, d)

    def g(self, a: int) -> int:
        return self.t.group_of(a)

    def spectral(self, a: int) -> int:
        """``1 - a# a`` for group invertible ``a``."""
        return self.t.s(self.t.one, self.t.m(self.g(a), a))

    def stratum(self) -> list:
        t = self.t
        if t.n <= self.full_cap:
            return list(range(t.n))
        extremes = {t.zero, t.one}
        extremes |= {i for i in range(t.n) if t.idempotent[i] or t.is_unit(i)}
        rest = [i for i in range(t.n) if i not in extremes]
        rng = random.Random(self.seed)
        sample = rng.sample(rest, min(self.sample_size, len(rest)))
        return sorted(extremes | set(sample))

    def direct_sum_masks(self, m1: int, m2: int) -> bool:
        t = self.t
        if m1 & m2 != 1 << t.zero:
            return False
        bits1 = [i for i in range(t.n) if m1 >> i & 1]
        bits2 = [i for i in range(t.n) if m2 >> i & 1]
        return len(t.sumset(bits1, bits2)) == t.n

    def nontrivial_mp(self) -> list:
        t = self.t
        return [a for a in self.all if t.mp_of(a) >= 0 and a != t.zero and not t.is_unit(a)]

    def ep_elements(self) -> list:
        t = self.t
        return [a for a in self.all if t.mp_of(a) >= 0 and t.m(a, t.mp_of(a)) == t.m(t.mp_of(a), a)]


CATALOG: dict[str, tuple[str, Callable[[Sweep], None]]] = {}


def entry(theorem_id: str, title: str):
    def register(fn):
        CATALOG[theorem_id] = (title, fn)
        return fn

    return register


# --- section 2 facts ---------------------------------------------------------

@entry("REMA1", "outer inverses: idempotents, ideal identities, inner <=> direct sums")
def _rema1(sw: Sweep):
    t = sw.t
    for a in sw.all:
        for b in sw.all:
            if t.m(b, a, b) != b:
                continue
            sw.tick()
            ab, ba = t.m(a, b), t.m(b, a)
            w = dict(a=a, b=b)
            sw.check(t.idempotent[ab] and t.idempotent[ba], "(i) ab, ba idempotent", **w)
            sw.check(t.rp_mask[b] == t.rp_mask[ba], "(ii) bR = baR", **w)
            sw.check(t.lp_mask[ab] == t.lp_mask[b], "(ii) Rab = Rb", **w)
            sw.check(t.ra_mask[b] == t.ra_mask[ab], "(iii) b^-1(0) = (ab)^-1(0)", **w)
            sw.check(t.la_mask[b] == t.la_mask[ba], "(iii) b_-1(0) = (ba)_-1(0)", **w)
            s1 = t.m(a, b, a) == a
            s2 = sw.direct_sum_masks(t.rp_mask[b], t.ra_mask[a])
            s3 = sw.direct_sum_masks(t.lp_mask[b], t.la_mask[a])
            sw.check(s1 == s2 == s3, "(iv) a=aba <=> R=bR+a^-1(0) <=> R=Rb+a_-1(0)", **w)
            A, B = sw.el(a), sw.el(b)
            lib2 = direct_sum(right_ideal(B), right_annihilator(A))
            lib3 = direct_sum(left_ideal(B), left_annihilator(A))
            sw.check(lib2 == s2 and lib3 == s3, "(iv) library direct_sum agrees with enumeration", **w)


@entry("REMA7", "degenerate d: d=0, units, non-regular d, regular non-zero-divisors")
def _rema7(sw: Sweep):
    t = sw.t
    units = frozenset(i for i in sw.all if t.is_unit(i))
    zero_mask = 1 << t.zero
    for a in sw.all:
        sw.tick()
        sw.check(sw.along(a, t.zero) == t.zero, "a||0 = 0", a=a)
        b1 = sw.along(a, t.one)
        sw.check((b1 >= 0) == t.is_unit(a), "a||1 exists iff a is a unit", a=a)
        if b1 >= 0:
            sw.check(b1 == t.unit_inv[a], "a||1 = a^-1", a=a)
    for d in sw.all:
        sw.tick()
        regular = bool(t.inner[d])
        if not regular:
            sw.check(not t.along_set(d), "no inverse along a non-regular d", d=d)
        if t.is_unit(d):
            sw.check(t.along_set(d) == units, "R||u = units for a unit u", d=d)
            for a in units:
                sw.check(sw.along(a, d) == t.unit_inv[a], "a||u = a^-1", a=a, d=d)
        if regular and t.la_mask[d] == zero_mask and t.ra_mask[d] == zero_mask:
            sw.check(t.is_unit(d), "regular non-zero-divisor is a unit", d=d)


@entry("REMA13", "group inverse: ideals, spectral idempotent, commuting inner inverses, powers")
def _rema13(sw: Sweep):
    t = sw.t
    idems = [p for p in sw.all if t.idempotent[p]]
    for a in sw.all:
        sw.tick()
        g = sw.g(a)
        sw.check((sw.along(a, a) >= 0) == (g >= 0), "a group invertible iff invertible along a", a=a)
        # idempotent characterization (both directions, every idempotent)
        via = []
        for p in idems:
            q = t.s(t.one, p)
            if t.m(q, a, q) == a:
                w = t.corner_inv(q, a)
                if w >= 0:
                    via.append((p, w))
        sw.check(bool(via) == (g >= 0), "(ii) group invertible iff a=(1-p)a(1-p) unit in corner", a=a)
        lib = gi.group_inverse_via_idempotent(sw.el(a))
        sw.check((lib is None) == (g < 0) and (lib is None or t.idx(lib) == g),
                 "(ii) library idempotent route agrees", a=a)
        for b in t.inner[a]:
            if t.m(a, b) == t.m(b, a):
                sw.check(g >= 0 and g == t.m(b, a, b), "(iii) commuting inner b gives a# = bab", a=a, b=b)
        if g < 0:
            continue
        pa = sw.spectral(a)
        sw.check(sw.along(a, a) == g, "a||a = a#", a=a)
        for p, w in via:
            sw.check(w == g and p == pa, "(ii) corner inverse is a#, p = p_a", a=a, p=p)
        rp = [t.idempotent[p] and t.is_unit(t.a(a, p)) and t.m(a, p) == t.zero == t.m(p, a) for p in idems]
        sw.check([p for p, ok in zip(idems, rp) if ok] == [pa], "(ii) unique p with a+p unit, ap=pa=0", a=a)
        ag, ga = t.m(a, g), t.m(g, a)
        sw.check(t.rp_mask[a] == t.rp_mask[ag] == t.rp_mask[ga] == t.rp_mask[g], "(i) aR = aa#R = a#aR = a#R", a=a)
        sw.check(t.lp_mask[a] == t.lp_mask[ag] == t.lp_mask[ga] == t.lp_mask[g], "(i) Ra = Raa# = Ra#a = Ra#", a=a)
        sw.check(t.sandwich_set(ag, ag) == t.sandwich_set(ga, ga) == t.sandwich_set(a, a) == t.sandwich_set(g, g),
                 "(i) aa#Raa# = a#aRa#a = aRa = a#Ra#", a=a)
        sw.check(sw.g(g) == a, "(a#)# = a", a=a)
        for n in range(1, 5):
            an = t.pow(a, n)
            gn = sw.g(an)
            sw.check(gn == t.pow(g, n) and sw.spectral(an) == pa, "(iv) (a^n)# = (a#)^n, p_{a^n} = p_a", a=a, n=n)


@entry("PRO3", "annihilator inclusions force d = dab, d = bad and ideal inclusions")
def _pro3(sw: Sweep):
    t = sw.t
    sub = RingTables.subset
    for a in sw.all:
        for b in sw.all:
            if t.m(b, a, b) != b:
                continue
            for d in sw.all:
                sw.tick()
                w = dict(a=a, b=b, d=d)
                if sub(t.ra_mask[b], t.ra_mask[d]):
                    sw.check(d == t.m(d, a, b) and sub(t.lp_mask[d], t.lp_mask[b]), "(i) d = dab", **w)
                if sub(t.la_mask[b], t.la_mask[d]):
                    sw.check(d == t.m(b, a, d) and sub(t.rp_mask[d], t.rp_mask[b]), "(ii) d = bad", **w)
                if t.inner[d]:
                    if sub(t.ra_mask[d], t.ra_mask[b]):
                        sw.check(sub(t.lp_mask[b], t.lp_mask[d]), "(iii) Rb in Rd", **w)
                    if sub(t.la_mask[d], t.la_mask[b]):
                        sw.check(sub(t.rp_mask[b], t.rp_mask[d]), "(iv) bR in dR", **w)


# --- section 3: equivalent conditions ----------------------------------------

def _statements(t: RingTables, b: int, d: int):
    sub = RingTables.subset
    bR, dR, Rb, Rd = t.rp_mask[b], t.rp_mask[d], t.lp_mask[b], t.lp_mask[d]
    bA, dA, bL, dL = t.ra_mask[b], t.ra_mask[d], t.la_mask[b], t.la_mask[d]
    defn = bR == dR and Rb == Rd
    four = [
        defn,
        Rd == Rb and sub(bR, dR) and sub(bL, dL),
        bR == dR and sub(Rb, Rd) and sub(bA, dA),
        sub(Rb, Rd) and sub(bR, dR) and sub(bL, dL) and sub(bA, dA),
    ]
    thirteen = [
        defn,
        Rd == Rb and sub(dR, bR) and sub(dL, bL),
        bR == dR and sub(Rd, Rb) and sub(dA, bA),
        Rb == Rd and bL == dL,
        sub(Rb, Rd) and sub(dR, bR) and sub(bA, dA) and sub(dL, bL),
        sub(Rd, Rb) and sub(bR, dR) and sub(bL, dL) and sub(dA, bA),
        sub(Rd, Rb) and sub(dR, bR) and sub(dA, bA) and sub(dL, bL),
        bR == dR and bA == dA,
        sub(Rb, Rd) and sub(bA, dA) and bL == dL,
        sub(Rd, Rb) and sub(dA, bA) and bL == dL,
        sub(dR, bR) and sub(dL, bL) and bA == dA,
        sub(bR, dR) and sub(bL, dL) and bA == dA,
        bA == dA and bL == dL,
    ]
    return four, thirteen


def _equivalence_entry(sw: Sweep, regular_block: bool):
    t = sw.t
    for a in sw.all:
        for b in sw.all:
            if t.m(b, a, b) != b:
                continue
            for d in sw.all:
                if regular_block and not t.inner[d]:
                    continue
                sw.tick()
                w = dict(a=a, b=b, d=d)
                four, thirteen = _statements(t, b, d)
                block = thirteen if regular_block else four
                sw.check(len(set(block)) == 1, "statements not all equivalent", **w)
                sw.check(block[0] == (sw.along(a, d) == b), "(i) disagrees with the definitional search", **w)
                rep = sw.guard("library check_equivalences",
                               lambda: al.check_equivalences(sw.el(a), sw.el(b), sw.el(d)), **w)
                if rep is not None:
                    lib = rep.regular_block if regular_block else rep.outer_block
                    sw.check(lib is not None and list(lib.values()) == block,
                             "library ideal handles disagree with enumeration", **w)


@entry("THM4", "four characterizations for an outer inverse b")
def _thm4(sw: Sweep):
    _equivalence_entry(sw, regular_block=False)


@entry("THM5", "thirteen characterizations for an outer inverse b and regular d")
def _thm5(sw: Sweep):
    _equivalence_entry(sw, regular_block=True)


# --- section 4: corner rings -------------------------------------------------

def _regular_pairs(sw: Sweep):
    for d in sw.t.regular:
        for a in sw.all:
            yield a, d


@entry("THM8", "a||d exists iff d a d d- is a unit of the corner (five equivalent forms)")
def _thm8(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        sw.tick()
        b = sw.along(a, d)
        for db in sw.dbars(d):
            w = dict(a=a, d=d, dbar=db)
            e, f = t.m(d, db), t.m(db, d)
            u, v = t.m(d, a, d, db), t.m(db, d, a, d)
            x, y = t.corner_inv(e, u), t.corner_inv(f, v)
            gu, gv = sw.g(u), sw.g(v)
            stm = [
                b >= 0,
                x >= 0,
                y >= 0,
                gu >= 0 and sw.spectral(u) == t.s(t.one, e),
                gv >= 0 and sw.spectral(v) == t.s(t.one, f),
            ]
            sw.check(len(set(stm)) == 1, "(i)-(v) not equivalent", **w)
            if b >= 0 and x >= 0 and y >= 0:
                sw.check(t.m(x, d) == b and t.m(d, y) == b, "x d = a||d = d y", **w)
            r = sw.guard("corner route", lambda: al.inverse_along_corner(sw.el(a), sw.el(d), sw.el(db)), **w)
            sw.check((r is None and b < 0) or (r is not None and t.idx(r.inverse) == b),
                     "library corner route disagrees", **w)


@entry("REMA4000", "corner inverses equal a||d d- and d- a||d and are group inverses")
def _rema4000(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        b = sw.along(a, d)
        if b < 0:
            continue
        sw.tick()
        for db in sw.dbars(d):
            w = dict(a=a, d=d, dbar=db)
            e, f = t.m(d, db), t.m(db, d)
            u, v = t.m(d, a, d, db), t.m(db, d, a, d)
            x, y = t.m(b, db), t.m(db, b)
            sw.check(t.corner_inv(e, u) == x and sw.g(u) == x, "(d a d d-)^-1 = (d a d d-)# = a||d d-", **w)
            sw.check(t.corner_inv(f, v) == y and sw.g(v) == y, "(d- d a d)^-1 = (d- d a d)# = d- a||d", **w)


@entry("COR9", "a, a d d-, d- d a are simultaneously invertible along d with equal inverses")
def _cor9(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        sw.tick()
        b = sw.along(a, d)
        for db in sw.dbars(d):
            b2, b3 = sw.along(t.m(a, d, db), d), sw.along(t.m(db, d, a), d)
            sw.check(b == b2 == b3, "a||d = (a d d-)||d = (d- d a)||d", a=a, d=d, dbar=db)


@entry("COR10", "perturbations by x(1 - d d-) and (1 - d- d)y keep a||d")
def _cor10(sw: Sweep):
    t = sw.t
    xs = sw.stratum()
    for a, d in _regular_pairs(sw):
        b = sw.along(a, d)
        if b < 0:
            continue
        for db in sw.dbars(d):
            le, rf = t.s(t.one, t.m(d, db)), t.s(t.one, t.m(db, d))
            for x in xs:
                xl = t.m(x, le)
                for y in xs:
                    sw.tick()
                    yr = t.m(rf, y)
                    ok = sw.along(t.a(a, xl), d) == b and sw.along(t.a(a, yr), d) == b and sw.along(t.a(a, xl, yr), d) == b
                    sw.check(ok, "perturbed element has a different inverse", a=a, d=d, dbar=db, x=x, y=y)


@entry("COR1000", "along an idempotent p: a, ap, pa, pap in (pRp)^-1, pap group invertible")
def _cor1000(sw: Sweep):
    t = sw.t
    for p in sw.all:
        if not t.idempotent[p]:
            continue
        q = t.s(t.one, p)
        for a in sw.all:
            sw.tick()
            pap = t.m(p, a, p)
            b = sw.along(a, p)
            g = sw.g(pap)
            stm = [
                b >= 0,
                sw.along(t.m(a, p), p) >= 0,
                sw.along(t.m(p, a), p) >= 0,
                t.corner_inv(p, pap) >= 0,
                g >= 0 and sw.spectral(pap) == q,
            ]
            sw.check(len(set(stm)) == 1, "(i)-(v) not equivalent", a=a, p=p)
            if b >= 0:
                sw.check(b == sw.along(t.m(a, p), p) == sw.along(t.m(p, a), p) == g,
                         "a||p = (ap)||p = (pa)||p = (pap)#", a=a, p=p)


# --- section 5: the set of invertibles along d ------------------------------

def _pieces(sw: Sweep, d: int, db: int):
    t = sw.t
    e, f = t.m(d, db), t.m(db, d)
    ce, cf = t.s(t.one, e), t.s(t.one, f)
    return e, f, ce, cf


@entry("THM11", "R||d as a sum of a corner-unit piece and two ideal pieces")
def _thm11(sw: Sweep):
    t = sw.t
    zs = sw.stratum()
    for d in t.regular:
        target = t.along_set(d)
        for db in sw.dbars(d):
            sw.tick()
            w = dict(d=d, dbar=db)
            e, f, ce, cf = _pieces(sw, d, db)
            ue, uf = t.corner_units(e), t.corner_units(f)
            set_i = t.sumset({t.m(db, v) for v in ue}, t.sandwich_set(cf, e), t.right_mult_set(ce))
            set_ii = t.sumset({t.m(z, db) for z in uf}, t.sandwich_set(f, ce), t.left_mult_set(cf))
            sw.check(set_i == target, "(i) set identity", **w)
            sw.check(set_ii == target, "(ii) set identity", **w)
            for side in ("left", "right"):
                lib = al.along_set_decomposition(sw.el(d), sw.el(db), side)
                sw.check(frozenset(t.idx(x) for x in lib) == target, f"library {side} decomposition", **w)
            for v in ue:
                wv = t.corner_inv(e, v)
                for x in zs:
                    for y in zs:
                        a = t.a(t.m(db, v), t.m(cf, x, e), t.m(y, ce))
                        sw.check(sw.along(a, d) == t.m(wv, d), "(i) (d- v + ...)||d = w d", v=v, x=x, y=y, **w)
            for z in uf:
                uz = t.corner_inv(f, z)
                for s in zs:
                    for r in zs:
                        a = t.a(t.m(z, db), t.m(f, s, ce), t.m(cf, r))
                        sw.check(sw.along(a, d) == t.m(d, uz), "(ii) (z d- + ...)||d = d u", z=z, s=s, t=r, **w)
    for p in sw.all:
        if not t.idempotent[p] or p in (t.zero, t.one):
            continue
        sw.tick()
        q = t.s(t.one, p)
        tail = t.sumset(t.sandwich_set(p, q), t.sandwich_set(q, p), t.sandwich_set(q, q))
        units = t.corner_units(p)
        sw.check(t.sumset(units, tail) == t.along_set(p), "(iii) set identity", p=p)
        lib = al.along_set_decomposition(sw.el(p), None, "idempotent")
        sw.check(frozenset(t.idx(x) for x in lib) == t.along_set(p), "library idempotent decomposition", p=p)
        for r in units:
            l = t.corner_inv(p, r)
            for m in tail:
                sw.check(sw.along(t.a(r, m), p) == l, "(iii) (r + m)||p = l", p=p, r=r, m=m)


@entry("REMA12", "the pieces of the decomposition overlap only trivially")
def _rema12(sw: Sweep):
    t = sw.t
    zero = frozenset({t.zero})
    for d in t.regular:
        for db in sw.dbars(d):
            sw.tick()
            w = dict(d=d, dbar=db)
            e, f, ce, cf = _pieces(sw, d, db)
            A = t.sandwich_set(cf, e)  # (1 - d- d) R d d-
            B = t.right_mult_set(ce)  # R (1 - d d-)
            C = t.sandwich_set(f, ce)  # d- d R (1 - d d-)
            D = t.left_mult_set(cf)  # (1 - d- d) R
            E = t.sandwich_set(cf, ce)  # (1 - d- d) R (1 - d d-)
            sw.check(t.sumset(A, B) == t.sumset(C, D) == t.sumset(A, C, E), "(i) tail identities", **w)
            head = {t.m(db, v) for v in t.corner_units(e)}
            sw.check(head <= t.sandwich_set(f, e), "(ii) d-(eRe)^-1 in d- d R d d-", **w)
            if d == t.zero:
                # zero corner ring: its unit 0 lies in every summand
                sw.check(head & t.sumset(A, B) == {t.zero}, "(ii) d=0 head meets tail beyond 0", **w)
            else:
                sw.check(not head & t.sumset(A, B), "(ii) head meets tail", **w)
            sw.check(frozenset(A & B) == zero, "(ii) (1-d-d)Rdd- meets R(1-dd-)", **w)
            sw.check(frozenset(C & E) == zero, "(ii) d-dR(1-dd-) meets (1-d-d)R(1-dd-)", **w)
            for v in t.corner_units(e):
                wv = t.corner_inv(e, v)
                sw.check(wv == t.m(sw.along(t.m(db, v), d), db), "(iv) w = (d- v)||d d-", v=v, **w)
            for z in t.corner_units(f):
                uz = t.corner_inv(f, z)
                sw.check(uz == t.m(db, sw.along(t.m(z, db), d)), "(iv) u = d- (z d-)||d", z=z, **w)
    for p in sw.all:
        if not t.idempotent[p] or p in (t.zero, t.one):
            continue
        sw.tick()
        q = t.s(t.one, p)
        P, Q, S = t.sandwich_set(p, q), t.sandwich_set(q, p), t.sandwich_set(q, q)
        units = set(t.corner_units(p))
        sw.check(not units & t.sumset(P, Q, S), "(iii) (pRp)^-1 meets the tail", p=p)
        sw.check(frozenset(P & Q) == frozenset(P & S) == frozenset(Q & S) == zero, "(iii) pairwise meets", p=p)
        for r in units:
            sw.check(t.corner_inv(p, r) == sw.g(r), "(iv) l = r#", p=p, r=r)


@entry("THM19", "unique decompositions a = d- s + t, a = u d- + v, a = s + t")
def _thm19(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        sw.tick()
        b = sw.along(a, d)
        for db in sw.dbars(d):
            w = dict(a=a, d=d, dbar=db)
            e, f, ce, cf = _pieces(sw, d, db)
            left = [s for s in sw.all if sw.g(s) >= 0 and sw.spectral(s) == ce
                    and t.m(f, t.s(a, t.m(db, s)), e) == t.zero]
            right = [u for u in sw.all if sw.g(u) >= 0 and sw.spectral(u) == cf
                     and t.m(f, t.s(a, t.m(u, db)), e) == t.zero]
            expect = 1 if b >= 0 else 0
            sw.check(len(left) == expect, "(ii) decomposition count", found=len(left), **w)
            sw.check(len(right) == expect, "(iii) decomposition count", found=len(right), **w)
            if b < 0:
                continue
            if left:
                sw.check(t.m(sw.g(left[0]), d) == b, "(ii) a||d = s# d", **w)
                r = sw.guard("library left decomposition",
                             lambda: al.decompose_along(sw.el(a), sw.el(d), sw.el(db), "left"), **w)
                sw.check(r is not None and t.idx(r.s) == left[0], "library left decomposition", **w)
            if right:
                sw.check(t.m(d, sw.g(right[0])) == b, "(iii) a||d = d u#", **w)
                r = sw.guard("library right decomposition",
                             lambda: al.decompose_along(sw.el(a), sw.el(d), sw.el(db), "right"), **w)
                sw.check(r is not None and t.idx(r.s) == right[0], "library right decomposition", **w)
    for p in sw.all:
        if not t.idempotent[p]:
            continue
        q = t.s(t.one, p)
        for a in sw.all:
            sw.tick()
            b = sw.along(a, p)
            found = [s for s in sw.all if sw.g(s) >= 0 and sw.spectral(s) == q
                     and t.m(p, t.s(a, s), p) == t.zero]
            sw.check(len(found) == (1 if b >= 0 else 0), "idempotent decomposition count", a=a, p=p)
            if b >= 0 and found:
                sw.check(sw.g(found[0]) == b, "a||p = s#", a=a, p=p)


def _same_along(sw: Sweep, ds: list, label: str, **w):
    t = sw.t
    sets = [t.along_set(d) for d in ds]
    sw.check(all(s == sets[0] for s in sets), f"{label}: sets differ", **w)
    for x in sets[0]:
        vals = {sw.along(x, d) for d in ds}
        sw.check(len(vals) == 1, f"{label}: inverses differ", x=x, **w)


@entry("THM14", "R||d coincides for powers of group, Drazin, gD inverses and EP elements")
def _thm14(sw: Sweep):
    t = sw.t
    one = t.one
    for a in sw.all:
        g = sw.g(a)
        if g >= 0:
            sw.tick()
            for n in range(1, 4):
                _same_along(sw, [t.pow(a, n), t.pow(g, n), t.s(one, sw.spectral(a))], "(i)", a=a, n=n)
        found = t.drazin_search(a)
        sw.check(len(found) == 1, "Drazin inverse exists and is unique", a=a)
        if len(found) != 1:
            continue
        sw.tick()
        x, k = found[0]
        lib = gi.drazin_inverse(sw.el(a))
        sw.check(lib is not None and t.idx(lib.inverse) == x and lib.index == k,
                 "library Drazin inverse and index", a=a)
        k = max(k, 1)
        api = t.s(one, t.m(a, x))
        for n in range(1, 4):
            for m in range(k, k + 3):
                ds = [t.pow(x, n), t.pow(a, m), t.s(one, api)]
                ds += [t.m(t.pow(a, j), x, a) for j in range(1, k)]
                _same_along(sw, ds, "(ii)", a=a, n=n, m=m)
        gd = gi.generalized_drazin_inverse(sw.el(a))
        sw.check(gd is not None and t.idx(gd.inverse) == x and t.idx(gd.spectral_idempotent) == api,
                 "gD inverse equals Drazin inverse", a=a)
        for n in range(1, 4):
            _same_along(sw, [t.pow(x, n), t.m(t.pow(a, n), x, a), t.s(one, api)], "(iii)", a=a, n=n)
    eps = [a for a in sw.ep_elements()]
    if not [a for a in eps if a != t.zero and not t.is_unit(a)]:
        sw.notes.append("(iv) no nontrivial EP element")
    for a in eps:
        sw.tick()
        mp = t.mp_of(a)
        for n in range(1, 4):
            ds = [t.pow(a, n), t.pow(mp, n), t.pow(int(t.star[a]), n), t.pow(int(t.star[mp]), n), t.m(a, mp)]
            _same_along(sw, ds, "(iv)", a=a, n=n)


@entry("COR21", "along a group invertible d: a = s + t with p_s = p_d")
def _cor21(sw: Sweep):
    t = sw.t
    for d in sw.all:
        if sw.g(d) < 0:
            continue
        pd = sw.spectral(d)
        qd = t.s(t.one, pd)
        for a in sw.all:
            sw.tick()
            b = sw.along(a, d)
            found = [s for s in sw.all if sw.g(s) >= 0 and sw.spectral(s) == pd
                     and t.m(qd, t.s(a, s), qd) == t.zero]
            sw.check(len(found) == (1 if b >= 0 else 0), "decomposition count", a=a, d=d)
            if b >= 0 and found:
                sw.check(sw.g(found[0]) == b, "a||d = s#", a=a, d=d)


@entry("THM15", "reverse order law along d holds iff d is group invertible")
def _thm15(sw: Sweep):
    t = sw.t
    for d in t.regular:
        sw.tick()
        inv = t.along[0][:, d].tolist()
        members = [i for i in range(t.n) if inv[i] >= 0]
        bad = next(((x, y) for x in members for y in members
                    if inv[t.m(x, y)] < 0 or inv[t.m(x, y)] != t.m(inv[y], inv[x])), None)
        holds, group = bad is None, sw.g(d) >= 0
        sw.check(not holds or group, "(i) => (ii): law holds but d is not group invertible", d=d)
        if bad is not None:
            sw.check(not group, "(ii) => (i): d group invertible, law fails", d=d, a=bad[0], b=bad[1])
        lib = sw.guard("library reverse_order_law_holds", lambda: al.reverse_order_law_holds(sw.el(d)), d=d)
        sw.check(lib is None or lib == holds, "library reverse order law", d=d)


@entry("THM16", "translation by units: (a u^-1)||(ud) = u a||d, (u^-1 a)||(du) = a||d u")
def _thm16(sw: Sweep):
    t = sw.t
    units = [u for u in sw.all if t.is_unit(u)]
    for d in t.regular:
        base = t.along_set(d)
        for u in units:
            ui = int(t.unit_inv[u])
            ud, du = t.m(u, d), t.m(d, u)
            sw.check(t.along_set(ud) == frozenset(t.m(x, ui) for x in base), "R||ud = R||d u^-1", d=d, u=u)
            sw.check(t.along_set(du) == frozenset(t.m(ui, x) for x in base), "R||du = u^-1 R||d", d=d, u=u)
            for a in sw.all:
                sw.tick()
                w = dict(a=a, d=d, u=u)
                b, b1, b2 = sw.along(a, d), sw.along(t.m(a, ui), ud), sw.along(t.m(ui, a), du)
                sw.check((b >= 0) == (b1 >= 0) == (b2 >= 0), "(i) <=> (ii) <=> (iii)", **w)
                if b >= 0:
                    sw.check(b1 == t.m(u, b) and b2 == t.m(b, u), "translated inverses", **w)
    d_el = [sw.el(d) for d in t.regular[:4]]
    for d in d_el:
        for u in units[:3]:
            rep = al.translate_by_unit(sw.el(t.one), d, sw.el(u))
            sw.check(rep.ok, "library translate_by_unit", d=t.idx(d), u=u)


# --- section 6: commuting inverses -------------------------------------------

@entry("THM17", "a a||d = a||d a iff d group invertible and a commutes with p_d")
def _thm17(sw: Sweep):
    t = sw.t
    for d in t.regular:
        gd = sw.g(d)
        for a in sorted(t.along_set(d)):
            sw.tick()
            w = dict(a=a, d=d)
            b = sw.along(a, d)
            s1 = t.m(a, b) == t.m(b, a)
            s2 = s3 = False
            if gd >= 0:
                p = sw.spectral(d)
                q = t.s(t.one, p)
                s2 = t.m(a, p) == t.m(p, a)
                pRp = set(t.corner(p))
                s3 = any(t.s(a, x) in pRp for x in t.corner_units(q))
            sw.check(s1 == s2 == s3, "(i) <=> (ii) <=> (iii)", **w)
            rep = sw.guard("library is_commuting_along", lambda: al.is_commuting_along(sw.el(a), sw.el(d)), **w)
            sw.check(rep is not None and rep.commuting == s1, "library commuting report", **w)


@entry("COR19", "d group invertible iff some a in R||d has a commuting inverse along d")
def _cor19(sw: Sweep):
    t = sw.t
    for d in t.regular:
        sw.tick()
        exists = any(t.m(a, sw.along(a, d)) == t.m(sw.along(a, d), a) for a in t.along_set(d))
        sw.check(exists == (sw.g(d) >= 0), "commuting witness vs group invertibility", d=d)
        if sw.g(d) >= 0:
            sw.check(sw.along(d, d) == sw.g(d), "d||d = d#", d=d)


@entry("THM5000", "a||d commutes with a iff da in Rd and ad in dR")
def _thm5000(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        sw.tick()
        b = sw.along(a, d)
        for db in sw.dbars(d):
            w = dict(a=a, d=d, dbar=db)
            u = t.s(t.a(t.m(d, a), t.one), t.m(d, db))
            v = t.s(t.a(t.m(a, d), t.one), t.m(db, d))
            sw.check(t.is_unit(u) == t.is_unit(v) == (b >= 0), "unit criterion for existence", **w)
            if b < 0:
                continue
            sw.check(t.m(int(t.unit_inv[u]), d) == b == t.m(d, int(t.unit_inv[v])), "unit formula value", **w)
            s1 = t.m(a, b) == t.m(b, a)
            s2 = bool(t.lp_mask[d] >> t.m(d, a) & 1) and bool(t.rp_mask[d] >> t.m(a, d) & 1)
            s3 = t.m(d, a, t.s(t.one, t.m(db, d))) == t.m(t.s(t.one, t.m(d, db)), a, d)
            sw.check(s1 == s2 == s3, "(i) <=> (ii)", **w)


@entry("REMA6000", "EP iff a a* in a*R and a* a in R a*")
def _rema6000(sw: Sweep):
    t = sw.t
    if not sw.nontrivial_mp():
        sw.applicable = False
        sw.notes.append("no Moore-Penrose invertible element besides 0 and units")
    for a in sw.all:
        mp = t.mp_of(a)
        if mp < 0:
            continue
        sw.tick()
        s = int(t.star[a])
        ep = t.m(a, mp) == t.m(mp, a)
        crit = bool(t.rp_mask[s] >> t.m(a, s) & 1) and bool(t.lp_mask[s] >> t.m(s, a) & 1)
        sw.check(ep == crit, "EP criterion", a=a)
        sw.check(gi.is_ep(sw.el(a)) == ep, "library is_ep", a=a)


# --- section 7: inner inverses -----------------------------------------------

@entry("THM7_INNER", "a||d inner for a iff R = dR + a^-1(0) iff R = Rd + a_-1(0)")
def _thm7_inner(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        b = sw.along(a, d)
        if b < 0:
            continue
        sw.tick()
        w = dict(a=a, d=d)
        s1 = t.m(a, b, a) == a
        s2 = sw.direct_sum_masks(t.rp_mask[d], t.ra_mask[a])
        s3 = sw.direct_sum_masks(t.lp_mask[d], t.la_mask[a])
        sw.check(s1 == s2 == s3, "(i) <=> (ii) <=> (iii)", **w)
        rep = sw.guard("library inner_inverse_criteria", lambda: al.inner_inverse_criteria(sw.el(a), sw.el(d)), **w)
        sw.check(rep is not None and rep.inner == s1, "library inner criteria", **w)


@entry("THM701", "when a||d is inner: compression, group and Moore-Penrose formulas")
def _thm701(sw: Sweep):
    t = sw.t
    if not sw.nontrivial_mp():
        sw.notes.append("(iii) no Moore-Penrose invertible element besides 0 and units")
    for a, d in _regular_pairs(sw):
        b = sw.along(a, d)
        if b < 0 or t.m(a, b, a) != a:
            continue
        sw.tick()
        for db in sw.dbars(d):
            c = t.m(db, d, a, d, db)
            sw.check(t.m(c, b, c) == c and t.m(b, c, b) == b, "(i) inner and outer of d- d a d d-", a=a, d=d, dbar=db)
        gd = sw.g(d)
        if gd >= 0:
            sw.check(sw.g(t.m(gd, d, a, d, gd)) == b, "(ii) a||d = (d# d a d d#)#", a=a, d=d)
        md = t.mp_of(d)
        if md >= 0:
            sw.check(t.mp_of(t.m(md, d, a, d, md)) == b, "(iii) a||d = (d+ d a d d+)+", a=a, d=d)


@entry("COR705", "EP elements: a+ = ((a a#)* a (a# a)*)#, a# = (a+ a^3 a+)+")
def _cor705(sw: Sweep):
    t = sw.t
    eps = sw.ep_elements()
    if not [a for a in eps if a != t.zero and not t.is_unit(a)]:
        sw.applicable = False
        sw.notes.append("no EP element besides 0 and units")
    for a in eps:
        sw.tick()
        g, mp = sw.g(a), t.mp_of(a)
        sw.check(g == mp, "EP: a# = a+", a=a)
        lhs = sw.g(t.m(int(t.star[t.m(a, g)]), a, int(t.star[t.m(g, a)])))
        sw.check(lhs == mp, "(i) a+ = ((a a#)* a (a# a)*)#", a=a)
        sw.check(t.mp_of(t.m(mp, t.pow(a, 3), mp)) == g, "(ii) a# = (a+ a^3 a+)+", a=a)


@entry("THM702", "a||d = d x d for every inner inverse x of d a d")
def _thm702(sw: Sweep):
    t = sw.t
    for a, d in _regular_pairs(sw):
        b = sw.along(a, d)
        if b < 0:
            continue
        sw.tick()
        dad = t.m(d, a, d)
        xs = t.inner[dad]
        sw.check(bool(xs), "d a d regular", a=a, d=d)
        for x in xs:
            sw.check(t.m(d, x, d) == b, "d x d = a||d", a=a, d=d, x=x)
        r = sw.guard("library dxd route", lambda: al.inverse_along_inner(sw.el(a), sw.el(d)), a=a, d=d)
        sw.check(r is not None and t.idx(r.inverse) == b, "library dxd route", a=a, d=d)


@entry("COR_FINAL", "group and Moore-Penrose inverses from arbitrary inner inverses")
def _cor_final(sw: Sweep):
    t = sw.t
    if not sw.nontrivial_mp():
        sw.notes.append("(iii)-(iv) no Moore-Penrose invertible element besides 0 and units")
    for a in sw.all:
        g = sw.g(a)
        if g >= 0:
            sw.tick()
            for z in t.inner[a]:
                sw.check(t.m(a, z, g) == g == t.m(g, z, a), "(i) a abar a# = a# = a# abar a", a=a, abar=z)
            for x in t.inner[t.pow(a, 3)]:
                sw.check(t.m(a, x, a) == g, "(ii) a# = a x a", a=a, x=x)
            checks = sw.guard("library classical_from_inner", lambda: al.classical_from_inner(sw.el(a), "group"), a=a)
            sw.check(checks is not None and all(checks.values()), "library group mode", a=a)
        mp = t.mp_of(a)
        if mp >= 0:
            sw.tick()
            s = int(t.star[a])
            for z in t.inner[a]:
                sw.check(t.m(mp, int(t.star[t.m(a, z)])) == mp == t.m(int(t.star[t.m(z, a)]), mp),
                         "(iii) a+ (a abar)* = a+ = (abar a)* a+", a=a, abar=z)
            for x in t.inner[t.m(s, a, s)]:
                sw.check(t.m(s, x, s) == mp, "(iv) a+ = a* x a*", a=a, x=x)
            checks = sw.guard("library classical_from_inner", lambda: al.classical_from_inner(sw.el(a), "mp"), a=a)
            sw.check(checks is not None and all(checks.values()), "library mp mode", a=a)


# --- runner ------------------------------------------------------------------

def verify_theorem(
    theorem_id: str,
    ring: Ring,
    seed: int = 0,
    full_cap: int = FULL_CAP,
    sample_size: int = SAMPLE_SIZE,
) -> TheoremReport:
    """Exhaustively check one catalog entry over one enumerable ring.

    Free variables beyond the core quantifiers range over the whole ring when
    it has at most ``full_cap`` elements, otherwise over the stratum of
    extreme elements plus ``sample_size`` elements drawn with ``seed``.
    """
    if theorem_id not in CATALOG:
        raise UnknownTheoremError(f"unknown theorem {theorem_id!r}; known: {', '.join(CATALOG)}")
    ring.require_enumerable()
    start = time.perf_counter()
    sw = Sweep(ring, seed=seed, full_cap=full_cap, sample_size=sample_size)
    _, fn = CATALOG[theorem_id]
    fn(sw)
    if sw.failure_count:
        status = "fail"
    elif not sw.applicable:
        status = "not-applicable"
    else:
        status = "pass"
    notes = list(sw.notes)
    if sw.failure_count > len(sw.failures):
        notes.append(f"{sw.failure_count} failures, first {len(sw.failures)} listed")
    return TheoremReport(
        theorem_id,
        ring.spec,
        status,
        sw.instances,
        sw.failures,
        (time.perf_counter() - start) * 1000.0,
        notes,
    )


def verify_all(ring: Ring, seed: int = 0, ids: Optional[list] = None, full_cap: int = FULL_CAP) -> list:
    return [verify_theorem(i, ring, seed, full_cap) for i in (ids or list(CATALOG))]


# --- census ------------------------------------------------------------------

@dataclass
class CensusReport:
    ring: str
    cardinality: int
    units: int
    idempotents: int
    regular: int
    group_invertible: int
    quasinilpotent: int
    drazin_index_histogram: dict
    mp_invertible: Optional[int]
    ep: Optional[int]
    along_sizes: dict

    def to_json(self) -> dict:
        return dict(self.__dict__)


def census(ring: Ring) -> CensusReport:
    """Classify every element of an enumerable ring."""
    ring.require_enumerable()
    t = tables(ring)
    hist: dict[int, int] = {}
    for a in range(t.n):
        found = t.drazin_search(a)
        if len(found) != 1:
            raise ConsistencyError(f"{t.elt(a)} has {len(found)} Drazin inverses")
        k = found[0][1]
        hist[k] = hist.get(k, 0) + 1
    mp = ep = None
    if ring.has_involution:
        mp = int((t.mp[0] >= 0).sum())
        ep = sum(1 for a in range(t.n) if t.mp_of(a) >= 0 and t.m(a, t.mp_of(a)) == t.m(t.mp_of(a), a))
    return CensusReport(
        ring=ring.spec,
        cardinality=t.n,
        units=int((t.unit_inv >= 0).sum()),
        idempotents=int(t.idempotent.sum()),
        regular=len(t.regular),
        group_invertible=int((t.group[0] >= 0).sum()),
        quasinilpotent=int(t.qnil.sum()),
        drazin_index_histogram={str(k): hist[k] for k in sorted(hist)},
        mp_invertible=mp,
        ep=ep,
        along_sizes={str(t.elt(d)): len(t.along_set(d)) for d in range(t.n)},
    )

"""Acceptance criteria, one test and one PASS/FAIL line each.

Criteria 2 and 5 rest on the claim that the reverse order law along d holds
whenever d is group invertible.  That claim is false in M_2(Z_2): along the
idempotent p = [[0,0],[0,1]] both a = [[0,0],[1,1]] and b = [[0,1],[0,1]]
are invertible (pap = pbp = p), but ab = 0 is not.  Those two tests assert the
criteria as stated and are marked strict xfail, so they show as failures in
the summary lines and turn red if the counterexample ever disappears.
"""

import itertools
import time

import pytest

from ringinv import along as al
from ringinv import geninv as gi
from ringinv import make_ring
from ringinv.finite import tables
from ringinv.verify import CATALOG, verify_theorem

RESULTS: list = []
ROL_GAP = "reverse order law fails along nontrivial idempotents of M_2(Z_2)"


def record(n: int, ok: bool, detail: str) -> None:
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}"
    RESULTS.append(line)
    print(line)


def test_criterion_1_route_agreement():
    start = time.perf_counter()
    pairs = mismatches = 0
    for spec in ["zmod:6", "zmod:8", "zmod:9", "zmod:12", "mat:2:z2"]:
        t = tables(make_ring(spec))
        for d in t.regular:
            D = t.elt(d)
            for a in range(t.n):
                A = t.elt(a)
                got = [al.inverse_along(A, D, route=r) for r in al.ROUTES]
                vals = {None if g is None else g.inverse for g in got}
                pairs += 1
                mismatches += len(vals) != 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    record(1, ok, f"4 routes agree on {pairs - mismatches}/{pairs} (a,d) pairs, {elapsed:.1f}s (limit 60s)")
    assert ok


@pytest.mark.xfail(strict=True, reason=ROL_GAP)
def test_criterion_2_catalog():
    start = time.perf_counter()
    bad = []
    total = 0
    for spec in ["zmod:6", "mat:2:z2"]:
        R = make_ring(spec)
        for tid in CATALOG:
            r = verify_theorem(tid, R)
            total += 1
            if r.status == "fail" or r.failures:
                bad.append(f"{tid}@{spec}")
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 300
    detail = f"{total - len(bad)}/{total} entries pass or not-applicable, {elapsed:.1f}s (limit 300s)"
    record(2, ok, detail + (f"; failing: {', '.join(bad)}" if bad else ""))
    assert ok


def test_criterion_3_pinned_values():
    Z6, Z4, Q, M2 = (make_ring(s) for s in ("zmod:6", "zmod:4", "mat:2:q", "mat:2:z2"))
    checks = {}
    members = al.invertibles_along(Z6(3))
    checks["R||3 = {1,3,5} in Z_6"] = members == [Z6(1), Z6(3), Z6(5)]
    checks["a||3 = 3 for each member"] = all(
        al.inverse_along_definitional(a, Z6(3)).inverse == Z6(3) for a in members
    )
    checks["2# = 2 in Z_6"] = gi.group_inverse(Z6(2)).inverse == Z6(2)
    dz = gi.drazin_inverse(Z4(2))
    checks["2^d = 0, index 2 in Z_4"] = (dz.inverse, dz.index) == (Z4(0), 2)
    a = Q("[[1,1],[0,0]]")
    b = Q("[[1/2,0],[1/2,0]]")
    checks["a+ = [[1/2,0],[1/2,0]] over Q"] = gi.mp_inverse(a).inverse == b and gi.is_mp_inverse(b, a)
    w, d = M2("[[1,1],[1,1]]"), M2("[[1,0],[0,0]]")
    rep = al.is_commuting_along(w, d)
    brute = al.inverse_along_definitional(w, d).inverse
    checks["non-commuting witness in M_2(Z_2)"] = (
        rep.consistent
        and not rep.commuting
        and not rep.ideal_criterion
        and w * brute != brute * w
    )
    failed = [k for k, v in checks.items() if not v]
    record(3, not failed, f"{len(checks) - len(failed)}/{len(checks)} pinned values" + (f"; wrong: {failed}" if failed else ""))
    assert not failed


def test_criterion_4_degenerate_anchors():
    R = make_ring("zmod:12")
    bad = 0
    for a in R.elements():
        if al.inverse_along_definitional(a, R.zero).inverse != R.zero:
            bad += 1
        r = al.inverse_along_definitional(a, R.one)
        inv = next((x for x in R.elements() if a * x == R.one), None)
        if (r is None) != (inv is None) or (r is not None and r.inverse != inv):
            bad += 1
    record(4, bad == 0, f"a||0 = 0 and a||1 = a^-1 exactly on units, all 12 elements of zmod:12 ({bad} violations)")
    assert bad == 0


@pytest.mark.xfail(strict=True, reason=ROL_GAP)
def test_criterion_5_reverse_order_law():
    M2 = make_ring("mat:2:z2")
    t = tables(M2)
    disagree = []
    false_cases = 0
    for d in t.regular:
        D = t.elt(d)
        holds = al.reverse_order_law_counterexample(D) is None
        group = gi.group_inverse(D) is not None
        false_cases += not holds
        if holds != group:
            disagree.append(str(D))
    nilpotent_false = al.reverse_order_law_counterexample(M2("[[0,1],[0,0]]")) is not None
    ok = not disagree and nilpotent_false and false_cases > 0
    detail = f"law equals group invertibility for {len(t.regular) - len(disagree)}/{len(t.regular)} regular d"
    if disagree:
        detail += f"; differs (group invertible, law fails) at {', '.join(disagree)}"
    record(5, ok, detail)
    assert ok


def test_criterion_6_uniqueness():
    specs = ["zmod:4", "zmod:6", "zmod:8", "zmod:9", "zmod:12", "mat:2:z2", "mat:2:z3"]
    pairs = duplicates = 0
    for spec in specs:
        t = tables(make_ring(spec))
        count = t.along[1]
        pairs += count.size
        duplicates += int((count > 1).sum())
    record(6, duplicates == 0, f"{pairs} (a,d) pairs searched over {len(specs)} rings, {duplicates} with two witnesses")
    assert duplicates == 0


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass

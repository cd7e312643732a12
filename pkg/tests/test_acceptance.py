"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line.  Run the file
directly (``python3 tests/test_acceptance.py``) to get just those lines.
"""

import sys
import time

import pytest

from wedge import matching as mt
from wedge import structures as st
from wedge import verify as vf


def _named_suite():
    wed = {
        "K3": st.k3(),
        "C4": st.cycle(4),
        "C5": st.cycle(5),
        "C7": st.cycle(7),
        "C7*": st.c7_star(),
        "H": st.house(),
        "DH": st.dream_house(),
        "Cr": st.crystal(),
        "F5": st.fan(5),
        "K1,1": st.complete_bipartite(1, 1),
        "K2,2": st.complete_bipartite(2, 2),
        "K3,3": st.complete_bipartite(3, 3),
    }
    not_wed = {
        "K2,3": st.complete_bipartite(2, 3),
        "K2,4": st.complete_bipartite(2, 4),
        "K3,4": st.complete_bipartite(3, 4),
        "K3,5": st.complete_bipartite(3, 5),
        "paw": st.paw(),
        "diamond": st.diamond(),
        "P4": st.path(4),
    }
    start = time.perf_counter()
    wrong = [k for k, g in wed.items() if not mt.is_well_edge_dominated(g)]
    wrong += [k for k, g in not_wed.items() if mt.is_well_edge_dominated(g)]
    elapsed = time.perf_counter() - start
    ok = not wrong and elapsed < 1.0
    return ok, f"{len(wed) + len(not_wed)} graphs, mismatches={wrong or 'none'}, {elapsed:.2f}s"


def _one_triangle():
    rep = vf.verify_theorem1(8)
    ok = rep.passed and rep.elapsed < 600
    return ok, f"{rep.summary['graphs']} graphs, {len(rep.counterexamples)} disagreements, {rep.elapsed:.1f}s"


def _outerplanar():
    rep = vf.verify_outerplanar(10)
    t8 = vf.verify_theorem8([6, 8, 9, 10])
    named = rep.summary["wed_named"].split()
    ok = (
        rep.passed
        and rep.summary["wed"] == 8
        and named == list(vf.OUTERPLANAR_WED)
        and t8.passed
        and t8.summary["equimatchable"] == 0
        and rep.elapsed + t8.elapsed < 300
    )
    detail = (
        f"{rep.summary['graphs']} graphs, wed={{{', '.join(named)}}}, "
        f"equimatchable at 6,8,9,10: {t8.summary['equimatchable']}, {rep.elapsed + t8.elapsed:.1f}s"
    )
    return ok, detail


def _family_members():
    rep = vf.verify_proposition1(7)
    ok = rep.passed and rep.summary["distinct_members"] >= 20
    detail = (
        f"{rep.summary['bases']} bases, T={rep.summary['members.T']} F={rep.summary['members.F']}, "
        f"{rep.summary['distinct_members']} distinct, {len(rep.counterexamples)} failing"
    )
    if rep.counterexamples:
        detail += ": " + ", ".join(g6 for g6, _ in sorted(rep.counterexamples))
    return ok, detail


REQUIRED_CHECKS = (
    "lemma7",
    "lemma10",
    "observation9",
    "corollary6",
    "lemma11",
    "theorem2",
    "theorem3",
    "theorem4",
    "theorem5",
)


def _lemmas(n_max):
    rep = vf.verify_lemma_suite(n_max)
    idle = [c for c in REQUIRED_CHECKS if not rep.summary.get(f"checked.{c}")]
    ok = rep.passed and not idle and rep.elapsed < 900
    detail = f"n<={n_max}, {rep.summary['graphs']} graphs, {len(rep.counterexamples)} counterexamples"
    if idle:
        detail += f", never exercised: {idle}"
    return ok, detail + f", {rep.elapsed:.1f}s"


def _negative_control():
    rep = vf.verify_lemma_suite(7, weaken=["theorem2-support"])
    return not rep.passed, f"weakened check produced {len(rep.counterexamples)} counterexamples"


def _report(number, outcome):
    ok, detail = outcome
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}"


def _check(capsys, number, fn, *args):
    ok, detail = fn(*args)
    line = _report(number, (ok, detail))
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def test_criterion_1_named_graphs(capsys):
    _check(capsys, 1, _named_suite)


def test_criterion_2_one_triangle_equivalence(capsys):
    _check(capsys, 2, _one_triangle)


def test_criterion_3_outerplanar_search(capsys):
    _check(capsys, 3, _outerplanar)


def test_criterion_4_family_members(capsys):
    _check(capsys, 4, _family_members)


def test_criterion_5_lemma_suite(capsys):
    _check(capsys, 5, _lemmas, 7)


@pytest.mark.slow
def test_criterion_5_lemma_suite_n8(capsys):
    _check(capsys, "5 (n<=8)", _lemmas, 8)


def test_criterion_6_negative_control(capsys):
    _check(capsys, 6, _negative_control)


if __name__ == "__main__":
    runs = [
        (1, _named_suite, ()),
        (2, _one_triangle, ()),
        (3, _outerplanar, ()),
        (4, _family_members, ()),
        (5, _lemmas, (7,)),
        (6, _negative_control, ()),
    ]
    results = [(n, fn(*args)) for n, fn, args in runs]
    for n, outcome in results:
        print(_report(n, outcome))
    sys.exit(0 if all(ok for _, (ok, _) in results) else 1)

"""Exit criteria.  Each test records one PASS/FAIL line, shown in the pytest
terminal summary (or printed directly when run as a script)."""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from spin_springer import lusztig
from spin_springer.partitions import Bipartition, Partition
from spin_springer.verify import (
    ceil_three_halves,
    reproduce_counterexample,
    verify_bijection,
    verify_lemma1,
    verify_lemma2,
    verify_order_axioms,
    verify_structure,
    verify_theorem,
)

pytestmark = pytest.mark.acceptance

LEMMA_GRID = [(m, t) for m in range(0, 4) for t in range(m, 4)]
RUNTIME_LIMIT = 60.0


def record(number, title, ok, detail=""):
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'} {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def bijection_reports():
    return [verify_bijection(n) for n in range(0, 29)]


def counterexample_reports():
    return [reproduce_counterexample(t) for t in (2, 3, 4)]


def theorem_reports(workers=1):
    out = []
    for m in range(0, 7):
        start = ceil_three_halves(m)
        out.extend(verify_theorem(m, t, workers=workers) for t in range(start, start + 3))
    return out


def lemma2_reports():
    return [verify_lemma2(m, t) for m, t in LEMMA_GRID]


def lemma1_reports():
    scanned = [verify_lemma1(m, t, oracle=True) for m, t in LEMMA_GRID]
    closed = [verify_lemma1(m, t, oracle=False) for m in range(0, 7) for t in range(m, 12)]
    return scanned + closed


def axiom_reports():
    return ([verify_order_axioms("xn", n) for n in range(0, 21)]
            + [verify_order_axioms("bipartitions", m) for m in range(0, 7)])


def structure_reports():
    return [verify_structure(n) for n in range(0, 29)]


def failures(reports):
    return [r.to_dict() for r in reports if not r.passed]


def test_criterion_1_bijection():
    start = time.perf_counter()
    reports = bijection_reports()
    elapsed = time.perf_counter() - start
    bad = failures(reports)
    total = sum(r.counters["xn_count"] for r in reports)
    record(1, "bijection for n in 0..28", not bad and elapsed < RUNTIME_LIMIT,
           f"{total} partitions, {elapsed:.2f}s")
    assert not bad, bad[:3]
    assert elapsed < RUNTIME_LIMIT


def test_criterion_2_counterexample():
    reports = counterexample_reports()
    lam, lam2 = Partition([9, 5, 3, 1]), Partition([9, 5, 2, 2])
    img = lusztig.forward_map(lam)
    img2 = lusztig.forward_map(lam2)
    exact = (img.key() == (2, Bipartition([1, 1], [1]))
             and img2.key() == (2, Bipartition([1, 1, 1], [])))
    ok = exact and all(r.passed for r in reports)
    record(2, "counterexample family at t = 2, 3, 4", ok,
           f"(9,5,3,1) -> {img.bipartition}, (9,5,2,2) -> {img2.bipartition}")
    assert exact
    assert not failures(reports)


def test_criterion_3_theorem():
    start = time.perf_counter()
    reports = theorem_reports()
    elapsed = time.perf_counter() - start
    pairs = sum(r.counters["pairs_checked"] for r in reports)
    bad = failures(reports)
    record(3, "order theorem for m <= 6, t in ceil(3m/2) + {0,1,2}", not bad and elapsed < RUNTIME_LIMIT,
           f"{pairs} ordered pairs, {elapsed:.2f}s")
    assert not bad, bad[:1]
    assert elapsed < RUNTIME_LIMIT


def test_criterion_4_lemma2():
    reports = lemma2_reports()
    bad = failures(reports)
    checked = sum(r.counters["pairs_checked"] for r in reports)
    record(4, "closed-form inverse equals scan inverse, m <= t <= 3", not bad, f"{checked} bipartitions")
    assert not bad, bad[:1]


def test_criterion_5_lemma1():
    reports = lemma1_reports()
    bad = failures(reports)
    record(5, "odd parts 1 mod 4, exactly t of them, even parts <= 2m", not bad,
           f"{len(reports)} (m, t) cases")
    assert not bad, bad[:1]


def test_criterion_6_order_axioms():
    reports = axiom_reports()
    bad = failures(reports)
    sampled = [r.params["size"] for r in reports if r.params["sampled"]]
    assert all(r.counters["triples_checked"] >= 100_000 for r in reports if r.params["sampled"])
    record(6, "partial-order axioms (X_n, n <= 20; bipartitions, m <= 6)", not bad,
           f"sampled transitivity at sizes {sampled}")
    assert not bad, bad[:1]


def test_criterion_7_structure():
    reports = structure_reports()
    bad = failures(reports)
    entries = sum(r.counters["entries_checked"] for r in reports)
    record(7, "replaced values nonnegative and monotone; weight and t congruence", not bad,
           f"{entries} labeled entries")
    assert not bad, bad[:1]


def all_reports_json(workers):
    lusztig._fiber_index.cache_clear()
    reports = (bijection_reports() + counterexample_reports() + theorem_reports(workers)
               + lemma2_reports() + lemma1_reports() + axiom_reports() + structure_reports())
    return [r.to_json() for r in reports]


def test_criterion_8_determinism():
    first = all_reports_json(workers=1)
    second = all_reports_json(workers=1)
    parallel = all_reports_json(workers=4)
    ok = first == second == parallel
    record(8, "byte-identical reports across runs and worker counts 1, 4", ok, f"{len(first)} reports")
    assert first == second
    assert first == parallel


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                pass

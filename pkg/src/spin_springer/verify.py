"""Exhaustive checks of the bijection, the two lemmas, the order theorem, and
the t = m - 1 counterexample, returned as :class:`VerificationReport` objects.

Pair checks in :func:`verify_theorem` can be spread over worker processes; the
count comes from the ``SPIN_SPRINGER_WORKERS`` environment variable unless
passed explicitly.  Reports are identical for any worker count.
"""

from __future__ import annotations

import json
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import lusztig
from .lusztig import T0_SWAP, InvariantViolation
from .orders import (
    djm_leq,
    dominance_leq,
    first_djm_failure,
    first_dominance_failure,
    leq_matrix,
)
from .partitions import (
    Bipartition,
    Partition,
    enumerate_bipartitions,
    enumerate_Xn,
    get_cap,
    is_in_Xn,
)

WORKERS_ENV = "SPIN_SPRINGER_WORKERS"
TRANSITIVITY_EXHAUSTIVE_LIMIT = 30
TRANSITIVITY_SAMPLES = 100_000
TRANSITIVITY_SEED = 20240601


@dataclass
class VerificationReport:
    check: str
    params: dict
    counters: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "passed": self.passed,
            "counters": self.counters,
            "violations": self.violations,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        workers = int(os.environ.get(WORKERS_ENV, "1") or 1)
    return max(1, workers)


def ceil_three_halves(m: int) -> int:
    return (3 * m + 1) // 2


def verify_bijection(n: int, convention: str = T0_SWAP, cap=None) -> VerificationReport:
    report = VerificationReport("bijection", {"n": n, "convention": convention})
    xn = list(enumerate_Xn(n, cap))
    preimages: dict = {}
    for lam in xn:
        try:
            image = lusztig.forward_map(lam, convention)
        except InvariantViolation as exc:
            report.violations.append({"kind": "invariant", "partition": str(lam), "detail": str(exc)})
            continue
        m = lusztig.component_weight(n, image.t)
        if m is None or image.bipartition.weight != m:
            report.violations.append({
                "kind": "component", "partition": str(lam), "t": image.t,
                "bipartition": str(image.bipartition), "expected_weight": m,
            })
        preimages.setdefault(image.key(), []).append(lam)

    for (t, bp), lams in sorted(preimages.items(), key=lambda kv: str(kv[1][0])):
        if len(lams) > 1:
            report.violations.append({
                "kind": "not_injective", "t": t, "bipartition": str(bp),
                "partitions": [str(x) for x in lams],
            })

    fibers = Counter(t for t, _ in preimages)
    expected = {}
    for t in lusztig.admissible_t(n):
        m = lusztig.component_weight(n, t)
        target = list(enumerate_bipartitions(m, cap=max(m, 0)))
        expected[str(t)] = len(target)
        hit = {bp for (s, bp) in preimages if s == t}
        missing = [str(bp) for bp in target if bp not in hit]
        if missing:
            report.violations.append({"kind": "not_surjective", "t": t, "m": m, "missing": missing})
    for t in sorted(fibers):
        if str(t) not in expected:
            report.violations.append({"kind": "inadmissible_t", "t": t})

    report.counters = {
        "xn_count": len(xn),
        "fibers": {str(t): fibers[t] for t in sorted(fibers)},
        "expected_fibers": expected,
    }
    return report


def verify_structure(n: int, cap=None) -> VerificationReport:
    """Raw replaced values: nonnegative, each label sequence non-increasing,
    weight (n - 2t^2 + t)/4 and t = n (mod 4)."""
    report = VerificationReport("structure", {"n": n})
    xn_count = entries_checked = 0
    for lam in enumerate_Xn(n, cap):
        xn_count += 1
        entries, t = lusztig.labeled_entries(lam)
        entries_checked += len(entries)
        a_vals = [e.value for e in entries if e.label == lusztig.A]
        b_vals = [e.value for e in entries if e.label == lusztig.B]
        problems = []
        if any(e.value < 0 for e in entries):
            problems.append("negative")
        if any(x < y for x, y in zip(a_vals, a_vals[1:])):
            problems.append("alpha_increases")
        if any(x < y for x, y in zip(b_vals, b_vals[1:])):
            problems.append("beta_increases")
        if (t - n) % 4:
            problems.append("t_not_congruent")
        if 4 * (sum(a_vals) + sum(b_vals)) != n - 2 * t * t + t:
            problems.append("weight")
        if problems:
            report.violations.append({
                "partition": str(lam), "t": t, "problems": problems,
                "alpha_raw": a_vals, "beta_raw": b_vals,
            })
    report.counters = {"xn_count": xn_count, "entries_checked": entries_checked}
    return report


def _require_regime(m: int, t: int):
    if m < 0 or t < m:
        raise ValueError(f"needs 0 <= m <= t (m={m}, t={t})")


def verify_lemma1(m: int, t: int, oracle: bool | None = None, convention: str = T0_SWAP,
                  cap=None) -> VerificationReport:
    """Images of all bipartitions of m have parts in 2Z u (4Z+1), exactly t odd
    parts, and even parts at most 2m.

    With ``oracle`` the images come from scanning X_n; otherwise from the
    closed form, in which case each image is also pushed back through the
    forward map.  ``None`` picks the scan whenever n is within the cap.
    """
    _require_regime(m, t)
    n = lusztig.source_weight(m, t)
    if oracle is None:
        oracle = n <= (get_cap() if cap is None else cap)
    report = VerificationReport("lemma1", {"m": m, "t": t, "n": n, "oracle": int(oracle)})
    checked = 0
    for bp in enumerate_bipartitions(m, cap=m):
        checked += 1
        if oracle:
            lam = lusztig.brute_force_inverse(bp, t, convention, cap)
            if lam is None:
                report.violations.append({"bipartition": str(bp), "problems": ["no_preimage"]})
                continue
        else:
            lam = lusztig.closed_form_inverse(bp, t)
        problems = []
        if not is_in_Xn(lam) or lam.weight != n:
            problems.append("not_in_Xn")
        if any(p % 2 and p % 4 != 1 for p in lam.parts):
            problems.append("part_in_4Z+3")
        odd = sum(1 for p in lam.parts if p % 2)
        if odd != t:
            problems.append("odd_count")
        if any(p % 2 == 0 and p > 2 * m for p in lam.parts):
            problems.append("even_part_bound")
        if not oracle and lusztig.forward_map(lam, convention).key() != (t, bp):
            problems.append("round_trip")
        if problems:
            report.violations.append({
                "bipartition": str(bp), "image": str(lam), "odd_parts": odd, "problems": problems,
            })
    report.counters = {"bipartitions_checked": checked}
    return report


def recover_from_split(lam: Partition, t: int) -> Bipartition:
    """Read (alpha, beta) off the odd and even parts of an image."""
    odd, even = lusztig.odd_even_split(lam)
    if len(odd) != t or len(even) % 2:
        raise ValueError(f"({lam}) does not have {t} odd parts and paired even parts")
    alpha = []
    for i, a in enumerate(odd, 1):
        shifted = a - (4 * (t - i) + 1)
        if shifted % 4 or shifted < 0:
            raise ValueError(f"odd part {a} of ({lam}) is off the 4-step grid")
        alpha.append(shifted // 4)
    beta = [even[2 * i - 1] // 2 for i in range(1, len(even) // 2 + 1)]
    return Bipartition(alpha, beta)


def verify_lemma2(m: int, t: int, convention: str = T0_SWAP, cap=None) -> VerificationReport:
    _require_regime(m, t)
    n = lusztig.source_weight(m, t)
    report = VerificationReport("lemma2", {"m": m, "t": t, "n": n})
    checked = 0
    for bp in enumerate_bipartitions(m, cap=m):
        checked += 1
        closed = lusztig.closed_form_inverse(bp, t)
        brute = lusztig.brute_force_inverse(bp, t, convention, cap)
        problems = []
        if closed != brute:
            problems.append("closed_form_vs_scan")
        if lusztig.forward_map(closed, convention).key() != (t, bp):
            problems.append("round_trip")
        try:
            if recover_from_split(closed, t) != bp:
                problems.append("split_formula")
        except ValueError:
            problems.append("split_formula")
        if problems:
            report.violations.append({
                "bipartition": str(bp), "closed_form": str(closed),
                "scan": None if brute is None else str(brute), "problems": problems,
            })
    report.counters = {"pairs_checked": checked}
    return report


def _theorem_rows(rows, bps, images):
    out = []
    for i in rows:
        for j in range(len(bps)):
            a, b = bps[i], bps[j]
            la, lb = images[i], images[j]
            induced_fail = first_dominance_failure(la, lb)
            djm_fail = first_djm_failure(a, b)
            if (induced_fail is None) != (djm_fail is None):
                out.append({
                    "a": str(a), "b": str(b),
                    "image_a": str(la), "image_b": str(lb),
                    "induced_leq": induced_fail is None,
                    "djm_leq": djm_fail is None,
                    "dominance_first_failure": induced_fail,
                    "djm_first_failure": None if djm_fail is None else list(djm_fail),
                })
    return out


def verify_theorem(m: int, t: int, convention: str = T0_SWAP, cap=None,
                   workers: int | None = None) -> VerificationReport:
    """Compare the order pulled back from X_n with the bipartition dominance
    order over all ordered pairs of bipartitions of m."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n = lusztig.source_weight(m, t)
    closed = t >= m
    report = VerificationReport("theorem", {"m": m, "t": t, "n": n, "closed_form": int(closed)})
    bps = list(enumerate_bipartitions(m, cap=m))
    images = []
    for bp in bps:
        lam = lusztig.inverse(bp, t, convention, cap)
        if lam is None:
            report.violations.append({"a": str(bp), "problems": ["no_preimage"]})
        images.append(lam)
    if report.violations:
        report.counters = {"pairs_checked": 0}
        return report

    rows = list(range(len(bps)))
    workers = resolve_workers(workers)
    if workers == 1 or len(bps) < 2:
        report.violations = _theorem_rows(rows, bps, images)
    else:
        chunks = [rows[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_theorem_rows, chunks, [bps] * workers, [images] * workers)
            found = [v for part in parts for v in part]
        order = {str(bp): k for k, bp in enumerate(bps)}
        found.sort(key=lambda v: (order[v["a"]], order[v["b"]]))
        report.violations = found
    report.counters = {"pairs_checked": len(bps) ** 2, "violation_count": len(report.violations)}
    return report


def scan_threshold(m: int, t_min: int, t_max: int, convention: str = T0_SWAP, cap=None,
                   workers: int | None = None) -> list[tuple[int, int]]:
    if t_min > t_max:
        raise ValueError("t_min must not exceed t_max")
    return [(t, len(verify_theorem(m, t, convention, cap, workers).violations))
            for t in range(t_min, t_max + 1)]


def counterexample_pair(t: int) -> tuple[Partition, Partition]:
    top = [4 * k + 1 for k in range(t, 0, -1)]
    return Partition(top + [3, 1]), Partition(top + [2, 2])


def reproduce_counterexample(t: int, convention: str = T0_SWAP) -> VerificationReport:
    """The pair (4t+1, ..., 9, 5, 3, 1) > (4t+1, ..., 9, 5, 2, 2) whose images
    ((1^t), (1)) < ((1^(t+1)), ()) are ordered the other way."""
    if t < 2:
        raise ValueError("counterexample family needs t >= 2")
    lam, lam2 = counterexample_pair(t)
    want = Bipartition([1] * t, [1])
    want2 = Bipartition([1] * (t + 1), [])
    img = lusztig.forward_map(lam, convention)
    img2 = lusztig.forward_map(lam2, convention)
    report = VerificationReport("counterexample", {"t": t, "m": t + 1})
    if img.key() != (t, want):
        report.violations.append({"partition": str(lam), "image": str(img.bipartition),
                                  "image_t": img.t, "expected": str(want)})
    if img2.key() != (t, want2):
        report.violations.append({"partition": str(lam2), "image": str(img2.bipartition),
                                  "image_t": img2.t, "expected": str(want2)})
    lam_above = dominance_leq(lam2, lam) and not dominance_leq(lam, lam2)
    bp_below = djm_leq(img.bipartition, img2.bipartition) and not djm_leq(img2.bipartition, img.bipartition)
    if not lam_above:
        report.violations.append({"kind": "dominance", "expected": f"({lam2}) < ({lam})"})
    if not bp_below:
        report.violations.append({"kind": "djm", "expected": f"{img.bipartition} < {img2.bipartition}"})
    report.counters = {
        "lambda": str(lam), "lambda_prime": str(lam2),
        "image": str(img.bipartition), "image_prime": str(img2.bipartition),
        "lambda_prefix_sums": lam.prefix_sums(len(lam)),
        "lambda_prime_prefix_sums": lam2.prefix_sums(len(lam)),
    }
    return report


def verify_order_axioms(kind: str, size: int, seed: int = TRANSITIVITY_SEED,
                        samples: int = TRANSITIVITY_SAMPLES,
                        exhaustive_limit: int = TRANSITIVITY_EXHAUSTIVE_LIMIT) -> VerificationReport:
    """Reflexivity, antisymmetry and transitivity of dominance on X_n
    (``kind="xn"``) or of the bipartition order (``kind="bipartitions"``).

    Transitivity is exhaustive up to ``exhaustive_limit`` elements and checked
    on ``samples`` seeded random triples beyond that.
    """
    if kind == "xn":
        elements, leq = list(enumerate_Xn(size)), dominance_leq
    elif kind == "bipartitions":
        elements, leq = list(enumerate_bipartitions(size)), djm_leq
    else:
        raise ValueError(f"unknown kind {kind!r}")
    count = len(elements)
    rel = leq_matrix(elements, leq)
    report = VerificationReport("order_axioms", {"kind": kind, "size": size})
    for i in range(count):
        if not rel[i][i]:
            report.violations.append({"axiom": "reflexive", "x": str(elements[i])})
        for j in range(i + 1, count):
            if rel[i][j] and rel[j][i]:
                report.violations.append({"axiom": "antisymmetric", "x": str(elements[i]),
                                          "y": str(elements[j])})

    def transitive(i, j, k):
        if rel[i][j] and rel[j][k] and not rel[i][k]:
            report.violations.append({"axiom": "transitive", "x": str(elements[i]),
                                      "y": str(elements[j]), "z": str(elements[k])})

    if count <= exhaustive_limit:
        sampled = 0
        for i in range(count):
            for j in range(count):
                for k in range(count):
                    transitive(i, j, k)
        triples = count ** 3
    else:
        sampled = 1
        rng = random.Random(seed)
        for _ in range(samples):
            transitive(rng.randrange(count), rng.randrange(count), rng.randrange(count))
        triples = samples
    report.params["sampled"] = sampled
    report.counters = {"elements": count, "pairs_checked": count * count, "triples_checked": triples}
    return report

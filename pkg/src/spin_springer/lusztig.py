"""Lusztig's labeled-replacement map from X_n to bipartitions, and its inverses.

Each part of a partition in X_n is replaced by an integer and labeled A or B;
the A values form alpha, the B values form beta.  The signed count ``t`` of odd
parts picks the component, and decides whether the image is (alpha, beta) or
(beta, alpha).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .partitions import (
    Bipartition,
    Partition,
    XnElement,
    check_cap,
    enumerate_Xn,
    is_in_Xn,
)

T0_SWAP = "t0-swap"
T0_KEEP = "t0-keep"
CONVENTIONS = (T0_SWAP, T0_KEEP)

A = "A"
B = "B"


class InvariantViolation(AssertionError):
    """The replacement rules produced something that is not a bipartition."""

    def __init__(self, message: str, partition: Partition, entries=()):
        super().__init__(message)
        self.partition = partition
        self.entries = tuple(entries)


class AmbiguousPreimageError(RuntimeError):
    pass


class DeltaProfile(NamedTuple):
    deltas: tuple[int, ...]
    tail_sums: tuple[int, ...]
    total: int


class LabeledEntry(NamedTuple):
    value: int
    label: str
    source_index: int


class EvenRun(NamedTuple):
    value: int
    multiplicity: int
    start_index: int


class OddEvenSplit(NamedTuple):
    odd_parts: tuple[int, ...]
    even_parts: tuple[int, ...]


@dataclass(frozen=True)
class SpringerImage:
    t: int
    bipartition: Bipartition
    alpha_raw: tuple[int, ...]
    beta_raw: tuple[int, ...]

    def key(self) -> tuple[int, Bipartition]:
        return self.t, self.bipartition


def delta(part: int) -> int:
    """0 for even parts, else (-1)**(part*(part-1)/2): +1 on 4Z+1, -1 on 4Z+3."""
    if part < 1:
        raise ValueError(f"part must be positive, got {part}")
    if part % 2 == 0:
        return 0
    return 1 if (part * (part - 1) // 2) % 2 == 0 else -1


def delta_profile(lam: Partition) -> DeltaProfile:
    deltas = tuple(delta(p) for p in lam.parts)
    tails = []
    running = 0
    for d in reversed(deltas):
        tails.append(running)
        running += d
    return DeltaProfile(deltas, tuple(reversed(tails)), running)


def even_runs(lam: Partition) -> list[EvenRun]:
    runs = []
    parts = lam.parts
    i = 0
    while i < len(parts):
        j = i
        while j < len(parts) and parts[j] == parts[i]:
            j += 1
        if parts[i] % 2 == 0:
            runs.append(EvenRun(parts[i], j - i, i))
        i = j
    return runs


def _as_xn(lam) -> XnElement:
    if isinstance(lam, XnElement):
        return lam
    return XnElement(lam.parts if isinstance(lam, Partition) else lam)


def labeled_entries(lam: Partition) -> tuple[list[LabeledEntry], int]:
    """Apply the four replacement rules without validating the outcome.

    Returns the entries in order of appearance and the total ``t``.
    """
    lam = _as_xn(lam)
    profile = delta_profile(lam)
    tails = profile.tail_sums
    entries: list[LabeledEntry] = []
    runs = {run.start_index: run for run in even_runs(lam)}
    parts = lam.parts
    i = 0
    while i < len(parts):
        x = parts[i]
        ti = tails[i]
        if x % 4 == 1:
            entries.append(LabeledEntry((x - 1) // 4 - ti, A, i))
            i += 1
        elif x % 4 == 3:
            entries.append(LabeledEntry((x - 3) // 4 + ti, B, i))
            i += 1
        else:
            run = runs[i]
            # t_i is constant over a run since even parts contribute 0
            if x % 4 == 2:
                b_val, a_val = (x - 2) // 4 + ti, (x + 2) // 4 - ti
            else:
                b_val, a_val = x // 4 + ti, x // 4 - ti
            for k in range(run.multiplicity):
                if k % 2 == 0:
                    entries.append(LabeledEntry(b_val, B, i + k))
                else:
                    entries.append(LabeledEntry(a_val, A, i + k))
            i += run.multiplicity
    return entries, profile.total


def _non_increasing(seq) -> bool:
    return all(x >= y for x, y in zip(seq, seq[1:]))


def orient(t: int, alpha: Partition, beta: Partition, convention: str = T0_SWAP) -> Bipartition:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if t > 0 or (t == 0 and convention == T0_KEEP):
        return Bipartition(alpha, beta)
    return Bipartition(beta, alpha)


def forward_map(lam: Partition, convention: str = T0_SWAP) -> SpringerImage:
    lam = _as_xn(lam)
    entries, t = labeled_entries(lam)
    alpha_raw = tuple(e.value for e in entries if e.label == A)
    beta_raw = tuple(e.value for e in entries if e.label == B)
    if any(e.value < 0 for e in entries):
        raise InvariantViolation(f"negative replaced value for ({lam})", lam, entries)
    if not (_non_increasing(alpha_raw) and _non_increasing(beta_raw)):
        raise InvariantViolation(f"label sequence not non-increasing for ({lam})", lam, entries)
    bp = orient(t, Partition(alpha_raw), Partition(beta_raw), convention)
    return SpringerImage(t, bp, alpha_raw, beta_raw)


def component_weight(n: int, t: int) -> int | None:
    """(n - 2t^2 + t) / 4 when t = n (mod 4) and the result is >= 0, else None."""
    if (t - n) % 4:
        return None
    num = n - 2 * t * t + t
    if num < 0:
        return None
    return num // 4


def admissible_t(n: int) -> list[int]:
    """Every t with t = n (mod 4) and a nonnegative component weight."""
    out = []
    t = 0
    while 2 * t * t - t <= n or 2 * t * t + t <= n:
        for s in {t, -t}:
            if component_weight(n, s) is not None:
                out.append(s)
        t += 1
    return sorted(out)


def source_weight(m: int, t: int) -> int:
    return 2 * t * t - t + 4 * m


def odd_even_split(lam: Partition) -> OddEvenSplit:
    odd = tuple(p for p in lam.parts if p % 2)
    even = tuple(p for p in lam.parts if p % 2 == 0)
    return OddEvenSplit(odd, even)


def closed_form_inverse(bp: Bipartition, t: int) -> XnElement:
    """Preimage of (t, bp) when t >= |bp|.

    Odd parts are 4*alpha_i + 4(t-i) + 1 for i = 1..t with alpha padded to
    length t; each nonzero beta_j contributes the pair 2*beta_j, 2*beta_j.
    """
    m = bp.weight
    if t < m or t < 0:
        raise ValueError(f"closed-form inverse needs t >= m (t={t}, m={m})")
    alpha = bp.first
    odd = [4 * alpha.part(i - 1) + 4 * (t - i) + 1 for i in range(1, t + 1)]
    even = [2 * b for b in bp.second.parts for _ in range(2)]
    return XnElement(odd + even)


@lru_cache(maxsize=32)
def _fiber_index(n: int, convention: str) -> dict:
    index: dict = {}
    for lam in enumerate_Xn(n, cap=n):
        index.setdefault(forward_map(lam, convention).key(), []).append(lam)
    return index


def fiber_index(n: int, convention: str = T0_SWAP, cap: int | None = None) -> dict:
    """Map (t, bipartition) -> list of preimages over all of X_n."""
    check_cap(n, cap)
    return _fiber_index(n, convention)


def brute_force_inverse(bp: Bipartition, t: int, convention: str = T0_SWAP,
                        cap: int | None = None) -> XnElement | None:
    """Scan X_n for the preimage of (t, bp); None if there is none."""
    n = source_weight(bp.weight, t)
    hits = fiber_index(n, convention, cap).get((t, bp), [])
    if len(hits) > 1:
        raise AmbiguousPreimageError(
            f"{len(hits)} preimages of t={t}, {bp}: " + "; ".join(str(h) for h in hits))
    return hits[0] if hits else None


def inverse(bp: Bipartition, t: int, convention: str = T0_SWAP,
            cap: int | None = None) -> XnElement | None:
    """f_{m,t}: closed form when t >= m, brute-force scan otherwise."""
    if t >= bp.weight:
        return closed_form_inverse(bp, t)
    return brute_force_inverse(bp, t, convention, cap)

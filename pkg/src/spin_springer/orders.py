"""Dominance orders on X_n and on bipartitions, and Hasse diagrams."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable, Sequence

from .lusztig import T0_SWAP, inverse
from .partitions import Bipartition, Partition


class WeightMismatchError(ValueError):
    pass


class AntisymmetryError(ValueError):
    pass


class PreimageNotFound(LookupError):
    pass


class OrderRelation(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


def _check_weights(a, b):
    if a.weight != b.weight:
        raise WeightMismatchError(f"cannot compare weights {a.weight} and {b.weight}")


def first_dominance_failure(lam: Partition, mu: Partition) -> int | None:
    """Smallest i (1-based) with sum(lam[:i]) > sum(mu[:i]), or None."""
    _check_weights(lam, mu)
    length = max(len(lam), len(mu))
    for i, (x, y) in enumerate(zip(lam.prefix_sums(length), mu.prefix_sums(length)), 1):
        if x > y:
            return i
    return None


def dominance_leq(lam: Partition, mu: Partition) -> bool:
    return first_dominance_failure(lam, mu) is None


def first_djm_failure(a: Bipartition, b: Bipartition) -> tuple[int, int] | None:
    """First failing inequality of the bipartition order as (chain, k).

    Chain 1 compares prefix sums of the first components; chain 2 compares
    |first| plus prefix sums of the second components, starting at k = 0.
    """
    _check_weights(a, b)
    length = max(len(a.first), len(b.first))
    for k, (x, y) in enumerate(zip(a.first.prefix_sums(length), b.first.prefix_sums(length)), 1):
        if x > y:
            return 1, k
    length = max(len(a.second), len(b.second))
    sa = [0] + a.second.prefix_sums(length)
    sb = [0] + b.second.prefix_sums(length)
    for k, (x, y) in enumerate(zip(sa, sb)):
        if a.first.weight + x > b.first.weight + y:
            return 2, k
    return None


def djm_leq(a: Bipartition, b: Bipartition) -> bool:
    return first_djm_failure(a, b) is None


def compare(a, b, leq: Callable) -> OrderRelation:
    below, above = leq(a, b), leq(b, a)
    if below and above:
        return OrderRelation.EQUAL
    if below:
        return OrderRelation.LESS
    if above:
        return OrderRelation.GREATER
    return OrderRelation.INCOMPARABLE


def strictly_less(a, b, leq: Callable) -> bool:
    return leq(a, b) and not leq(b, a)


def induced_image(bp: Bipartition, t: int, convention: str = T0_SWAP, cap=None):
    lam = inverse(bp, t, convention, cap)
    if lam is None:
        raise PreimageNotFound(f"no preimage of t={t}, {bp}")
    return lam


def induced_leq(a: Bipartition, b: Bipartition, t: int,
                convention: str = T0_SWAP, cap=None) -> bool:
    """Dominance of the X_n images of a and b in the fiber over t."""
    _check_weights(a, b)
    return dominance_leq(induced_image(a, t, convention, cap),
                         induced_image(b, t, convention, cap))


@dataclass(frozen=True)
class PosetEdges:
    elements: tuple
    cover_pairs: tuple[tuple[int, int], ...]


def leq_matrix(elements: Sequence, leq: Callable) -> list[list[bool]]:
    return [[leq(x, y) for y in elements] for x in elements]


def hasse_edges(elements: Sequence, leq: Callable) -> PosetEdges:
    """Cover pairs (lower, upper) by index, sorted."""
    elements = tuple(elements)
    size = len(elements)
    rel = leq_matrix(elements, leq)
    for i in range(size):
        for j in range(i + 1, size):
            if rel[i][j] and rel[j][i]:
                raise AntisymmetryError(f"{elements[i]} and {elements[j]} are mutually below")
    less = [[rel[i][j] and i != j for j in range(size)] for i in range(size)]
    covers = []
    for i in range(size):
        for j in range(size):
            if less[i][j] and not any(less[i][k] and less[k][j] for k in range(size)):
                covers.append((i, j))
    return PosetEdges(elements, tuple(covers))

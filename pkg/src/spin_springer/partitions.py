"""Partitions, bipartitions, the set X_n, and enumeration streams.

Partitions are stored as non-increasing tuples of positive integers.  Indexed
access through :meth:`Partition.part` treats the sequence as padded with zeros
forever, which is what the prefix-sum orders need.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Iterator

DEFAULT_CAP = 60

_cap = DEFAULT_CAP


class CapExceededError(ValueError):
    """An enumeration was requested beyond the configured size cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"size {size} exceeds enumeration cap {cap}")
        self.size = size
        self.cap = cap


class NotInXnError(ValueError):
    pass


def get_cap() -> int:
    return _cap


def set_cap(cap: int) -> None:
    global _cap
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    _cap = cap


def check_cap(size: int, cap: int | None = None) -> None:
    limit = _cap if cap is None else cap
    if size > limit:
        raise CapExceededError(size, limit)


class Partition:
    """A partition: a non-increasing tuple of positive integers.

    The constructor normalizes: values are sorted non-increasing and zeros are
    dropped, so ``Partition([0, 2, 2, 0]) == Partition([2, 2])``.
    """

    __slots__ = ("parts", "weight")

    def __init__(self, values: Iterable[int] = ()):
        vals = [int(v) for v in values]
        if any(v < 0 for v in vals):
            raise ValueError(f"negative part in {vals}")
        parts = tuple(sorted((v for v in vals if v), reverse=True))
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "weight", sum(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    def __reduce__(self):
        return type(self), (self.parts,)

    def part(self, i: int) -> int:
        """0-based part access; 0 beyond the stored length."""
        if i < 0:
            raise IndexError(i)
        return self.parts[i] if i < len(self.parts) else 0

    def prefix_sums(self, length: int) -> list[int]:
        """Prefix sums of the first 1..length parts (zero-padded)."""
        out = []
        s = 0
        for i in range(length):
            s += self.part(i)
            out.append(s)
        return out

    def multiplicities(self) -> Counter:
        return Counter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts
        return NotImplemented

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __repr__(self):
        return f"{type(self).__name__}({list(self.parts)})"

    def __str__(self):
        return ",".join(map(str, self.parts))


def partition_new(values: Iterable[int]) -> Partition:
    return Partition(values)


def is_in_Xn(p: Partition) -> bool:
    """Odd values occur at most once, even values an even number of times."""
    for value, count in p.multiplicities().items():
        if value % 2 == 1 and count != 1:
            return False
        if value % 2 == 0 and count % 2 != 0:
            return False
    return True


class XnElement(Partition):
    """A partition validated as a member of X_n."""

    __slots__ = ()

    def __init__(self, values: Iterable[int] = ()):
        super().__init__(values)
        if not is_in_Xn(self):
            raise NotInXnError(f"({self}) is not in X_{self.weight}")


def _plain(values) -> Partition:
    if type(values) is Partition:
        return values
    return Partition(values.parts if isinstance(values, Partition) else values)


class Bipartition:
    """An ordered pair of partitions; ``weight`` is the total size."""

    __slots__ = ("first", "second")

    def __init__(self, first: Iterable[int] = (), second: Iterable[int] = ()):
        object.__setattr__(self, "first", _plain(first))
        object.__setattr__(self, "second", _plain(second))

    def __setattr__(self, name, value):
        raise AttributeError("Bipartition is immutable")

    def __reduce__(self):
        return Bipartition, (self.first, self.second)

    @property
    def weight(self) -> int:
        return self.first.weight + self.second.weight

    def swapped(self) -> Bipartition:
        return Bipartition(self.second, self.first)

    def __eq__(self, other):
        if isinstance(other, Bipartition):
            return self.first == other.first and self.second == other.second
        return NotImplemented

    def __hash__(self):
        return hash((self.first.parts, self.second.parts))

    def __iter__(self):
        return iter((self.first, self.second))

    def __repr__(self):
        return f"Bipartition({list(self.first.parts)}, {list(self.second.parts)})"

    def __str__(self):
        return f"{self.first}/{self.second}"


def _descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _descending(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n: int, cap: int | None = None) -> Iterator[Partition]:
    """All partitions of n, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_cap(n, cap)
    for parts in _descending(n, n):
        yield Partition(parts)


def _xn_descending(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    # odd values once, even values in pairs; more copies first keeps lex order
    if n == 0:
        yield ()
        return
    for v in range(min(n, largest), 0, -1):
        if v % 2:
            for rest in _xn_descending(n - v, v - 1):
                yield (v,) + rest
        else:
            for k in range(n // (2 * v), 0, -1):
                for rest in _xn_descending(n - 2 * k * v, v - 1):
                    yield (v,) * (2 * k) + rest


def enumerate_Xn(n: int, cap: int | None = None) -> Iterator[XnElement]:
    """Members of X_n, lexicographically decreasing.

    Generated directly rather than by filtering; the test suite checks it
    against ``filter(is_in_Xn, enumerate_partitions(n))``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_cap(n, cap)
    for parts in _xn_descending(n, n):
        yield XnElement(parts)


def enumerate_bipartitions(m: int, cap: int | None = None) -> Iterator[Bipartition]:
    """All bipartitions of m.

    Ordered by decreasing size of the first component, then each component
    lexicographically decreasing.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    check_cap(m, cap)
    for j in range(m, -1, -1):
        seconds = [Partition(p) for p in _descending(m - j, m - j)]
        for first in _descending(j, j):
            a = Partition(first)
            for b in seconds:
                yield Bipartition(a, b)


def parse_partition(text: str) -> Partition:
    """Parse ``"9,5,3,1"``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    values = []
    pos = 0
    for token in text.split(","):
        tok = token.strip()
        if not tok.isdigit():
            raise ValueError(f"invalid part {token!r} at position {pos}")
        values.append(int(tok))
        pos += len(token) + 1
    return Partition(values)


def parse_bipartition(text: str) -> Bipartition:
    """Parse ``"1,1/1"``; ``"/1"`` is ((), (1)) and ``"/"`` is ((), ())."""
    if text.count("/") != 1:
        raise ValueError(f"bipartition {text!r} needs exactly one '/'")
    left, right = text.split("/")
    try:
        first = parse_partition(left)
    except ValueError as exc:
        raise ValueError(f"first component: {exc}") from None
    try:
        second = parse_partition(right)
    except ValueError as exc:
        raise ValueError(f"second component (offset {len(left) + 1}): {exc}") from None
    return Bipartition(first, second)

"""
Permutations of the positive integers with finite support, Demazure
(0-Hecke) products, Bruhat order, and a few word/partition helpers.

Permutations are stored in one-line notation with trailing fixed points
trimmed, so ``Permutation((2, 1))`` and ``Permutation((2, 1, 3))`` are the
same object.

>>> hecke_product((2, 3, 2))
Permutation(1432)
>>> bruhat_leq(Permutation((1, 3, 2, 4)), Permutation((1, 3, 4, 2)))
True
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Word",
    "demazure_step", "hecke_product", "is_hecke_word", "hecke_equivalent",
    "bruhat_leq", "reduced_words", "is_reverse_lattice", "word_weight",
    "permutations_of", "is_partition", "is_strict_partition", "trim_partition",
    "rev", "partitions_in_box", "partitions_of_size", "partitions_contained_in",
]

Word = tuple[int, ...]


@dataclass(frozen=True, init=False)
class Permutation:
    """A bijection of {1, 2, ...} fixing all but finitely many points."""

    one_line: tuple[int, ...]

    def __init__(self, one_line: Iterable[int] = ()):
        values = tuple(int(v) for v in one_line)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a permutation in one-line notation: {values}")
        k = len(values)
        while k > 0 and values[k - 1] == k:
            k -= 1
        object.__setattr__(self, "one_line", values[:k])

    @classmethod
    def identity(cls) -> Permutation:
        return cls(())

    @classmethod
    def s(cls, i: int) -> Permutation:
        """The simple transposition (i, i+1)."""
        if i < 1:
            raise ValueError("simple transpositions are indexed from 1")
        w = list(range(1, i + 2))
        w[i - 1], w[i] = w[i], w[i - 1]
        return cls(w)

    @classmethod
    def longest(cls, n: int) -> Permutation:
        """The reversal n...321 in S_n."""
        return cls(range(n, 0, -1))

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Parse ``"1432"`` (single digits) or ``"1,4,3,2"``."""
        text = text.strip()
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
            return cls(int(p) for p in parts)
        return cls(int(ch) for ch in text)

    def __call__(self, i: int) -> int:
        if 1 <= i <= len(self.one_line):
            return self.one_line[i - 1]
        return i

    def __len__(self) -> int:
        return len(self.one_line)

    def window(self, n: int) -> tuple[int, ...]:
        """One-line notation padded (or checked) to length n."""
        if n < len(self.one_line):
            raise ValueError(f"{self} is not in S_{n}")
        return self.one_line + tuple(range(len(self.one_line) + 1, n + 1))

    def __mul__(self, other: Permutation) -> Permutation:
        # (u * w)(k) = u(w(k))
        n = max(len(self), len(other))
        return Permutation(self(other(k)) for k in range(1, n + 1))

    def inverse(self) -> Permutation:
        inv = [0] * len(self)
        for i, v in enumerate(self.one_line, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def length(self) -> int:
        """Number of inversions (Coxeter length)."""
        w = self.one_line
        return sum(1 for a, b in itertools.combinations(range(len(w)), 2) if w[a] > w[b])

    def descents(self) -> list[int]:
        return [i for i in range(1, len(self)) if self(i) > self(i + 1)]

    def is_identity(self) -> bool:
        return not self.one_line

    def in_S(self, n: int) -> bool:
        return len(self.one_line) <= n

    def __str__(self) -> str:
        if not self.one_line:
            return "1"
        if len(self.one_line) < 10:
            return "".join(str(v) for v in self.one_line)
        return ",".join(str(v) for v in self.one_line)

    def __repr__(self) -> str:
        return f"Permutation({self})"

    def to_json(self) -> list[int]:
        return list(self.one_line)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> Permutation:
        return cls(data)


def permutations_of(n: int) -> Iterator[Permutation]:
    """All of S_n, in lexicographic order of one-line notation."""
    for p in itertools.permutations(range(1, n + 1)):
        yield Permutation(p)


def demazure_step(w: Permutation, i: int) -> Permutation:
    """Return w∘s_i: w·s_i when w(i) < w(i+1), otherwise w."""
    if i < 1:
        raise ValueError("index must be positive")
    if w(i) < w(i + 1):
        return w * Permutation.s(i)
    return w


def hecke_product(word: Iterable[int]) -> Permutation:
    w = Permutation.identity()
    for i in word:
        w = demazure_step(w, i)
    return w


def is_hecke_word(word: Iterable[int], w: Permutation) -> bool:
    return hecke_product(word) == w


def hecke_equivalent(a: Iterable[int], b: Iterable[int]) -> bool:
    """Equivalence under the Hecke relations is the same as equal Demazure products."""
    return hecke_product(a) == hecke_product(b)


def bruhat_leq(u: Permutation, w: Permutation) -> bool:
    """Strong Bruhat order via the tableau criterion.

    u <= w iff for every k the sorted first k values of u are entrywise
    at most the sorted first k values of w.
    """
    n = max(len(u), len(w))
    uu, ww = u.window(n), w.window(n)
    for k in range(1, n):
        for a, b in zip(sorted(uu[:k]), sorted(ww[:k])):
            if a > b:
                return False
    return True


@lru_cache(maxsize=None)
def _reduced_words(one_line: tuple[int, ...]) -> frozenset[Word]:
    w = Permutation(one_line)
    if w.is_identity():
        return frozenset({()})
    out = set()
    for i in w.descents():
        for word in _reduced_words((w * Permutation.s(i)).one_line):
            out.add(word + (i,))
    return frozenset(out)


def reduced_words(w: Permutation) -> frozenset[Word]:
    """All reduced words of w (Hecke words of minimal length)."""
    return _reduced_words(w.one_line)


def word_weight(word: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    letters = list(word)
    size = n if n is not None else max(letters, default=0)
    wt = [0] * size
    for a in letters:
        wt[a - 1] += 1
    return tuple(wt)


def is_reverse_lattice(word: Sequence[int]) -> bool:
    """True iff every suffix has a weakly decreasing weight vector."""
    counts: dict[int, int] = {}
    for a in reversed(word):
        counts[a] = counts.get(a, 0) + 1
        if a > 1 and counts[a] > counts.get(a - 1, 0):
            return False
    return True


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def is_strict_partition(parts: Sequence[int]) -> bool:
    p = trim_partition(parts)
    return all(a > b for a, b in zip(p, p[1:]))


def trim_partition(parts: Iterable[int]) -> tuple[int, ...]:
    p = list(parts)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def rev(parts: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Reverse of a partition padded with zeros to length n."""
    size = len(parts) if n is None else n
    if len(trim_partition(parts)) > size:
        raise ValueError(f"{tuple(parts)} has more than {size} parts")
    padded = tuple(parts) + (0,) * (size - len(parts))
    return tuple(reversed(padded[:size]))


def partitions_in_box(rows: int, cols: int) -> Iterator[tuple[int, ...]]:
    """Partitions with at most ``rows`` parts, each at most ``cols`` (trimmed)."""
    def rec(k: int, bound: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for first in range(bound, -1, -1):
            for rest in rec(k - 1, first):
                yield (first,) + rest
    seen = set()
    for p in rec(rows, cols):
        t = trim_partition(p)
        if t not in seen:
            seen.add(t)
            yield t


def partitions_of_size(size: int, max_parts: int | None = None) -> list[tuple[int, ...]]:
    out = []

    def rec(remaining: int, bound: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        if max_parts is not None and len(prefix) == max_parts:
            return
        for p in range(min(bound, remaining), 0, -1):
            rec(remaining - p, p, prefix + (p,))

    rec(size, size, ())
    return out


def partitions_contained_in(outer: Sequence[int]) -> list[tuple[int, ...]]:
    """All partitions whose diagram sits inside that of ``outer``."""
    outer = trim_partition(outer)
    out = []

    def rec(k: int, bound: int, prefix: tuple[int, ...]) -> None:
        if k == len(outer):
            out.append(trim_partition(prefix))
            return
        for p in range(min(bound, outer[k]), -1, -1):
            rec(k + 1, p, prefix + (p,))

    rec(0, outer[0] if outer else 0, ())
    return out

"""
Set-valued words: m-tuples of subsets of [n] with the square-root crystal
operators computed from i-words.

A word is a plain tuple of frozensets, e.g. ``(frozenset({1, 3}), frozenset())``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .crystals import SQRT, Crystal
from .errors import InvalidShapeError, SizeGuardError

__all__ = [
    "SVWord", "Form", "IWord",
    "make_word", "parse_word", "render_word", "weight", "flat_word",
    "i_word", "raise_", "lower", "epsilon", "phi",
    "tab", "svword", "is_increasing_tableau", "is_highest_weight",
    "all_words", "universe", "UNIVERSE_LIMIT",
]

SVWord = tuple[frozenset, ...]
UNIVERSE_LIMIT = 20


def make_word(sets: Iterable[Iterable[int]]) -> SVWord:
    return tuple(frozenset(s) for s in sets)


def parse_word(text: str) -> SVWord:
    """Parse ``"13,2,,12"`` style input (single-digit letters, commas between sets)."""
    return tuple(frozenset(int(ch) for ch in part.strip() if ch.isdigit())
                 for part in text.split(","))


def render_word(S: SVWord) -> str:
    def one(s):
        return "{" + ",".join(str(x) for x in sorted(s)) + "}" if s else "∅"
    return "(" + ", ".join(one(s) for s in S) + ")"


def weight(S: SVWord, n: int) -> tuple[int, ...]:
    """Letter counts: component k is the number of sets containing k."""
    wt = [0] * n
    for s in S:
        for k in s:
            wt[k - 1] += 1
    return tuple(wt)


def flat_word(S: SVWord) -> tuple[int, ...]:
    """w(S): each set replaced by its elements in increasing order."""
    return tuple(x for s in S for x in sorted(s))


@dataclass(frozen=True)
class Form:
    """One equivalence class of an i-word."""

    kind: str           # "null", "left", "right" or "combined"
    start: int          # index of first character
    end: int            # index of last character (inclusive)
    start_pos: int      # word position contributing the first character
    end_pos: int        # word position contributing the last character


@dataclass(frozen=True)
class IWord:
    chars: str
    positions: tuple[int, ...]
    forms: tuple[Form, ...]

    def __str__(self) -> str:
        return self.chars

    def count(self, kind: str) -> int:
        return sum(1 for f in self.forms if f.kind == kind)

    def of_kind(self, kind: str) -> list[Form]:
        return [f for f in self.forms if f.kind == kind]


def i_word(S: SVWord, i: int) -> IWord:
    chars: list[str] = []
    positions: list[int] = []
    triples: list[int] = []
    for j, s in enumerate(S):
        a, b = i in s, i + 1 in s
        if a and b:
            triples.append(len(chars))
            chars.extend(")−(")
            positions.extend((j, j, j))
        elif a:
            chars.append(")")
            positions.append(j)
        elif b:
            chars.append("(")
            positions.append(j)

    size = len(chars)
    partner = [-1] * size
    stack: list[int] = []
    for k, c in enumerate(chars):
        if c == "(":
            stack.append(k)
        elif c == ")" and stack:
            o = stack.pop()
            partner[o], partner[k] = k, o

    # glue[k] means characters k and k+1 are in the same class
    glue = [False] * max(size - 1, 0)
    spans = [(k, partner[k]) for k in range(size) if chars[k] == "(" and partner[k] > k]
    spans += [(t, t + 2) for t in triples]
    for a, b in spans:
        for k in range(a, b):
            glue[k] = True

    forms = []
    k = 0
    while k < size:
        start = k
        while k < size - 1 and glue[k]:
            k += 1
        end = k
        k += 1
        unpaired = [t for t in range(start, end + 1) if chars[t] in "()" and partner[t] < 0]
        has_close = any(chars[t] == ")" for t in unpaired)
        has_open = any(chars[t] == "(" for t in unpaired)
        first_unpaired_close = bool(unpaired) and unpaired[0] == start and chars[start] == ")"
        last_unpaired_open = bool(unpaired) and unpaired[-1] == end and chars[end] == "("
        if not unpaired:
            kind = "null"
        elif not has_close and last_unpaired_open:
            kind = "left"
        elif not has_open and first_unpaired_close:
            kind = "right"
        elif first_unpaired_close and last_unpaired_open:
            kind = "combined"
        else:
            raise AssertionError(f"unclassifiable class in {''.join(chars)!r}")
        forms.append(Form(kind, start, end, positions[start], positions[end]))
    return IWord("".join(chars), tuple(positions), tuple(forms))


def _edit(S: SVWord, pos: int, add: int | None = None, remove: int | None = None) -> SVWord:
    s = set(S[pos])
    if remove is not None:
        s.discard(remove)
    if add is not None:
        s.add(add)
    return S[:pos] + (frozenset(s),) + S[pos + 1:]


def raise_(S: SVWord, i: int) -> SVWord | None:
    """e_i(S), or None for the null result."""
    w = i_word(S, i)
    combined = w.of_kind("combined")
    if combined:
        return _edit(S, combined[0].end_pos, remove=i + 1)
    lefts = w.of_kind("left")
    if not lefts:
        return None
    return _edit(S, lefts[0].start_pos, add=i)


def lower(S: SVWord, i: int) -> SVWord | None:
    """f_i(S), or None for the null result."""
    w = i_word(S, i)
    combined = w.of_kind("combined")
    if combined:
        return _edit(S, combined[0].start_pos, remove=i)
    rights = w.of_kind("right")
    if not rights:
        return None
    return _edit(S, rights[-1].end_pos, add=i + 1)


def epsilon(S: SVWord, i: int) -> int:
    w = i_word(S, i)
    return 2 * w.count("left") + w.count("combined")


def phi(S: SVWord, i: int) -> int:
    w = i_word(S, i)
    return 2 * w.count("right") + w.count("combined")


# tableaux

Rows = tuple[tuple[int, ...], ...]


def tab(S: SVWord, n: int | None = None) -> Rows:
    """Row i lists m+1-j in increasing order over the j with i in S_j.

    Rows are kept for every letter up to ``n`` (default: the largest letter),
    so interior empty rows survive; trailing empty rows are dropped.
    """
    m = len(S)
    top = n if n is not None else max((max(s) for s in S if s), default=0)
    rows = [tuple(sorted(m - j for j, s in enumerate(S) if i in s)) for i in range(1, top + 1)]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def svword(T: Sequence[Sequence[int]], n: int, m: int) -> SVWord:
    """Inverse of tab: i is in S_j iff m+1-j appears in row i."""
    if len(T) > n:
        raise InvalidShapeError(f"tableau has more than {n} rows")
    sets = [set() for _ in range(m)]
    for i, row in enumerate(T, start=1):
        if any(a >= b for a, b in zip(row, row[1:])):
            raise InvalidShapeError("rows must be strictly increasing")
        for x in row:
            if not 1 <= x <= m:
                raise InvalidShapeError(f"entry {x} outside [1, {m}]")
            sets[m - x].add(i)
    return tuple(frozenset(s) for s in sets)


def is_increasing_tableau(T: Sequence[Sequence[int]]) -> bool:
    """Partition shape with strictly increasing rows and columns."""
    lengths = [len(r) for r in T]
    if any(a < b for a, b in zip(lengths, lengths[1:])):
        return False
    if any(L == 0 for L in lengths):
        return False
    for row in T:
        if any(a >= b for a, b in zip(row, row[1:])):
            return False
    for upper, lower_row in zip(T, T[1:]):
        if any(upper[c] >= lower_row[c] for c in range(len(lower_row))):
            return False
    return True


def is_highest_weight(S: SVWord) -> bool:
    return is_increasing_tableau(tab(S))


# universe

def all_words(n: int, m: int) -> list[SVWord]:
    subsets = [frozenset(k + 1 for k in range(n) if mask >> k & 1) for mask in range(1 << n)]
    return [tuple(p) for p in itertools.product(subsets, repeat=m)]


def universe(n: int, m: int, limit: int = UNIVERSE_LIMIT) -> Crystal:
    """The full crystal SVWords(n, m) with operators from i-words."""
    if n * m > limit:
        raise SizeGuardError(f"SVWords({n},{m}) has 2^{n * m} elements; limit is 2^{limit}")
    return Crystal.from_functions(
        all_words(n, m), n, SQRT,
        wt=lambda S: weight(S, n),
        e=lambda i, S: raise_(S, i),
        f=lambda i, S: lower(S, i),
        name=f"SVWords({n},{m})",
    )

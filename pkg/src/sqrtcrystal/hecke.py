"""
Hecke insertion into increasing tableaux, the (A(S), I(S)) encoding of
set-valued words, and decreasing Hecke factorizations.

Increasing tableaux are tuples of rows (tuples of ints), top row first.
Set-valued recording tableaux are tuples of rows of frozensets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import Permutation, hecke_product, partitions_in_box
from .crystals import SQRT, Crystal
from .errors import CrystalError, IncompatibleSequenceError, SizeGuardError
from .polynomial import Expansion, Polynomial
from . import svwords

__all__ = [
    "Tableau", "SetRows", "CompatibleSequence",
    "insert_column", "insert", "insert_ending", "insert_set", "hecke_insert", "P_of_word",
    "encode_AI", "decode_AI", "P_hecke", "Q_hecke",
    "row_reading", "revrow_reading", "col_reading",
    "enumerate_decr", "decr_tab", "decr_svword", "decr_from_svword", "decr_concat",
    "decr_crystal", "G_w", "c_w_coeffs", "increasing_tableaux", "DECR_LIMIT",
]

Tableau = tuple[tuple[int, ...], ...]
SetRows = tuple[tuple[frozenset, ...], ...]
DECR_LIMIT = 20


def _is_increasing(rows: Sequence[Sequence[int]]) -> bool:
    return svwords.is_increasing_tableau(rows) if rows else True


def _column(rows: list[list[int]], c: int) -> list[int]:
    return [row[c] for row in rows if len(row) > c]


def insert_column(T: Sequence[Sequence[int]], c: int, x: int):
    """Insert x into column c (0-based) of the increasing tableau T.

    Returns ``(new_rows, bumped, end)`` where ``bumped`` is the value passed to
    the next column (None when the insertion stops) and ``end`` is the
    1-based box where the insertion ends (None when a value was bumped).
    """
    rows = [list(r) for r in T]
    col = _column(rows, c)
    bigger = [(r, y) for r, y in enumerate(col) if y > x]
    if not bigger:
        r = len(col)
        trial = [list(row) for row in rows]
        if r == len(trial):
            trial.append([])
        if len(trial[r]) == c:
            trial[r].append(x)
            if _is_increasing(trial):
                return _freeze(trial), None, (r + 1, c + 1)
        if not col:
            raise AssertionError("an empty column must accept the inserted value")
        i = len(col)
        return _freeze(rows), None, (i, len(rows[i - 1]))
    r, y = bigger[0]
    trial = [list(row) for row in rows]
    trial[r][c] = x
    if _is_increasing(trial):
        return _freeze(trial), y, None
    return _freeze(rows), y, None


def _freeze(rows: list[list[int]]) -> Tableau:
    return tuple(tuple(r) for r in rows if r)


def insert_ending(T: Sequence[Sequence[int]], x: int) -> tuple[Tableau, tuple[int, int]]:
    """⟨x → T⟩ together with the box where the insertion ends."""
    current: Tableau = tuple(tuple(r) for r in T)
    c = 0
    value = x
    while True:
        current, bumped, end = insert_column(current, c, value)
        if bumped is None:
            return current, end
        value = bumped
        c += 1


def insert(T: Sequence[Sequence[int]], x: int) -> Tableau:
    return insert_ending(T, x)[0]


def insert_set(B: Iterable[int], T: Sequence[Sequence[int]]) -> Tableau:
    """⟨B → T⟩: insert the elements of B in decreasing order."""
    current: Tableau = tuple(tuple(r) for r in T)
    for b in sorted(set(B), reverse=True):
        current = insert(current, b)
    return current


@dataclass(frozen=True)
class CompatibleSequence:
    A: tuple[int, ...]
    I: tuple[int, ...]

    def __post_init__(self):
        if len(self.A) != len(self.I):
            raise IncompatibleSequenceError("A and I must have the same length")
        for k in range(len(self.I) - 1):
            if self.I[k] > self.I[k + 1]:
                raise IncompatibleSequenceError("I must be weakly increasing")
            if self.I[k] == self.I[k + 1] and not self.A[k] > self.A[k + 1]:
                raise IncompatibleSequenceError("A must decrease where I is constant")


def hecke_insert(A: Sequence[int], I: Sequence[int]) -> tuple[Tableau, SetRows]:
    """Hecke insertion of a compatible sequence: (P, Q)."""
    seq = CompatibleSequence(tuple(A), tuple(I))
    P: Tableau = ()
    Q: list[list[set]] = []
    for a, i in zip(seq.A, seq.I):
        P, (r, c) = insert_ending(P, a)
        while len(Q) < len(P):
            Q.append([])
        for k, row in enumerate(P):
            while len(Q[k]) < len(row):
                Q[k].append(set())
        Q[r - 1][c - 1].add(i)
    return P, tuple(tuple(frozenset(s) for s in row) for row in Q)


def P_of_word(word: Iterable[int]) -> Tableau:
    """Insertion tableau of a word, inserting letters left to right."""
    P: Tableau = ()
    for a in word:
        P = insert(P, a)
    return P


def encode_AI(S: svwords.SVWord, n: int | None = None) -> CompatibleSequence:
    m = len(S)
    top = n if n is not None else max((max(s) for s in S if s), default=0)
    A: list[int] = []
    I: list[int] = []
    for i in range(1, top + 1):
        for j, s in enumerate(S, start=1):
            if i in s:
                A.append(m + 1 - j)
                I.append(i)
    return CompatibleSequence(tuple(A), tuple(I))


def decode_AI(seq: CompatibleSequence, m: int) -> svwords.SVWord:
    sets = [set() for _ in range(m)]
    for a, i in zip(seq.A, seq.I):
        sets[m - a].add(i)
    return tuple(frozenset(s) for s in sets)


def P_hecke(S: svwords.SVWord) -> Tableau:
    seq = encode_AI(S)
    return hecke_insert(seq.A, seq.I)[0]


def Q_hecke(S: svwords.SVWord) -> SetRows:
    seq = encode_AI(S)
    return hecke_insert(seq.A, seq.I)[1]


# reading words of integer tableaux

def row_reading(T: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Rows left to right, bottom row first."""
    return tuple(x for row in reversed(T) for x in row)


def revrow_reading(T: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(reversed(row_reading(T)))


def col_reading(T: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Up each column, columns left to right."""
    width = max((len(r) for r in T), default=0)
    return tuple(T[r][c] for c in range(width) for r in reversed(range(len(T))) if len(T[r]) > c)


def increasing_tableaux(shape: Sequence[int], m: int) -> list[Tableau]:
    """Increasing tableaux of the given partition shape with entries in [m]."""
    shape = tuple(p for p in shape if p)
    boxes = [(r, c) for r, L in enumerate(shape) for c in range(L)]
    out = []
    grid = [[0] * L for L in shape]

    def rec(k: int) -> None:
        if k == len(boxes):
            out.append(tuple(tuple(r) for r in grid))
            return
        r, c = boxes[k]
        lo = 1
        if c > 0:
            lo = max(lo, grid[r][c - 1] + 1)
        if r > 0:
            lo = max(lo, grid[r - 1][c] + 1)
        for v in range(lo, m + 1):
            grid[r][c] = v
            rec(k + 1)

    rec(0)
    return out


# decreasing Hecke factorizations

Factorization = tuple[tuple[int, ...], ...]


def _window(w: Permutation) -> int:
    return max(len(w) - 1, 1)


def enumerate_decr(w: Permutation, n: int, m: int | None = None) -> list[Factorization]:
    """Decr_n(w): n-tuples of strictly decreasing words over [m] whose
    concatenation is a Hecke word for w (m defaults to the smallest window)."""
    m = m if m is not None else _window(w)
    if not w.in_S(m + 1):
        raise ValueError(f"{w} is not in S_{m + 1}")
    if m * n > DECR_LIMIT:
        raise SizeGuardError(f"(2^{m})^{n} candidates exceeds the limit")
    words = [tuple(sorted(c, reverse=True)) for r in range(m + 1)
             for c in itertools.combinations(range(1, m + 1), r)]
    out = []
    for a in itertools.product(words, repeat=n):
        if hecke_product(x for part in a for x in part) == w:
            out.append(tuple(a))
    return sorted(out)


def decr_concat(a: Factorization) -> tuple[int, ...]:
    return tuple(x for part in a for x in part)


def decr_tab(a: Factorization) -> Tableau:
    """Row i is the reversal of a^i (trailing empty rows dropped)."""
    rows = [tuple(reversed(part)) for part in a]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def decr_svword(a: Factorization, m: int) -> svwords.SVWord:
    """S_j = {i : m+1-j in a^i}."""
    return tuple(frozenset(i for i, part in enumerate(a, start=1) if m + 1 - j in part)
                 for j in range(1, m + 1))


def decr_from_svword(S: svwords.SVWord, n: int) -> Factorization:
    m = len(S)
    return tuple(tuple(sorted((m + 1 - j for j, s in enumerate(S, start=1) if i in s), reverse=True))
                 for i in range(1, n + 1))


def decr_crystal(w: Permutation, n: int, m: int | None = None) -> Crystal:
    """Decr_n(w) with operators transported through svword; closure is enforced."""
    m = m if m is not None else _window(w)
    elements = enumerate_decr(w, n, m)
    members = set(elements)

    def transport(op):
        def act(i, a):
            S = op(decr_svword(a, m), i)
            if S is None:
                return None
            b = decr_from_svword(S, n)
            if b not in members:
                raise CrystalError(f"operator left Decr_{n}({w}) at {a}")
            return b
        return act

    return Crystal.from_functions(
        elements, n, SQRT,
        wt=lambda a: tuple(len(p) for p in a),
        e=transport(svwords.raise_),
        f=transport(svwords.lower),
        name=f"Decr_{n}({w})",
    )


def G_w(w: Permutation, n: int) -> Polynomial:
    return Polynomial.from_weights((tuple(len(p) for p in a) for a in enumerate_decr(w, n)), n)


def c_w_coeffs(w: Permutation, n: int) -> Expansion:
    """c_{wλ}: increasing tableaux of shape λ (at most n rows) with revrow a Hecke word for w."""
    m = _window(w)
    coeffs: dict[tuple[int, ...], int] = {}
    # revrow of such a tableau is a Hecke word with distinct letters per row,
    # so every row has at most m boxes and the total is bounded by n*m
    for lam in partitions_in_box(n, m):
        count = sum(1 for T in increasing_tableaux(lam, m) if hecke_product(revrow_reading(T)) == w)
        if count:
            coeffs[lam] = count
    return Expansion("G", n, coeffs, method="count")


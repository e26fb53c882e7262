"""
Young, skew and shifted shapes; semistandard set-valued tableaux and their
square-root crystals; Grothendieck generating functions and LR counts;
set-valued decomposition tableaux; one-row primed tableaux.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Sequence

from .algebra import is_partition, is_reverse_lattice, is_strict_partition, trim_partition, word_weight
from .crystals import SQRT, Crystal
from .errors import CrystalError, InvalidShapeError
from .polynomial import Expansion, Polynomial, expand_in_G, grothendieck_G
from . import svwords

__all__ = [
    "Box", "Shape", "SetValuedTableau",
    "is_semistandard", "is_semistandard_by_distributions", "distributions",
    "col_word", "row_word", "revrow", "revrow_of_row", "revrow_shifted", "flat",
    "enumerate_settab", "G_skew", "settab_crystal", "star_split",
    "skew_G_expansion", "product_expansion",
    "is_hook_word", "is_decomposition_tableau", "is_set_decomposition_tableau",
    "enumerate_setdectab", "GPdec", "g_coeffs", "GPdec_one_row_formula", "GP_one_row",
]

Box = tuple[int, int]


def _nonempty_subsets(n: int) -> list[frozenset]:
    return [frozenset(k + 1 for k in range(n) if mask >> k & 1) for mask in range(1, 1 << n)]


@dataclass(frozen=True)
class Shape:
    """A set of boxes in matrix coordinates.

    ``outer``/``inner`` describe a skew diagram; ``shifted`` moves row i right
    by i-1 columns (only used with an empty inner shape).
    """

    outer: tuple[int, ...]
    inner: tuple[int, ...] = ()
    shifted: bool = False

    def __post_init__(self):
        outer, inner = trim_partition(self.outer), trim_partition(self.inner)
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)
        if not is_partition(outer) or not is_partition(inner):
            raise InvalidShapeError(f"not partitions: {outer}, {inner}")
        if len(inner) > len(outer) or any(a > b for a, b in zip(inner, outer)):
            raise InvalidShapeError(f"{inner} is not contained in {outer}")
        if self.shifted and (inner or not is_strict_partition(outer)):
            raise InvalidShapeError(f"shifted shapes need a strict partition, got {outer}")

    @classmethod
    def straight(cls, lam: Iterable[int]) -> Shape:
        return cls(tuple(lam))

    @classmethod
    def skew(cls, nu: Iterable[int], lam: Iterable[int]) -> Shape:
        return cls(tuple(nu), tuple(lam))

    @classmethod
    def shifted_shape(cls, lam: Iterable[int]) -> Shape:
        return cls(tuple(lam), (), True)

    @classmethod
    def star(cls, lam: Iterable[int], mu: Iterable[int]) -> Shape:
        """λ∗μ = (p+μ_1, …, p+μ_q, λ_1, λ_2, …)/(p^q)."""
        lam, mu = trim_partition(lam), trim_partition(mu)
        p = lam[0] if lam else 0
        q = len(mu)
        return cls(tuple(p + x for x in mu) + lam, (p,) * q)

    def boxes(self) -> list[Box]:
        out = []
        for i, length in enumerate(self.outer, start=1):
            start = self.inner[i - 1] if i - 1 < len(self.inner) else 0
            for j in range(start + 1, length + 1):
                out.append((i, j + i - 1) if self.shifted else (i, j))
        return out

    def size(self) -> int:
        return len(self.boxes())

    def to_json(self) -> dict:
        return {"outer": list(self.outer), "inner": list(self.inner), "shifted": self.shifted}

    @classmethod
    def from_json(cls, data: Mapping) -> Shape:
        return cls(tuple(data["outer"]), tuple(data.get("inner", ())), bool(data.get("shifted", False)))

    def __str__(self) -> str:
        text = ",".join(map(str, self.outer))
        if self.inner:
            text += "/" + ",".join(map(str, self.inner))
        return ("shifted " if self.shifted else "") + f"({text})"


@dataclass(frozen=True)
class SetValuedTableau:
    shape: Shape
    cells: tuple[tuple[Box, frozenset], ...]

    @classmethod
    def from_dict(cls, shape: Shape, entries: Mapping[Box, Iterable[int]]) -> SetValuedTableau:
        boxes = shape.boxes()
        if set(entries) != set(boxes):
            raise InvalidShapeError("entries do not match the boxes of the shape")
        cells = []
        for b in boxes:
            s = frozenset(entries[b])
            if not s:
                raise InvalidShapeError(f"box {b} is empty")
            cells.append((b, s))
        return cls(shape, tuple(cells))

    @classmethod
    def from_rows(cls, shape: Shape, rows: Sequence[Sequence[Iterable[int]]]) -> SetValuedTableau:
        """Fill the boxes of each row left to right."""
        boxes = shape.boxes()
        entries = {}
        for i, row in enumerate(rows, start=1):
            row_boxes = [b for b in boxes if b[0] == i]
            if len(row_boxes) != len(row):
                raise InvalidShapeError(f"row {i} needs {len(row_boxes)} entries")
            for b, s in zip(row_boxes, row):
                entries[b] = s
        return cls.from_dict(shape, entries)

    def as_dict(self) -> dict[Box, frozenset]:
        return dict(self.cells)

    def __getitem__(self, box: Box) -> frozenset:
        return self.as_dict()[box]

    def weight(self, n: int) -> tuple[int, ...]:
        wt = [0] * n
        for _, s in self.cells:
            for k in s:
                wt[k - 1] += 1
        return tuple(wt)

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "cells": [{"row": r, "col": c, "set": sorted(s)} for (r, c), s in self.cells],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> SetValuedTableau:
        shape = Shape.from_json(data["shape"])
        return cls.from_dict(shape, {(c["row"], c["col"]): c["set"] for c in data["cells"]})

    def render(self) -> str:
        d = self.as_dict()
        if not d:
            return ""
        width = max(len("".join(map(str, sorted(s)))) for s in d.values())
        rows = max(r for r, _ in d)
        cols = max(c for _, c in d)
        lines = []
        for r in range(1, rows + 1):
            parts = []
            for c in range(1, cols + 1):
                s = d.get((r, c))
                parts.append(("".join(map(str, sorted(s))) if s else ".").ljust(width))
            lines.append(" ".join(parts).rstrip())
        return "\n".join(lines)

    def __str__(self) -> str:
        return self.render()


# semistandard conditions

def is_semistandard(T: SetValuedTableau) -> bool:
    d = T.as_dict()
    for (r, c), s in d.items():
        right = d.get((r, c + 1))
        if right is not None and max(s) > min(right):
            return False
        below = d.get((r + 1, c))
        if below is not None and max(s) >= min(below):
            return False
    return True


def distributions(T: SetValuedTableau) -> Iterator[dict[Box, int]]:
    boxes = [b for b, _ in T.cells]
    for choice in itertools.product(*(sorted(s) for _, s in T.cells)):
        yield dict(zip(boxes, choice))


def is_semistandard_by_distributions(T: SetValuedTableau) -> bool:
    """Reference check: every distribution has weak rows and strict columns."""
    boxes = [b for b, _ in T.cells]
    for d in distributions(T):
        for (r, c) in boxes:
            if (r, c + 1) in d and d[(r, c)] > d[(r, c + 1)]:
                return False
            if (r + 1, c) in d and d[(r, c)] >= d[(r + 1, c)]:
                return False
    return True


# reading words

def col_word(T: SetValuedTableau) -> tuple[frozenset, ...]:
    """Read up each column, columns left to right."""
    d = T.as_dict()
    return tuple(d[b] for b in sorted(d, key=lambda b: (b[1], -b[0])))


def row_word(T: SetValuedTableau) -> tuple[frozenset, ...]:
    """Rows left to right, starting with the bottom row."""
    d = T.as_dict()
    return tuple(d[b] for b in sorted(d, key=lambda b: (-b[0], b[1])))


def revrow_of_row(T: SetValuedTableau) -> tuple[frozenset, ...]:
    """Reversal of the row reading word."""
    return tuple(reversed(row_word(T)))


def revrow_shifted(T: SetValuedTableau) -> tuple[frozenset, ...]:
    """Rows right to left, starting with the top row."""
    d = T.as_dict()
    return tuple(d[b] for b in sorted(d, key=lambda b: (b[0], -b[1])))


revrow = revrow_of_row


def flat(sets: Sequence[Iterable[int]]) -> tuple[int, ...]:
    """w(S): replace each set by its entries in increasing order."""
    return tuple(x for s in sets for x in sorted(s))


# enumeration

def enumerate_settab(shape: Shape, n: int) -> list[SetValuedTableau]:
    """All semistandard set-valued tableaux of the given shape with entries in [n]."""
    boxes = sorted(shape.boxes())
    box_set = set(boxes)
    subsets = _nonempty_subsets(n)
    out = []
    filled: dict[Box, frozenset] = {}

    def rec(k: int) -> None:
        if k == len(boxes):
            out.append(SetValuedTableau(shape, tuple((b, filled[b]) for b in shape.boxes())))
            return
        r, c = boxes[k]
        lo = 1
        left = filled.get((r, c - 1)) if (r, c - 1) in box_set else None
        above = filled.get((r - 1, c)) if (r - 1, c) in box_set else None
        if left is not None:
            lo = max(lo, max(left))
        if above is not None:
            lo = max(lo, max(above) + 1)
        for s in subsets:
            if min(s) >= lo:
                filled[(r, c)] = s
                rec(k + 1)
        filled.pop((r, c), None)

    rec(0)
    return out


@lru_cache(maxsize=None)
def _G_skew(shape: Shape, n: int) -> Polynomial:
    return Polynomial.from_weights((T.weight(n) for T in enumerate_settab(shape, n)), n)


def G_skew(shape: Shape, n: int) -> Polynomial:
    """Σ x^wt(T) over SetTab_n(shape)."""
    return _G_skew(shape, n)


# crystals

def _rebuild(shape: Shape, order: Sequence[Box], word: Sequence[frozenset]) -> SetValuedTableau:
    d = dict(zip(order, word))
    return SetValuedTableau(shape, tuple((b, d[b]) for b in shape.boxes()))


def settab_crystal(shape: Shape, n: int) -> Crystal:
    """SetTab_n(shape) with operators transported from the column reading word."""
    tableaux = enumerate_settab(shape, n)
    members = set(tableaux)
    d0 = shape.boxes()
    order = sorted(d0, key=lambda b: (b[1], -b[0]))

    def transport(op):
        def act(i, T):
            S = op(col_word(T), i)
            if S is None:
                return None
            U = _rebuild(shape, order, S)
            if U not in members or not is_semistandard(U):
                raise CrystalError(f"operator left SetTab at {T}")
            return U
        return act

    return Crystal.from_functions(
        tableaux, n, SQRT,
        wt=lambda T: T.weight(n),
        e=transport(svwords.raise_),
        f=transport(svwords.lower),
        name=f"SetTab_{n}{shape}",
    )


def star_split(lam: Sequence[int], mu: Sequence[int], T: SetValuedTableau):
    """Split a tableau of shape λ∗μ into its λ part and μ part."""
    lam, mu = trim_partition(lam), trim_partition(mu)
    p, q = (lam[0] if lam else 0), len(mu)
    d = T.as_dict()
    left = {(r - q, c): s for (r, c), s in d.items() if c <= p}
    right = {(r, c - p): s for (r, c), s in d.items() if c > p}
    return (SetValuedTableau.from_dict(Shape.straight(lam), left),
            SetValuedTableau.from_dict(Shape.straight(mu), right))


def _lattice_counts(tableaux: Iterable[SetValuedTableau], reader, n: int) -> dict[tuple[int, ...], int]:
    counts: dict[tuple[int, ...], int] = {}
    for T in tableaux:
        w = flat(reader(T))
        if is_reverse_lattice(w):
            mu = trim_partition(word_weight(w, n))
            counts[mu] = counts.get(mu, 0) + 1
    return counts


def skew_G_expansion(nu: Sequence[int], lam: Sequence[int], n: int) -> Expansion:
    """a^ν_{λμ}: tableaux of shape ν/λ with reverse lattice column word of weight μ."""
    shape = Shape.skew(nu, lam)
    return Expansion("G", n, _lattice_counts(enumerate_settab(shape, n), col_word, n), method="count")


def product_expansion(lam: Sequence[int], mu: Sequence[int], n: int) -> Expansion:
    """c^ν_{λμ} counted on SetTab_n(λ∗μ)."""
    shape = Shape.star(lam, mu)
    return Expansion("G", n, _lattice_counts(enumerate_settab(shape, n), col_word, n), method="count")


# decomposition tableaux

def is_hook_word(w: Sequence[int]) -> bool:
    """Weakly decreasing then strictly increasing."""
    k = 0
    while k + 1 < len(w) and w[k] >= w[k + 1]:
        k += 1
    return all(w[t] < w[t + 1] for t in range(k, len(w) - 1))


def _row_boxes(boxes: Iterable[Box]) -> dict[int, list[Box]]:
    rows: dict[int, list[Box]] = {}
    for b in sorted(boxes):
        rows.setdefault(b[0], []).append(b)
    return rows


def _pair_ok(top: Mapping[int, int], bottom: Mapping[int, int]) -> bool:
    """No forbidden pattern between a row and the row below (column -> value)."""
    inf = float("inf")
    for j, a in top.items():
        c = bottom.get(j, inf)
        for k, b in bottom.items():
            if k > j and a <= b <= c:
                return False
    for k, x in bottom.items():
        z = top.get(k)
        if z is None:
            continue
        for j, y in top.items():
            if j < k and x < y < z:
                return False
    return True


def is_decomposition_tableau(filling: Mapping[Box, int]) -> bool:
    rows = _row_boxes(filling)
    for r, bs in rows.items():
        if not is_hook_word([filling[b] for b in bs]):
            return False
    for r in rows:
        if r + 1 in rows:
            top = {c: filling[(r, c)] for (_, c) in rows[r]}
            bottom = {c: filling[(r + 1, c)] for (_, c) in rows[r + 1]}
            if not _pair_ok(top, bottom):
                return False
    return True


def _row_distributions(sets: Sequence[frozenset]):
    return itertools.product(*(sorted(s) for s in sets))


def _row_all_hook(sets: tuple[frozenset, ...]) -> bool:
    return all(is_hook_word(d) for d in _row_distributions(sets))


@lru_cache(maxsize=None)
def _pair_all_ok(top_cols: tuple[int, ...], top: tuple[frozenset, ...],
                 bot_cols: tuple[int, ...], bottom: tuple[frozenset, ...]) -> bool:
    for dt in _row_distributions(top):
        tmap = dict(zip(top_cols, dt))
        for db in _row_distributions(bottom):
            if not _pair_ok(tmap, dict(zip(bot_cols, db))):
                return False
    return True


def is_set_decomposition_tableau(T: SetValuedTableau) -> bool:
    """Every distribution is a decomposition tableau.

    The conditions only involve single rows and pairs of consecutive rows, so
    checking all distributions row by row and pair by pair is equivalent to
    checking every distribution of the whole tableau.
    """
    d = T.as_dict()
    rows = _row_boxes(d)
    for bs in rows.values():
        if not _row_all_hook(tuple(d[b] for b in bs)):
            return False
    for r in rows:
        if r + 1 in rows:
            if not _pair_all_ok(tuple(c for _, c in rows[r]), tuple(d[b] for b in rows[r]),
                                tuple(c for _, c in rows[r + 1]), tuple(d[b] for b in rows[r + 1])):
                return False
    return True


@lru_cache(maxsize=None)
def _enumerate_setdectab(lam: tuple[int, ...], n: int) -> tuple[SetValuedTableau, ...]:
    shape = Shape.shifted_shape(lam)
    rows = _row_boxes(shape.boxes())
    subsets = _nonempty_subsets(n)
    row_fillings = {
        r: [f for f in itertools.product(subsets, repeat=len(bs)) if _row_all_hook(f)]
        for r, bs in rows.items()
    }
    out = []
    order = sorted(rows)

    def rec(k: int, chosen: list) -> None:
        if k == len(order):
            cells = {}
            for r, f in zip(order, chosen):
                cells.update(zip(rows[r], f))
            out.append(SetValuedTableau(shape, tuple((b, cells[b]) for b in shape.boxes())))
            return
        r = order[k]
        for f in row_fillings[r]:
            if k > 0:
                pr = order[k - 1]
                if not _pair_all_ok(tuple(c for _, c in rows[pr]), chosen[-1],
                                    tuple(c for _, c in rows[r]), f):
                    continue
            chosen.append(f)
            rec(k + 1, chosen)
            chosen.pop()

    rec(0, [])
    return tuple(out)


def enumerate_setdectab(lam: Sequence[int], n: int) -> list[SetValuedTableau]:
    lam = trim_partition(lam)
    if not is_strict_partition(lam):
        raise InvalidShapeError(f"{lam} is not strict")
    return list(_enumerate_setdectab(lam, n))


def GPdec(lam: Sequence[int], n: int) -> Polynomial:
    return Polynomial.from_weights((T.weight(n) for T in enumerate_setdectab(lam, n)), n)


def g_coeffs(lam: Sequence[int], n: int) -> Expansion:
    """g_{λμ}: set-valued decomposition tableaux with reverse lattice revrow of weight μ."""
    return Expansion("G", n, _lattice_counts(enumerate_setdectab(lam, n), revrow_shifted, n),
                     method="count")


def GPdec_one_row_formula(m: int, n: int) -> Polynomial:
    """Σ_{i=k}^m G_(i,1^{m-i}) + Σ_{i=k+1}^m G_(i,1^{m+1-i}) with k = max(1, m-n+1)."""
    k = max(1, m - n + 1)
    total = Polynomial.zero(n)
    for i in range(k, m + 1):
        lam = (i,) + (1,) * (m - i)
        if len(lam) <= n:
            total = total + grothendieck_G(lam, n, route="lascoux")
    for i in range(k + 1, m + 1):
        lam = (i,) + (1,) * (m + 1 - i)
        if len(lam) <= n:
            total = total + grothendieck_G(lam, n, route="lascoux")
    return total


def GP_one_row(m: int, n: int) -> Polynomial:
    """One-row fillings by non-empty subsets of 1' < 1 < 2' < 2 < … < n' < n.

    Consecutive boxes satisfy max(T_j) <= min(T_{j+1}), strictly when the max
    is primed. The first box sits on the diagonal and holds no primed letter.
    Both k' and k contribute to the k-th weight component.
    """
    if m < 1:
        raise ValueError("m must be positive")
    if n == 0:
        return Polynomial.zero(0)
    # letter k' is encoded as 2k-1 and k as 2k
    letters = range(1, 2 * n + 1)
    all_sets = [frozenset(c) for r in range(1, 2 * n + 1) for c in itertools.combinations(letters, r)]
    first_sets = [s for s in all_sets if all(x % 2 == 0 for x in s)]
    acc: dict[tuple[int, ...], int] = {}

    def rec(k: int, prev: frozenset | None, wt: list[int]) -> None:
        if k == m:
            key = tuple(wt)
            acc[key] = acc.get(key, 0) + 1
            return
        for s in (first_sets if k == 0 else all_sets):
            if prev is not None:
                top = max(prev)
                if top % 2 == 1 and not top < min(s):
                    continue
                if top > min(s):
                    continue
            for x in s:
                wt[(x + 1) // 2 - 1] += 1
            rec(k + 1, s, wt)
            for x in s:
                wt[(x + 1) // 2 - 1] -= 1

    rec(0, None, [0] * n)
    return Polynomial(n, acc)

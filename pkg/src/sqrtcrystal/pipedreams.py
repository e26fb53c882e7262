"""
Rectangular pipe dreams, their permutations, the square-root Demazure
subsets C_w and the Lascoux positivity scan.

An RPD of size n-by-m has n rows and m columns in matrix coordinates.
A tile is a bump when ``tiles[i-1][j-1]`` is True and a crossing otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import Permutation, bruhat_leq, hecke_product, permutations_of, reduced_words
from .crystals import SQRT, Crystal, demazure_op
from .errors import ConsistencyError, InvalidShapeError, SizeGuardError
from .polynomial import Expansion, Polynomial, expand_in_lascoux, grothendieck_frakG, piK
from . import svwords

__all__ = [
    "RPD", "DemazureSubset",
    "sigma", "sigma_trace", "sigma_demazure", "to_svword", "from_svword",
    "one_times", "sigma_bar", "rpd_crystal", "all_rpds", "random_rpd",
    "in_demazure_set", "demazure_set", "demazure_op_Di", "character_of",
    "chi_bump", "chi_cross", "cross_admissible", "chi_cross_matches_frakG",
    "i_strings", "string_law_violations", "lemma_las_op_violations",
    "theorem_Cw_violations", "composite_violations",
    "ScanEntry", "lascoux_positivity_scan", "rpd_dot", "RPD_LIMIT",
]

RPD_LIMIT = 20


@dataclass(frozen=True)
class RPD:
    tiles: tuple[tuple[bool, ...], ...]

    @property
    def n(self) -> int:
        return len(self.tiles)

    @property
    def m(self) -> int:
        return len(self.tiles[0]) if self.tiles else 0

    @classmethod
    def from_rows(cls, rows: Sequence[str]) -> RPD:
        """Rows of ``b`` (bump) and ``+`` (crossing), top row first."""
        tiles = tuple(tuple(ch == "b" for ch in row) for row in rows)
        if len({len(r) for r in tiles}) > 1:
            raise InvalidShapeError("rows must have equal length")
        return cls(tiles)

    @classmethod
    def all_bump(cls, m: int, n: int) -> RPD:
        return cls(tuple(tuple(True for _ in range(m)) for _ in range(n)))

    @classmethod
    def all_cross(cls, m: int, n: int) -> RPD:
        return cls(tuple(tuple(False for _ in range(m)) for _ in range(n)))

    def is_bump(self, i: int, j: int) -> bool:
        return self.tiles[i - 1][j - 1]

    def weight(self) -> tuple[int, ...]:
        """Bump tiles per row."""
        return tuple(sum(row) for row in self.tiles)

    def weight_cross(self) -> tuple[int, ...]:
        return tuple(len(row) - sum(row) for row in self.tiles)

    def crossings(self) -> list[tuple[int, int]]:
        """Crossing positions, bottom row first and left to right within a row."""
        return [(r, c) for r in range(self.n, 0, -1) for c in range(1, self.m + 1)
                if not self.is_bump(r, c)]

    def render(self) -> str:
        return "\n".join("".join("b" if t else "+" for t in row) for row in self.tiles)

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n, "rows": self.render().split("\n")}

    @classmethod
    def from_json(cls, data) -> RPD:
        return cls.from_rows(data["rows"])

    def __str__(self) -> str:
        return self.render()


def sigma_trace(D: RPD) -> Permutation:
    """σ_D by following labels through the tiles."""
    up = [D.n + j for j in range(1, D.m + 1)]
    right = [0] * D.n
    for r in range(D.n, 0, -1):
        left = r
        for c in range(D.m):
            bottom = up[c]
            if D.is_bump(r, c + 1):
                up[c], left = left, bottom
            else:
                up[c], left = max(left, bottom), min(left, bottom)
        right[r - 1] = left
    return Permutation(tuple(up) + tuple(right))


def sigma_demazure(D: RPD) -> Permutation:
    """σ_D as the Demazure product of s_{r+c-1} over the crossings."""
    return hecke_product(r + c - 1 for r, c in D.crossings())


def sigma(D: RPD) -> Permutation:
    a, b = sigma_trace(D), sigma_demazure(D)
    if a != b:
        raise ConsistencyError(f"pipe tracing gives {a} but the Demazure product gives {b}")
    return a


def to_svword(D: RPD) -> svwords.SVWord:
    return tuple(frozenset(i for i in range(1, D.n + 1) if D.is_bump(i, j))
                 for j in range(1, D.m + 1))


def from_svword(S: svwords.SVWord, n: int) -> RPD:
    if any(k < 1 or k > n for s in S for k in s):
        raise InvalidShapeError(f"letters must lie in [1, {n}]")
    return RPD(tuple(tuple(i in s for s in S) for i in range(1, n + 1)))


def one_times(m: int, v: Permutation, n: int) -> Permutation:
    """1^m × v in S_{m+n}."""
    return Permutation(tuple(range(1, m + 1)) + tuple(m + v(i) for i in range(1, n + 1)))


@lru_cache(maxsize=None)
def _sigma_bar(one_line: tuple[int, ...], m: int, n: int) -> Permutation:
    s = Permutation(one_line)
    size = m + n
    found = set()
    for v in permutations_of(n):
        tau = s * one_times(m, v.inverse(), n)
        line = list(tau.window(size))
        # the left factor relabels 1..n so that smaller values sit further right
        spots = sorted((p for p in range(size) if line[p] <= n), reverse=True)
        for k, p in enumerate(spots, start=1):
            line[p] = k
        tail = line[m:]
        if all(a > b for a, b in zip(tail, tail[1:])):
            found.add(Permutation(line))
    if len(found) != 1:
        raise ConsistencyError(f"orbit of {s} has {len(found)} canonical representatives")
    return found.pop()


def sigma_bar(D: RPD) -> Permutation:
    return _sigma_bar(sigma(D).one_line, D.m, D.n)


def _check_size(m: int, n: int) -> None:
    if m * n > RPD_LIMIT:
        raise SizeGuardError(f"RPD({m},{n}) has 2^{m * n} elements; limit is 2^{RPD_LIMIT}")


def all_rpds(m: int, n: int) -> list[RPD]:
    _check_size(m, n)
    return [from_svword(S, n) for S in svwords.all_words(n, m)]


def random_rpd(m: int, n: int, rng: random.Random) -> RPD:
    return RPD(tuple(tuple(rng.random() < 0.5 for _ in range(m)) for _ in range(n)))


@lru_cache(maxsize=None)
def rpd_crystal(m: int, n: int) -> Crystal:
    """RPD(m,n) with the crystal structure transported from SVWords(n,m)."""
    _check_size(m, n)

    def move(op):
        def act(i, D):
            S = op(to_svword(D), i)
            return None if S is None else from_svword(S, n)
        return act

    return Crystal.from_functions(
        all_rpds(m, n), n, SQRT,
        wt=RPD.weight, e=move(svwords.raise_), f=move(svwords.lower),
        name=f"RPD({m},{n})",
    )


# Demazure subsets

@dataclass(frozen=True)
class DemazureSubset:
    crystal: Crystal = field(repr=False, compare=False)
    members: frozenset
    w: Permutation

    def character(self) -> Polynomial:
        return character_of(self.crystal, self.members)


def in_demazure_set(D: RPD, w: Permutation) -> bool:
    """Is σ_D = u·σ̄_D·(1^m×v) for some u, v in S_n with v ≤ w?"""
    m, n = D.m, D.n
    s, sb = sigma(D), sigma_bar(D)
    sb_inv = sb.inverse()
    for v in permutations_of(n):
        if not bruhat_leq(v, w):
            continue
        u = s * one_times(m, v, n).inverse() * sb_inv
        if u.in_S(n):
            return True
    return False


def demazure_set(B: Crystal, w: Permutation, members: Iterable[RPD] | None = None) -> DemazureSubset:
    C = B.elements if members is None else members
    return DemazureSubset(B, frozenset(D for D in C if in_demazure_set(D, w)), w)


def demazure_op_Di(B: Crystal, X: Iterable[RPD], i: int, within: Iterable[RPD] | None = None) -> frozenset:
    """𝔇_i(X), optionally restricted to a union of components."""
    out = demazure_op(B, X, i)
    return out if within is None else out & frozenset(within)


def character_of(B: Crystal, members: Iterable) -> Polynomial:
    return Polynomial.from_weights((B.wt(b) for b in members), B.n)


# generating functions

def chi_bump(m: int, n: int, w: Permutation) -> Polynomial:
    return Polynomial.from_weights((D.weight() for D in all_rpds(m, n) if sigma(D) == w), n)


def chi_cross(m: int, n: int, w: Permutation) -> Polynomial:
    return Polynomial.from_weights((D.weight_cross() for D in all_rpds(m, n) if sigma(D) == w), n)


def cross_admissible(w: Permutation, m: int, n: int) -> bool:
    """n < w(m+1) < ... < w(m+n), the range where χ^cross is a restricted 𝔊_w."""
    tail = [w(m + k) for k in range(1, n + 1)]
    return tail[0] > n and all(a < b for a, b in zip(tail, tail[1:]))


def chi_cross_matches_frakG(m: int, n: int, w: Permutation) -> bool:
    return chi_cross(m, n, w) == grothendieck_frakG(w, n, m + n)


# string laws

def i_strings(B: Crystal, i: int) -> list[list]:
    """Every i-string, listed from its source."""
    out = []
    for b in B.elements:
        if B.e(i, b) is None:
            chain = [b]
            while (c := B.f(i, chain[-1])) is not None:
                chain.append(c)
            out.append(chain)
    return out


def string_law_violations(m: int, n: int) -> list[str]:
    """Check the permutation pattern along every i-string of RPD(m,n)."""
    B = rpd_crystal(m, n)
    bad = []
    for i in range(1, n):
        for chain in i_strings(B, i):
            u = [sigma(D) for D in chain]
            l = len(chain) - 1
            D0 = chain[0]
            rows_cross = not any(D0.tiles[i - 1]) and not any(D0.tiles[i])
            if rows_cross:
                if l != 0 or u[0](m + i) != i or u[0](m + i + 1) != i + 1:
                    bad.append(f"i={i} all-cross source {D0.render()!r}")
                continue
            if not u[0](m + i) > u[0](m + i + 1):
                bad.append(f"i={i} source {D0.render()!r}: no descent at {m + i}")
            ul_inv = u[-1].inverse()
            if not ul_inv(i) > ul_inv(i + 1):
                bad.append(f"i={i} sink {chain[-1].render()!r}: {i} does not follow {i + 1}")
            inner = set(u[1:l])
            if len(inner) > 1:
                bad.append(f"i={i} string from {D0.render()!r}: interior permutations differ")
            for x in inner:
                if x not in (u[0], u[0] * Permutation.s(m + i)) or x not in (u[-1], Permutation.s(i) * u[-1]):
                    bad.append(f"i={i} string from {D0.render()!r}: interior {x} out of range")
    return bad


def lemma_las_op_violations(B: Crystal) -> list[str]:
    """πᴷ_i sends the source monomial to the string sum and fixes the sum."""
    bad = []
    for i in range(1, B.n):
        for chain in i_strings(B, i):
            total = character_of(B, chain)
            if piK(i, Polynomial.monomial(B.wt(chain[0]))) != total:
                bad.append(f"i={i} source {chain[0]!r}: πᴷ of source differs from string sum")
            if piK(i, total) != total:
                bad.append(f"i={i} source {chain[0]!r}: string sum not fixed")
    return bad


def _scopes(B: Crystal, per_component: bool) -> list[tuple[str, frozenset]]:
    scopes = [("full", frozenset(B.elements))]
    if per_component:
        for k, comp in enumerate(B.component_indices()):
            scopes.append((f"component {k}", frozenset(B.elements[t] for t in comp)))
    return scopes


def theorem_Cw_violations(m: int, n: int, per_component: bool = True) -> list[str]:
    """C_{ws_i} = 𝔇_i(C_w) and ch(C_{ws_i}) = πᴷ_i ch(C_w) whenever w(i) < w(i+1)."""
    B = rpd_crystal(m, n)
    bad = []
    for name, C in _scopes(B, per_component):
        sets = {w: demazure_set(B, w, C).members for w in permutations_of(n)}
        for w in permutations_of(n):
            for i in range(1, n):
                if w(i) >= w(i + 1):
                    continue
                ws = w * Permutation.s(i)
                lhs = sets[ws]
                rhs = demazure_op_Di(B, sets[w], i, within=C)
                if lhs != rhs:
                    bad.append(f"{name}: C_{ws} differs from 𝔇_{i}(C_{w})")
                if character_of(B, lhs) != piK(i, character_of(B, sets[w])):
                    bad.append(f"{name}: ch(C_{ws}) differs from πᴷ_{i} ch(C_{w})")
    return bad


def composite_violations(m: int, n: int, literal: bool = False) -> list[str]:
    """Compare C_w with iterated 𝔇 operators along every reduced word i_1⋯i_k of w.

    By default 𝔇_{i_1} is applied first and 𝔇_{i_k} last, the order forced by
    C_{ws_i} = 𝔇_i(C_w). With ``literal`` the word is applied right to left
    (𝔇_{i_1} outermost), which matches C_w only when the word also spells w^{-1}.
    Characters are compared along the same order using πᴷ.
    """
    B = rpd_crystal(m, n)
    base = demazure_set(B, Permutation.identity()).members
    base_ch = character_of(B, base)
    bad = []
    for w in permutations_of(n):
        target = demazure_set(B, w).members
        target_ch = character_of(B, target)
        for word in sorted(reduced_words(w)):
            order = tuple(reversed(word)) if literal else word
            X, ch = base, base_ch
            for i in order:
                X = demazure_op(B, X, i)
                ch = piK(i, ch)
            if X != target:
                bad.append(f"C_{w} differs from the 𝔇 composite along {word}")
            if ch != target_ch:
                bad.append(f"ch(C_{w}) differs from the πᴷ composite along {word}")
    return bad


# positivity scan

@dataclass
class ScanEntry:
    scope: str
    w: Permutation
    expansion: Expansion

    @property
    def positive(self) -> bool:
        return self.expansion.positive

    def to_json(self) -> dict:
        return {"scope": self.scope, "w": str(self.w), "positive": self.positive,
                "expansion": self.expansion.to_json()}


def lascoux_positivity_scan(m: int, n: int, per_component: bool = True,
                            perms: Iterable[Permutation] | None = None) -> list[ScanEntry]:
    """Expand ch(C_w) in Lascoux polynomials for the full RPD(m,n) and each component.

    Positivity on every component gives positivity on every union of components.
    """
    B = rpd_crystal(m, n)
    ws = list(perms) if perms is not None else list(permutations_of(n))
    entries = []
    for name, C in _scopes(B, per_component):
        for w in ws:
            ch = character_of(B, demazure_set(B, w, C).members)
            entries.append(ScanEntry(name, w, expand_in_lascoux(ch)))
    return entries


def rpd_dot(m: int, n: int) -> str:
    """DOT graph of RPD(m,n) with one cluster per component labelled by σ̄."""
    B = rpd_crystal(m, n)
    lines = [f'digraph "RPD({m},{n})" {{']
    for k, comp in enumerate(B.component_indices()):
        label = sigma_bar(B.elements[comp[0]])
        lines.append(f'  subgraph cluster_{k} {{ label="σ̄ = {label}";')
        for t in comp:
            D = B.elements[t]
            shape = ", peripheries=2" if B.is_highest_weight(D) else ""
            text = D.render().replace("\n", "\\n")
            lines.append(f'    v{t} [label="{text}", shape=box{shape}];')
        lines.append("  }")
    for i, row in enumerate(B.f_table, start=1):
        for a, b in enumerate(row):
            if b is not None:
                lines.append(f'  v{a} -> v{b} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

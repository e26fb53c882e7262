"""
Finite gl_n and square-root gl_n crystals stored as explicit graphs.

A crystal holds its elements in a list together with, for every index i,
arrays giving e_i and f_i as element positions (``None`` is the null value).
Elements are arbitrary hashable values; tensor products use right-nested
pairs ``(b, (c, d))``.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Callable, Hashable, Iterable, Sequence

from .algebra import Permutation, reduced_words
from .errors import CrystalError
from .polynomial import Polynomial, pi

__all__ = [
    "Crystal", "GL", "SQRT",
    "standard_gl", "standard_sqrt", "trivial", "disjoint_union", "tensor", "tensor_power",
    "flatten_tensor", "big_E", "rect", "squared", "minlevel", "slice_2delta",
    "demazure_op", "demazure_crystal_gl", "demazure_character_check", "is_isomorphic",
]

GL = "gl"
SQRT = "sqrt"

Element = Hashable
Weight = tuple[int, ...]


class Crystal:
    """A finite crystal with operators tabulated over its whole universe."""

    def __init__(
        self,
        elements: Sequence[Element],
        n: int,
        family: str,
        weights: Sequence[Weight],
        e_table: Sequence[Sequence[int | None]],
        f_table: Sequence[Sequence[int | None]],
        name: str = "",
    ):
        if family not in (GL, SQRT):
            raise ValueError(f"unknown family {family}")
        self.elements = list(elements)
        self.index = {b: k for k, b in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise CrystalError("duplicate elements")
        self.n = n
        self.family = family
        self.weights = [tuple(w) for w in weights]
        self.e_table = [list(row) for row in e_table]
        self.f_table = [list(row) for row in f_table]
        self.name = name
        self._eps: list[list[int]] | None = None
        self._phi: list[list[int]] | None = None

    @classmethod
    def from_functions(
        cls,
        elements: Iterable[Element],
        n: int,
        family: str,
        wt: Callable[[Element], Weight],
        e: Callable[[int, Element], Element | None],
        f: Callable[[int, Element], Element | None] | None = None,
        name: str = "",
    ) -> Crystal:
        """Tabulate operator functions; raises if an operator leaves the set.

        When ``f`` is omitted it is recovered as the partial inverse of ``e``.
        """
        elems = list(elements)
        index = {b: k for k, b in enumerate(elems)}

        def lookup(c):
            if c is None:
                return None
            try:
                return index[c]
            except KeyError:
                raise CrystalError(f"operator result {c!r} is outside the crystal") from None

        e_tab = [[lookup(e(i, b)) for b in elems] for i in range(1, n)]
        if f is None:
            f_tab = [[None] * len(elems) for _ in range(1, n)]
            for i in range(n - 1):
                for k, t in enumerate(e_tab[i]):
                    if t is not None:
                        if f_tab[i][t] is not None:
                            raise CrystalError("e_i is not injective")
                        f_tab[i][t] = k
        else:
            f_tab = [[lookup(f(i, b)) for b in elems] for i in range(1, n)]
        return cls(elems, n, family, [wt(b) for b in elems], e_tab, f_tab, name)

    # element-level access

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b) -> bool:
        return b in self.index

    def wt(self, b: Element) -> Weight:
        return self.weights[self.index[b]]

    def e(self, i: int, b: Element) -> Element | None:
        t = self.e_table[i - 1][self.index[b]]
        return None if t is None else self.elements[t]

    def f(self, i: int, b: Element) -> Element | None:
        t = self.f_table[i - 1][self.index[b]]
        return None if t is None else self.elements[t]

    def e_power(self, i: int, b: Element | None, k: int) -> Element | None:
        for _ in range(k):
            if b is None:
                return None
            b = self.e(i, b)
        return b

    def f_power(self, i: int, b: Element | None, k: int) -> Element | None:
        for _ in range(k):
            if b is None:
                return None
            b = self.f(i, b)
        return b

    def _string_lengths(self, table: list[list[int | None]]) -> list[list[int]]:
        out = []
        for row in table:
            lengths = [-1] * len(row)
            for k in range(len(row)):
                if lengths[k] >= 0:
                    continue
                path = []
                cur = k
                while cur is not None and lengths[cur] < 0:
                    path.append(cur)
                    cur = row[cur]
                    if len(path) > len(row):
                        raise CrystalError("operator has a cycle")
                base = 0 if cur is None else lengths[cur] + 1
                for p in reversed(path):
                    lengths[p] = base
                    base += 1
            out.append(lengths)
        return out

    def epsilon(self, i: int, b: Element) -> int:
        if self._eps is None:
            self._eps = self._string_lengths(self.e_table)
        return self._eps[i - 1][self.index[b]]

    def phi(self, i: int, b: Element) -> int:
        if self._phi is None:
            self._phi = self._string_lengths(self.f_table)
        return self._phi[i - 1][self.index[b]]

    def is_highest_weight(self, b: Element) -> bool:
        k = self.index[b]
        return all(row[k] is None for row in self.e_table)

    def highest_weights(self) -> list[Element]:
        return [b for b in self.elements if self.is_highest_weight(b)]

    def character(self) -> Polynomial:
        return Polynomial.from_weights(self.weights, self.n)

    def edges(self) -> list[tuple[Element, int, Element]]:
        """Edges b --i--> f_i(b)."""
        out = []
        for i, row in enumerate(self.f_table, start=1):
            for k, t in enumerate(row):
                if t is not None:
                    out.append((self.elements[k], i, self.elements[t]))
        return out

    # substructures

    def subcrystal(self, members: Iterable[Element], name: str = "") -> Crystal:
        """Restriction to a set closed under all e_i and f_i."""
        members = list(members)
        idx = {self.index[b]: k for k, b in enumerate(members)}

        def remap(t):
            if t is None:
                return None
            if t not in idx:
                raise CrystalError("member set is not a union of full subcrystals")
            return idx[t]

        old = [self.index[b] for b in members]
        e_tab = [[remap(row[k]) for k in old] for row in self.e_table]
        f_tab = [[remap(row[k]) for k in old] for row in self.f_table]
        return Crystal(members, self.n, self.family, [self.weights[k] for k in old],
                       e_tab, f_tab, name)

    def component_indices(self) -> list[list[int]]:
        size = len(self.elements)
        seen = [False] * size
        comps = []
        for start in range(size):
            if seen[start]:
                continue
            seen[start] = True
            comp = [start]
            queue = deque([start])
            while queue:
                k = queue.popleft()
                for table in (self.e_table, self.f_table):
                    for row in table:
                        t = row[k]
                        if t is not None and not seen[t]:
                            seen[t] = True
                            comp.append(t)
                            queue.append(t)
            comps.append(sorted(comp))
        return comps

    def components(self) -> list[Crystal]:
        """Full subcrystals (weakly connected components)."""
        return [self.subcrystal([self.elements[k] for k in comp])
                for comp in self.component_indices()]

    # axioms

    def audit(self) -> list[str]:
        """Check the axioms of this crystal's family; returns violation messages."""
        problems = []
        scale = 1 if self.family == GL else 2
        for i in range(1, self.n):
            for b in self.elements:
                w = self.wt(b)
                diff = self.phi(i, b) - self.epsilon(i, b)
                if diff != scale * (w[i - 1] - w[i]):
                    problems.append(f"string length axiom fails at i={i}, b={b!r}")
                c = self.e(i, b)
                if c is not None:
                    if self.f(i, c) != b:
                        problems.append(f"f_{i} does not invert e_{i} at {b!r}")
                    delta = tuple(x - y for x, y in zip(self.wt(c), w))
                    expected = [0] * self.n
                    if self.family == GL or self.epsilon(i, b) % 2 == 0:
                        expected[i - 1] = 1
                    if self.family == GL:
                        expected[i] = -1
                    elif self.epsilon(i, b) % 2 == 1:
                        expected[i] = -1
                    if delta != tuple(expected):
                        problems.append(f"weight change of e_{i} wrong at {b!r}")
                d = self.f(i, b)
                if d is not None and self.e(i, d) != b:
                    problems.append(f"e_{i} does not invert f_{i} at {b!r}")
        return problems

    def assert_valid(self) -> None:
        problems = self.audit()
        if problems:
            raise CrystalError("; ".join(problems[:5]))

    # export

    def to_json(self, render: Callable[[Element], str] = repr) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "vertices": [
                {"id": k, "label": render(b), "weight": list(self.weights[k]),
                 "highest_weight": self.is_highest_weight(b)}
                for k, b in enumerate(self.elements)
            ],
            "edges": [
                {"source": k, "target": t, "label": i}
                for i, row in enumerate(self.f_table, start=1)
                for k, t in enumerate(row) if t is not None
            ],
        }

    def to_dot(self, render: Callable[[Element], str] = repr) -> str:
        lines = [f'digraph "{self.name or "crystal"}" {{']
        for k, b in enumerate(self.elements):
            label = f"{render(b)}\\nwt={self.weights[k]}"
            style = ", peripheries=2" if self.is_highest_weight(b) else ""
            lines.append(f'  v{k} [label={json.dumps(label)}{style}];')
        for i, row in enumerate(self.f_table, start=1):
            for k, t in enumerate(row):
                if t is not None:
                    lines.append(f'  v{k} -> v{t} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


# standard objects

def _unit(n: int, i: int) -> Weight:
    w = [0] * n
    w[i - 1] = 1
    return tuple(w)


def standard_gl(n: int) -> Crystal:
    """B_n: boxes 1..n with f_i(i) = i+1."""
    return Crystal.from_functions(
        range(1, n + 1), n, GL,
        wt=lambda b: _unit(n, b),
        e=lambda i, b: i if b == i + 1 else None,
        f=lambda i, b: i + 1 if b == i else None,
        name=f"B_{n}",
    )


def _sqrt_e(i: int, s: frozenset) -> frozenset | None:
    has_i, has_j = i in s, i + 1 in s
    if has_j and not has_i:
        return s | {i}
    if has_i and has_j:
        return s - {i + 1}
    return None


def _sqrt_f(i: int, s: frozenset) -> frozenset | None:
    has_i, has_j = i in s, i + 1 in s
    if has_i and not has_j:
        return s | {i + 1}
    if has_i and has_j:
        return s - {i}
    return None


def _subsets(n: int, include_empty: bool) -> list[frozenset]:
    out = []
    for mask in range(0 if include_empty else 1, 1 << n):
        out.append(frozenset(k + 1 for k in range(n) if mask >> k & 1))
    return out


def _set_weight(n: int, s: frozenset) -> Weight:
    return tuple(1 if k in s else 0 for k in range(1, n + 1))


def standard_sqrt(n: int, include_empty: bool = False) -> Crystal:
    """S_n on non-empty subsets of [n]; ``include_empty`` gives 1 ⊔ S_n."""
    return Crystal.from_functions(
        _subsets(n, include_empty), n, SQRT,
        wt=lambda s: _set_weight(n, s),
        e=_sqrt_e, f=_sqrt_f,
        name=f"S_{n}",
    )


def trivial(n: int, family: str = SQRT, element: Element = frozenset()) -> Crystal:
    """The one-element crystal of weight zero; its element is the empty set."""
    return Crystal([element], n, family, [(0,) * n],
                   [[None] for _ in range(n - 1)], [[None] for _ in range(n - 1)], "1")


def disjoint_union(*crystals: Crystal, tag: bool = False) -> Crystal:
    """Disjoint union. With ``tag`` the elements become ``(k, b)``."""
    first = crystals[0]
    elements, weights = [], []
    e_tab = [[] for _ in range(first.n - 1)]
    f_tab = [[] for _ in range(first.n - 1)]
    offset = 0
    for k, c in enumerate(crystals):
        if c.n != first.n or c.family != first.family:
            raise CrystalError("cannot combine crystals of different type")
        elements.extend((k, b) if tag else b for b in c.elements)
        weights.extend(c.weights)
        for i in range(first.n - 1):
            e_tab[i].extend(None if t is None else t + offset for t in c.e_table[i])
            f_tab[i].extend(None if t is None else t + offset for t in c.f_table[i])
        offset += len(c)
    return Crystal(elements, first.n, first.family, weights, e_tab, f_tab)


def tensor(B: Crystal, C: Crystal) -> Crystal:
    """B ⊗ C on pairs (b, c) with the usual signature rule."""
    if B.n != C.n or B.family != C.family:
        raise CrystalError("cannot tensor crystals of different type")
    n = B.n
    elements = [(b, c) for b in B.elements for c in C.elements]

    def e(i, pair):
        b, c = pair
        if B.epsilon(i, b) <= C.phi(i, c):
            ec = C.e(i, c)
            return None if ec is None else (b, ec)
        eb = B.e(i, b)
        return None if eb is None else (eb, c)

    def f(i, pair):
        b, c = pair
        if B.epsilon(i, b) < C.phi(i, c):
            fc = C.f(i, c)
            return None if fc is None else (b, fc)
        fb = B.f(i, b)
        return None if fb is None else (fb, c)

    def wt(pair):
        return tuple(x + y for x, y in zip(B.wt(pair[0]), C.wt(pair[1])))

    return Crystal.from_functions(elements, n, B.family, wt, e, f,
                                  name=f"({B.name})⊗({C.name})")


def tensor_power(B: Crystal, m: int) -> Crystal:
    """B^{⊗m} with right-nested elements; m = 0 gives the trivial crystal."""
    if m == 0:
        return trivial(B.n, B.family)
    out = B
    for _ in range(m - 1):
        out = tensor(B, out)
    return out


def flatten_tensor(x: Element, m: int) -> tuple:
    """Turn a right-nested m-fold tensor into a flat tuple."""
    out = []
    for _ in range(m - 1):
        out.append(x[0])
        x = x[1]
    out.append(x)
    return tuple(out)


def nest_tensor(parts: Sequence[Element]) -> Element:
    x = parts[-1]
    for p in reversed(parts[:-1]):
        x = (p, x)
    return x


# string operators

def big_E(B: Crystal, i: int, b: Element) -> Element:
    """Move b to the top of its i-string."""
    return B.e_power(i, b, B.epsilon(i, b))


def rect(B: Crystal, b: Element) -> Element:
    """(E_1⋯E_{n-1})⋯(E_1E_2)(E_1) applied to b, rightmost factor first."""
    for j in range(1, B.n):
        for i in range(j, 0, -1):
            b = big_E(B, i, b)
    return b


def squared(B: Crystal) -> Crystal:
    """Same elements and weights with operators e_i^2 and f_i^2."""
    if B.family != SQRT:
        raise CrystalError("squaring applies to square-root crystals")
    e_tab = [[None if t is None else row[t] for t in row] for row in B.e_table]
    f_tab = [[None if t is None else row[t] for t in row] for row in B.f_table]
    return Crystal(B.elements, B.n, GL, B.weights, e_tab, f_tab, name=f"({B.name})^(2)")


def minlevel(B: Crystal) -> int:
    return min(sum(w) for w in B.weights)


def slice_2delta(B: Crystal, delta: int) -> Crystal:
    """Elements of total weight minlevel(B) + δ, as a subcrystal of B^(2)."""
    level = minlevel(B) + delta
    members = [b for b, w in zip(B.elements, B.weights) if sum(w) == level]
    return squared(B).subcrystal(members, name=f"{B.name}^(2:{delta})")


# Demazure subsets

def demazure_op(B: Crystal, X: Iterable[Element], i: int) -> frozenset:
    """𝔇_i(X): elements whose i-string upward meets X."""
    X = set(X)
    out = set()
    for b in B.elements:
        c = b
        while c is not None:
            if c in X:
                out.add(b)
                break
            c = B.e(i, c)
    return frozenset(out)


def demazure_crystal_gl(B: Crystal, word: Sequence[int]) -> frozenset:
    """𝔇_{i_1}⋯𝔇_{i_k}(HW(B)) for the word i_1⋯i_k."""
    X = frozenset(B.highest_weights())
    for i in reversed(word):
        X = demazure_op(B, X, i)
    return X


def demazure_character_check(B: Crystal, w: Permutation) -> bool:
    """Compare ch(B_w) with the Demazure character formula for every reduced word."""
    words = sorted(reduced_words(w))
    sets = {demazure_crystal_gl(B, word) for word in words}
    if len(sets) != 1:
        return False
    members = sets.pop()
    direct = Polynomial.from_weights((B.wt(b) for b in members), B.n)
    formula = Polynomial.zero(B.n)
    for b in B.highest_weights():
        p = Polynomial.monomial(B.wt(b))
        for i in reversed(words[0]):
            p = pi(i, p)
        formula = formula + p
    return direct == formula


def is_isomorphic(B: Crystal, C: Crystal) -> bool:
    """Weight-preserving labeled-graph isomorphism."""
    import networkx as nx
    from networkx.algorithms.isomorphism import DiGraphMatcher

    def graph(X):
        g = nx.DiGraph()
        for k, w in enumerate(X.weights):
            g.add_node(k, wt=w)
        for i, row in enumerate(X.f_table, start=1):
            for k, t in enumerate(row):
                if t is not None:
                    g.add_edge(k, t, label=i)
        return g

    if B.n != C.n or len(B) != len(C) or B.character() != C.character():
        return False
    matcher = DiGraphMatcher(
        graph(B), graph(C),
        node_match=lambda a, b: a["wt"] == b["wt"],
        edge_match=lambda a, b: a["label"] == b["label"],
    )
    return matcher.is_isomorphic()

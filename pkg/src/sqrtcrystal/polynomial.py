"""
Exact sparse polynomials in x_1..x_n with integer coefficients, the
divided difference operators, and the key / Lascoux / Grothendieck / Schur
families together with triangular expansions into them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

from .algebra import Permutation, is_partition, rev, trim_partition
from .errors import ConsistencyError, InvalidShapeError

__all__ = [
    "Polynomial", "Expansion",
    "dd", "ddK", "pi", "piK",
    "key_poly", "lascoux_poly", "grothendieck_G", "schur", "grothendieck_frakG",
    "expand_in_G", "expand_in_lascoux", "expand_in_schur",
]

Exp = tuple[int, ...]


class Polynomial:
    """Finitely supported map from exponent vectors of length n to nonzero ints."""

    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exp, int] | None = None):
        self.n = n
        clean: dict[Exp, int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n or any(a < 0 for a in e):
                raise ValueError(f"bad exponent {e} for n={n}")
            if c:
                clean[e] = clean.get(e, 0) + int(c)
                if not clean[e]:
                    del clean[e]
        self.terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls(n)

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls(n, {(0,) * n: 1})

    @classmethod
    def monomial(cls, exp: Iterable[int], coeff: int = 1) -> Polynomial:
        e = tuple(exp)
        return cls(len(e), {e: coeff})

    @classmethod
    def var(cls, i: int, n: int) -> Polynomial:
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def from_weights(cls, weights: Iterable[Exp], n: int) -> Polynomial:
        """Sum of x^w over the given weight vectors."""
        acc: dict[Exp, int] = {}
        for w in weights:
            w = tuple(w)
            acc[w] = acc.get(w, 0) + 1
        return cls(n, acc)

    # arithmetic

    def _check(self, other: Polynomial) -> None:
        if self.n != other.n:
            raise ValueError(f"variable counts differ: {self.n} vs {other.n}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, {(0,) * self.n: other})
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(self.n, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial(self.n, {(0,) * self.n: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # structure

    def coeff(self, exp: Iterable[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def min_degree(self) -> int:
        return min(self.degrees())

    def max_degree(self) -> int:
        return max(self.degrees())

    def homogeneous(self, d: int) -> Polynomial:
        return Polynomial(self.n, {e: c for e, c in self.terms.items() if sum(e) == d})

    def lowest_part(self) -> Polynomial:
        if not self.terms:
            return self
        return self.homogeneous(self.min_degree())

    def swap(self, i: int) -> Polynomial:
        """s_i f: exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return Polynomial(self.n, out)

    def is_symmetric(self) -> bool:
        return all(self.swap(i) == self for i in range(1, self.n))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self.terms.values())

    def restrict(self, k: int) -> Polynomial:
        """Set x_{k+1}, x_{k+2}, ... to zero (or pad with new variables)."""
        if k >= self.n:
            pad = (0,) * (k - self.n)
            return Polynomial(k, {e + pad: c for e, c in self.terms.items()})
        return Polynomial(k, {e[:k]: c for e, c in self.terms.items() if not any(e[k:])})

    # io

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in sorted(self.terms.items())],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Polynomial:
        return cls(data["n"], {tuple(t["exp"]): int(t["coeff"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), tuple(-a for a in e))):
            c = self.terms[e]
            mono = "".join(
                f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial(n={self.n}, {self})"


# divided differences

def _divide_by_difference(g: Polynomial, i: int) -> Polynomial:
    """Exact division of g by (x_i - x_{i+1}), by synthetic division in x_i."""
    rem = dict(g.terms)
    quot: dict[Exp, int] = {}
    a, b = i - 1, i
    while rem:
        e = max(rem, key=lambda t: (t[a], t))
        c = rem[e]
        if e[a] == 0:
            raise ConsistencyError(f"non-exact division by x{i}-x{i + 1}")
        q = list(e)
        q[a] -= 1
        q = tuple(q)
        quot[q] = quot.get(q, 0) + c
        # subtract c * x^q * (x_i - x_{i+1})
        del rem[e]
        f = list(q)
        f[b] += 1
        f = tuple(f)
        rem[f] = rem.get(f, 0) + c
        if not rem[f]:
            del rem[f]
    return Polynomial(g.n, quot)


def _check_index(i: int, f: Polynomial) -> None:
    if not 1 <= i <= f.n - 1:
        raise ValueError(f"index {i} out of range for n={f.n}")


def dd(i: int, f: Polynomial) -> Polynomial:
    """∂_i f = (f - s_i f) / (x_i - x_{i+1})."""
    _check_index(i, f)
    return _divide_by_difference(f - f.swap(i), i)


def ddK(i: int, f: Polynomial) -> Polynomial:
    """K-theoretic divided difference ∂_i((1 + x_{i+1}) f)."""
    _check_index(i, f)
    return dd(i, f + Polynomial.var(i + 1, f.n) * f)


def pi(i: int, f: Polynomial) -> Polynomial:
    """Demazure operator π_i f = ∂_i(x_i f)."""
    _check_index(i, f)
    return dd(i, Polynomial.var(i, f.n) * f)


def piK(i: int, f: Polynomial) -> Polynomial:
    """Demazure–Lascoux operator πᴷ_i f = ∂ᴷ_i(x_i f)."""
    _check_index(i, f)
    return ddK(i, Polynomial.var(i, f.n) * f)


# key and Lascoux polynomials

def _sorting_word(alpha: Exp, order: str) -> list[int]:
    """Indices i_1..i_k with alpha = sort(alpha) s_{i_k}...; built from alpha downwards.

    The returned list is the order in which operators are applied to x^λ.
    """
    steps = []
    a = list(alpha)
    while True:
        ascents = [i for i in range(1, len(a)) if a[i - 1] < a[i]]
        if not ascents:
            break
        i = ascents[0] if order == "first" else ascents[-1]
        steps.append(i)
        a[i - 1], a[i] = a[i], a[i - 1]
    return steps[::-1]


def _demazure_family(alpha: Exp, op, order: str) -> Polynomial:
    lam = tuple(sorted(alpha, reverse=True))
    f = Polynomial.monomial(lam)
    for i in _sorting_word(tuple(alpha), order):
        f = op(i, f)
    return f


@lru_cache(maxsize=None)
def _key(alpha: Exp, order: str) -> Polynomial:
    return _demazure_family(alpha, pi, order)


@lru_cache(maxsize=None)
def _lascoux(alpha: Exp, order: str) -> Polynomial:
    return _demazure_family(alpha, piK, order)


def key_poly(alpha: Iterable[int], order: str = "first") -> Polynomial:
    """Key polynomial κ_α; ``order`` picks which ascent is undone first."""
    return _key(tuple(alpha), order)


def lascoux_poly(alpha: Iterable[int], order: str = "first") -> Polynomial:
    """Lascoux polynomial 𝔏_α."""
    return _lascoux(tuple(alpha), order)


# symmetric families

def _check_partition(lam: Iterable[int], n: int) -> tuple[int, ...]:
    lam = trim_partition(lam)
    if not is_partition(lam):
        raise InvalidShapeError(f"{lam} is not a partition")
    if len(lam) > n:
        raise InvalidShapeError(f"{lam} has more than {n} parts")
    return lam


@lru_cache(maxsize=None)
def _grothendieck_tableaux(lam: tuple[int, ...], n: int) -> Polynomial:
    from .tableaux import Shape, G_skew

    return G_skew(Shape.straight(lam), n)


def grothendieck_G(lam: Iterable[int], n: int, route: str = "tableaux") -> Polynomial:
    """Symmetric Grothendieck polynomial G_λ(x_1..x_n).

    ``route="tableaux"`` sums over set-valued tableaux; ``route="lascoux"``
    uses 𝔏_{rev λ}. The two agree; the tests compare them.
    """
    lam = _check_partition(lam, n)
    if n == 0:
        return Polynomial.one(0)
    if route == "lascoux":
        return lascoux_poly(rev(lam, n))
    return _grothendieck_tableaux(lam, n)


def schur(lam: Iterable[int], n: int) -> Polynomial:
    """Schur polynomial: lowest degree part of G_λ."""
    lam = _check_partition(lam, n)
    if n == 0:
        return Polynomial.one(0)
    return grothendieck_G(lam, n, route="lascoux").lowest_part()


@lru_cache(maxsize=None)
def _frakG(one_line: tuple[int, ...], N: int) -> Polynomial:
    w = Permutation(one_line)
    top = Permutation.longest(N)
    if w == top:
        return Polynomial.monomial(tuple(range(N - 1, -1, -1)))
    for i in range(1, N):
        if w(i) < w(i + 1):
            return ddK(i, _frakG((w * Permutation.s(i)).one_line, N))
    raise AssertionError("unreachable: only the longest element has no ascent")


def grothendieck_frakG(w: Permutation, n: int, N: int | None = None) -> Polynomial:
    """Grothendieck polynomial 𝔊_w restricted to x_1..x_n.

    Computed in S_N (default: the smallest window containing w) by walking
    down from the longest element through ascents.
    """
    size = max(len(w), 1) if N is None else N
    if not w.in_S(size):
        raise ValueError(f"{w} is not in S_{size}")
    return _frakG(w.one_line, size).restrict(n)


# expansions

@dataclass
class Expansion:
    """Integer expansion of a polynomial in one of the named bases."""

    basis: str
    n: int
    coeffs: dict[tuple[int, ...], int] = field(default_factory=dict)
    residual: bool = False
    method: str = "triangular"

    @property
    def positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def reconstruct(self) -> Polynomial:
        total = Polynomial.zero(self.n)
        for idx, c in self.coeffs.items():
            total = total + c * _basis_element(self.basis, idx, self.n)
        return total

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "coeffs": [{"index": list(k), "coeff": str(v)} for k, v in sorted(self.coeffs.items())],
            "positive": self.positive,
        }


def _basis_element(basis: str, idx: tuple[int, ...], n: int) -> Polynomial:
    if basis == "G":
        return grothendieck_G(idx, n, route="lascoux")
    if basis == "schur":
        return schur(idx, n)
    if basis == "lascoux":
        return lascoux_poly(idx)
    if basis == "key":
        return key_poly(idx)
    raise ValueError(f"unknown basis {basis}")


def _symmetric_expand(f: Polynomial, basis: str) -> Expansion:
    if not f.is_symmetric():
        raise ValueError("input is not symmetric")
    out = Expansion(basis, f.n)
    if not f:
        return out
    bound = 2 * f.max_degree() + f.n + 2
    residual = f
    while residual:
        d = residual.min_degree()
        if d > bound:
            raise ConsistencyError("subtraction did not terminate within the degree bound")
        lead = max(e for e in residual.terms if sum(e) == d)
        lam = trim_partition(lead)
        c = residual.terms[lead]
        out.coeffs[lam] = out.coeffs.get(lam, 0) + c
        residual = residual - c * _basis_element(basis, lam, f.n)
    if out.reconstruct() != f:
        raise ConsistencyError("expansion does not reconstruct its input")
    return out


def expand_in_G(f: Polynomial) -> Expansion:
    """Expand a symmetric polynomial in symmetric Grothendieck polynomials."""
    return _symmetric_expand(f, "G")


def expand_in_schur(f: Polynomial) -> Expansion:
    """Expand a symmetric polynomial in Schur polynomials."""
    return _symmetric_expand(f, "schur")


def _lascoux_triangular(f: Polynomial) -> Expansion | None:
    out = Expansion("lascoux", f.n)
    if not f:
        return out
    bound = 2 * f.max_degree() + f.n + 2
    residual = f
    for _ in range(100_000):
        if not residual:
            break
        d = residual.min_degree()
        if d > bound:
            return None
        alpha = min(e for e in residual.terms if sum(e) == d)
        c = residual.terms[alpha]
        out.coeffs[alpha] = out.coeffs.get(alpha, 0) + c
        residual = residual - c * lascoux_poly(alpha)
    else:
        return None
    out.coeffs = {k: v for k, v in out.coeffs.items() if v}
    return out if out.reconstruct() == f else None


def _compositions_up_to(n: int, total: int, cap: int):
    for d in range(total + 1):
        for alpha in itertools.product(range(min(d, cap) + 1), repeat=n):
            if sum(alpha) == d:
                yield alpha


def _exact_solve(f: Polynomial, max_size: int, cap: int) -> Expansion | None:
    """Solve f = Σ c_α 𝔏_α over a finite dictionary by Gaussian elimination."""
    cols = list(_compositions_up_to(f.n, max_size, cap))
    polys = [lascoux_poly(a) for a in cols]
    rows = sorted(set(f.terms).union(*(p.terms for p in polys)))
    row_index = {e: r for r, e in enumerate(rows)}
    matrix = [[Fraction(0)] * (len(cols) + 1) for _ in rows]
    for j, p in enumerate(polys):
        for e, c in p.terms.items():
            matrix[row_index[e]][j] = Fraction(c)
    for e, c in f.terms.items():
        matrix[row_index[e]][-1] = Fraction(c)
    pivots = []
    r = 0
    for j in range(len(cols)):
        pr = next((k for k in range(r, len(rows)) if matrix[k][j] != 0), None)
        if pr is None:
            continue
        matrix[r], matrix[pr] = matrix[pr], matrix[r]
        inv = matrix[r][j]
        matrix[r] = [v / inv for v in matrix[r]]
        for k in range(len(rows)):
            if k != r and matrix[k][j] != 0:
                factor = matrix[k][j]
                matrix[k] = [a - factor * b for a, b in zip(matrix[k], matrix[r])]
        pivots.append(j)
        r += 1
    if any(matrix[k][-1] != 0 for k in range(r, len(rows))):
        return None
    out = Expansion("lascoux", f.n, method="linear-solve")
    for k, j in enumerate(pivots):
        v = matrix[k][-1]
        if v:
            if v.denominator != 1:
                return None
            out.coeffs[cols[j]] = int(v)
    return out if out.reconstruct() == f else None


def expand_in_lascoux(f: Polynomial) -> Expansion:
    """Expand any polynomial in Lascoux polynomials.

    The fast path repeatedly removes the lexicographically smallest monomial
    of lowest degree. If that fails to reconstruct, an exact linear solve over
    a bounded dictionary takes over; ``method`` records which path ran.
    """
    out = _lascoux_triangular(f)
    if out is not None:
        return out
    size = f.max_degree()
    cap = max(max(e) for e in f.terms) + size
    for attempt in range(2):
        out = _exact_solve(f, size, cap)
        if out is not None:
            return out
        size, cap = 2 * size + 1, 2 * cap + 1
    raise ConsistencyError("polynomial is not in the span of the Lascoux dictionary")

"""
Property checkers for the structural lemmas behind the main theorems.

Every checker returns a list of violation messages; an empty list means the
property held on the whole test surface.
"""

from __future__ import annotations

import itertools
import random
from typing import Callable, Sequence

from . import hecke, pipedreams, svwords, tableaux
from .algebra import Permutation, hecke_product, permutations_of
from .crystals import Crystal, big_E, standard_sqrt, tensor, tensor_power
from .polynomial import Polynomial, dd, ddK, pi, piK

__all__ = [
    "SUITES", "run_suite",
    "string_count_violations", "E1_violations", "highest_tableau_violations",
    "tensor_string_violations", "top_of_string_violations", "parity_violations",
    "parity_bound_violations", "raise_after_E_violations",
    "two_row_insertion_violations", "row_pair_violations", "partial_rect_violations",
    "decr_reading_violations", "revrow_inverse_violations", "Q_semistandard_violations",
    "bijection_violations", "operator_identity_violations", "audit_violations",
]


def string_count_violations(n: int = 3, m: int = 3) -> list[str]:
    """ε_i = 2L + C and φ_i = 2R + C, comparing i-word counts to the graph."""
    B = svwords.universe(n, m)
    out = []
    for S in B.elements:
        for i in range(1, n):
            w = svwords.i_word(S, i)
            L, R, C = w.count("left"), w.count("right"), w.count("combined")
            if B.epsilon(i, S) != 2 * L + C or B.phi(i, S) != 2 * R + C:
                out.append(f"{svwords.render_word(S)} i={i}: word {w}")
    return out


def E1_violations(m: int = 4) -> list[str]:
    """E_1 removes 2 at the ends of the combined and left forms and adds 1 at
    the starts of the left forms."""
    B = svwords.universe(2, m)
    out = []
    for S in B.elements:
        w = svwords.i_word(S, 1)
        sets = [set(s) for s in S]
        for f in w.of_kind("combined"):
            sets[f.end_pos].discard(2)
        for f in w.of_kind("left"):
            sets[f.end_pos].discard(2)
            sets[f.start_pos].add(1)
        expected = tuple(frozenset(s) for s in sets)
        got = big_E(B, 1, S)
        if got != expected:
            out.append(f"{svwords.render_word(S)}: E_1 = {svwords.render_word(got)}, "
                       f"predicted {svwords.render_word(expected)}")
    return out


def _entry(T, r: int, c: int) -> int | None:
    """T_{r,c} with 1-based indices, None outside T."""
    if r <= len(T) and c <= len(T[r - 1]):
        return T[r - 1][c - 1]
    return None


def highest_tableau_violations(m: int = 5) -> list[str]:
    """Shape of tab(S) for highest weight S in SVWords(2,m), split by whether
    the 1-word ends with a null form or a right form."""
    B = svwords.universe(2, m)
    out = []
    for S in B.highest_weights():
        w = svwords.i_word(S, 1)
        if not w.forms:
            continue
        T = svwords.tab(S, 2)
        label = svwords.render_word(S)
        last = w.forms[-1]
        if last.kind == "null":
            i = last.start_pos + 1
            tail = S[i - 1:]
            ones = sum(1 for s in tail if 1 in s)
            twos = sum(1 for s in tail if 2 in s)
            if ones != twos:
                out.append(f"{label}: tail has {ones} ones and {twos} twos")
                continue
            r = ones
            if _entry(T, 2, r) != m + 1 - i:
                out.append(f"{label}: T_(2,{r}) = {_entry(T, 2, r)}, expected {m + 1 - i}")
            stops = [k for k in range(1, len(T[1]) + 1 if len(T) > 1 else 1)
                     if _entry(T, 1, k + 1) is None or _entry(T, 2, k) < _entry(T, 1, k + 1)]
            if not stops or stops[0] != r:
                out.append(f"{label}: smallest stopping column {stops[:1]} is not r={r}")
        elif last.kind == "right":
            q = len(T[0]) if T else 0
            p = len(T[1]) if len(T) > 1 else 0
            if not p < q:
                out.append(f"{label}: p={p} is not below q={q}")
            for k in range(1, p + 1):
                top = _entry(T, 1, k + 1)
                if top is None or _entry(T, 2, k) < top:
                    out.append(f"{label}: T_(2,{k}) < T_(1,{k + 1})")
        else:
            out.append(f"{label}: highest weight element with a {last.kind} form")
    return out


def _pairs(B: Crystal, C: Crystal) -> Crystal:
    return tensor(B, C)


def tensor_string_violations(n: int = 3) -> list[str]:
    """ε_i(b⊗c) = ε_i(c) + Δ and E_i(b⊗c) = e_i^Δ(b) ⊗ E_i(c)."""
    B = C = standard_sqrt(n)
    BC = _pairs(B, C)
    out = []
    for b, c in BC.elements:
        for i in range(1, n):
            delta = max(0, B.epsilon(i, b) - C.phi(i, c))
            if BC.epsilon(i, (b, c)) != C.epsilon(i, c) + delta:
                out.append(f"ε_{i} at {(b, c)}")
            if big_E(BC, i, (b, c)) != (B.e_power(i, b, delta), big_E(C, i, c)):
                out.append(f"E_{i} at {(b, c)}")
    return out


def top_of_string_violations(B: Crystal) -> list[str]:
    """For c = E_i(b): wt(c)_{i+1} = wt(b)_{i+1} − ⌈ε_i(b)/2⌉ and
    wt(c)_i − wt(c)_{i+1} = (φ_i(b) + ε_i(b))/2."""
    out = []
    for b in B.elements:
        for i in range(1, B.n):
            eps, ph = B.epsilon(i, b), B.phi(i, b)
            wb, wc = B.wt(b), B.wt(big_E(B, i, b))
            if wc[i] != wb[i] - (eps + 1) // 2:
                out.append(f"wt_{i + 1} at {b!r}, i={i}")
            if 2 * (wc[i - 1] - wc[i]) != ph + eps:
                out.append(f"weight gap at {b!r}, i={i}")
    return out


def parity_violations(B: Crystal) -> list[str]:
    """Behaviour of ε_i and the i-th weight gap under e_{i+1}."""
    out = []
    for b in B.elements:
        for i in range(1, B.n - 1):
            c = B.e(i + 1, b)
            if c is None:
                continue
            wb, wc = B.wt(b), B.wt(c)
            gap_b, gap_c = wb[i - 1] - wb[i], wc[i - 1] - wc[i]
            change = B.epsilon(i, c) - B.epsilon(i, b)
            if B.epsilon(i + 1, b) % 2:
                if gap_c != gap_b or change != 0:
                    out.append(f"odd case at {b!r}, i={i}")
            elif gap_c != gap_b - 1 or change not in (0, 1, 2):
                out.append(f"even case at {b!r}, i={i}")
    return out


def parity_bound_violations(B: Crystal) -> list[str]:
    """ε_i(E_{i+1}b) − ε_i(b) is at most ε_{i+1}(b), or ε_{i+1}(b) − 1 when odd."""
    out = []
    for b in B.elements:
        for i in range(1, B.n - 1):
            k = B.epsilon(i + 1, b)
            bound = k - 1 if k % 2 else k
            if B.epsilon(i, big_E(B, i + 1, b)) - B.epsilon(i, b) > bound:
                out.append(f"bound fails at {b!r}, i={i}")
    return out


def raise_after_E_violations(B: Crystal) -> list[str]:
    """e_{i+1}(E_i E_{i+1} E_i b) is null."""
    out = []
    for b in B.elements:
        for i in range(1, B.n - 1):
            c = big_E(B, i, big_E(B, i + 1, big_E(B, i, b)))
            if B.e(i + 1, c) is not None:
                out.append(f"e_{i + 1} survives at {b!r}, i={i}")
    return out


def _two_row_tableaux(top: int) -> list[hecke.Tableau]:
    out = []
    for a in range(1, top + 1):
        for b in range(1, a + 1):
            out += hecke.increasing_tableaux((a, b), top)
    return out


def two_row_insertion_violations(top: int = 6) -> list[str]:
    """Four local rules for inserting into a two-row increasing tableau."""
    out = []
    for T in _two_row_tableaux(top):
        x, z = T[0][0], T[1][0]
        U = (T[0][1:],) + ((T[1][1:],) if len(T[1]) > 1 else ())
        for y in range(1, top + 2):
            got = hecke.insert(T, y)
            if y < x:
                want = ((y,) + T[0], T[1])
                if got != want:
                    out.append(f"(a) T={T} y={y}: {got} != {want}")
            elif x < y < z:
                R = hecke.insert(U, z)
                want = ((x,) + R[0], (y,) + (R[1] if len(R) > 1 else ())) + tuple(R[2:])
                if len(R) > 2 or got != want:
                    out.append(f"(b) T={T} y={y}: {got} != {want}")
        rectangle = len(T[0]) == len(T[1])
        bad = [j for j in range(1, len(T[1]) + 1)
               if _entry(T, 1, j + 1) is None or T[1][j - 1] < T[0][j]]
        got = hecke.insert(T, x)
        if not rectangle and not bad and got != T:
            out.append(f"(c) T={T}: {got}")
        if bad:
            j = bad[0]
            want = (T[0][:j] + (T[1][j - 1],) + T[0][j:], T[1])
            if got != want:
                out.append(f"(d) T={T}: {got} != {want}")
    return out


def _strip(rows) -> tuple:
    rows = [tuple(r) for r in rows]
    while rows and not rows[-1]:
        rows.pop()
    return tuple(rows)


def row_pair_violations(n: int = 3, m: int = 3) -> list[str]:
    """Rows i and i+1 of tab(E_i(S)) are the insertion of the (i+1)-positions
    into the one-row tableau of i-positions."""
    B = svwords.universe(n, m)
    out = []
    for S in B.elements:
        for i in range(1, n):
            a = [j for j, s in enumerate(S, start=1) if i in s]
            b = [j for j, s in enumerate(S, start=1) if i + 1 in s]
            R = (tuple(sorted(m + 1 - j for j in a)),)
            want = _strip(hecke.insert_set({m + 1 - j for j in b}, _strip(R)))
            T = svwords.tab(big_E(B, i, S), n)
            got = _strip(tuple(T[k] if k < len(T) else () for k in (i - 1, i)))
            if got != want:
                out.append(f"{svwords.render_word(S)} i={i}: {got} != {want}")
    return out


def partial_rect_violations(n: int = 3, m: int = 3) -> list[str]:
    """tab(E_1⋯E_{n-1} S) = ⟨B→tab(S')⟩ when the restriction S' is highest weight."""
    B = svwords.universe(n, m)
    small = svwords.universe(n - 1, m)
    out = []
    for S in B.elements:
        Sp = tuple(frozenset(x for x in s if x < n) for s in S)
        if not small.is_highest_weight(Sp):
            continue
        P = _strip(svwords.tab(Sp, n - 1))
        X = S
        for i in range(n - 1, 0, -1):
            X = big_E(B, i, X)
        want = hecke.insert_set({m + 1 - j for j, s in enumerate(S, start=1) if n in s}, P)
        got = _strip(svwords.tab(X, n))
        if got != want:
            out.append(f"{svwords.render_word(S)}: {got} != {want}")
    return out


def decr_reading_violations(size: int = 4, n: int = 2) -> list[str]:
    """concat(a) = revrow(tab(a)), tab(a) = tab(svword(a)) and both routes
    give the same insertion tableau, over Decr_n(w) for w in S_size."""
    out = []
    m = size - 1
    for w in permutations_of(size):
        for a in hecke.enumerate_decr(w, n, m):
            T = hecke.decr_tab(a)
            S = hecke.decr_svword(a, m)
            if hecke.decr_concat(a) != hecke.revrow_reading(T):
                out.append(f"w={w} a={a}: concat differs from revrow")
            if _strip(T) != _strip(svwords.tab(S, n)):
                out.append(f"w={w} a={a}: tab differs from tab(svword)")
            if hecke.P_of_word(hecke.decr_concat(a)) != hecke.P_hecke(S):
                out.append(f"w={w} a={a}: insertion tableaux differ")
    return out


def revrow_inverse_violations(rows: int = 3, top: int = 3) -> list[str]:
    """For increasing T, revrow(T) is a Hecke word for w iff row(T) is one for w^{-1}."""
    from .algebra import partitions_in_box
    out = []
    for lam in partitions_in_box(rows, top):
        for T in hecke.increasing_tableaux(lam, top):
            w = hecke_product(hecke.revrow_reading(T))
            if hecke_product(hecke.row_reading(T)) != w.inverse():
                out.append(f"T={T}")
    return out


def _Q_tableau(Q: hecke.SetRows) -> tableaux.SetValuedTableau:
    shape = tableaux.Shape.straight([len(r) for r in Q])
    return tableaux.SetValuedTableau.from_rows(shape, Q)


def Q_semistandard_violations(n: int = 3, m: int = 3) -> list[str]:
    out = []
    for S in svwords.all_words(n, m):
        if not tableaux.is_semistandard(_Q_tableau(hecke.Q_hecke(S))):
            out.append(svwords.render_word(S))
    return out


def bijection_violations(n: int = 2, m: int = 3) -> list[str]:
    """On every component, S ↦ (P, Q) is a bijection onto the pairs with P the
    tableau of a highest weight element and Q semistandard with entries in [n]."""
    B = svwords.universe(n, m)
    out = []
    for comp in B.components():
        images = {}
        for S in comp.elements:
            P, Q = hecke.hecke_insert(*_AI(S))
            images.setdefault((P, _Q_tableau(Q)), []).append(S)
        clashes = [v for v in images.values() if len(v) > 1]
        if clashes:
            out.append(f"not injective: {[svwords.render_word(S) for S in clashes[0]]}")
        targets = set()
        for H in comp.highest_weights():
            P = _strip(svwords.tab(H, n))
            shape = tableaux.Shape.straight([len(r) for r in P])
            targets |= {(P, Q) for Q in tableaux.enumerate_settab(shape, n)}
        if set(images) != targets:
            out.append(f"component of {svwords.render_word(comp.highest_weights()[0])}: "
                       f"{len(images)} images vs {len(targets)} target pairs")
    return out


def _AI(S: svwords.SVWord):
    seq = hecke.encode_AI(S)
    return seq.A, seq.I


def _random_poly(rng: random.Random, n: int, degree: int) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, 6)):
        exp = [0] * n
        for _ in range(rng.randint(0, degree)):
            exp[rng.randrange(n)] += 1
        terms[tuple(exp)] = terms.get(tuple(exp), 0) + rng.randint(-5, 5)
    return Polynomial(n, terms)


def operator_identity_violations(trials: int = 200, seed: int = 0, max_n: int = 3,
                                 degree: int = 5) -> list[str]:
    """∂∂ = 0, ∂ᴷ∂ᴷ = −∂ᴷ, ππ = π and πᴷπᴷ = πᴷ on random polynomials."""
    rng = random.Random(seed)
    out = []
    for _ in range(trials):
        n = rng.randint(2, max_n)
        f = _random_poly(rng, n, degree)
        i = rng.randint(1, n - 1)
        checks = {
            "dd": dd(i, dd(i, f)) == Polynomial.zero(n),
            "ddK": ddK(i, ddK(i, f)) == -ddK(i, f),
            "pi": pi(i, pi(i, f)) == pi(i, f),
            "piK": piK(i, piK(i, f)) == piK(i, f),
        }
        out += [f"{name} fails at i={i}, f={f}" for name, ok in checks.items() if not ok]
    return out


def audit_violations() -> list[str]:
    """Axiom audits of every crystal family built by the package."""
    crystals: list[Crystal] = [standard_sqrt(n) for n in (1, 2, 3, 4)]
    crystals += [tensor_power(standard_sqrt(3), 2), tensor_power(standard_sqrt(2), 3)]
    crystals += [svwords.universe(n, m) for n in (1, 2, 3) for m in (1, 2, 3)]
    crystals += [tableaux.settab_crystal(tableaux.Shape.straight(lam), n)
                 for lam in ((1,), (2,), (1, 1), (2, 1), (3, 1), (2, 2)) for n in (2, 3)]
    crystals += [hecke.decr_crystal(w, 2) for w in permutations_of(4)]
    crystals += [pipedreams.rpd_crystal(2, 3)]
    out = []
    for C in crystals:
        out += [f"{C.name}: {p}" for p in C.audit()]
    return out


def _s_tensor(n: int, k: int) -> Crystal:
    return tensor_power(standard_sqrt(n), k)


SUITES: dict[str, Callable[[], list[str]]] = {
    "string-counts": lambda: string_count_violations(3, 3),
    "E1": lambda: E1_violations(4),
    "highest-tableau": lambda: highest_tableau_violations(5),
    "tensor-string": lambda: tensor_string_violations(3),
    "top-of-string": lambda: top_of_string_violations(_s_tensor(3, 2)),
    "parity": lambda: parity_violations(_s_tensor(4, 2)),
    "parity-bound": lambda: parity_bound_violations(_s_tensor(4, 2)),
    "raise-after-E": lambda: raise_after_E_violations(_s_tensor(3, 2)) + raise_after_E_violations(_s_tensor(4, 2)),
    "two-row-insertion": lambda: two_row_insertion_violations(6),
    "row-pair": lambda: row_pair_violations(3, 3),
    "partial-rect": lambda: partial_rect_violations(3, 3),
    "decr-reading": lambda: decr_reading_violations(4, 2),
    "revrow-inverse": lambda: revrow_inverse_violations(3, 3),
    "Q-semistandard": lambda: Q_semistandard_violations(3, 3),
    "bijection": lambda: bijection_violations(2, 3) + bijection_violations(3, 2),
    "operator-identities": lambda: operator_identity_violations(200, 0),
    "audits": audit_violations,
    "string-laws": lambda: pipedreams.string_law_violations(3, 3),
    "string-sums": lambda: (pipedreams.lemma_las_op_violations(pipedreams.rpd_crystal(2, 2))
                            + pipedreams.lemma_las_op_violations(pipedreams.rpd_crystal(3, 2))),
}


def run_suite(name: str) -> list[str]:
    return SUITES[name]()

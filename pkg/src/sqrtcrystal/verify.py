"""
Exhaustive verification routines behind the ``verify`` and ``expand``
commands. Each routine returns a Report listing every falsifying witness.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import hecke, pipedreams, svwords, tableaux
from .algebra import Permutation, is_partition, is_reverse_lattice, permutations_of, trim_partition
from .crystals import rect
from .errors import ConsistencyError
from .polynomial import Expansion, Polynomial, expand_in_G, grothendieck_G

__all__ = [
    "Report", "THEOREMS", "run",
    "verify_ch", "verify_rect", "verify_insertion_eq_rect", "verify_dhf",
    "verify_Cw", "verify_lascoux", "verify_svt", "verify_rowsplit",
    "DualExpansion", "expand_dual", "EXPANSION_KINDS",
]

MAX_WITNESSES = 20


@dataclass
class Report:
    theorem: str
    params: dict
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.failures.extend(other.failures)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures[:MAX_WITNESSES],
            "failure_count": len(self.failures),
        }

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        args = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"{status} {self.theorem} {args} checked={self.checked}"]
        lines += [f"  witness: {w}" for w in self.failures[:MAX_WITNESSES]]
        return "\n".join(lines)


def _hw_sum(weights, n: int) -> Polynomial:
    total = Polynomial.zero(n)
    for wt in weights:
        total = total + grothendieck_G(trim_partition(wt), n, route="lascoux")
    return total


def verify_ch(n: int, m: int) -> Report:
    """ch(B) = Σ_{b∈HW(B)} G_{wt(b)} for every component of SVWords(n,m)."""
    rep = Report("ch", {"n": n, "m": m})
    B = svwords.universe(n, m)
    for comp in B.components():
        rep.checked += 1
        hws = comp.highest_weights()
        weights = [comp.wt(b) for b in hws]
        if not all(is_partition(w) for w in weights):
            rep.fail(f"highest weight of non-partition weight in component of {svwords.render_word(hws[0])}")
            continue
        if comp.character() != _hw_sum(weights, n):
            rep.fail(f"character mismatch on component of {svwords.render_word(hws[0])}")
    return rep


def verify_rect(n: int, m: int) -> Report:
    rep = Report("rect", {"n": n, "m": m})
    B = svwords.universe(n, m)
    for S in B.elements:
        rep.checked += 1
        if not B.is_highest_weight(rect(B, S)):
            rep.fail(f"rect({svwords.render_word(S)}) is not highest weight")
    return rep


def verify_insertion_eq_rect(n: int, m: int) -> Report:
    rep = Report("insertion_eq_rect", {"n": n, "m": m})
    B = svwords.universe(n, m)
    for S in B.elements:
        rep.checked += 1
        P, R = hecke.P_hecke(S), svwords.tab(rect(B, S))
        if P != R:
            rep.fail(f"{svwords.render_word(S)}: P_hecke = {P}, tab(rect) = {R}")
    return rep


def verify_dhf(n: int, m: int) -> Report:
    """For every w in S_{m+1}: Decr_n(w) is closed, its highest weights are the
    a with tab(a) increasing, and G_w = Σ c_{wλ} G_λ."""
    rep = Report("dhf", {"n": n, "m": m})
    for w in permutations_of(m + 1):
        rep.checked += 1
        C = hecke.decr_crystal(w, n, m)
        for a in C.elements:
            if C.is_highest_weight(a) != svwords.is_increasing_tableau(hecke.decr_tab(a)):
                rep.fail(f"w={w}: highest weight test disagrees at {a}")
        if C.character() != hecke.G_w(w, n):
            rep.fail(f"w={w}: crystal character differs from G_w")
        counted = hecke.c_w_coeffs(w, n)
        if counted.reconstruct() != hecke.G_w(w, n):
            rep.fail(f"w={w}: Σ c_wλ G_λ differs from G_w")
    return rep


def verify_Cw(m: int, n: int) -> Report:
    rep = Report("Cw", {"m": m, "n": n})
    rep.checked = sum(1 for w in permutations_of(n) for i in range(1, n) if w(i) < w(i + 1))
    for msg in pipedreams.theorem_Cw_violations(m, n):
        rep.fail(msg)
    return rep


def verify_lascoux(m: int, n: int) -> Report:
    rep = Report("lascoux", {"m": m, "n": n})
    for entry in pipedreams.lascoux_positivity_scan(m, n):
        rep.checked += 1
        if not entry.positive:
            negative = {k: v for k, v in entry.expansion.coeffs.items() if v < 0}
            rep.fail(f"{entry.scope}, w={entry.w}: negative Lascoux coefficients {negative}")
    return rep


def verify_svt(n: int, shape: Sequence[int], inner: Sequence[int] = ()) -> Report:
    """SetTab_n(ν/λ): operators close, highest weights are the reverse lattice
    column words, and ch = G_{ν/λ} = Σ_{HW} G_{wt}."""
    rep = Report("svt", {"n": n, "shape": list(shape), "inner": list(inner)})
    sh = tableaux.Shape.skew(shape, inner)
    C = tableaux.settab_crystal(sh, n)
    rep.failures += C.audit()
    for T in C.elements:
        rep.checked += 1
        lattice = is_reverse_lattice(tableaux.flat(tableaux.col_word(T)))
        if C.is_highest_weight(T) != lattice:
            rep.fail(f"highest weight test disagrees at {T.render()!r}")
    ch = C.character()
    if ch != tableaux.G_skew(sh, n):
        rep.fail("character differs from G_skew")
    if ch != _hw_sum((C.wt(b) for b in C.highest_weights()), n):
        rep.fail("character differs from the highest weight sum")
    return rep


def verify_rowsplit(trials: int = 200, seed: int = 0, rows: int = 4, top: int = 9) -> Report:
    """Row-split rule for ⟨B→P⟩ on random increasing tableaux."""
    rep = Report("rowsplit", {"trials": trials, "seed": seed})
    rng = random.Random(seed)
    for _ in range(trials):
        P = hecke.P_of_word(rng.randint(1, top) for _ in range(rng.randint(1, 3 * rows)))
        if not P or len(P) > rows:
            continue
        B = set(rng.sample(range(1, top + 1), rng.randint(0, 4)))
        rep.checked += 1
        direct = hecke.insert_set(B, P)
        T = hecke.insert_set(B, (P[-1],))
        U = hecke.insert_set(T[0], P[:-1]) if len(P) > 1 else (T[0],)
        split = tuple(U) + tuple(T[1:])
        if direct != split:
            rep.fail(f"P={P} B={sorted(B)}: direct {direct} vs split {split}")
    return rep


THEOREMS: dict[str, Callable[..., Report]] = {
    "ch": verify_ch,
    "rect": verify_rect,
    "insertion_eq_rect": verify_insertion_eq_rect,
    "dhf": verify_dhf,
    "Cw": verify_Cw,
    "lascoux": verify_lascoux,
    "svt": verify_svt,
    "rowsplit": verify_rowsplit,
}


def run(theorem: str, **kwargs) -> Report:
    return THEOREMS[theorem](**kwargs)


# dual-route expansions

@dataclass
class DualExpansion:
    kind: str
    params: dict
    counted: Expansion
    computed: Expansion

    @property
    def agree(self) -> bool:
        return self.counted.coeffs == self.computed.coeffs

    @property
    def positive(self) -> bool:
        return self.counted.positive and self.computed.positive

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "coefficients": self.counted.to_json()["coeffs"],
            "positive": self.positive,
            "routes_agree": self.agree,
        }

    def to_text(self) -> str:
        terms = " + ".join(f"{c}*G{list(k)}" for k, c in sorted(self.counted.coeffs.items())) or "0"
        return (f"{self.kind} {self.params}: {terms}\n"
                f"positive={self.positive} routes_agree={self.agree}")


EXPANSION_KINDS = ("skewG", "product", "Gw", "GPdec")


def expand_dual(kind: str, n: int, shape: Sequence[int] = (), inner: Sequence[int] = (),
                w: Permutation | None = None) -> DualExpansion:
    """Counting route against the polynomial route for one expansion."""
    if kind == "skewG":
        sh = tableaux.Shape.skew(shape, inner)
        counted = tableaux.skew_G_expansion(shape, inner, n)
        computed = expand_in_G(tableaux.G_skew(sh, n))
        params = {"nu": list(shape), "lam": list(inner), "n": n}
    elif kind == "product":
        counted = tableaux.product_expansion(shape, inner, n)
        computed = expand_in_G(grothendieck_G(shape, n) * grothendieck_G(inner, n))
        params = {"lam": list(shape), "mu": list(inner), "n": n}
    elif kind == "Gw":
        if w is None:
            raise ValueError("Gw needs a permutation")
        counted = hecke.c_w_coeffs(w, n)
        computed = expand_in_G(hecke.G_w(w, n))
        params = {"w": str(w), "n": n}
    elif kind == "GPdec":
        counted = tableaux.g_coeffs(shape, n)
        computed = expand_in_G(tableaux.GPdec(shape, n))
        params = {"lam": list(shape), "n": n}
    else:
        raise ValueError(f"unknown expansion kind {kind}")
    return DualExpansion(kind, params, counted, computed)


def require_agreement(d: DualExpansion) -> DualExpansion:
    if not d.agree:
        raise ConsistencyError(f"{d.kind}: counting {d.counted.coeffs} vs polynomial {d.computed.coeffs}")
    return d

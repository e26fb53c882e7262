"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line."""

import pytest

from conftest import record
from sqrtcrystal import hecke, pipedreams, properties, svwords, tableaux, verify
from sqrtcrystal.algebra import (
    Permutation, is_strict_partition, partitions_contained_in, partitions_of_size, permutations_of,
)
from sqrtcrystal.crystals import minlevel, slice_2delta
from sqrtcrystal.polynomial import Polynomial, expand_in_schur, piK

P = Permutation.parse
F = frozenset


def _sweep(theorem, pairs):
    reports = [verify.run(theorem, n=n, m=m) for n, m in pairs]
    failures = [w for r in reports for w in r.failures]
    return sum(r.checked for r in reports), failures


def test_criterion_1_character_formula():
    pairs = [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)] + [(2, 4), (2, 5)]
    checked, failures = _sweep("ch", pairs)
    record(1, not failures, f"ch(B) = Σ G_wt(b) on {checked} components of SVWords(n,m), "
                            f"n,m ≤ 3 and n=2, m ≤ 5; {len(failures)} failures")
    assert not failures, failures[:5]


def test_criterion_2_rectification():
    checked, failures = _sweep("rect", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
    record(2, not failures, f"rect(b) highest weight for {checked} words; {len(failures)} failures")
    assert not failures, failures[:5]


def test_criterion_3_insertion_is_rectification():
    checked, failures = _sweep("insertion_eq_rect", [(n, m) for n in (1, 2, 3) for m in (1, 2, 3)])
    record(3, not failures, f"P_hecke(S) = tab(rect(S)) for {checked} words; {len(failures)} failures")
    assert not failures, failures[:5]


DISPLAYED_Q = ((F({1}), F({1, 2}), F({2})), (F({2, 3}),))


def _golden_checks():
    checks = {}
    A, I = (4, 2, 4, 3, 1, 1), (1, 1, 2, 2, 2, 3)
    Pt, Q = hecke.hecke_insert(A, I)
    checks["insertion example P"] = Pt == ((1, 2, 4), (3,))
    checks["insertion example Q, derived from the definition"] = (
        Q == ((F({1}), F({1, 2}), F({2, 3})), (F({2}),)))
    checks["displayed Q arises from A=424313"] = hecke.hecke_insert((4, 2, 4, 3, 1, 3), I)[1] == DISPLAYED_Q
    seq = hecke.encode_AI(svwords.make_word([{1, 2}, {2}, {1}, {2, 3}]))
    checks["A(S), I(S) of the encoding example"] = (seq.A, seq.I) == (A, I)
    P0 = ((1, 2, 3, 5, 6), (2, 3, 6, 9), (3, 4, 7))
    checks["⟨B→P⟩ example"] = hecke.insert_set({6, 5, 3, 1}, P0) == (
        (1, 2, 3, 5, 6, 9), (2, 3, 6, 7, 9), (3, 4, 7), (5, 6))
    checks["⟨B→P^last⟩"] = hecke.insert_set({6, 5, 3, 1}, (P0[-1],)) == ((1, 3, 4, 6, 7), (5, 6))
    w = P("1432")
    checks["Decr_2(1432)"] = hecke.enumerate_decr(w, 2) == [((2,), (3, 2)), ((3, 2), (3,)), ((3, 2), (3, 2))]
    checks["G_1432"] = hecke.G_w(w, 2) == Polynomial(2, {(1, 2): 1, (2, 1): 1, (2, 2): 1})
    for text in ("13,1,12,1", "13,1,2,1"):
        D = pipedreams.from_svword(svwords.parse_word(text), 3)
        checks[f"σ of RPD {text}"] = (
            pipedreams.sigma_trace(D) == pipedreams.sigma_demazure(D) == P("1352764"))
    B = pipedreams.rpd_crystal(2, 2)
    chain = [pipedreams.from_svword(svwords.parse_word("1,1"), 2)]
    while (E := B.f(1, chain[-1])) is not None:
        chain.append(E)
    checks["string permutations"] = [pipedreams.sigma(E) for E in chain] == [
        P(s) for s in ("1342", "1324", "1324", "1324", "2314")]
    checks["πᴷ_1(x_1²)"] = piK(1, Polynomial.var(1, 2) ** 2) == Polynomial(
        2, {(2, 0): 1, (2, 1): 1, (1, 1): 1, (1, 2): 1, (0, 2): 1})
    return checks


def test_criterion_4_golden_values():
    checks = _golden_checks()
    bad = [k for k, ok in checks.items() if not ok]
    displayed = hecke.hecke_insert((4, 2, 4, 3, 1, 1), (1, 1, 2, 2, 2, 3))[1] == DISPLAYED_Q
    summary = (f"{len(checks) - len(bad)}/{len(checks)} golden checks pass; "
               "displayed Q for A=424311, I=112223 "
               + ("reproduced" if displayed else
                  "NOT reproduced (definition gives Q = 1,12,23/2; the display matches A=424313)"))
    record(4, not bad and displayed, summary)
    assert not bad, bad


@pytest.mark.xfail(strict=True, reason="the printed Q for this example corresponds to A=424313")
def test_criterion_4_displayed_Q():
    assert hecke.hecke_insert((4, 2, 4, 3, 1, 1), (1, 1, 2, 2, 2, 3))[1] == DISPLAYED_Q


def _dual(kind, n, cases):
    bad = []
    for shape, inner in cases:
        d = verify.expand_dual(kind, n, shape, inner)
        if not (d.agree and d.positive):
            bad.append((shape, inner, d.counted.coeffs, d.computed.coeffs))
    return bad


def test_criterion_5_product_rule():
    shapes = partitions_contained_in((2, 1))
    cases = [(lam, mu) for lam in shapes for mu in shapes]
    bad = _dual("product", 3, cases)
    record(5, not bad, f"G_λ G_μ counted = computed and ≥ 0 for {len(cases)} pairs, n=3")
    assert not bad, bad


def test_criterion_6_skew_rule():
    cases = [(nu, lam) for nu in partitions_contained_in((3, 2, 1)) for lam in partitions_contained_in(nu)]
    bad = _dual("skewG", 3, cases)
    record(6, not bad, f"G_ν/λ counted = computed and ≥ 0 for {len(cases)} pairs, n=3")
    assert not bad, bad


def test_criterion_7_Gw_expansion():
    bad = []
    for w in permutations_of(4):
        d = verify.expand_dual("Gw", 2, w=w)
        if not (d.agree and d.counted.reconstruct() == hecke.G_w(w, 2) and d.positive):
            bad.append(str(w))
    record(7, not bad, f"G_w = Σ c_wλ G_λ for all 24 w in S_4, n=2; {len(bad)} failures")
    assert not bad, bad


def test_criterion_8_GPdec():
    strict = [lam for k in range(1, 5) for lam in partitions_of_size(k) if is_strict_partition(lam)]
    cases = [(lam, n) for lam in strict for n in (1, 2, 3) if len(lam) <= n]
    bad = []
    for lam, n in cases:
        d = verify.expand_dual("GPdec", n, lam)
        if not (d.agree and d.positive):
            bad.append((lam, n))
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            gp = tableaux.GPdec((m,), n)
            if not gp == tableaux.GPdec_one_row_formula(m, n) == tableaux.GP_one_row(m, n):
                bad.append(("one row", m, n))
    record(8, not bad, f"GP^dec = Σ g G on {len(cases)} cases and one-row formula/GP for m,n ≤ 3")
    assert not bad, bad


def test_criterion_9_demazure_recursion():
    failures = []
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            failures += pipedreams.theorem_Cw_violations(m, n)
    record(9, not failures, f"C_ws_i = 𝔇_i(C_w) and ch = πᴷ_i ch on RPD(m,n), m,n ≤ 3 "
                            f"(full and per component); {len(failures)} failures")
    assert not failures, failures[:5]


def test_criterion_10_lascoux_positivity():
    entries = []
    for m in (1, 2, 3):
        for n in (1, 2, 3):
            entries += [(m, n, e) for e in pipedreams.lascoux_positivity_scan(m, n)]
    negatives = [(m, n, e.scope, str(e.w), {k: v for k, v in e.expansion.coeffs.items() if v < 0})
                 for m, n, e in entries if not e.positive]
    record(10, not negatives, f"{len(entries)} Lascoux expansions of ch(C_w), m,n ≤ 3; "
                              f"{len(negatives)} with a negative coefficient")
    assert not negatives, negatives[:5]


def test_criterion_11_schur_positive_slices():
    checked, bad = 0, []
    for lam in partitions_contained_in((2, 1)):
        if not lam:
            continue
        for n in (1, 2, 3):
            if len(lam) > n:
                continue
            B = tableaux.settab_crystal(tableaux.Shape.straight(lam), n)
            top = max(sum(w) for w in B.weights) - minlevel(B)
            for delta in range(top + 1):
                ch = slice_2delta(B, delta).character()
                e = expand_in_schur(ch)
                checked += 1
                if not (e.positive and e.reconstruct() == ch):
                    bad.append((lam, n, delta, e.coeffs))
    record(11, not bad, f"{checked} slice characters of SetTab_n(λ), λ ⊆ (2,1), n ≤ 3 are Schur positive")
    assert not bad, bad


def test_criterion_12_property_suites():
    results = {name: properties.run_suite(name) for name in properties.SUITES}
    results["composite-order"] = pipedreams.composite_violations(2, 3)
    results["row-split"] = verify.verify_rowsplit(trials=500, seed=0).failures
    bad = {k: v[:3] for k, v in results.items() if v}
    record(12, not bad, f"{len(results)} property suites pass" if not bad else f"failing suites: {sorted(bad)}")
    assert not bad, bad

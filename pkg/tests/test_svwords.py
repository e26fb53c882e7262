import random

import pytest

from sqrtcrystal import properties, svwords
from sqrtcrystal.crystals import nest_tensor, standard_sqrt, tensor_power
from sqrtcrystal.errors import SizeGuardError
from sqrtcrystal.svwords import (
    epsilon, i_word, is_highest_weight, lower, make_word, parse_word, raise_, render_word, tab,
    universe, weight,
)


def W(*sets):
    return make_word(sets)


def test_i_word_examples():
    S = W({2, 3}, {2}, {2, 3}, {3, 4}, {1}, {2}, {1})
    assert str(i_word(S, 1)) == "((()()"
    assert str(i_word(S, 2)) == ")−())−(()"
    assert i_word(W(set(), set()), 1).forms == ()


def test_combined_form_is_unique_and_ordered():
    rank = {"right": 0, "combined": 1, "left": 2}
    for S in svwords.all_words(3, 4):
        for i in (1, 2):
            kinds = [f.kind for f in i_word(S, i).forms if f.kind != "null"]
            assert kinds.count("combined") <= 1
            assert [rank[k] for k in kinds] == sorted(rank[k] for k in kinds)


def test_f2_chain():
    chain = [
        W({2, 3}, {2}, {2}, {3, 4}, {1}, {2}, {1}),
        W({2, 3}, {2}, {2, 3}, {3, 4}, {1}, {2}, {1}),
        W({2, 3}, {2}, {3}, {3, 4}, {1}, {2}, {1}),
        W({2, 3}, {2, 3}, {3}, {3, 4}, {1}, {2}, {1}),
        W({3}, {2, 3}, {3}, {3, 4}, {1}, {2}, {1}),
    ]
    for a, b in zip(chain, chain[1:]):
        assert lower(a, 2) == b
    assert lower(chain[-1], 2) is None


def test_raise_lower_inverse():
    for S in svwords.all_words(3, 3):
        for i in (1, 2):
            T = raise_(S, i)
            if T is not None:
                assert lower(T, i) == S
    assert raise_(W(set(), set(), set()), 1) is None


def test_tab_example():
    S = W({1, 3}, {2}, {1, 2}, {2})
    assert tab(S) == ((2, 4), (1, 2, 3), (4,))
    assert tab(W()) == ()


def test_tab_round_trip():
    rng = random.Random(1)
    for _ in range(1000):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        S = tuple(frozenset(x for x in range(1, n + 1) if rng.random() < 0.5) for _ in range(m))
        assert svwords.svword(tab(S, n), n, m) == S


def test_highest_weight_examples():
    assert is_highest_weight(W({1, 3}, {1}, {1, 2}, {1}))
    assert is_highest_weight(W({1, 3}, {1}, {2}, {1}))
    B = universe(3, 3)
    for S in B.highest_weights():
        for i in (1, 2):
            if B.phi(i, S):
                assert not is_highest_weight(lower(S, i))


def test_highest_weight_matches_epsilon():
    for S in svwords.all_words(3, 3):
        assert is_highest_weight(S) == all(epsilon(S, i) == 0 for i in (1, 2))


def test_weight_counts_letters():
    assert weight(W({1, 3}, {2}, {1, 2}, {2}), 3) == (2, 3, 1)


def test_universe_sizes():
    assert len(universe(2, 2)) == 16
    U = universe(1, 3)
    assert len(U) == 8 and len(U.components()) == 8
    with pytest.raises(SizeGuardError):
        universe(5, 5)


def test_universe_matches_tensor_model():
    n, m = 2, 3
    U = universe(n, m)
    T = tensor_power(standard_sqrt(n, include_empty=True), m)
    for S in U.elements:
        for i in range(1, n):
            for op_u, op_t in ((U.e, T.e), (U.f, T.f)):
                a, b = op_u(i, S), op_t(i, nest_tensor(S))
                assert (None if a is None else nest_tensor(a)) == b


def test_parse_and_render():
    S = parse_word("13,2,,12")
    assert S == W({1, 3}, {2}, set(), {1, 2})
    assert render_word(S) == "({1,3}, {2}, ∅, {1,2})"


@pytest.mark.parametrize("suite", ["string-counts", "E1", "highest-tableau"])
def test_word_lemmas(suite):
    assert properties.run_suite(suite) == []


def test_universe_audits():
    for n in (1, 2, 3):
        for m in (1, 2, 3):
            assert universe(n, m).audit() == []

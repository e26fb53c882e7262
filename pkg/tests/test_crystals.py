import pytest

from sqrtcrystal import properties
from sqrtcrystal.algebra import Permutation, permutations_of
from sqrtcrystal.crystals import (
    GL, big_E, demazure_character_check, demazure_crystal_gl, disjoint_union, flatten_tensor,
    is_isomorphic, minlevel, rect, slice_2delta, squared, standard_gl, standard_sqrt, tensor,
    tensor_power, trivial,
)
from sqrtcrystal.errors import CrystalError
from sqrtcrystal.polynomial import Polynomial, grothendieck_G

S = frozenset


def test_standard_gl_is_a_path():
    B = standard_gl(3)
    assert B.f(1, 1) == 2 and B.f(2, 2) == 3
    assert B.f(1, 2) is None
    assert B.audit() == []


def test_standard_sqrt_edges():
    B = standard_sqrt(3)
    assert B.f(2, S({1, 2})) == S({1, 2, 3})
    assert B.f(1, S({1, 2})) == S({2})
    assert B.f(1, S({1})) == S({1, 2})
    assert B.epsilon(1, S({2})) == 2
    assert B.e(1, S({2})) == S({1, 2}) and B.e(1, S({1, 2})) == S({1})
    assert B.highest_weights() == [S({1})]


def test_standard_sqrt_character():
    B = standard_sqrt(2)
    assert B.character() == grothendieck_G((1,), 2)
    for n in (1, 2, 3, 4):
        assert standard_sqrt(n).audit() == []


def test_highest_weights_have_zero_epsilon():
    B = tensor_power(standard_sqrt(3), 2)
    for b in B.highest_weights():
        assert all(B.epsilon(i, b) == 0 for i in (1, 2))


def test_tensor_character_multiplies():
    B, C = standard_sqrt(3), tensor_power(standard_sqrt(3), 2)
    assert tensor(B, C).character() == B.character() * C.character()


def test_tensor_with_trivial():
    B = standard_sqrt(3)
    T = tensor(trivial(3), B)
    assert T.character() == B.character()
    for (_, b) in T.elements:
        for i in (1, 2):
            assert T.e(i, ((S(), b))) == (None if B.e(i, b) is None else (S(), B.e(i, b)))


def test_tensor_family_mismatch():
    with pytest.raises(CrystalError):
        tensor(standard_gl(2), standard_sqrt(2))


def test_f2_chain_in_tensor_model():
    B = tensor_power(standard_sqrt(4), 3)
    b = (S({2}), (S({2, 3}), S({1, 2})))
    chain = [b]
    while (b := B.f(2, b)) is not None:
        chain.append(b)
    assert len(chain) == B.phi(2, chain[0]) + 1
    assert all(B.e(2, chain[k + 1]) == chain[k] for k in range(len(chain) - 1))


def test_components_of_disjoint_union():
    U = disjoint_union(standard_sqrt(2), standard_sqrt(2), tag=True)
    assert len(U.components()) == 2
    assert U.character() == standard_sqrt(2).character() * 2


def test_rect_of_standard():
    for n in (2, 3, 4):
        B = standard_sqrt(n)
        assert all(rect(B, s) == S({1}) for s in B.elements)


def test_big_E_fixes_tops():
    B = tensor_power(standard_sqrt(3), 2)
    for b in B.elements:
        for i in (1, 2):
            if B.epsilon(i, b) == 0:
                assert big_E(B, i, b) == b


def test_rect_on_tensor_powers():
    for n in (2, 3):
        for m in (1, 2, 3):
            B = tensor_power(standard_sqrt(n), m)
            assert all(B.is_highest_weight(rect(B, b)) for b in B.elements)


def test_squared_is_gl_crystal():
    B = tensor_power(standard_sqrt(3), 2)
    B2 = squared(B)
    assert B2.family == GL
    assert B2.audit() == []
    assert B2.character() == B.character()


def test_slices_partition_elements():
    B = tensor_power(standard_sqrt(3), 2)
    sizes = [len(slice_2delta(B, d)) for d in range(0, 5)]
    assert sum(sizes) == len(B)
    assert minlevel(B) == 2


def test_characters_are_symmetric():
    for m in (1, 2, 3):
        assert tensor_power(standard_sqrt(3), m).character().is_symmetric()


def test_flatten_tensor():
    B = tensor_power(standard_sqrt(2), 3)
    assert all(len(flatten_tensor(b, 3)) == 3 for b in B.elements)


def test_demazure_gl():
    B = tensor_power(standard_gl(3), 2)
    assert demazure_crystal_gl(B, ()) == frozenset(B.highest_weights())
    assert demazure_crystal_gl(B, (1, 2, 1)) == frozenset(B.elements)
    for w in permutations_of(3):
        assert demazure_character_check(B, w)


def test_isomorphism():
    B = tensor(standard_sqrt(2), standard_sqrt(2))
    C = tensor_power(standard_sqrt(2), 2)
    assert is_isomorphic(B, C)
    assert not is_isomorphic(standard_sqrt(2), standard_gl(2))


@pytest.mark.parametrize("suite", ["tensor-string", "top-of-string", "parity",
                                   "parity-bound", "raise-after-E"])
def test_string_lemmas(suite):
    assert properties.run_suite(suite) == []


def test_json_and_dot_exports():
    B = standard_sqrt(2)
    data = B.to_json(lambda s: str(sorted(s)))
    assert len(data["vertices"]) == 3
    assert "->" in B.to_dot(lambda s: str(sorted(s)))

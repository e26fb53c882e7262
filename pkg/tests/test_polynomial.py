import itertools

import pytest

from sqrtcrystal import tableaux
from sqrtcrystal.algebra import Permutation, partitions_contained_in, rev
from sqrtcrystal.errors import InvalidShapeError
from sqrtcrystal.polynomial import (
    Polynomial, dd, ddK, expand_in_G, expand_in_lascoux, expand_in_schur, grothendieck_G,
    grothendieck_frakG, key_poly, lascoux_poly, pi, piK, schur,
)
from sqrtcrystal.properties import operator_identity_violations


def x(i, n):
    return Polynomial.var(i, n)


def poly(n, *terms):
    return Polynomial(n, {tuple(e): c for e, c in terms})


def compositions(total, n):
    for parts in itertools.product(range(total + 1), repeat=n):
        if sum(parts) <= total:
            yield parts


def test_arithmetic_drops_zero_terms():
    f = x(1, 2) + x(2, 2)
    assert f - f == Polynomial.zero(2)
    assert (f * f).coeff((1, 1)) == 2
    assert not (f - f)


def test_divided_differences():
    assert dd(1, x(1, 2)) == Polynomial.one(2)
    assert pi(1, x(1, 2) ** 2) == poly(2, ((2, 0), 1), ((1, 1), 1), ((0, 2), 1))
    assert piK(1, x(1, 2) ** 2) == poly(2, ((2, 0), 1), ((2, 1), 1), ((1, 1), 1),
                                         ((1, 2), 1), ((0, 2), 1))


def test_operator_identities():
    assert operator_identity_violations(200, seed=0) == []


def test_ddK_squared_is_not_minus_identity():
    f = x(1, 2) ** 2
    assert ddK(1, ddK(1, f)) == -ddK(1, f)
    assert ddK(1, ddK(1, f)) != -f


def test_key_and_lascoux_examples():
    assert key_poly((2, 1, 0)) == lascoux_poly((2, 1, 0)) == poly(3, ((2, 1, 0), 1))
    assert key_poly((0, 2)) == poly(2, ((2, 0), 1), ((1, 1), 1), ((0, 2), 1))
    assert lascoux_poly((0, 1)) == poly(2, ((1, 0), 1), ((0, 1), 1), ((1, 1), 1))


def test_sorting_sequence_independence():
    for alpha in compositions(4, 3):
        assert key_poly(alpha, "first") == key_poly(alpha, "last")
        assert lascoux_poly(alpha, "first") == lascoux_poly(alpha, "last")


def test_lowest_part_of_lascoux_is_key():
    for n in (2, 3):
        for alpha in compositions(4, n):
            assert lascoux_poly(alpha).lowest_part() == key_poly(alpha)


def test_G_examples():
    assert grothendieck_G((1,), 2) == poly(2, ((1, 0), 1), ((0, 1), 1), ((1, 1), 1))
    assert grothendieck_G((2, 1), 2) == poly(2, ((1, 2), 1), ((2, 1), 1), ((2, 2), 1))
    assert grothendieck_G((), 3) == Polynomial.one(3)
    with pytest.raises(InvalidShapeError):
        grothendieck_G((1, 1, 1), 2)


def test_G_routes_agree():
    for lam in partitions_contained_in((3, 3, 3)):
        assert grothendieck_G(lam, 3) == lascoux_poly(rev(lam, 3))


def test_schur():
    assert schur((1,), 3) == x(1, 3) + x(2, 3) + x(3, 3)
    assert schur((), 2) == Polynomial.one(2)
    assert schur((2, 1), 2) == poly(2, ((2, 1), 1), ((1, 2), 1))


def test_expand_in_G():
    assert expand_in_G(grothendieck_G((2, 1), 3)).coeffs == {(2, 1): 1}
    assert expand_in_G(Polynomial.zero(2)).coeffs == {}
    e = expand_in_G(grothendieck_G((1,), 2) * grothendieck_G((1,), 2))
    assert e.reconstruct() == grothendieck_G((1,), 2) ** 2
    assert e.positive


def test_expand_in_G_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        expand_in_G(x(1, 2))


def test_product_expansion_matches_counting():
    shapes = partitions_contained_in((2, 1))
    for lam in shapes:
        for mu in shapes:
            poly_route = expand_in_G(grothendieck_G(lam, 3) * grothendieck_G(mu, 3))
            assert poly_route.coeffs == tableaux.product_expansion(lam, mu, 3).coeffs
            assert poly_route.positive


def test_expand_in_schur():
    e = expand_in_schur(schur((2, 1), 3) + schur((1, 1), 3))
    assert e.coeffs == {(2, 1): 1, (1, 1): 1}


def test_lascoux_expansion_of_basis_elements():
    for n in (2, 3):
        for alpha in compositions(4, n):
            assert expand_in_lascoux(lascoux_poly(alpha)).coeffs == {alpha: 1}
    assert expand_in_lascoux(Polynomial.one(2)).coeffs == {(0, 0): 1}


def test_lascoux_expansion_of_string_sum():
    f = piK(1, x(1, 2) ** 2)
    e = expand_in_lascoux(f)
    assert e.reconstruct() == f
    assert e.coeffs == {(0, 2): 1}


def test_frakG():
    assert grothendieck_frakG(Permutation.parse("321"), 3) == poly(3, ((2, 1, 0), 1))
    assert grothendieck_frakG(Permutation.identity(), 3) == Polynomial.one(3)
    assert grothendieck_frakG(Permutation.parse("213"), 3) == x(1, 3)


def test_json_round_trip():
    f = grothendieck_G((2, 1), 3)
    assert Polynomial.from_json(f.to_json()) == f

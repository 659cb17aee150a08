from functools import lru_cache

import pytest

from classes import config
from classes.dual import (DualElement, DualMonomial, annihilated_basis, annihilated_space, dual_kameko_up, dual_sq,
                          is_annihilated, pairing)
from classes.errors import DimensionError, DomainError
from classes.ext_group import ext_group
from classes.induced_endo import invariants
from classes.lambda_algebra import LambdaElement, adem_normalize, differential
from classes.manifest import load_element
from classes.monomial import monomials
from classes.polynomial import Polynomial
from classes.steenrod import sq
from classes.transfer import coinvariants, psi, transfer_image


def dual(*terms):
    return DualElement(terms)


@lru_cache(maxsize=None)
def monomial_list(h, n):
    return list(monomials(h, n))


def random_polynomial(rng, h, n, terms=3):
    candidates = monomial_list(h, n)
    return Polynomial(rng.sample(candidates, min(terms, len(candidates))), h)


def test_dual_square_examples():
    xi = dual((3, 5, 1, 9), (1, 1, 0, 16))
    assert dual_sq(0, xi) == xi
    assert dual_sq(1, dual((2,))) == dual((1,))
    assert dual_sq(1, dual((3,))).is_zero()
    with pytest.raises(ValueError):
        dual_sq(-1, xi)


def test_dual_square_is_adjoint(rng):
    for _ in range(500):
        h = rng.randint(1, 4)
        n = rng.randint(1, 14)
        k = rng.randint(1, n)
        f = random_polynomial(rng, h, n - k)
        xi = DualElement(random_polynomial(rng, h, n).terms, h)
        assert pairing(f, dual_sq(k, xi)) == pairing(sq(k, f), xi), (k, f, xi)


def test_pairing_examples():
    xi = dual((1, 1, 1, 15))
    assert pairing(Polynomial.parse("(1,1,1,15)", 4), xi) == 1
    assert pairing(Polynomial.parse("(1,1,15,1)", 4), xi) == 0
    with pytest.raises(DimensionError):
        pairing(Polynomial.parse("(1,1,15)", 3), xi)
    with pytest.raises(DimensionError):
        pairing(Polynomial.parse("(1,1,1,14)", 4), xi)


def test_repeated_terms_cancel():
    assert dual((1, 2), (1, 2), (0, 3)) == dual((0, 3))
    assert DualElement([(1, 2), (1, 2)], 2).is_zero()
    assert DualMonomial.parse("d(1,2)") == DualMonomial((1, 2))
    assert str(dual((1, 2))) == "d(1,2)"


def test_json_round_trip_checks_degree():
    xi = dual((1, 1, 1, 15), (1, 1, 15, 1))
    assert DualElement.from_json(xi.to_json()) == xi
    with pytest.raises(DimensionError):
        DualElement.from_json({"h": 4, "n": 17, "terms": [[1, 1, 1, 15]]})


def test_spike_duals_are_annihilated():
    for h in (1, 2, 3, 4):
        for k in (1, 2, 3, 4, 5):
            assert is_annihilated(DualElement(((0,) * (h - 1) + ((1 << k) - 1,),)))
    assert is_annihilated(dual((1, 1, 1, 15)))
    assert not is_annihilated(dual((2,)))
    assert is_annihilated(DualElement.zero(3))


@pytest.mark.parametrize("h, n", [(2, 7), (3, 6), (3, 10), (4, 8)])
def test_annihilated_dimension_matches_cohit(cache, h, n):
    space = annihilated_space(h, n)
    assert space.dim == cache.basis_of(h, n).dim
    for xi in space.basis:
        assert is_annihilated(xi)


@pytest.mark.parametrize("h, n", [(3, 6), (4, 8)])
def test_annihilated_basis_is_dual_to_admissibles(cache, h, n):
    cb = cache.basis_of(h, n)
    basis = annihilated_basis(h, n)
    for i, t in enumerate(cb.admissibles):
        f = Polynomial.from_monomial(t)
        assert [pairing(f, xi) for xi in basis] == [int(i == j) for j in range(len(basis))]


def test_hit_pairs_to_zero_with_annihilated(cache):
    space = cache.hit_space(3, 10)
    basis = annihilated_basis(3, 10)
    for pivot in space.echelon.pivots:
        f = space.polynomial(space.echelon.row_bits(pivot))
        assert all(pairing(f, xi) == 0 for xi in basis)


def test_dual_kameko_up():
    assert dual_kameko_up(dual((0, 1))) == dual((1, 3))
    assert dual_kameko_up(DualElement.zero(2)).is_zero()
    assert is_annihilated(dual_kameko_up(dual((1, 1))))


def test_psi_of_spikes():
    assert psi(dual((5,))) == LambdaElement.parse("l5")
    assert psi(dual((1, 1, 1, 15))) == adem_normalize(LambdaElement.parse("l1^3 l15"))
    assert psi(dual((0, 0, 7, 31))) == adem_normalize(LambdaElement.parse("l0^2 l7 l31"))
    assert psi(dual((3, 0))) == LambdaElement.parse("l3 l0")
    assert psi(dual((0, 3))) == LambdaElement.parse("l2 l1")


def test_psi_uses_the_right_action():
    # x^{(2)} x^{(1)} picks up (x^{(2)})Sq^1 = x^{(1)}
    assert psi(dual((2, 1))) == LambdaElement.parse("l2 l1 + l1 l2")


@pytest.mark.parametrize("h, degrees", [(2, range(1, 13)), (3, range(1, 9)), (4, range(1, 11))])
def test_psi_sends_annihilated_to_cycles(h, degrees):
    for n in degrees:
        for xi in annihilated_basis(h, n):
            assert differential(psi(xi)).is_zero(), xi


def test_coinvariants(cache):
    assert coinvariants(4, 8, cache.basis_of).dim == 0
    space = coinvariants(4, 18, cache.basis_of)
    assert space.dim == 2
    assert space.invariant_dim == 2
    assert len(space.representatives) == 2
    assert all(is_annihilated(xi) for xi in space.representatives)


@pytest.mark.parametrize("h, n", [(2, n) for n in range(1, 9)] + [(3, n) for n in range(1, 11)] + [(4, n) for n in range(5, 13)])
def test_coinvariants_match_invariants(cache, h, n):
    cb = cache.basis_of(h, n)
    invariant_space = invariants(cb, "GL")
    space = coinvariants(h, n, cache.basis_of)
    assert space.dim == invariant_space.dim
    # representatives pair as a dual basis against the invariant classes
    for i, xi in enumerate(space.representatives):
        for j, vector in enumerate(invariant_space.embedded(cb.dim)):
            assert pairing(cb.lift(vector), xi) == (1 if i == j else 0)


def test_transfer_of_a_spike():
    image = transfer_image(dual((1, 1, 1, 15)))
    assert image.cycle_class.is_nonzero
    assert image.to_json()["class"] == "nonzero"
    assert transfer_image(dual((1, 1))).cycle_class.is_nonzero


def test_transfer_of_zero():
    image = transfer_image(DualElement.zero(4))
    assert image.element.is_zero()
    assert image.to_json()["class"] == "zero"


def test_transfer_of_a_vanishing_element_has_zero_coordinates():
    # psi(x^{(1)}x^{(3)}) = 0 while x^{(1)}x^{(3)} is annihilated
    xi = dual((1, 3))
    assert is_annihilated(xi)
    image = transfer_image(xi)
    assert image.element.is_zero()
    assert image.cycle_class.coordinates == [0] * ext_group(2, 4).dim


def test_transfer_needs_annihilation():
    with pytest.raises(DomainError):
        transfer_image(dual((2,)))


def shipped_element(name):
    return load_element("elements/{}.json".format(name), config.DEFAULT_MANIFEST.parent)


@pytest.mark.slow
@pytest.mark.parametrize("h, degrees", [(4, range(11, 21))])
def test_psi_sends_annihilated_to_cycles_in_higher_degrees(h, degrees):
    for n in degrees:
        for xi in annihilated_basis(h, n):
            assert differential(psi(xi)).is_zero(), xi


def test_psi_of_the_degree_eighteen_generator():
    zeta = shipped_element("zeta_18")
    assert is_annihilated(zeta)
    cycle = LambdaElement.parse("l4 l6 l5 l3 + l5 l7 l3 l3 + l3 l3 l5 l7 + l2 l4 l5 l7")
    assert psi(zeta) == adem_normalize(cycle) + differential(LambdaElement.parse("l3 l5 l11"))


def test_psi_of_the_spike_duals():
    assert psi(shipped_element("spike_dual_1_1_1_15")) == adem_normalize(LambdaElement.parse("l1 l1 l1 l15"))
    assert psi(shipped_element("spike_dual_0_0_7_31")) == adem_normalize(LambdaElement.parse("l0 l0 l7 l31"))


@pytest.mark.slow
def test_psi_of_the_degree_thirty_two_generator():
    zeta = shipped_element("zeta_bar_32")
    assert is_annihilated(zeta)
    cycle = LambdaElement.parse("l7 l7 l5 l13 + l7 l7 l9 l9 + l7 l11 l9 l5 + l15 l3 l11 l3")
    boundary = differential(LambdaElement.parse("l7 l7 l19 + l7 l19 l7"))
    assert psi(zeta) == adem_normalize(cycle) + boundary
    assert transfer_image(zeta).cycle_class.is_nonzero


@pytest.mark.slow
def test_psi_of_the_degree_thirty_eight_generator():
    zeta = shipped_element("zeta_38")
    assert is_annihilated(zeta)
    cycle = LambdaElement.parse("l7 l7 l7 l17 + l7 l11 l11 l9 + l7 l7 l15 l9 + l15 l11 l7 l5 + l7 l7 l11 l13")
    boundary = differential(LambdaElement.parse("l7 l11 l21 + l7 l25 l7 + l9 l15 l15 + l1 l23 l15"))
    assert psi(zeta) == adem_normalize(cycle) + boundary

import pytest

from classes.errors import DimensionError
from classes.gf2 import Echelon
from classes.cohit_basis import reduce_to_cohit
from classes.induced_endo import induced_endo, invariants, invariants_weight
from classes.monomial import WeightVector
from classes.polynomial import Polynomial
from classes.variable_map import VariableMap, generators, substitute, theta


def test_identity_induces_identity(cache):
    cb = cache.basis_of(3, 7)
    assert induced_endo(VariableMap.identity(3), cb).is_identity()


def test_transposition_permutes_degree_two_classes(cache):
    cb = cache.basis_of(6, 2)
    assert cb.dim == 15
    endo = induced_endo(theta(1, 6), cb)
    assert all(bin(column).count("1") == 1 for column in endo.columns)
    assert len(set(endo.columns)) == cb.dim
    assert not endo.is_identity()


def test_transvection_on_degree_two(cache):
    cb = cache.basis_of(4, 2)
    t1t2 = Polynomial.parse("(1,1,0,0)", 4)
    image = substitute(theta(4, 4), t1t2)
    assert image == t1t2 + Polynomial.parse("(0,2,0,0)", 4)
    assert cb.reduce(image) == cb.reduce(t1t2)


def test_induced_map_respects_composition(cache):
    cb = cache.basis_of(3, 7)
    first, second = theta(1, 3), theta(3, 3)
    composite = induced_endo(second.compose(first), cb)
    a, b = induced_endo(first, cb), induced_endo(second, cb)
    for j in range(cb.dim):
        image = 0
        for i in range(cb.dim):
            if (a.columns[j] >> i) & 1:
                image ^= b.columns[i]
        assert composite.columns[j] == image


def test_generators_square_to_identity(cache):
    cb = cache.basis_of(3, 8)
    for g in generators(3, "GL"):
        endo = induced_endo(g, cb)
        for j in range(cb.dim):
            image = 0
            for i in range(cb.dim):
                if (endo.columns[j] >> i) & 1:
                    image ^= endo.columns[i]
            assert image == 1 << j


def test_invariants_degree_two(cache):
    cb = cache.basis_of(6, 2)
    assert invariants(cb, "GL").dim == 0
    symmetric = invariants(cb, "S")
    assert symmetric.dim == 1
    assert symmetric.embedded(cb.dim)[0].weight() == 15


def test_invariants_four_variables(cache):
    assert invariants(cache.basis_of(4, 8), "GL").dim == 0
    assert invariants(cache.basis_of(4, 18), "GL").dim == 2


def test_degree_zero_is_invariant(cache):
    cb = cache.basis_of(4, 0)
    assert invariants(cb, "GL").dim == 1
    assert invariants_weight(cb, WeightVector(()), "S").dim == 1


def test_weight_invariants(cache):
    cb = cache.basis_of(6, 8)
    assert invariants_weight(cb, WeightVector((2, 3)), "GL").dim == 0
    with pytest.raises(DimensionError):
        invariants_weight(cb, WeightVector((2, 2)), "GL")


def test_gl_invariants_are_symmetric(cache):
    for h, n in [(3, 7), (4, 8), (3, 10)]:
        cb = cache.basis_of(h, n)
        symmetric = Echelon(cb.dim)
        for vector in invariants(cb, "S").basis:
            symmetric.insert(vector)
        for vector in invariants(cb, "GL").basis:
            assert symmetric.contains(vector)


def test_invariants_are_fixed(cache):
    cb = cache.basis_of(4, 7)
    space = invariants(cb, "S")
    assert space.dim > 0
    for g in generators(4, "S"):
        endo = induced_endo(g, cb)
        for vector in space.embedded(cb.dim):
            assert endo.apply(vector) == vector


def test_unknown_group(cache):
    with pytest.raises(ValueError):
        invariants(cache.basis_of(2, 3), "SL")


def test_map_must_preserve_variables(cache):
    with pytest.raises(DimensionError):
        induced_endo(VariableMap.identity(4), cache.basis_of(3, 3))


@pytest.mark.parametrize("h, n", [(3, 7), (3, 10), (4, 8)])
def test_induced_map_ignores_hit_summands(cache, rng, h, n):
    cb = cache.basis_of(h, n)
    hs = cache.hit_space(h, n)
    hit = [hs.polynomial(hs.echelon.row_bits(pivot)) for pivot in hs.echelon.pivots]
    for g in generators(h, "GL"):
        columns = induced_endo(g, cb).columns
        for j, t in enumerate(cb.admissibles):
            f = Polynomial.from_monomial(t)
            for extra in rng.sample(hit, min(3, len(hit))):
                f = f + extra
            assert reduce_to_cohit(substitute(g, f), cb).bits == columns[j], (g, t)


@pytest.mark.slow
def test_symmetric_invariants_of_a_weight_in_degree_thirteen(cache):
    cb = cache.basis_of(6, 13)
    assert invariants_weight(cb, WeightVector((3, 5)), "S").dim == 1

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional

from classes import config
from classes.errors import DimensionError
from classes.gf2 import BitVector, iter_bits
from classes.hit_space import HitSpace, hit_span
from classes.monomial import Monomial, WeightVector, monomials, weight_vector
from classes.polynomial import Polynomial
from classes.steenrod import minimal_spike

logger = logging.getLogger(__name__)


@dataclass
class WeightComponent:
    """
    The weight component QP_n(w) and its split into classes with some zero exponent and with all exponents positive

    :param weight: the weight vector w
    :param basis: indices (into the admissible list) of the admissibles of weight w
    :param zero_basis: the indices whose monomial has a zero exponent
    :param positive_basis: the indices whose monomial has only positive exponents
    """
    weight: WeightVector
    basis: List[int] = field(default_factory=list)
    zero_basis: List[int] = field(default_factory=list)
    positive_basis: List[int] = field(default_factory=list)

    @property
    def dim_total(self) -> int:
        return len(self.basis)

    @property
    def dim_zero(self) -> int:
        return len(self.zero_basis)

    @property
    def dim_positive(self) -> int:
        return len(self.positive_basis)


class CohitBasis:
    """
    The admissible monomials of degree n in h variables, whose classes form a basis of QP_n. Admissibles are the
    monomials that are not the pivot of any hit relation, kept in ascending monomial order.

    :param h: the number of variables
    :param n: the degree
    :param admissibles: the admissible monomials in ascending monomial order
    :param hit_space: the hit space the basis was read from, needed to reduce polynomials
    """

    def __init__(self, h: int, n: int, admissibles: List[Monomial], hit_space: Optional[HitSpace] = None):
        self.h = h
        self.n = n
        self.admissibles = admissibles
        self.hit_space = hit_space
        self.position: Dict[Monomial, int] = {t: i for i, t in enumerate(admissibles)}
        self.weight_index: Dict[WeightVector, List[int]] = {}
        for i, t in enumerate(admissibles):
            self.weight_index.setdefault(weight_vector(t), []).append(i)
        self._column_to_position: Optional[Dict[int, int]] = None

    @property
    def dim(self) -> int:
        return len(self.admissibles)

    @property
    def dim_zero(self) -> int:
        return sum(1 for t in self.admissibles if t.has_zero_exponent())

    @property
    def dim_positive(self) -> int:
        return self.dim - self.dim_zero

    def weights(self) -> List[WeightVector]:
        length = self.n.bit_length()
        return sorted(self.weight_index, key=lambda w: w.padded(length))

    def weight_component(self, omega: WeightVector) -> WeightComponent:
        return weight_component(self, omega)

    def reduce(self, f: Polynomial) -> BitVector:
        return reduce_to_cohit(f, self)

    def lift(self, coordinates: BitVector) -> Polynomial:
        """
        The polynomial sum of the admissibles selected by a coordinate vector
        """
        if coordinates.length != self.dim:
            raise DimensionError("Coordinates of length {} against a basis of dimension {}".format(
                coordinates.length, self.dim))
        return Polynomial((self.admissibles[i] for i in coordinates.indices()), self.h)

    def column_positions(self) -> Dict[int, int]:
        if self._column_to_position is None:
            index = self._require_hit_space().index
            self._column_to_position = {index[t]: i for i, t in enumerate(self.admissibles)}
        return self._column_to_position

    def _require_hit_space(self) -> HitSpace:
        if self.hit_space is None:
            raise ValueError("Cohit basis ({}, {}) was loaded without its hit space".format(self.h, self.n))
        return self.hit_space

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "n": self.n,
            "dim": self.dim,
            "admissibles": [list(t) for t in self.admissibles],
            "by_weight": {str(w): self.weight_index[w] for w in self.weights()},
        }

    @classmethod
    def from_json(cls, payload: dict, hit_space: Optional[HitSpace] = None) -> CohitBasis:
        return cls(payload["h"], payload["n"], [Monomial(t) for t in payload["admissibles"]], hit_space)

    def __repr__(self):
        return "CohitBasis(h={}, n={}, dim={})".format(self.h, self.n, self.dim)


def cohit_basis(h: int, n: int, capacity: int = config.CAPACITY_THRESHOLD, force: bool = False,
                verbose: bool = False, hit_space: Optional[HitSpace] = None) -> CohitBasis:
    """
    Computes the admissible basis of QP_n in h variables

    :param h: the number of variables
    :param n: the degree
    :param capacity: the column threshold of the capacity guard
    :param force: bool, ignore the capacity guard
    :param verbose: bool, show a progress bar
    :param hit_space: a prebuilt hit space, reused when given
    :return: a CohitBasis
    """
    if hit_space is None:
        hit_space = hit_span(h, n, capacity=capacity, force=force, verbose=verbose)
    admissibles = [hit_space.columns[i] for i in hit_space.admissible_columns()]
    logger.debug("QP_%d in %d variables has dimension %d", n, h, len(admissibles))
    return CohitBasis(h, n, admissibles, hit_space)


def weight_component(cb: CohitBasis, omega: WeightVector) -> WeightComponent:
    """
    The weight component QP_n(w). Columns are ordered weight first, so monomials of weight below w form an initial
    segment of the order and the component is read off the global admissible basis.

    :param cb: the cohit basis
    :param omega: a weight vector of degree n
    :return: a WeightComponent
    """
    omega = WeightVector(omega)
    if omega.degree != cb.n:
        raise DimensionError("Weight vector {} has degree {}, not {}".format(omega, omega.degree, cb.n))
    component = WeightComponent(omega)
    for i in cb.weight_index.get(omega, []):
        component.basis.append(i)
        if cb.admissibles[i].has_zero_exponent():
            component.zero_basis.append(i)
        else:
            component.positive_basis.append(i)
    return component


def reduce_to_cohit(f: Polynomial, cb: CohitBasis) -> BitVector:
    """
    Expresses the class of f in the admissible basis

    :param f: a polynomial of degree cb.n in cb.h variables
    :param cb: the cohit basis
    :return: the unique coordinates over cb.admissibles
    """
    hit_space = cb._require_hit_space()
    residue, _ = hit_space.echelon.reduce_bits(hit_space.vector(f))
    positions = cb.column_positions()
    bits = 0
    for column in iter_bits(residue):
        bits |= 1 << positions[column]
    return BitVector(cb.dim, bits)


def zero_part_formula(h: int, n: int, positive_dims: Dict[int, int]) -> int:
    """
    The dimension of the part of QP_n^{(x)h} spanned by classes with a zero exponent, from the dimensions of the
    all-positive parts in fewer variables: sum over 1 <= k < h of C(h, k) dim (QP_n^{(x)k})^{>0}

    :param positive_dims: map k -> dim (QP_n^{(x)k})^{>0}
    """
    return sum(comb(h, k) * positive_dims[k] for k in range(1, h))


def singer_check(h: int, n: int) -> List[Monomial]:
    """
    The monomials of degree n whose weight vector is below that of the minimal spike; all of them are hit

    :return: list of monomials
    """
    spike = minimal_spike(h, n)
    length = n.bit_length()
    bound = weight_vector(spike).padded(length)
    return [t for t in monomials(h, n) if weight_vector(t).padded(length) < bound]

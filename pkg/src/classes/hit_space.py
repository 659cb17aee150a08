from __future__ import annotations

import logging
from typing import Dict, Iterable, List

from classes import config, utils
from classes.errors import DimensionError
from classes.gf2 import Echelon, iter_bits
from classes.monomial import Monomial, count_monomials, monomials, sorted_monomials
from classes.polynomial import Polynomial
from classes.steenrod import sq_monomial

logger = logging.getLogger(__name__)


class HitSpace:
    """
    The hit subspace of P^{(x)h}_n, held as an echelon over the degree-n monomials. Columns are laid out in
    ascending monomial order (weight vector first, then exponents) and every pivot is the largest monomial of its
    row, so each row expresses its pivot monomial through strictly smaller ones.

    :param h: the number of variables
    :param n: the degree
    :param columns: the degree-n monomials in ascending monomial order
    :param echelon: an Echelon over len(columns) coordinates spanning the hit subspace
    """

    def __init__(self, h: int, n: int, columns: List[Monomial], echelon: Echelon):
        self.h = h
        self.n = n
        self.columns = columns
        self.index: Dict[Monomial, int] = {t: i for i, t in enumerate(columns)}
        self.echelon = echelon

    @property
    def rank(self) -> int:
        return self.echelon.rank

    @property
    def n_columns(self) -> int:
        return len(self.columns)

    def bits_of(self, terms: Iterable) -> int:
        bits = 0
        for t in terms:
            bits ^= 1 << self.index[t]
        return bits

    def vector(self, f: Polynomial) -> int:
        """
        The packed coordinate vector of a polynomial over the monomial columns

        :param f: a homogeneous polynomial of degree n in h variables
        :return: int
        """
        self._check(f)
        return self.bits_of(f.terms)

    def polynomial(self, bits: int) -> Polynomial:
        return Polynomial((self.columns[i] for i in iter_bits(bits)), self.h)

    def _check(self, f: Polynomial):
        if f.h != self.h:
            raise DimensionError("Polynomial in {} variables against a hit space in {}".format(f.h, self.h))
        if not f.is_zero() and f.degree != self.n:
            raise DimensionError("Polynomial of degree {} against a hit space of degree {}".format(f.degree, self.n))

    def normal_form(self, f: Polynomial) -> Polynomial:
        """
        Reduces a polynomial to its unique representative supported on admissible monomials
        """
        residue, _ = self.echelon.reduce_bits(self.vector(f))
        return self.polynomial(residue)

    def is_hit(self, f: Polynomial) -> bool:
        return self.echelon.reduce_bits(self.vector(f))[0] == 0

    def admissible_columns(self) -> List[int]:
        return self.echelon.non_pivots()


def spanning_squares(n: int) -> List[int]:
    """
    The squares Sq^{2^k} whose images span the hit subspace in degree n. Sq^{2^k} vanishes on degree n - 2^k
    when 2^k exceeds that degree, so only 2^{k+1} <= n is needed.
    """
    squares = []
    k = 1
    while 2 * k <= n:
        squares.append(k)
        k *= 2
    return squares


def hit_span(h: int, n: int, capacity: int = config.CAPACITY_THRESHOLD, force: bool = False,
             verbose: bool = False) -> HitSpace:
    """
    Builds the hit subspace of degree n in h variables from the images Sq^{2^k}(m), deg m = n - 2^k

    :param h: the number of variables, >= 1
    :param n: the degree, >= 0
    :param capacity: the column threshold of the capacity guard
    :param force: bool, ignore the capacity guard
    :param verbose: bool, show a progress bar
    :return: a HitSpace
    """
    if h < 1 or n < 0:
        raise DimensionError("hit_span needs h >= 1 and n >= 0, got h={}, n={}".format(h, n))
    utils.check_capacity(count_monomials(h, n), capacity, force, what="hit space ({}, {})".format(h, n))
    columns = sorted_monomials(h, n)
    space = HitSpace(h, n, columns, Echelon(len(columns), priority="max", reduced=False))
    squares = spanning_squares(n)
    total = sum(count_monomials(h, n - k) for k in squares)
    with utils.progress_bar("Hit space ({}, {}):".format(h, n), total, enabled=verbose) as bar:
        for k in squares:
            for m in monomials(h, n - k):
                image = sq_monomial(k, m)
                if image:
                    space.echelon.insert_bits(space.bits_of(image))
                bar.next()
    logger.debug("Hit space (%d, %d): %d spanning rows, rank %d of %d columns", h, n, total, space.rank,
                 len(columns))
    return space


def is_hit(f: Polynomial, hs: HitSpace) -> bool:
    """
    Decides whether a homogeneous polynomial lies in the hit subspace

    :param f: a polynomial of degree hs.n in hs.h variables
    :param hs: the hit space
    :return: bool
    """
    return hs.is_hit(f)

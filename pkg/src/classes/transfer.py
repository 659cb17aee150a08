from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from classes import config
from classes.cohit_basis import CohitBasis, cohit_basis
from classes.dual import AnnihilatedSpace, DualElement, annihilated_space, dual_sq_monomial, is_annihilated
from classes.errors import DomainError, InvariantViolation
from classes.ext_group import CycleClass, ExtGroup, classify_cycle, ext_group
from classes.gf2 import Echelon, iter_bits
from classes.induced_endo import invariants
from classes.lambda_algebra import LambdaElement, adem_normalize, differential
from classes.variable_map import VariableMap, generators

logger = logging.getLogger(__name__)


@dataclass
class CoinvariantSpace:
    """
    The coinvariants Z/2 (x)_{GL_h} Ann[P_n]^*, with representatives that pair as a dual basis against the
    GL-invariant classes of QP_n

    :param h: the number of variables
    :param n: the degree
    :param dim: the dimension of the quotient
    :param representatives: one annihilated element per basis class
    :param invariant_dim: the dimension of [QP_n]^GL found on the cohit side
    """
    h: int
    n: int
    dim: int
    representatives: List[DualElement] = field(default_factory=list)
    invariant_dim: int = 0

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "n": self.n,
            "dim": self.dim,
            "invariant_dim": self.invariant_dim,
            "representatives": [str(xi) for xi in self.representatives],
        }


def _transpose_table(variable_map: VariableMap, space: AnnihilatedSpace) -> Dict[int, int]:
    # column a -> packed columns b with t^a in the image of t^b
    table: Dict[int, int] = {}
    for b, t in enumerate(space.columns):
        for image in variable_map.apply_monomial(t):
            a = space.index[tuple(image)]
            table[a] = table.get(a, 0) ^ (1 << b)
    return table


def transpose_action(table: Dict[int, int], bits: int) -> int:
    """
    Applies the transpose of a substitution to a packed dual vector
    """
    result = 0
    for a in iter_bits(bits):
        result ^= table.get(a, 0)
    return result


def coinvariants(h: int, n: int, basis_of: Optional[Callable[[int, int], CohitBasis]] = None,
                 capacity: int = config.CAPACITY_THRESHOLD, force: bool = False) -> CoinvariantSpace:
    """
    Computes the GL_h coinvariants of the annihilated subspace in degree n. The dimension is dim Ann minus the rank
    of the span of theta_j^*(xi) + xi; it must agree with dim [QP_n]^GL.

    :param h: the number of variables
    :param n: the degree
    :param basis_of: a function (h, n) -> CohitBasis, typically backed by the cache
    :return: a CoinvariantSpace
    """
    space = annihilated_space(h, n, capacity=capacity, force=force)
    augmentation = Echelon(len(space.columns), priority="max", reduced=False)
    for g in generators(h, "GL"):
        table = _transpose_table(g, space)
        for bits in space.kernel:
            augmentation.insert_bits(transpose_action(table, bits) ^ bits)
    dim = space.dim - augmentation.rank

    cb = basis_of(h, n) if basis_of is not None else cohit_basis(h, n, capacity=capacity, force=force)
    if cb.dim != space.dim:
        raise InvariantViolation("dim QP_{} = {} but the annihilated space has dimension {} in {} variables".format(
            n, cb.dim, space.dim, h))
    invariant_space = invariants(cb, "GL")
    if invariant_space.dim != dim:
        raise InvariantViolation("Coinvariants ({}, {}) have dimension {} but the invariants have {}".format(
            h, n, dim, invariant_space.dim))
    # The annihilated basis is dual to the admissibles, so the basis element at the leading position of each
    # reduced invariant vector pairs to 1 with that vector and to 0 with the others
    representatives = [space.element(space.kernel[p]) for p in invariant_space.leading_positions()]
    logger.debug("Coinvariants (%d, %d): dim Ann %d, augmentation rank %d, dim %d", h, n, space.dim,
                 augmentation.rank, dim)
    return CoinvariantSpace(h, n, dim, representatives, invariant_space.dim)


@lru_cache(maxsize=1 << 16)
def _psi_monomial(exponents: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    # Unnormalized words of psi on one divided-power monomial; (prefix)Sq^i vanishes once 2i exceeds the prefix degree
    if len(exponents) == 1:
        return frozenset((exponents,))
    prefix, last = exponents[:-1], exponents[-1]
    words = set()
    for i in range(sum(prefix) // 2 + 1):
        for image in dual_sq_monomial(i, prefix):
            for word in _psi_monomial(tuple(image)):
                words ^= {word + (last + i,)}
    return frozenset(words)


def psi(xi: DualElement) -> LambdaElement:
    """
    The map psi_h from the divided-power dual into the lambda algebra:
    psi_1(x^{(j)}) = lambda_j and
    psi_h(x_1^{(j_1)}...x_h^{(j_h)}) = sum_{k >= j_h} psi_{h-1}((x_1^{(j_1)}...x_{h-1}^{(j_{h-1})})Sq^{k-j_h}) lambda_k

    :param xi: a homogeneous dual element in h variables
    :return: psi(xi) in admissible normal form, of bidegree (h, n)
    """
    words = set()
    for term in xi.terms:
        words ^= _psi_monomial(tuple(term))
    return adem_normalize(LambdaElement(words))


@dataclass
class TransferImage:
    """
    The image of an annihilated element under the transfer, read in Ext^{h, h+n}

    :param element: the cycle psi(xi)
    :param cycle_class: its classification against the Ext representatives
    """
    element: LambdaElement
    cycle_class: CycleClass

    def to_json(self) -> dict:
        payload = self.cycle_class.to_json()
        payload["element"] = str(self.element)
        return payload


def transfer_image(xi: DualElement, group: Optional[ExtGroup] = None, capacity: int = config.CAPACITY_THRESHOLD,
                   force: bool = False) -> TransferImage:
    """
    Sends an annihilated element through psi and classifies the resulting cycle

    :param xi: an annihilated dual element
    :param group: the Ext group of bidegree (h, n), computed when not given
    :return: a TransferImage
    """
    if not is_annihilated(xi):
        raise DomainError("{} is not annihilated by the positive Steenrod squares".format(xi))
    z = psi(xi)
    if z.is_zero():
        if group is None and xi.degree is not None:
            group = ext_group(xi.h, xi.degree, capacity=capacity, force=force)
        return TransferImage(z, classify_cycle(z, group))
    if not differential(z).is_zero():
        raise InvariantViolation("psi({}) is not a cycle".format(xi))
    if group is None:
        group = ext_group(*z.bidegree, capacity=capacity, force=force)
    return TransferImage(z, classify_cycle(z, group))

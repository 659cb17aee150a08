from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, List, Optional

import numpy as np

from classes.cohit_basis import CohitBasis, reduce_to_cohit
from classes.errors import ParityError
from classes.gf2 import BitVector, Echelon, array_from_rows, matmul
from classes.monomial import Monomial
from classes.polynomial import Polynomial

logger = logging.getLogger(__name__)


def kameko_down(t: Monomial) -> Optional[Monomial]:
    """
    Kameko's squaring on a monomial: t_1^{2b_1+1}...t_h^{2b_h+1} -> t_1^{b_1}...t_h^{b_h}, and zero when an exponent is even

    :param t: a monomial of degree n with n - h even
    :return: the image monomial, or None for zero
    """
    t = Monomial(t)
    if (t.degree - t.h) % 2:
        raise ParityError("Kameko's map needs n = h mod 2, got n={}, h={}".format(t.degree, t.h))
    if any(a % 2 == 0 for a in t):
        return None
    return Monomial((a - 1) // 2 for a in t)


def kameko_up(t: Monomial, h: Optional[int] = None) -> Monomial:
    """
    The up map t -> t_1...t_h t^2

    :param t: a monomial
    :param h: the number of variables, checked against t when given
    :return: the monomial with exponents 2a_j + 1
    """
    t = Monomial(t)
    if h is not None and h != t.h:
        raise ValueError("Monomial {} does not have {} variables".format(t, h))
    return Monomial(2 * a + 1 for a in t)


def kameko_down_polynomial(f: Polynomial) -> Polynomial:
    """
    Kameko's squaring applied monomial-wise; terms with an even exponent vanish
    """
    images = (kameko_down(t) for t in f.terms)
    return Polynomial((image for image in images if image is not None), f.h)


def kameko_up_polynomial(f: Polynomial) -> Polynomial:
    return Polynomial((kameko_up(t) for t in f.terms), f.h)


def target_degree(h: int, n: int) -> int:
    if n < h or (n - h) % 2:
        raise ParityError("Kameko's map needs n >= h and n = h mod 2, got n={}, h={}".format(n, h))
    return (n - h) // 2


@dataclass
class KamekoPair:
    """
    Kameko's map QP_n -> QP_{(n-h)/2} in admissible coordinates, with its kernel

    :param source: the cohit basis in degree n
    :param target: the cohit basis in degree (n-h)/2
    :param columns: packed images of the source admissibles over the target admissibles
    :param kernel: kernel vectors over the source admissibles
    """
    source: CohitBasis
    target: CohitBasis
    columns: List[int]
    kernel: List[BitVector]

    @property
    def h(self) -> int:
        return self.source.h

    @property
    def n(self) -> int:
        return self.source.n

    @property
    def down(self) -> np.ndarray:
        """
        The 0/1 matrix of the map, shape (dim target, dim source)
        """
        rows = [BitVector(self.target.dim, column) for column in self.columns]
        return array_from_rows(rows, self.target.dim).T.copy()

    @property
    def rank(self) -> int:
        echelon = Echelon(self.target.dim, reduced=False)
        for column in self.columns:
            echelon.insert_bits(column)
        return echelon.rank

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def kernel_dim_zero(self) -> int:
        # An exponent 0 is even, so every admissible with a zero exponent lies in the kernel
        return self.source.dim_zero

    @property
    def kernel_dim_positive(self) -> int:
        return self.kernel_dim - self.kernel_dim_zero

    def to_json(self) -> dict:
        return {
            "h": self.h,
            "n": self.n,
            "target_n": self.target.n,
            "dim": self.source.dim,
            "target_dim": self.target.dim,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "kernel_dim_zero": self.kernel_dim_zero,
            "kernel_dim_positive": self.kernel_dim_positive,
            "kernel": [vector.indices() for vector in self.kernel],
        }


def down_columns(source: CohitBasis, target: CohitBasis) -> List[int]:
    """
    Images of the source admissibles under Kameko's map, reduced in the target basis
    """
    columns = []
    for t in source.admissibles:
        image = kameko_down_polynomial(Polynomial.from_monomial(t))
        columns.append(0 if image.is_zero() else reduce_to_cohit(image, target).bits)
    return columns


def _column_kernel(columns: List[int], size: int) -> List[BitVector]:
    echelon = Echelon(size + len(columns), priority="max", reduced=False)
    kernel = Echelon(len(columns), priority="max", reduced=True)
    for j, column in enumerate(columns):
        residue = echelon.insert_bits((column << len(columns)) | (1 << j))
        if residue and residue.bit_length() <= len(columns):
            kernel.insert_bits(residue)
    return kernel.rows


def kameko_kernel(h: int, n: int, basis_of: Callable[[int, int], CohitBasis]) -> KamekoPair:
    """
    Kameko's map in degree n with its kernel

    :param h: the number of variables
    :param n: the degree, n = h mod 2
    :param basis_of: a function (h, n) -> CohitBasis, typically backed by the cache
    :return: a KamekoPair
    """
    m = target_degree(h, n)
    source = basis_of(h, n)
    target = basis_of(h, m)
    columns = down_columns(source, target)
    kernel = _column_kernel(columns, target.dim)
    logger.debug("Kameko kernel (%d, %d): dim %d of %d", h, n, len(kernel), source.dim)
    return KamekoPair(source, target, columns, kernel)


def kameko_iterate(h: int, n: int, times: int, basis_of: Callable[[int, int], CohitBasis]) -> np.ndarray:
    """
    The composite of `times` Kameko maps starting in degree n, as a 0/1 matrix

    :param times: the number of maps, 0 gives the identity
    :return: matrix of shape (dim QP_target, dim QP_n)
    """
    if times == 0:
        return np.eye(basis_of(h, n).dim, dtype=np.uint8)
    degree = n
    product = None
    for _ in range(times):
        pair = kameko_kernel(h, degree, basis_of)
        product = pair.down if product is None else matmul(pair.down, product)
        degree = pair.target.n
    return product

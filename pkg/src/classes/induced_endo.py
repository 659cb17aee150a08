from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from classes.cohit_basis import CohitBasis, reduce_to_cohit
from classes.errors import DimensionError
from classes.gf2 import BitVector, Echelon, array_from_rows
from classes.monomial import WeightVector
from classes.polynomial import Polynomial
from classes.variable_map import VariableMap, generators, substitute

logger = logging.getLogger(__name__)


class InducedEndo:
    """
    The linear map QP_n -> QP_n induced by a degree-preserving substitution, in admissible coordinates.
    Column j is the class of the image of the j-th admissible.

    :param source: the cohit basis
    :param variable_map: the substitution
    :param columns: packed column vectors, one per admissible
    """

    def __init__(self, source: CohitBasis, variable_map: VariableMap, columns: List[int]):
        self.source = source
        self.variable_map = variable_map
        self.columns = columns
        self._matrix: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.source.dim

    @property
    def matrix(self) -> np.ndarray:
        """
        The dense 0/1 matrix with columns indexed by admissibles
        """
        if self._matrix is None:
            rows = [BitVector(self.dim, column) for column in self.columns]
            self._matrix = array_from_rows(rows, self.dim).T.copy()
        return self._matrix

    def apply(self, coordinates: BitVector) -> BitVector:
        if coordinates.length != self.dim:
            raise DimensionError("Coordinates of length {} against dimension {}".format(coordinates.length, self.dim))
        bits = 0
        for j in coordinates.indices():
            bits ^= self.columns[j]
        return BitVector(self.dim, bits)

    def is_identity(self) -> bool:
        return all(column == 1 << j for j, column in enumerate(self.columns))


def _image_column(variable_map: VariableMap, cb: CohitBasis, j: int) -> int:
    image = substitute(variable_map, Polynomial.from_monomial(cb.admissibles[j]))
    return reduce_to_cohit(image, cb).bits


def induced_endo(variable_map: VariableMap, cb: CohitBasis) -> InducedEndo:
    """
    The matrix of a substitution acting on QP_n

    :param variable_map: a substitution from cb.h variables to cb.h variables
    :param cb: the cohit basis
    :return: an InducedEndo
    """
    if variable_map.source_h != cb.h or variable_map.target_h != cb.h:
        raise DimensionError("{} maps {} to {} variables; the basis has {}".format(
            variable_map.name, variable_map.source_h, variable_map.target_h, cb.h))
    return InducedEndo(cb, variable_map, [_image_column(variable_map, cb, j) for j in range(cb.dim)])


@dataclass
class InvariantSpace:
    """
    A basis of invariant classes, as coordinate vectors over a list of admissible positions, in reduced row
    echelon form (each basis vector owns a distinct leading position)

    :param positions: indices into the admissible list spanning the space the vectors live in
    :param basis: the invariant vectors, sorted by leading position
    """
    positions: List[int]
    basis: List[BitVector]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def leading_positions(self) -> List[int]:
        return [vector.bits.bit_length() - 1 for vector in self.basis]

    def embedded(self, dim: int) -> List[BitVector]:
        """
        The basis vectors re-indexed over the whole admissible list of the given dimension
        """
        result = []
        for vector in self.basis:
            bits = 0
            for local in vector.indices():
                bits |= 1 << self.positions[local]
            result.append(BitVector(dim, bits))
        return result

    def to_json(self) -> dict:
        return {"dim": self.dim, "positions": self.positions, "basis": [vector.indices() for vector in self.basis]}


def _common_kernel(systems: Sequence[Sequence[int]], size: int) -> List[BitVector]:
    # Kernel of the stacked maps (M_g + id), found as linear dependencies among stacked columns: each column is
    # tagged with its own unit vector in the low bits, and a column whose stacked part cancels leaves a kernel vector
    width = len(systems) * size
    echelon = Echelon(width + size, priority="max", reduced=False)
    kernel = Echelon(size, priority="max", reduced=True)
    for j in range(size):
        stacked = 0
        for g, columns in enumerate(systems):
            stacked |= (columns[j] ^ (1 << j)) << (g * size)
        residue = echelon.insert_bits((stacked << size) | (1 << j))
        if residue and residue.bit_length() <= size:
            kernel.insert_bits(residue)
    return kernel.rows


def invariants(cb: CohitBasis, group: str = "GL") -> InvariantSpace:
    """
    The invariant subspace [QP_n]^G for G = S_h or GL_h, solved on admissible coordinates as the common kernel of
    induced_endo(theta_j) + id over the generators theta_j of G

    :param cb: the cohit basis
    :param group: "S" or "GL"
    :return: an InvariantSpace over all admissible positions
    """
    systems = [induced_endo(g, cb).columns for g in generators(cb.h, group)]
    basis = _common_kernel(systems, cb.dim)
    logger.debug("[QP_%d]^%s in %d variables has dimension %d", cb.n, group, cb.h, len(basis))
    return InvariantSpace(list(range(cb.dim)), basis)


def weight_columns(variable_map: VariableMap, cb: CohitBasis, positions: List[int]) -> List[int]:
    """
    The induced map on a weight component: substitute, reduce, then keep only the coordinates of the component

    :param positions: the admissible indices of the component
    :return: packed columns over the local indices of positions
    """
    local: Dict[int, int] = {position: i for i, position in enumerate(positions)}
    columns = []
    for position in positions:
        image = _image_column(variable_map, cb, position)
        bits = 0
        for global_index, i in local.items():
            if (image >> global_index) & 1:
                bits |= 1 << i
        columns.append(bits)
    return columns


def invariants_weight(cb: CohitBasis, omega: WeightVector, group: str = "GL") -> InvariantSpace:
    """
    The invariants [QP_n(w)]^G of the induced action on the weight component QP_n(w)

    :param cb: the cohit basis
    :param omega: a weight vector of degree n
    :param group: "S" or "GL"
    :return: an InvariantSpace over the admissible positions of weight w
    """
    omega = WeightVector(omega)
    if omega.degree != cb.n:
        raise DimensionError("Weight vector {} has degree {}, not {}".format(omega, omega.degree, cb.n))
    positions = list(cb.weight_index.get(omega, []))
    systems = [weight_columns(g, cb, positions) for g in generators(cb.h, group)]
    basis = _common_kernel(systems, len(positions))
    return InvariantSpace(positions, basis)

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from classes import config, utils
from classes.errors import DimensionError
from classes.gf2 import Echelon, iter_bits
from classes.lambda_algebra import (LambdaElement, LambdaWord, adem_normalize, differential_word, lambda_basis,
                                    lambda_index)

logger = logging.getLogger(__name__)


@dataclass
class CycleClass:
    """
    The classification of a lambda element against Ext^{s, s+t}

    :param is_cycle: delta(z) = 0
    :param is_boundary: z is the differential of something (only meaningful for cycles)
    :param coordinates: the homology class in the basis of representatives
    """
    is_cycle: bool
    is_boundary: bool
    coordinates: List[int] = field(default_factory=list)

    @property
    def is_nonzero(self) -> bool:
        return self.is_cycle and not self.is_boundary

    def to_json(self) -> dict:
        return {
            "cycle": self.is_cycle,
            "boundary": self.is_boundary,
            "class": "nonzero" if self.is_nonzero else "zero",
            "coords": self.coordinates,
        }


class ExtGroup:
    """
    Ext^{s, s+t} as the homology of Lambda^{s-1, t+1} -> Lambda^{s, t} -> Lambda^{s+1, t-1}. Words are indexed in
    ascending lexicographic order and pivots sit at the largest word.

    :param s: the homological degree
    :param t: the internal degree
    """

    def __init__(self, s: int, t: int, basis: List[LambdaWord], boundaries: Echelon, combined: Echelon,
                 representatives: List[LambdaElement], tags: Dict[int, int], width: int):
        self.s = s
        self.t = t
        self.basis = basis
        self.index = {word: i for i, word in enumerate(basis)}
        self.boundaries = boundaries
        self._combined = combined
        self.representatives = representatives
        # cycle tag -> position in representatives
        self._tags = tags
        # number of tag bits below the word coordinates in the combined echelon
        self._width = width

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def vector(self, e: LambdaElement) -> int:
        bits = 0
        for word in adem_normalize(e).words:
            if (len(word), sum(word)) != (self.s, self.t):
                raise DimensionError("Word {} is not in bidegree ({}, {})".format(word, self.s, self.t))
            bits ^= 1 << self.index[word]
        return bits

    def element(self, bits: int) -> LambdaElement:
        return LambdaElement(self.basis[i] for i in iter_bits(bits))

    def classify(self, z: LambdaElement) -> CycleClass:
        """
        Decides whether z is a cycle and a boundary, and reads its class in the basis of representatives
        """
        z = adem_normalize(z)
        if z.is_zero():
            return CycleClass(True, True, [0] * self.dim)
        bits = self.vector(z)
        image = set()
        for word in z.words:
            image ^= differential_word(tuple(word))
        if image:
            return CycleClass(False, False, [])
        residue, _ = self.boundaries.reduce_bits(bits)
        if residue == 0:
            return CycleClass(True, True, [0] * self.dim)
        combined_residue, _ = self._combined.reduce_bits(bits << self._width)
        if combined_residue >> self._width:
            raise DimensionError("Cycle outside the span of boundaries and representatives")
        coordinates = [0] * self.dim
        for tag in iter_bits(combined_residue):
            coordinates[self._tags[tag]] ^= 1
        return CycleClass(True, False, coordinates)

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "dim": self.dim, "cycles": [str(z) for z in self.representatives]}


def ext_group(s: int, t: int, capacity: int = config.CAPACITY_THRESHOLD, force: bool = False,
              verbose: bool = False) -> ExtGroup:
    """
    Computes Ext^{s, s+t} from the lambda algebra

    :param s: the homological degree, >= 1
    :param t: the internal degree, >= 0
    :param capacity: the column threshold of the capacity guard
    :param force: bool, ignore the capacity guard
    :param verbose: bool, show progress bars
    :return: an ExtGroup with its dimension, representatives and boundary echelon
    """
    if s < 1 or t < 0:
        raise DimensionError("Ext is computed for s >= 1 and t >= 0, got ({}, {})".format(s, t))
    basis = lambda_basis(s, t)
    targets = lambda_index(s + 1, t - 1) if t >= 1 else {}
    sources = lambda_basis(s - 1, t + 1)
    utils.check_capacity(len(basis) + len(targets), capacity, force, what="Ext^({}, {})".format(s, t))
    index = {word: i for i, word in enumerate(basis)}
    size = len(basis)

    boundaries = Echelon(size, priority="max", reduced=True)
    for word in sources:
        bits = 0
        for image in differential_word(tuple(word)):
            bits ^= 1 << index[image]
        boundaries.insert_bits(bits)

    # Cycles as dependencies among the images of the basis words: each word carries its own tag in the low bits
    dependencies = Echelon(len(targets) + size, priority="max", reduced=False)
    cycles = []
    with utils.progress_bar("Ext ({}, {}):".format(s, t), size, enabled=verbose) as bar:
        for i, word in enumerate(basis):
            image_bits = 0
            for image in differential_word(tuple(word)):
                image_bits ^= 1 << targets[image]
            residue = dependencies.insert_bits((image_bits << size) | (1 << i))
            if residue and residue.bit_length() <= size:
                cycles.append(residue)
            bar.next()

    width = len(cycles)
    combined = Echelon(size + width, priority="max", reduced=True)
    for pivot in boundaries.pivots:
        combined.insert_bits(boundaries.row_bits(pivot) << width)
    representatives = []
    tags = {}
    for tag, cycle in enumerate(cycles):
        # Only cycles that survive modulo boundaries and earlier classes become rows
        if combined.reduce_bits(cycle << width)[0] >> width:
            combined.insert_bits((cycle << width) | (1 << tag))
            tags[tag] = len(representatives)
            normal_form, _ = boundaries.reduce_bits(cycle)
            representatives.append(LambdaElement(basis[i] for i in iter_bits(normal_form)))
    group = ExtGroup(s, t, basis, boundaries, combined, representatives, tags, width)
    logger.debug("Ext^(%d, %d): |Lambda| = %d, cycles %d, boundaries %d, dim %d", s, t, size, width,
                 boundaries.rank, group.dim)
    return group


def ext_dimension(s: int, t: int, capacity: int = config.CAPACITY_THRESHOLD, force: bool = False) -> int:
    return ext_group(s, t, capacity=capacity, force=force).dim


def classify_cycle(z: LambdaElement, group: Optional[ExtGroup] = None,
                   bidegree: Optional[Tuple[int, int]] = None) -> CycleClass:
    """
    Classifies a lambda element: cycle or not, boundary or not, and its class against the Ext representatives

    :param z: a homogeneous lambda element
    :param group: the Ext group of z's bidegree, computed when not given
    :param bidegree: (s, t) to use when z is zero and no group is given
    """
    z = adem_normalize(z)
    if group is None:
        if not z.is_zero():
            bidegree = z.bidegree
        if bidegree is None:
            # zero without a bidegree has no group to be read in
            return CycleClass(True, True, [])
        group = ext_group(*bidegree)
    return group.classify(z)

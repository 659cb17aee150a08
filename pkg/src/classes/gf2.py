from __future__ import annotations

import logging
from bisect import bisect_right, insort
from typing import Dict, Iterable, Iterator, List, Tuple

import numpy as np

from classes.errors import DimensionError

logger = logging.getLogger(__name__)

__all__ = ["BitVector", "Echelon", "kernel_basis", "rank", "iter_bits", "popcount", "rows_from_array", "array_from_rows",
           "matmul"]


def iter_bits(bits: int) -> Iterator[int]:
    """
    Iterates over the set bit positions of a non-negative int in ascending order

    :param bits: a packed GF(2) vector
    :return: an iterator of column indices
    """
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def popcount(bits: int) -> int:
    return bin(bits).count("1")


class BitVector:
    """
    A GF(2) vector of a fixed length packed into a Python int (bit i is coordinate i)

    :param length: the number of coordinates
    :param bits: the packed coordinates
    """
    __slots__ = ("length", "bits")

    def __init__(self, length: int, bits: int = 0):
        if length < 0:
            raise DimensionError("A bit vector cannot have negative length {}".format(length))
        if bits < 0 or bits >> length:
            raise DimensionError("Bits set outside [0, {})".format(length))
        self.length = length
        self.bits = bits

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> BitVector:
        bits = 0
        for index in indices:
            if not 0 <= index < length:
                raise DimensionError("Coordinate {} outside [0, {})".format(index, length))
            bits ^= 1 << index
        return cls(length, bits)

    @classmethod
    def zero(cls, length: int) -> BitVector:
        return cls(length, 0)

    def indices(self) -> List[int]:
        return list(iter_bits(self.bits))

    def is_zero(self) -> bool:
        return self.bits == 0

    def weight(self) -> int:
        return popcount(self.bits)

    def _check(self, other: BitVector):
        if self.length != other.length:
            raise DimensionError("Length mismatch: {} vs {}".format(self.length, other.length))

    def __xor__(self, other: BitVector) -> BitVector:
        self._check(other)
        return BitVector(self.length, self.bits ^ other.bits)

    __add__ = __xor__

    def dot(self, other: BitVector) -> int:
        self._check(other)
        return popcount(self.bits & other.bits) & 1

    def __getitem__(self, index: int) -> int:
        if not 0 <= index < self.length:
            raise IndexError("Coordinate {} outside [0, {})".format(index, self.length))
        return (self.bits >> index) & 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BitVector) and self.length == other.length and self.bits == other.bits

    def __hash__(self):
        return hash((self.length, self.bits))

    def __repr__(self):
        return "BitVector({}, {})".format(self.length, self.indices())

    def to_array(self) -> np.ndarray:
        return array_from_rows([self], self.length)[0]


class Echelon:
    """
    A streaming row echelon form over GF(2). Each row is stored under its pivot column, which is the highest
    set column when the priority is "max" and the lowest when it is "min". Callers control which monomial,
    word or coordinate becomes a pivot by laying out their columns in priority order.

    With reduced=True the rows are kept in reduced row echelon form after every insert. With reduced=False only the
    leading columns are kept distinct, which is much cheaper to build; rref() reduces on demand.

    :param ambient_length: the number of columns
    :param priority: "max" or "min", the column chosen as pivot of a new row
    :param reduced: keep the rows fully reduced
    """

    def __init__(self, ambient_length: int, priority: str = "max", reduced: bool = True):
        if priority not in ("max", "min"):
            raise ValueError("Unknown column priority {}".format(priority))
        self.ambient_length = ambient_length
        self.priority = priority
        self.reduced = reduced
        # pivot column -> packed row
        self._rows: Dict[int, int] = {}
        # pivots in ascending order
        self._pivots: List[int] = []

    @property
    def rank(self) -> int:
        return len(self._pivots)

    @property
    def pivots(self) -> List[int]:
        return list(self._pivots)

    @property
    def rows(self) -> List[BitVector]:
        return [BitVector(self.ambient_length, self._rows[pivot]) for pivot in self._pivots]

    def row_bits(self, pivot: int) -> int:
        return self._rows[pivot]

    def __contains__(self, pivot: int) -> bool:
        return pivot in self._rows

    def _lead(self, bits: int) -> int:
        if self.priority == "max":
            return bits.bit_length() - 1
        return (bits & -bits).bit_length() - 1

    def _check(self, vector: BitVector):
        if vector.length != self.ambient_length:
            raise DimensionError("Vector of length {} against an echelon of ambient length {}".format(
                vector.length, self.ambient_length))

    def reduce_bits(self, bits: int) -> Tuple[int, int]:
        """
        Reduces a packed vector to the unique normal form that is zero in every pivot column

        :param bits: the packed vector
        :return: (normal form, packed set of the pivots whose rows were added)
        """
        if self.reduced:
            # Each pivot column is owned by one row, so the coordinates are read off directly
            used = 0
            residue = bits
            for pivot in self._pivot_bits_of(bits):
                residue ^= self._rows[pivot]
                used |= 1 << pivot
            return residue, used
        residue = 0
        used = 0
        remaining = bits
        while remaining:
            lead = self._lead(remaining)
            row = self._rows.get(lead)
            if row is None:
                residue |= 1 << lead
                remaining ^= 1 << lead
            else:
                remaining ^= row
                used |= 1 << lead
        return residue, used

    def _pivot_bits_of(self, bits: int) -> List[int]:
        if popcount(bits) <= len(self._pivots):
            return [column for column in iter_bits(bits) if column in self._rows]
        return [pivot for pivot in self._pivots if (bits >> pivot) & 1]

    def insert_bits(self, bits: int) -> int:
        """
        Inserts a packed vector and returns what is left of it after elimination (zero when absorbed)

        :param bits: the packed vector
        :return: the reduced vector, which became a new row when non-zero
        """
        if self.reduced:
            residue, _ = self.reduce_bits(bits)
        else:
            residue = self._reduce_leading(bits)
        if not residue:
            return 0
        pivot = self._lead(residue)
        if self.reduced:
            # Clear the new pivot column from the rows that can hold it
            if self.priority == "max":
                candidates = self._pivots[bisect_right(self._pivots, pivot):]
            else:
                candidates = self._pivots[:bisect_right(self._pivots, pivot)]
            for other in candidates:
                if (self._rows[other] >> pivot) & 1:
                    self._rows[other] ^= residue
        self._rows[pivot] = residue
        insort(self._pivots, pivot)
        return residue

    def _reduce_leading(self, bits: int) -> int:
        # Only the leading column has to be new for a semi-reduced echelon
        while bits:
            row = self._rows.get(self._lead(bits))
            if row is None:
                return bits
            bits ^= row
        return 0

    def insert(self, vector: BitVector) -> Tuple[BitVector, bool]:
        """
        Inserts a vector into the echelon

        :param vector: a vector of the ambient length
        :return: (the reduced vector, whether it was absorbed by the existing span)
        """
        self._check(vector)
        residue = self.insert_bits(vector.bits)
        return BitVector(self.ambient_length, residue), residue == 0

    def reduce(self, vector: BitVector) -> Tuple[BitVector, Dict[int, int]]:
        """
        Reduces a vector against the echelon

        :param vector: a vector of the ambient length
        :return: (normal form, map from pivot column to the GF(2) coefficient of its row)
        """
        self._check(vector)
        residue, used = self.reduce_bits(vector.bits)
        coordinates = {pivot: (used >> pivot) & 1 for pivot in self._pivots}
        return BitVector(self.ambient_length, residue), coordinates

    def contains(self, vector: BitVector) -> bool:
        self._check(vector)
        return self.reduce_bits(vector.bits)[0] == 0

    def rref(self) -> Echelon:
        """
        Returns the reduced row echelon form of the same span, reusing self when it is already reduced

        :return: an Echelon with reduced=True
        """
        if self.reduced:
            return self
        result = Echelon(self.ambient_length, self.priority, reduced=True)
        # Rows are processed from the least dominant pivot up, so each row only needs a single pass
        order = self._pivots if self.priority == "max" else list(reversed(self._pivots))
        for pivot in order:
            row = self._rows[pivot]
            tail = row ^ (1 << pivot)
            for other in [column for column in iter_bits(tail) if column in result._rows]:
                row ^= result._rows[other]
            result._rows[pivot] = row
        result._pivots = list(self._pivots)
        return result

    def non_pivots(self) -> List[int]:
        return [column for column in range(self.ambient_length) if column not in self._rows]

    def kernel_bits(self) -> List[int]:
        """
        Reads a kernel basis off the reduced rows: one vector per non-pivot column, ascending

        :return: packed kernel vectors
        """
        reduced = self.rref()
        kernel = {column: 1 << column for column in self.non_pivots()}
        for pivot, row in reduced._rows.items():
            for column in iter_bits(row ^ (1 << pivot)):
                kernel[column] |= 1 << pivot
        return [kernel[column] for column in sorted(kernel)]

    def copy(self) -> Echelon:
        result = Echelon(self.ambient_length, self.priority, self.reduced)
        result._rows = dict(self._rows)
        result._pivots = list(self._pivots)
        return result

    def __getstate__(self):
        return {"ambient_length": self.ambient_length, "priority": self.priority, "reduced": self.reduced,
                "rows": [(pivot, self._rows[pivot]) for pivot in self._pivots]}

    def __setstate__(self, state):
        self.ambient_length = state["ambient_length"]
        self.priority = state["priority"]
        self.reduced = state["reduced"]
        self._rows = dict(state["rows"])
        self._pivots = sorted(self._rows)


def kernel_basis(rows: List[BitVector], n_cols: int) -> List[BitVector]:
    """
    Computes a basis of {x : M x = 0} for the matrix whose rows are given

    :param rows: the rows of M, each of length n_cols
    :param n_cols: the number of columns of M
    :return: n_cols - rank(M) vectors spanning the kernel
    """
    echelon = Echelon(n_cols)
    for row in rows:
        echelon.insert(row)
    return [BitVector(n_cols, bits) for bits in echelon.kernel_bits()]


def rank(rows: List[BitVector], n_cols: int) -> int:
    echelon = Echelon(n_cols, reduced=False)
    for row in rows:
        echelon.insert(row)
    return echelon.rank


def rows_from_array(matrix: np.ndarray) -> List[BitVector]:
    """
    Packs the rows of a 0/1 numpy matrix into bit vectors

    :param matrix: a two-dimensional array of 0/1 entries
    :return: one BitVector per row
    """
    matrix = np.asarray(matrix, dtype=np.uint8) & 1
    n_cols = matrix.shape[1]
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [BitVector(n_cols, int.from_bytes(row.tobytes(), "little")) for row in packed]


def array_from_rows(rows: List[BitVector], n_cols: int) -> np.ndarray:
    """
    Unpacks bit vectors into a 0/1 numpy matrix

    :param rows: vectors of length n_cols
    :param n_cols: the number of columns
    :return: a uint8 array of shape (len(rows), n_cols)
    """
    n_bytes = (n_cols + 7) // 8
    matrix = np.zeros((len(rows), n_cols), dtype=np.uint8)
    for i, row in enumerate(rows):
        if row.length != n_cols:
            raise DimensionError("Row of length {} in a matrix with {} columns".format(row.length, n_cols))
        buffer = np.frombuffer(row.bits.to_bytes(n_bytes, "little"), dtype=np.uint8)
        matrix[i] = np.unpackbits(buffer, bitorder="little")[:n_cols]
    return matrix


def matmul(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """
    Multiplies two 0/1 matrices over GF(2)
    """
    return (left.astype(np.int64) @ right.astype(np.int64) % 2).astype(np.uint8)

import numpy as np
import pytest

from classes.errors import DimensionError
from classes.gf2 import (BitVector, Echelon, array_from_rows, iter_bits, kernel_basis, matmul, rank,
                         rows_from_array)


def vector(text):
    # "1010" lists coordinates 0, 1, 2, 3 from the left
    return BitVector.from_indices(len(text), [i for i, c in enumerate(text) if c == "1"])


def test_insert_zero_is_absorbed():
    echelon = Echelon(4)
    reduced, absorbed = echelon.insert(BitVector.zero(4))
    assert absorbed
    assert reduced.is_zero()
    assert echelon.rank == 0


def test_insert_twice_is_absorbed():
    echelon = Echelon(5)
    e3 = BitVector.from_indices(5, [3])
    assert not echelon.insert(e3)[1]
    assert echelon.insert(e3)[1]
    assert echelon.rank == 1


def test_rank_of_dependent_rows():
    rows = [vector("1100"), vector("0110"), vector("1010")]
    assert rank(rows, 4) == 2


def test_insert_length_mismatch():
    with pytest.raises(DimensionError):
        Echelon(3).insert(BitVector.zero(4))


def test_kernel_of_identity_is_empty():
    rows = [BitVector.from_indices(3, [i]) for i in range(3)]
    assert kernel_basis(rows, 3) == []


def test_kernel_of_zero_matrix():
    rows = [BitVector.zero(4), BitVector.zero(4)]
    assert len(kernel_basis(rows, 4)) == 4


def test_kernel_of_small_matrix():
    assert kernel_basis([vector("110"), vector("011")], 3) == [vector("111")]


def test_reduce_zero():
    echelon = Echelon(4)
    echelon.insert(vector("1100"))
    normal_form, coordinates = echelon.reduce(BitVector.zero(4))
    assert normal_form.is_zero()
    assert set(coordinates.values()) == {0}


def test_reduce_row_of_echelon():
    echelon = Echelon(6)
    for text in ("110100", "011001", "000111"):
        echelon.insert(vector(text))
    for pivot, row in zip(echelon.pivots, echelon.rows):
        normal_form, coordinates = echelon.reduce(row)
        assert normal_form.is_zero()
        assert coordinates == {p: int(p == pivot) for p in echelon.pivots}


def test_reduce_uses_both_rows():
    echelon = Echelon(4, reduced=False)
    echelon.insert(vector("1100"))
    echelon.insert(vector("0110"))
    normal_form, coordinates = echelon.reduce(vector("1010"))
    assert normal_form.is_zero()
    assert list(coordinates.values()) == [1, 1]


def test_semi_and_reduced_forms_agree(rng):
    size = 24
    semi = Echelon(size, reduced=False)
    full = Echelon(size, reduced=True)
    for _ in range(18):
        bits = rng.getrandbits(size)
        semi.insert_bits(bits)
        full.insert_bits(bits)
    assert semi.pivots == full.pivots
    for _ in range(20):
        bits = rng.getrandbits(size)
        assert semi.reduce_bits(bits)[0] == full.reduce_bits(bits)[0]
    assert semi.rref().rows == full.rows


@pytest.mark.parametrize("priority", ["max", "min"])
def test_rank_nullity(rng, priority):
    for _ in range(10):
        n_rows, n_cols = rng.randint(1, 12), rng.randint(1, 16)
        rows = [BitVector(n_cols, rng.getrandbits(n_cols)) for _ in range(n_rows)]
        echelon = Echelon(n_cols, priority=priority)
        for row in rows:
            echelon.insert(row)
        kernel = [BitVector(n_cols, bits) for bits in echelon.kernel_bits()]
        assert echelon.rank + len(kernel) == n_cols
        for k in kernel:
            assert all(row.dot(k) == 0 for row in rows)
        assert rank(kernel, n_cols) == len(kernel)


def test_iter_bits_ascending():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_numpy_packing(rng):
    matrix = np.array([[rng.randint(0, 1) for _ in range(19)] for _ in range(7)], dtype=np.uint8)
    rows = rows_from_array(matrix)
    assert rows[0].length == 19
    assert np.array_equal(array_from_rows(rows, 19), matrix)


def test_matmul_is_mod_two():
    left = np.array([[1, 1], [0, 1]], dtype=np.uint8)
    assert np.array_equal(matmul(left, left), np.array([[1, 0], [0, 1]], dtype=np.uint8))


def test_bitvector_bounds():
    with pytest.raises(DimensionError):
        BitVector(3, 0b1000)
    with pytest.raises(DimensionError):
        BitVector(3, 1) ^ BitVector(4, 1)

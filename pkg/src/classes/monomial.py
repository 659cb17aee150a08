from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, List, Tuple

from classes.errors import DimensionError, OrderUndefinedError


class WeightVector(tuple):
    """
    The weight vector (w_1, w_2, ...) of a monomial: w_i counts the exponents whose binary digit i-1 is set.
    Stored without trailing zeros.
    """

    def __new__(cls, entries: Iterable[int] = ()):
        entries = [int(entry) for entry in entries]
        if any(entry < 0 for entry in entries):
            raise ValueError("Weight entries must be non-negative: {}".format(entries))
        while entries and entries[-1] == 0:
            entries.pop()
        return super().__new__(cls, entries)

    @property
    def degree(self) -> int:
        return sum(entry << i for i, entry in enumerate(self))

    def padded(self, length: int) -> Tuple[int, ...]:
        return tuple(self) + (0,) * (length - len(self))

    @classmethod
    def parse(cls, text: str) -> WeightVector:
        """
        Parses "2,3", "(2,3)" or "2 3" into a weight vector
        """
        text = text.strip().strip("()")
        if not text:
            return cls(())
        return cls(int(entry) for entry in text.replace(" ", ",").split(",") if entry)

    def __str__(self):
        return "({})".format(",".join(str(entry) for entry in self))

    def __repr__(self):
        return "WeightVector{}".format(str(self))


class Monomial(tuple):
    """
    A monomial t_1^{a_1}...t_h^{a_h} of the polynomial algebra, stored as its exponent tuple.
    Tuple comparison is plain left lexicographic on exponents; the monomial order used for the hit problem is
    order_key(), which compares weight vectors first.
    """

    def __new__(cls, exponents: Iterable[int]):
        exponents = tuple(int(a) for a in exponents)
        if any(a < 0 for a in exponents):
            raise ValueError("Exponents must be non-negative: {}".format(exponents))
        return super().__new__(cls, exponents)

    @classmethod
    def one(cls, h: int) -> Monomial:
        return cls((0,) * h)

    @classmethod
    def variable(cls, j: int, h: int) -> Monomial:
        """
        The monomial t_j (1-indexed) among h variables
        """
        if not 1 <= j <= h:
            raise DimensionError("Variable t_{} does not exist among {} variables".format(j, h))
        return cls(1 if i == j - 1 else 0 for i in range(h))

    @property
    def h(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def exponents(self) -> Tuple[int, ...]:
        return tuple(self)

    def weight_vector(self) -> WeightVector:
        return weight_vector(self)

    def order_key(self) -> tuple:
        return order_key(self)

    def times(self, other: Monomial) -> Monomial:
        if self.h != other.h:
            raise DimensionError("Cannot multiply monomials in {} and {} variables".format(self.h, other.h))
        return Monomial(a + b for a, b in zip(self, other))

    def has_zero_exponent(self) -> bool:
        return 0 in self

    def is_spike(self) -> bool:
        return all((a + 1) & a == 0 for a in self)

    @classmethod
    def parse(cls, text: str) -> Monomial:
        """
        Parses the text form "(3,5,1,9)"
        """
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ValueError("A monomial is written as an exponent tuple, got {}".format(text))
        body = text[1:-1].strip()
        return cls(int(a) for a in body.split(",")) if body else cls(())

    def __str__(self):
        return "({})".format(",".join(str(a) for a in self))

    def __repr__(self):
        return "Monomial{}".format(str(self))


def weight_vector(t: Iterable[int]) -> WeightVector:
    """
    Computes the weight vector of a monomial: entry i counts the exponents with bit i-1 set

    :param t: an exponent tuple
    :return: the weight vector, whose degree sum 2^{i-1} w_i equals deg(t)
    """
    return WeightVector(_weight_entries(tuple(t)))


@lru_cache(maxsize=1 << 18)
def _weight_entries(exponents: Tuple[int, ...]) -> Tuple[int, ...]:
    length = max((a.bit_length() for a in exponents), default=0)
    return tuple(sum((a >> i) & 1 for a in exponents) for i in range(length))


def order_key(t: Tuple[int, ...], length: int = None) -> tuple:
    """
    The sort key of the monomial order: weight vectors compared left lexicographically (zero padded),
    then exponent tuples left lexicographically

    :param t: an exponent tuple
    :param length: the padding length of the weight vector, at least the bit length of deg(t)
    :return: a key comparable among monomials of the same degree and variable count
    """
    if length is None:
        length = sum(t).bit_length()
    entries = _weight_entries(tuple(t))
    return entries + (0,) * (length - len(entries)), tuple(t)


def compare(t: Monomial, other: Monomial) -> int:
    """
    Compares two monomials of equal degree and variable count in the monomial order

    :return: -1, 0 or 1
    """
    if len(t) != len(other) or sum(t) != sum(other):
        raise OrderUndefinedError("The monomial order compares monomials of equal degree and variable count, "
                                  "got {} and {}".format(t, other))
    left, right = order_key(t), order_key(other)
    return (left > right) - (left < right)


def monomials(h: int, n: int) -> Iterator[Monomial]:
    """
    Enumerates all monomials of degree n in h variables, in left lexicographic order of exponents
    """
    if h == 0:
        if n == 0:
            yield Monomial(())
        return
    for first in range(n + 1):
        for rest in _compositions(h - 1, n - first):
            yield Monomial((first,) + rest)


def _compositions(parts: int, total: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(parts - 1, total - first):
            yield (first,) + rest


def sorted_monomials(h: int, n: int) -> List[Monomial]:
    """
    All monomials of degree n in h variables in ascending monomial order
    """
    length = n.bit_length()
    return sorted(monomials(h, n), key=lambda t: order_key(t, length))


def count_monomials(h: int, n: int) -> int:
    """
    The number of monomials of degree n in h variables, C(n+h-1, h-1)
    """
    if h == 0:
        return 1 if n == 0 else 0
    return comb(n + h - 1, h - 1)

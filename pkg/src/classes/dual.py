from __future__ import annotations

import logging
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Tuple

from classes import config, utils
from classes.errors import DimensionError
from classes.gf2 import Echelon, iter_bits
from classes.hit_space import spanning_squares
from classes.monomial import Monomial, count_monomials, order_key, sorted_monomials
from classes.polynomial import Polynomial
from classes.steenrod import binomial

logger = logging.getLogger(__name__)


class DualMonomial(tuple):
    """
    The divided-power monomial x_1^{(a_1)}...x_h^{(a_h)}, dual to t_1^{a_1}...t_h^{a_h}
    """

    def __new__(cls, exponents: Iterable[int]):
        exponents = tuple(int(a) for a in exponents)
        if any(a < 0 for a in exponents):
            raise ValueError("Exponents must be non-negative: {}".format(exponents))
        return super().__new__(cls, exponents)

    @property
    def h(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def __str__(self):
        return "d({})".format(",".join(str(a) for a in self))

    def __repr__(self):
        return "DualMonomial{}".format(str(self)[1:])

    @classmethod
    def parse(cls, text: str) -> DualMonomial:
        text = text.strip()
        if text.startswith("d"):
            text = text[1:]
        return cls(Monomial.parse(text))


class DualElement:
    """
    A GF(2) sum of divided-power monomials in h variables; repeated terms cancel in pairs

    :param terms: dual monomials or exponent tuples, repetitions allowed
    :param h: the number of variables, required for zero
    """
    __slots__ = ("terms", "h")

    def __init__(self, terms: Iterable = (), h: Optional[int] = None):
        accumulated = set()
        for term in terms:
            accumulated ^= {DualMonomial(term)}
        counts = {len(term) for term in accumulated}
        if len(counts) > 1:
            raise DimensionError("Dual terms over different variable counts: {}".format(counts))
        if h is None:
            if not counts:
                raise DimensionError("The variable count of a zero dual element must be given")
            h = counts.pop()
        elif counts and counts.pop() != h:
            raise DimensionError("Dual terms do not have {} variables".format(h))
        self.terms: FrozenSet[DualMonomial] = frozenset(accumulated)
        self.h = h

    @classmethod
    def zero(cls, h: int) -> DualElement:
        return cls((), h)

    @property
    def degree(self) -> Optional[int]:
        degrees = {term.degree for term in self.terms}
        if len(degrees) > 1:
            raise DimensionError("Dual element {} is not homogeneous".format(self))
        return degrees.pop() if degrees else None

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[DualMonomial]:
        return sorted(self.terms, key=lambda a: order_key(a), reverse=True)

    def __add__(self, other: DualElement) -> DualElement:
        if self.h != other.h:
            raise DimensionError("Dual elements over {} and {} variables".format(self.h, other.h))
        return DualElement(self.terms ^ other.terms, self.h)

    __xor__ = __add__

    def __eq__(self, other) -> bool:
        return isinstance(other, DualElement) and self.h == other.h and self.terms == other.terms

    def __hash__(self):
        return hash((self.h, self.terms))

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.sorted_terms())

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(str(term) for term in self.sorted_terms())

    def __repr__(self):
        return "DualElement({})".format(str(self))

    def to_json(self) -> dict:
        return {"h": self.h, "n": self.degree, "terms": [list(term) for term in self.sorted_terms()]}

    @classmethod
    def from_json(cls, payload: dict) -> DualElement:
        """
        Reads {"h", "n", "terms"}; terms listed twice cancel, and the degree is checked when given
        """
        element = cls((tuple(term) for term in payload["terms"]), payload["h"])
        if "n" in payload and payload["n"] is not None and not element.is_zero() and element.degree != payload["n"]:
            raise DimensionError("Element file says degree {}, terms have degree {}".format(
                payload["n"], element.degree))
        return element


def _dual_distributions(exponents: Tuple[int, ...], k: int) -> Iterator[Tuple[int, ...]]:
    # Tuples (k_1..k_h) summing to k with C(a_j - k_j, k_j) odd, which forces 2 k_j <= a_j
    capacity = [0] * (len(exponents) + 1)
    for j in range(len(exponents) - 1, -1, -1):
        capacity[j] = capacity[j + 1] + exponents[j] // 2

    def extend(j, left):
        if j == len(exponents):
            if left == 0:
                yield ()
            return
        a = exponents[j]
        for part in range(min(left, a // 2) + 1):
            if left - part <= capacity[j + 1] and binomial(a - part, part):
                for rest in extend(j + 1, left - part):
                    yield (part,) + rest

    if k <= capacity[0]:
        yield from extend(0, k)


@lru_cache(maxsize=1 << 17)
def dual_sq_monomial(k: int, a: Tuple[int, ...]) -> FrozenSet[DualMonomial]:
    """
    The right action (x^{(a)})Sq^k by the Cartan formula from (x^{(a)})Sq^k = C(a-k, k) x^{(a-k)}

    :param k: the degree of the square
    :param a: the exponents of a divided-power monomial
    :return: the set of dual monomials of the image
    """
    if k == 0:
        return frozenset((DualMonomial(a),))
    return frozenset(DualMonomial(x - y for x, y in zip(a, split)) for split in _dual_distributions(tuple(a), k))


def dual_sq(k: int, xi: DualElement) -> DualElement:
    """
    The right action of Sq^k on the divided-power algebra; lowers the degree by k

    :param k: non-negative integer
    :param xi: a dual element
    :return: (xi)Sq^k
    """
    if k < 0:
        raise ValueError("Steenrod squares have non-negative degree, got {}".format(k))
    result = set()
    for term in xi.terms:
        result ^= dual_sq_monomial(k, tuple(term))
    return DualElement(result, xi.h)


def is_annihilated(xi: DualElement) -> bool:
    """
    Checks (xi)Sq^{2^i} = 0 for every 2^{i+1} <= n. Each factor needs 2k_j <= a_j, so squares above half the
    degree vanish identically, and the Sq^{2^i} generate the algebra.
    """
    if xi.is_zero():
        return True
    return all(dual_sq(k, xi).is_zero() for k in spanning_squares(xi.degree))


def pairing(f: Polynomial, xi: DualElement) -> int:
    """
    The Kronecker pairing <f, xi>: the number of shared exponent tuples mod 2

    :param f: a polynomial
    :param xi: a dual element over the same variables
    :return: 0 or 1
    """
    if f.h != xi.h:
        raise DimensionError("Pairing a polynomial in {} variables with a dual element in {}".format(f.h, xi.h))
    if not f.is_zero() and not xi.is_zero() and f.degree != xi.degree:
        raise DimensionError("Pairing degree {} with degree {}".format(f.degree, xi.degree))
    return sum(1 for term in xi.terms if tuple(term) in f.terms) & 1


def dual_kameko_up(xi: DualElement) -> DualElement:
    """
    The transpose of Kameko's map: x^{(a)} -> x^{(2a+1)} termwise
    """
    return DualElement((tuple(2 * a + 1 for a in term) for term in xi.terms), xi.h)


class AnnihilatedSpace:
    """
    The annihilated subspace of [P^{(x)h}_n]^*, as kernel vectors over the degree-n monomials in ascending monomial
    order. Kernel vectors are indexed by their non-pivot column, so they form the basis dual to the admissibles.

    :param h: the number of variables
    :param n: the degree
    :param columns: the degree-n monomials in ascending monomial order
    :param kernel: packed kernel vectors over columns
    """

    def __init__(self, h: int, n: int, columns: List[Monomial], kernel: List[int]):
        self.h = h
        self.n = n
        self.columns = columns
        self.index = {tuple(t): i for i, t in enumerate(columns)}
        self.kernel = kernel

    @property
    def dim(self) -> int:
        return len(self.kernel)

    def element(self, bits: int) -> DualElement:
        return DualElement((self.columns[i] for i in iter_bits(bits)), self.h)

    def vector(self, xi: DualElement) -> int:
        bits = 0
        for term in xi.terms:
            bits ^= 1 << self.index[tuple(term)]
        return bits

    @property
    def basis(self) -> List[DualElement]:
        return [self.element(bits) for bits in self.kernel]


def annihilated_space(h: int, n: int, capacity: int = config.CAPACITY_THRESHOLD, force: bool = False,
                      verbose: bool = False) -> AnnihilatedSpace:
    """
    Solves (xi)Sq^{2^i} = 0 for all 2^{i+1} <= n on the divided-power monomials of degree n

    :return: an AnnihilatedSpace
    """
    utils.check_capacity(count_monomials(h, n), capacity, force, what="annihilated space ({}, {})".format(h, n))
    columns = sorted_monomials(h, n)
    squares = spanning_squares(n)
    # One constraint row per (square, target monomial), filled column by column from the right action
    rows = {}
    with utils.progress_bar("Annihilated ({}, {}):".format(h, n), len(columns), enabled=verbose) as bar:
        for i, t in enumerate(columns):
            for k in squares:
                for image in dual_sq_monomial(k, tuple(t)):
                    key = (k, tuple(image))
                    rows[key] = rows.get(key, 0) ^ (1 << i)
            bar.next()
    echelon = Echelon(len(columns), priority="max", reduced=False)
    for key in sorted(rows):
        echelon.insert_bits(rows[key])
    kernel = echelon.kernel_bits()
    logger.debug("Annihilated space (%d, %d): %d constraints, dim %d", h, n, len(rows), len(kernel))
    return AnnihilatedSpace(h, n, columns, kernel)


def annihilated_basis(h: int, n: int, **kwargs) -> List[DualElement]:
    """
    A basis of the annihilated subspace of [P^{(x)h}_n]^*, dual to the admissible monomials

    :return: list of DualElement
    """
    return annihilated_space(h, n, **kwargs).basis

from __future__ import annotations

from typing import Iterable, List, Optional

from classes.errors import DimensionError
from classes.monomial import Monomial, order_key


class Polynomial:
    """
    A GF(2) polynomial in h variables, stored as the set of its monomials. Repeated monomials cancel in pairs
    on construction, so a polynomial can be built from any list of terms.

    :param terms: monomials (or exponent tuples), repetitions allowed
    :param h: the number of variables, required for the zero polynomial
    """
    __slots__ = ("terms", "h")

    def __init__(self, terms: Iterable = (), h: Optional[int] = None):
        accumulated = set()
        for term in terms:
            accumulated ^= {Monomial(term)}
        variable_counts = {len(term) for term in accumulated}
        if len(variable_counts) > 1:
            raise DimensionError("Polynomial terms over different variable counts: {}".format(variable_counts))
        if h is None:
            if not variable_counts:
                raise DimensionError("The variable count of a zero polynomial must be given")
            h = variable_counts.pop()
        elif variable_counts and variable_counts.pop() != h:
            raise DimensionError("Terms do not have {} variables".format(h))
        self.terms = frozenset(accumulated)
        self.h = h

    @classmethod
    def zero(cls, h: int) -> Polynomial:
        return cls((), h)

    @classmethod
    def from_monomial(cls, t) -> Polynomial:
        return cls((t,), len(t))

    @classmethod
    def variable(cls, j: int, h: int) -> Polynomial:
        return cls.from_monomial(Monomial.variable(j, h))

    @property
    def degree(self) -> Optional[int]:
        """
        The common degree of a homogeneous polynomial; None for zero

        :return: the degree, or None when zero
        """
        degrees = {term.degree for term in self.terms}
        if len(degrees) > 1:
            raise DimensionError("Polynomial {} is not homogeneous".format(self))
        return degrees.pop() if degrees else None

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({term.degree for term in self.terms}) <= 1

    def sorted_terms(self, descending: bool = True) -> List[Monomial]:
        length = max((term.degree for term in self.terms), default=0).bit_length()
        return sorted(self.terms, key=lambda t: (t.degree, order_key(t, length)), reverse=descending)

    def _check(self, other: Polynomial):
        if self.h != other.h:
            raise DimensionError("Polynomials over {} and {} variables".format(self.h, other.h))

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        return Polynomial(self.terms ^ other.terms, self.h)

    __xor__ = __add__
    __sub__ = __add__

    def __mul__(self, other: Polynomial) -> Polynomial:
        self._check(other)
        product = set()
        for left in self.terms:
            for right in other.terms:
                product ^= {left.times(right)}
        return Polynomial(product, self.h)

    def __pow__(self, exponent: int) -> Polynomial:
        result = Polynomial.from_monomial(Monomial.one(self.h))
        for _ in range(exponent):
            result = result * self
        return result

    def __iter__(self):
        return iter(self.sorted_terms())

    def __len__(self):
        return len(self.terms)

    def __contains__(self, t) -> bool:
        return Monomial(t) in self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.h == other.h and self.terms == other.terms

    def __hash__(self):
        return hash((self.h, self.terms))

    def __str__(self):
        if not self.terms:
            return "0"
        return "+".join(str(term) for term in self.sorted_terms())

    def __repr__(self):
        return "Polynomial({})".format(str(self))

    @classmethod
    def parse(cls, text: str, h: Optional[int] = None) -> Polynomial:
        """
        Parses the text form "(3,5,1,9)+(1,1,0,2)"; "0" is the zero polynomial and needs h
        """
        text = text.strip()
        if text == "0":
            return cls.zero(h)
        return cls((Monomial.parse(part) for part in text.split("+")), h)

    def to_json(self) -> dict:
        return {"h": self.h, "terms": [list(term) for term in self.sorted_terms()]}

    @classmethod
    def from_json(cls, payload: dict) -> Polynomial:
        return cls((tuple(term) for term in payload["terms"]), payload["h"])

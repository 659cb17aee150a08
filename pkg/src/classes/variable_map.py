from __future__ import annotations

from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

from classes.errors import DimensionError, VariableIndexError
from classes.monomial import Monomial
from classes.polynomial import Polynomial


class VariableMap:
    """
    A substitution t_j -> L_j sending each variable of P^{(x)h} to a linear form in h' variables. It extends to an
    algebra homomorphism that commutes with every Steenrod square.

    :param forms: for each source variable, the 1-indexed target variables whose sum is its image
    :param target_h: the number of target variables
    :param name: a label used in logs and JSON
    """

    def __init__(self, forms: Iterable[Iterable[int]], target_h: int, name: str = "map"):
        self.forms: Tuple[Tuple[int, ...], ...] = tuple(tuple(sorted(set(form))) for form in forms)
        self.target_h = target_h
        self.name = name
        for form in self.forms:
            for j in form:
                if not 1 <= j <= target_h:
                    raise VariableIndexError("Target variable t_{} outside 1..{}".format(j, target_h))

    @property
    def source_h(self) -> int:
        return len(self.forms)

    @property
    def images(self) -> Tuple[Polynomial, ...]:
        return tuple(Polynomial((Monomial.variable(j, self.target_h) for j in form), self.target_h)
                     for form in self.forms)

    @classmethod
    def identity(cls, h: int) -> VariableMap:
        return cls(((j,) for j in range(1, h + 1)), h, name="id")

    def compose(self, inner: VariableMap) -> VariableMap:
        """
        The substitution self after inner (first apply inner, then self)
        """
        if inner.target_h != self.source_h:
            raise DimensionError("Cannot compose {} after {}".format(self.name, inner.name))
        forms = []
        for form in inner.forms:
            image = set()
            for j in form:
                image ^= set(self.forms[j - 1])
            forms.append(tuple(image))
        return VariableMap(forms, self.target_h, name="{}*{}".format(self.name, inner.name))

    def apply_monomial(self, t) -> FrozenSet[Monomial]:
        return _apply(self.forms, self.target_h, tuple(t))

    def __call__(self, f: Polynomial) -> Polynomial:
        return substitute(self, f)

    def __repr__(self):
        return "VariableMap({}, {})".format(self.name, self.forms)


@lru_cache(maxsize=1 << 16)
def _power_of_form(form: Tuple[int, ...], a: int, target_h: int) -> Tuple[Tuple[int, ...], ...]:
    # (t_{i_1} + ... + t_{i_m})^a over GF(2): a multinomial coefficient is odd exactly when the parts split
    # the binary digits of a, so each digit of a goes to one variable
    terms = [(0,) * target_h]
    bit = 0
    while a >> bit:
        if (a >> bit) & 1:
            expanded = []
            for term in terms:
                for j in form:
                    grown = list(term)
                    grown[j - 1] += 1 << bit
                    expanded.append(tuple(grown))
            terms = expanded
        bit += 1
    return tuple(terms)


@lru_cache(maxsize=1 << 17)
def _apply(forms: Tuple[Tuple[int, ...], ...], target_h: int, t: Tuple[int, ...]) -> FrozenSet[Monomial]:
    product: Dict[Tuple[int, ...], int] = {(0,) * target_h: 1}
    for form, a in zip(forms, t):
        if a == 0:
            continue
        if not form:
            return frozenset()
        factor = _power_of_form(form, a, target_h)
        grown: Dict[Tuple[int, ...], int] = {}
        for left in product:
            for right in factor:
                key = tuple(x + y for x, y in zip(left, right))
                grown[key] = grown.get(key, 0) ^ 1
        product = {key: 1 for key, odd in grown.items() if odd}
    return frozenset(Monomial(key) for key in product)


def substitute(m: VariableMap, f: Polynomial) -> Polynomial:
    """
    Applies a substitution to a polynomial

    :param m: the variable map
    :param f: a polynomial in m.source_h variables
    :return: the image polynomial in m.target_h variables
    """
    if f.h != m.source_h:
        raise DimensionError("{} acts on {} variables, the polynomial has {}".format(m.name, m.source_h, f.h))
    result = set()
    for t in f.terms:
        result ^= m.apply_monomial(t)
    return Polynomial(result, m.target_h)


def theta(j: int, h: int) -> VariableMap:
    """
    The generators of GL_h: for j < h the transposition of t_j and t_{j+1}; for j = h the map t_1 -> t_1 + t_2

    :param j: 1 <= j <= h
    :param h: the number of variables
    """
    if not 1 <= j <= h:
        raise VariableIndexError("theta_{} is defined for 1 <= j <= {}".format(j, h))
    forms: List[Tuple[int, ...]] = [(i,) for i in range(1, h + 1)]
    if j < h:
        forms[j - 1], forms[j] = (j + 1,), (j,)
    elif h >= 2:
        forms[0] = (1, 2)
    return VariableMap(forms, h, name="theta_{}".format(j))


def q_map(l: int, h: int) -> VariableMap:
    """
    The embedding of P^{(x)(h-1)} into P^{(x)h} that skips the variable t_l

    :param l: 1 <= l <= h
    :param h: the number of target variables
    """
    if not 1 <= l <= h:
        raise VariableIndexError("q_{} is defined for 1 <= l <= {}".format(l, h))
    forms = [(j,) if j < l else (j + 1,) for j in range(1, h)]
    return VariableMap(forms, h, name="q_{}".format(l))


def phi_uv(u: int, v: int, h: int) -> VariableMap:
    """
    The map P^{(x)h} -> P^{(x)(h-1)} sending t_u to t_{v-1}, fixing t_j for j < u and sending t_j to t_{j-1} for j > u

    :param u: 1 <= u < v
    :param v: u < v <= h
    :param h: the number of source variables
    """
    if not 1 <= u < v <= h:
        raise VariableIndexError("phi_({},{}) needs 1 <= u < v <= {}".format(u, v, h))
    forms = []
    for j in range(1, h + 1):
        if j < u:
            forms.append((j,))
        elif j == u:
            forms.append((v - 1,))
        else:
            forms.append((j - 1,))
    return VariableMap(forms, h - 1, name="phi_({},{})".format(u, v))


def generators(h: int, group: str) -> List[VariableMap]:
    """
    The generating substitutions of S_h (theta_1..theta_{h-1}) or GL_h (theta_1..theta_h)

    :param group: "S" or "GL", case insensitive
    """
    group = group.upper()
    if group not in ("S", "GL"):
        raise ValueError("Unknown group {}; expected S or GL".format(group))
    last = h - 1 if group == "S" else h
    return [theta(j, h) for j in range(1, last + 1)]

from __future__ import annotations

from functools import lru_cache
from typing import FrozenSet, Iterator, List, Tuple

from classes.errors import NoSpikeError
from classes.monomial import Monomial, monomials
from classes.polynomial import Polynomial


def binomial(a: int, b: int) -> int:
    """
    The binomial coefficient C(a, b) mod 2 by Lucas' theorem; zero when a < 0, b < 0 or b > a

    :return: 0 or 1
    """
    if a < 0 or b < 0 or b > a:
        return 0
    return 1 if a & b == b else 0


def alpha(n: int) -> int:
    """
    The number of ones in the binary expansion of n
    """
    return bin(n).count("1")


@lru_cache(maxsize=None)
def _mu_table(n: int) -> Tuple[int, ...]:
    parts = [(1 << u) - 1 for u in range(1, n.bit_length() + 1)]
    table = [0] * (n + 1)
    for m in range(1, n + 1):
        table[m] = 1 + min(table[m - part] for part in parts if part <= m)
    return tuple(table)


def mu(n: int) -> int:
    """
    The least number of parts of the form 2^u - 1 (u >= 1) summing to n

    :param n: a non-negative degree
    :return: mu(n), with mu(0) = 0
    """
    if n < 0:
        raise ValueError("mu is defined on non-negative integers, got {}".format(n))
    return _mu_table(n)[n]


def spike_exponents(n: int) -> Tuple[int, ...]:
    """
    The exponents of the minimal spike of degree n, non-increasing, with mu(n) parts.
    Each part is the largest 2^u - 1 that still leaves a remainder writable with the remaining parts.
    """
    parts_left = mu(n)
    remaining = n
    exponents = []
    while parts_left:
        u = remaining.bit_length()
        while (1 << u) - 1 > remaining or mu(remaining - (1 << u) + 1) > parts_left - 1:
            u -= 1
        exponents.append((1 << u) - 1)
        remaining -= (1 << u) - 1
        parts_left -= 1
    return tuple(exponents)


def minimal_spike(h: int, n: int) -> Monomial:
    """
    The minimal spike of degree n in h variables, t_1^{2^{b_1}-1}...t_r^{2^{b_r}-1} with r = mu(n)

    :param h: the number of variables
    :param n: the degree
    :return: the minimal spike
    """
    exponents = spike_exponents(n)
    if len(exponents) > h:
        raise NoSpikeError("mu({}) = {} exceeds the {} available variables".format(n, len(exponents), h))
    return Monomial(exponents + (0,) * (h - len(exponents)))


def is_spike(t: Monomial) -> bool:
    return Monomial(t).is_spike()


def spikes(h: int, n: int) -> List[Monomial]:
    """
    All spikes (every exponent of the form 2^b - 1) of degree n in h variables
    """
    return [t for t in monomials(h, n) if t.is_spike()]


def _distributions(exponents: Tuple[int, ...], k: int) -> Iterator[Tuple[int, ...]]:
    # Tuples (k_1..k_h) summing to k with each k_j a binary submask of a_j, so that C(a_j, k_j) is odd
    capacity = [0] * (len(exponents) + 1)
    for j in range(len(exponents) - 1, -1, -1):
        capacity[j] = capacity[j + 1] + exponents[j]

    def extend(j, left):
        if j == len(exponents):
            if left == 0:
                yield ()
            return
        a = exponents[j]
        sub = a
        while True:
            if sub <= left and left - sub <= capacity[j + 1]:
                for rest in extend(j + 1, left - sub):
                    yield (sub,) + rest
            if sub == 0:
                break
            sub = (sub - 1) & a

    if k <= capacity[0]:
        yield from extend(0, k)


@lru_cache(maxsize=1 << 17)
def sq_monomial(k: int, t: Tuple[int, ...]) -> FrozenSet[Monomial]:
    """
    Sq^k of a monomial by the closed Cartan form: the sum over k_1 + ... + k_h = k of the products of
    C(a_j, k_j) t_j^{a_j + k_j}. Distinct distributions give distinct monomials, so nothing cancels.

    :param k: the degree of the square
    :param t: an exponent tuple
    :return: the set of monomials of Sq^k(t)
    """
    if k == 0:
        return frozenset((Monomial(t),))
    return frozenset(Monomial(a + b for a, b in zip(t, split)) for split in _distributions(tuple(t), k))


def sq(k: int, f: Polynomial) -> Polynomial:
    """
    The left action of the Steenrod square Sq^k on a polynomial

    :param k: a non-negative integer
    :param f: a polynomial
    :return: Sq^k(f)
    """
    if k < 0:
        raise ValueError("Steenrod squares have non-negative degree, got {}".format(k))
    result = set()
    for t in f.terms:
        result ^= sq_monomial(k, tuple(t))
    return Polynomial(result, f.h)


def adem_expansion(i: int, j: int) -> List[Tuple[int, int, int]]:
    """
    The right-hand side of the Adem relation Sq^i Sq^j = sum_t C(j-t-1, i-2t) Sq^{i+j-t} Sq^t for 0 < i < 2j

    :return: the pairs (i+j-t, t) with odd coefficient, as (first, second, t)
    """
    if not 0 < i < 2 * j:
        raise ValueError("The Adem relation needs 0 < i < 2j, got i={}, j={}".format(i, j))
    return [(i + j - t, t, t) for t in range(i // 2 + 1) if binomial(j - t - 1, i - 2 * t)]

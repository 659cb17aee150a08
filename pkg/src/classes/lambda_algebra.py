from __future__ import annotations

from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from classes.errors import DimensionError
from classes.steenrod import binomial


class LambdaWord(tuple):
    """
    A word lambda_{j_1}...lambda_{j_s} of the lambda algebra, stored as its index tuple.
    Admissible when each index is at most twice its predecessor.
    """

    def __new__(cls, indices: Iterable[int]):
        indices = tuple(int(j) for j in indices)
        if any(j < 0 for j in indices):
            raise ValueError("Lambda indices are non-negative: {}".format(indices))
        return super().__new__(cls, indices)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    def is_admissible(self) -> bool:
        return all(self[m + 1] <= 2 * self[m] for m in range(len(self) - 1))

    def __str__(self):
        if not self:
            return "1"
        return " ".join("l{}".format(j) for j in self)

    def __repr__(self):
        return "LambdaWord({})".format(str(self))

    @classmethod
    def parse(cls, text: str) -> LambdaWord:
        """
        Parses "l4 l6 l5 l3"; powers may be written "l3^2"
        """
        indices = []
        for token in text.split():
            token = token.strip()
            if token == "1":
                continue
            if not token.startswith("l"):
                raise ValueError("Lambda words are written 'l4 l6 l5 l3', got {}".format(text))
            base, _, power = token[1:].partition("^")
            indices.extend([int(base)] * (int(power) if power else 1))
        return cls(indices)


class LambdaElement:
    """
    A GF(2) sum of lambda words; repeated words cancel in pairs. All words share one bidegree (s, t).

    :param words: lambda words, repetitions allowed
    """
    __slots__ = ("words",)

    def __init__(self, words: Iterable = ()):
        accumulated = set()
        for word in words:
            accumulated ^= {LambdaWord(word)}
        bidegrees = {(len(word), sum(word)) for word in accumulated}
        if len(bidegrees) > 1:
            raise DimensionError("Lambda element mixes bidegrees {}".format(sorted(bidegrees)))
        self.words: FrozenSet[LambdaWord] = frozenset(accumulated)

    @classmethod
    def zero(cls) -> LambdaElement:
        return cls(())

    @classmethod
    def from_word(cls, word) -> LambdaElement:
        return cls((word,))

    @property
    def bidegree(self) -> Tuple[int, int]:
        for word in self.words:
            return len(word), sum(word)
        raise ValueError("The zero element has no bidegree")

    def is_zero(self) -> bool:
        return not self.words

    def is_admissible(self) -> bool:
        return all(word.is_admissible() for word in self.words)

    def sorted_words(self) -> List[LambdaWord]:
        return sorted(self.words, reverse=True)

    def __add__(self, other: LambdaElement) -> LambdaElement:
        return LambdaElement(self.words ^ other.words)

    __xor__ = __add__

    def __mul__(self, other: LambdaElement) -> LambdaElement:
        product = set()
        for left in self.words:
            for right in other.words:
                product ^= {LambdaWord(left + right)}
        return LambdaElement(product)

    def __eq__(self, other) -> bool:
        return isinstance(other, LambdaElement) and self.words == other.words

    def __hash__(self):
        return hash(self.words)

    def __iter__(self):
        return iter(self.sorted_words())

    def __len__(self):
        return len(self.words)

    def __str__(self):
        if not self.words:
            return "0"
        return " + ".join(str(word) for word in self.sorted_words())

    def __repr__(self):
        return "LambdaElement({})".format(str(self))

    @classmethod
    def parse(cls, text: str) -> LambdaElement:
        """
        Parses "l4 l6 l5 l3 + l5 l7 l3^2"; "0" is the zero element
        """
        text = text.strip()
        if text == "0":
            return cls.zero()
        return cls(LambdaWord.parse(part) for part in text.split("+"))


def adem_pair(a: int, b: int) -> List[Tuple[int, int]]:
    """
    Rewrites an inadmissible pair lambda_a lambda_b (b > 2a) by the relation
    lambda_i lambda_{2i+1+n} = sum_{j>=0} C(n-j-1, j) lambda_{i+n-j} lambda_{2i+1+j}

    :return: the admissible pairs with odd coefficient
    """
    i, n = a, b - 2 * a - 1
    return [(i + n - j, 2 * i + 1 + j) for j in range(n // 2 + 1) if binomial(n - j - 1, j)]


@lru_cache(maxsize=1 << 18)
def _left_multiply(a: int, word: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    # Normal form of lambda_a times an admissible word. Rewriting the front pair raises the first index, which is
    # bounded by the degree, so the recursion terminates.
    if not word or word[0] <= 2 * a:
        return frozenset(((a,) + word,))
    result = set()
    for first, second in adem_pair(a, word[0]):
        for tail in _left_multiply(second, word[1:]):
            result ^= _left_multiply(first, tail)
    return frozenset(result)


@lru_cache(maxsize=1 << 18)
def normalize_word(word: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    """
    The admissible normal form of a single word, folding from the right
    """
    if len(word) <= 1:
        return frozenset((tuple(word),))
    current = {(word[-1],)}
    for a in reversed(word[:-1]):
        grown = set()
        for tail in current:
            grown ^= _left_multiply(a, tail)
        current = grown
    return frozenset(current)


def adem_normalize(e: LambdaElement) -> LambdaElement:
    """
    Rewrites an element into the admissible basis

    :param e: any lambda element
    :return: the equal element supported on admissible words
    """
    result = set()
    for word in e.words:
        result ^= normalize_word(tuple(word))
    return LambdaElement(result)


def product(*factors: LambdaElement) -> LambdaElement:
    """
    The normalized product of lambda elements
    """
    result = LambdaElement.from_word(())
    for factor in factors:
        result = result * factor
    return adem_normalize(result)


@lru_cache(maxsize=None)
def differential_generator(k: int) -> Tuple[Tuple[int, int], ...]:
    """
    delta(lambda_{n-1}) = sum_{j>=1} C(n-j-1, j) lambda_{n-j-1} lambda_{j-1}, here with k = n - 1

    :return: the admissible pairs of delta(lambda_k)
    """
    n = k + 1
    return tuple((n - j - 1, j - 1) for j in range(1, n // 2 + 1) if binomial(n - j - 1, j))


@lru_cache(maxsize=1 << 18)
def differential_word(word: Tuple[int, ...]) -> FrozenSet[Tuple[int, ...]]:
    """
    The normalized differential of a word, extended from the generators as a derivation
    """
    result = set()
    for m, k in enumerate(word):
        for pair in differential_generator(k):
            result ^= normalize_word(word[:m] + pair + word[m + 1:])
    return frozenset(result)


def differential(e: LambdaElement) -> LambdaElement:
    """
    The differential of the lambda algebra, of bidegree (+1, -1)

    :param e: a lambda element
    :return: delta(e), normalized
    """
    result = set()
    for word in adem_normalize(e).words:
        result ^= differential_word(tuple(word))
    return LambdaElement(result)


def sq0_lambda(w: LambdaWord) -> LambdaWord:
    """
    The algebraic Sq^0: lambda_{j_1}...lambda_{j_s} -> lambda_{2j_1+1}...lambda_{2j_s+1}
    """
    return LambdaWord(2 * j + 1 for j in w)


def sq0_element(e: LambdaElement) -> LambdaElement:
    return LambdaElement(sq0_lambda(word) for word in e.words)


def _admissible_words(s: int, t: int, previous: int) -> Iterator[Tuple[int, ...]]:
    if s == 0:
        if t == 0:
            yield ()
        return
    upper = t if previous is None else min(t, 2 * previous)
    for j in range(upper, -1, -1):
        for rest in _admissible_words(s - 1, t - j, j):
            yield (j,) + rest


@lru_cache(maxsize=256)
def _basis(s: int, t: int) -> Tuple[LambdaWord, ...]:
    return tuple(sorted(LambdaWord(word) for word in _admissible_words(s, t, None)))


def lambda_basis(s: int, t: int) -> List[LambdaWord]:
    """
    The admissible words of length s and degree t, in ascending lexicographic order

    :param s: the length
    :param t: the internal degree
    :return: list of LambdaWord
    """
    if s < 0 or t < 0:
        return []
    return list(_basis(s, t))


def lambda_index(s: int, t: int) -> Dict[LambdaWord, int]:
    return {word: i for i, word in enumerate(_basis(s, t))}

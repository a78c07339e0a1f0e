"""
The Weyl group as (signed) permutations in one-line notation.

Type A_n acts on e_1 .. e_(n+1) by permutations. Types B_n and C_n act on
e_1 .. e_n by signed permutations, type D_n by signed permutations with an
even number of sign changes. An element ``w`` is stored as the tuple
``(w(1), ..., w(m))`` where a negative entry ``-p`` means ``e_k -> -e_p``.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Tuple

from .constants import Family
from .datum import CartanDatum
from .words import Word


@dataclass(frozen=True)
class WeylElement:
    datum: CartanDatum
    one_line: Tuple[int, ...]

    @classmethod
    def identity(cls, datum: CartanDatum) -> "WeylElement":
        size = datum.rank + 1 if datum.family is Family.A else datum.rank
        return cls(datum, tuple(range(1, size + 1)))

    @property
    def is_identity(self) -> bool:
        return self.one_line == tuple(range(1, len(self.one_line) + 1))

    def length(self) -> int:
        """
        Number of positive roots sent to negative roots.
        """
        return sum(1 for root in positive_roots(self.datum) if not self._image_positive(root))

    def _image_positive(self, root: Tuple[Tuple[int, int], ...]) -> bool:
        # a root is positive when its lowest-index coefficient is positive
        image = []
        for coefficient, k in root:
            value = self.one_line[k - 1]
            sign = 1 if value > 0 else -1
            image.append((abs(value), coefficient * sign))
        return min(image)[1] > 0


def positive_roots(datum: CartanDatum) -> Iterator[Tuple[Tuple[int, int], ...]]:
    """
    Positive roots as ((coefficient, index), ...) over the e_k basis.

    Long and short roots of the same direction are not told apart; only the
    sign pattern matters for lengths.
    """
    family, n = datum.family, datum.rank
    size = n + 1 if family is Family.A else n
    for a, b in combinations(range(1, size + 1), 2):
        yield ((1, a), (-1, b))
        if family is not Family.A:
            yield ((1, a), (1, b))
    if family in (Family.B, Family.C):
        for a in range(1, n + 1):
            yield ((1, a),)


def apply_generator(w: WeylElement, i: int) -> WeylElement:
    """
    Right multiplication ``w * s_i``.
    """
    datum = w.datum
    datum.check_letter(i)
    values = list(w.one_line)
    n = datum.rank

    if datum.family is Family.A or i < n:
        values[i - 1], values[i] = values[i], values[i - 1]
    elif datum.family in (Family.B, Family.C):
        values[n - 1] = -values[n - 1]
    else:
        values[n - 2], values[n - 1] = -values[n - 1], -values[n - 2]

    return WeylElement(datum, tuple(values))


def word_to_element(word: Word) -> WeylElement:
    return product(word.datum, word.letters)


def product(datum: CartanDatum, letters: Iterable[int]) -> WeylElement:
    element = WeylElement.identity(datum)
    for letter in letters:
        element = apply_generator(element, letter)
    return element


def is_reduced(word: Word) -> bool:
    return word_to_element(word).length() == len(word)

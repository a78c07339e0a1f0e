from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Tuple, Union

from cellcrystals.utils.exceptions import WordError

from .constants import Family
from .datum import CartanDatum, cartan_matrix


@dataclass(frozen=True)
class Word:
    letters: Tuple[int, ...]
    datum: CartanDatum

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(letter) for letter in self.letters))
        bad = [letter for letter in self.letters if letter not in self.datum.letters]
        if bad:
            raise WordError(
                f"Letters {bad} are not nodes of {self.datum.label}"
            )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index):
        return self.letters[index]

    def __str__(self) -> str:
        separator = "" if self.datum.rank < 10 else " "
        return separator.join(str(letter) for letter in self.letters)

    def replace(self, letters: Iterable[int]) -> "Word":
        return Word(tuple(letters), self.datum)

    def positions(self, letter: int) -> Tuple[int, ...]:
        """
        0-based positions carrying ``letter``, left to right.
        """
        return tuple(k for k, value in enumerate(self.letters) if value == letter)


def longest_block(family: Family, n: int) -> Tuple[int, ...]:
    if family is Family.A:
        # 1 (21) (321) ... (n ... 21)
        return tuple(
            letter for top in range(1, n + 1) for letter in range(top, 0, -1)
        )
    repeats = n if family in (Family.B, Family.C) else n - 1
    return tuple(range(1, n + 1)) * repeats


@lru_cache(maxsize=None)
def longest_word(family: Union[Family, str], n: int) -> Word:
    """
    The fixed reduced word of the longest Weyl group element.

    ``1 (21) (321) ... (n...1)`` for A_n, ``(12...n)^n`` for B_n and C_n and
    ``(12...n)^(n-1)`` for D_n.
    """
    datum = cartan_matrix(family, n)
    return Word(longest_block(datum.family, n), datum)


def is_longest_word(word: Word) -> bool:
    datum = word.datum
    return word.letters == longest_word(datum.family, datum.rank).letters

"""
Elements of the cellular crystal B_i = B_(i_1) (x) ... (x) B_(i_l), identified
with Z^l.

The stored coordinates are the z-values of the factors (z_k)_(i_k). The
x-view used by the operator formulas is x_k = -z_k.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from bidict import bidict

from cellcrystals.cartan.datum import CartanDatum, parse_datum
from cellcrystals.cartan.words import Word
from cellcrystals.utils.exceptions import ElementParseError, PositionError


@dataclass(frozen=True)
class WeightVector:
    """
    sum_i c_i alpha_i, stored as the coefficient tuple (c_1, ..., c_n).
    """

    datum: CartanDatum
    coefficients: Tuple[int, ...]

    @classmethod
    def zero(cls, datum: CartanDatum) -> "WeightVector":
        return cls(datum, (0,) * datum.rank)

    @classmethod
    def simple_root(cls, datum: CartanDatum, i: int) -> "WeightVector":
        datum.check_letter(i)
        return cls(datum, tuple(int(j == i) for j in datum.letters))

    def __add__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            self.datum, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        return WeightVector(
            self.datum, tuple(a - b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __str__(self) -> str:
        terms = [
            f"{c}a{i}" for i, c in zip(self.datum.letters, self.coefficients) if c
        ]
        return " + ".join(terms) or "0"

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def pairing(self, i: int) -> int:
        """
        <h_i, wt>.
        """
        return self.datum.pairing(i, self.coefficients)


class DoubleIndexView:
    """
    Maps the double index (j, i), the j-th occurrence of letter i reading left
    to right, to the 1-based position in the word and back.
    """

    def __init__(self, word: Word):
        self.word = word
        self._positions = bidict()
        seen = {}
        for k, letter in enumerate(word.letters, start=1):
            seen[letter] = seen.get(letter, 0) + 1
            self._positions[(seen[letter], letter)] = k

    def __len__(self) -> int:
        return len(self._positions)

    def __contains__(self, index: Tuple[int, int]) -> bool:
        return index in self._positions

    def position(self, j: int, letter: int) -> int:
        try:
            return self._positions[(j, letter)]
        except KeyError:
            raise PositionError(
                f"Word {self.word} has no occurrence {j} of letter {letter}"
            )

    def index(self, k: int) -> Tuple[int, int]:
        try:
            return self._positions.inverse[k]
        except KeyError:
            raise PositionError(f"Position {k} is outside word {self.word}")

    def value(self, z: Sequence[int], j: int, letter: int) -> int:
        """
        z_{j,letter}, with the virtual cell z_{j,0} = 0.
        """
        if letter == 0:
            return 0
        return z[self.position(j, letter) - 1]


@lru_cache(maxsize=256)
def double_index_view(word: Word) -> DoubleIndexView:
    return DoubleIndexView(word)


@dataclass(frozen=True)
class CrystalElement:
    word: Word
    z: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(int(value) for value in self.z))
        if len(self.z) != len(self.word):
            raise ElementParseError(
                f"Got {len(self.z)} coordinates for a word of length {len(self.word)}"
            )

    @classmethod
    def zero(cls, word: Word) -> "CrystalElement":
        return cls(word, (0,) * len(word))

    @classmethod
    def from_x(cls, word: Word, x: Iterable[int]) -> "CrystalElement":
        return cls(word, tuple(-value for value in x))

    @property
    def x(self) -> Tuple[int, ...]:
        return tuple(-value for value in self.z)

    @property
    def datum(self) -> CartanDatum:
        return self.word.datum

    @property
    def double_index(self) -> DoubleIndexView:
        return double_index_view(self.word)

    def z_at(self, j: int, letter: int) -> int:
        return self.double_index.value(self.z, j, letter)

    def replace(self, z: Iterable[int]) -> "CrystalElement":
        return CrystalElement(self.word, tuple(z))

    def __str__(self) -> str:
        factors = (f"({value})_{letter}" for letter, value in zip(self.word, self.z))
        return " ".join(factors)

    def as_dict(self) -> dict:
        return {"word": list(self.word.letters), "z": list(self.z)}

    @classmethod
    def from_dict(cls, data: dict, datum: CartanDatum = None) -> "CrystalElement":
        try:
            letters = data["word"]
            if "z" in data:
                z = data["z"]
            else:
                z = [-value for value in data["x"]]
            if datum is None:
                datum = parse_datum(data["datum"])
        except (KeyError, TypeError) as exc:
            raise ElementParseError(f"Malformed crystal element {data!r}: {exc}")
        return cls(Word(tuple(letters), datum), tuple(z))

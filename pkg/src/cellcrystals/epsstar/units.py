"""
The unit characterization: on the fixed longest word, wt(x) = 0 together
with eps_i^*(x) = 0 for every i holds only at the zero element.
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Tuple

from cellcrystals.cartan.datum import CartanDatum
from cellcrystals.cartan.words import longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.crystals.operators import wt
from cellcrystals.utils.exceptions import BoxSizeError

from .formulas import check_longest
from .functions import eps_star_alg

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UnitVerdict:
    is_unit: bool
    condition: Optional[str] = None  # "wt" or "eps_star"
    letter: Optional[int] = None
    value: Optional[int] = None

    def __bool__(self) -> bool:
        return self.is_unit


def is_unit(x: CrystalElement) -> UnitVerdict:
    check_longest(x)
    for i, coefficient in zip(x.datum.letters, wt(x).coefficients):
        if coefficient:
            return UnitVerdict(False, "wt", i, coefficient)
    for i in x.datum.letters:
        value = eps_star_alg(x, i)
        if value:
            return UnitVerdict(False, "eps_star", i, value)
    return UnitVerdict(True)


def zero_sum_tuples(length: int, radius: int) -> List[Tuple[int, ...]]:
    values = range(-radius, radius + 1)
    return [t for t in product(values, repeat=length) if sum(t) == 0]


@dataclass
class SubBoxResult:
    first: int
    wt_zero_count: int = 0
    unit_candidates: List[Tuple[int, ...]] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "first": self.first,
            "wt_zero_count": self.wt_zero_count,
            "unit_candidates": [list(z) for z in self.unit_candidates],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SubBoxResult":
        return cls(
            first=data["first"],
            wt_zero_count=data["wt_zero_count"],
            unit_candidates=[tuple(z) for z in data["unit_candidates"]],
        )


def weight_zero_points(
    datum: CartanDatum, radius: int, first: Optional[int] = None
) -> Iterator[Tuple[int, ...]]:
    """
    z in [-radius, radius]^l with wt(z) = 0, optionally with z_1 fixed.

    Each letter's coordinates are chosen among the tuples summing to zero, so
    only weight zero points are ever built.
    """
    word = longest_word(datum.family, datum.rank)
    letters = list(datum.letters)
    positions = {letter: word.positions(letter) for letter in letters}
    choices = {}
    for letter in letters:
        tuples = zero_sum_tuples(len(positions[letter]), radius)
        if first is not None and letter == word[0]:
            tuples = [t for t in tuples if t[0] == first]
        choices[letter] = tuples

    z = [0] * len(word)
    for combination in product(*(choices[letter] for letter in letters)):
        for letter, values in zip(letters, combination):
            for k, value in zip(positions[letter], values):
                z[k] = value
        yield tuple(z)


def scan_unit_sub_box(datum: CartanDatum, radius: int, first: int) -> SubBoxResult:
    word = longest_word(datum.family, datum.rank)
    result = SubBoxResult(first)
    for z in weight_zero_points(datum, radius, first):
        result.wt_zero_count += 1
        if is_unit(CrystalElement(word, z)):
            result.unit_candidates.append(z)
    logger.debug(
        "Scanned %s radius %d with z_1 = %d: %d weight zero points",
        datum.label,
        radius,
        first,
        result.wt_zero_count,
    )
    return result


def _scan_in_process(datum: CartanDatum, radius: int) -> Iterable[SubBoxResult]:
    return [
        scan_unit_sub_box(datum, radius, first) for first in range(-radius, radius + 1)
    ]


def verify_unit_theorem(
    datum: CartanDatum,
    radius: int,
    scanner: Callable[[CartanDatum, int], Iterable[SubBoxResult]] = _scan_in_process,
) -> Dict:
    """
    Scan the box [-radius, radius]^l and report every unit candidate.

    ``scanner`` produces the per sub-box results; the summary does not depend
    on the order they arrive in.
    """
    if radius < 1:
        raise BoxSizeError(
            f"The unit theorem box needs a radius of at least 1, got {radius}"
        )

    length = len(longest_word(datum.family, datum.rank))
    logger.info("Scanning the unit box of %s with radius %d", datum.label, radius)
    results = list(scanner(datum, radius))
    candidates = sorted(z for result in results for z in result.unit_candidates)
    zero = (0,) * length
    return {
        "datum": datum.label,
        "radius": radius,
        "points_scanned": (2 * radius + 1) ** length,
        "wt_zero_count": sum(result.wt_zero_count for result in results),
        "unit_candidates": [list(z) for z in candidates],
        "pass": candidates == [zero],
    }

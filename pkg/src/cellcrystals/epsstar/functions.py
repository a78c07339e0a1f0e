import logging
from dataclasses import dataclass
from typing import Tuple

from cellcrystals.braid.moves import BraidScript, apply_script
from cellcrystals.crystals.elements import CrystalElement

from .formulas import check_longest, eps_star_formula
from .procedures import rightmost_script

logger = logging.getLogger(__name__)


def eps_star_alg(x: CrystalElement, i: int) -> int:
    """
    Move the letter i to the end of the word and negate the coordinate that
    lands there.
    """
    check_longest(x)
    x.datum.check_letter(i)
    return eps_star_via(x, rightmost_script(x.datum, i))


def eps_star_via(x: CrystalElement, script: BraidScript) -> int:
    """
    Negated last coordinate after ``script``; any script ending in the same
    letter gives the same value.
    """
    return -apply_script(x, script).z[-1]


@dataclass(frozen=True)
class EpsStarEntry:
    letter: int
    eps_star_alg: int
    eps_star_formula: int
    final_word: str
    script_length: int

    @property
    def matches(self) -> bool:
        return self.eps_star_alg == self.eps_star_formula

    def as_dict(self) -> dict:
        return {
            "i": self.letter,
            "eps_star_alg": self.eps_star_alg,
            "eps_star_formula": self.eps_star_formula,
            "final_word": self.final_word,
            "script_length": self.script_length,
            "match": self.matches,
        }


@dataclass(frozen=True)
class EpsStarReport:
    element: CrystalElement
    entries: Tuple[EpsStarEntry, ...]

    @property
    def matches(self) -> bool:
        return all(entry.matches for entry in self.entries)

    @property
    def mismatches(self) -> Tuple[int, ...]:
        return tuple(entry.letter for entry in self.entries if not entry.matches)

    def as_dict(self) -> dict:
        return {
            "datum": self.element.datum.label,
            "element": self.element.as_dict(),
            "entries": [entry.as_dict() for entry in self.entries],
            "match": self.matches,
        }


def eps_star_report(x: CrystalElement) -> EpsStarReport:
    entries = []
    for i in x.datum.letters:
        script = rightmost_script(x.datum, i)
        entries.append(
            EpsStarEntry(
                letter=i,
                eps_star_alg=eps_star_alg(x, i),
                eps_star_formula=eps_star_formula(x, i),
                final_word=str(script.target),
                script_length=len(script),
            )
        )
    report = EpsStarReport(x, tuple(entries))
    if not report.matches:
        logger.warning("eps-star mismatch at %s for letters %s", x, report.mismatches)
    return report

"""
Verification suites run by ``manage.py verify``.

Each suite returns a ``SuiteResult`` with the number of cases checked and
the first failures found. Randomness comes from a seeded numpy generator so
a report only depends on its inputs.
"""
import logging
from dataclasses import dataclass, field
from itertools import cycle, product
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from cellcrystals.braid.constants import MoveKind
from cellcrystals.braid.laws import inverse_violation, morphism_violations
from cellcrystals.braid.maps import phi1, phi2_ij, phi2_ji
from cellcrystals.braid.moves import BraidMove, apply_script, legal_moves
from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import CartanDatum
from cellcrystals.cartan.words import Word, longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.epsstar.formulas import eps_star_formula
from cellcrystals.epsstar.functions import eps_star_alg
from cellcrystals.epsstar.procedures import a3_letter3_scripts, rightmost_script
from cellcrystals.epsstar.units import SubBoxResult, verify_unit_theorem
from cellcrystals.utils.exceptions import BoxSizeError

logger = logging.getLogger(__name__)

MAX_REPORTED_FAILURES = 10

SUITES = ("morphism", "inverse", "oracle", "unit", "independence")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[dict] = field(default_factory=list)
    skipped: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **failure) -> None:
        if len(self.failures) < MAX_REPORTED_FAILURES:
            self.failures.append(failure)
        self.details["failure_count"] = self.details.get("failure_count", 0) + 1

    def as_dict(self) -> dict:
        data = {
            "checked": self.checked,
            "failures": self.failures,
            "pass": self.passed,
            **self.details,
        }
        if self.skipped:
            data["skipped"] = self.skipped
        return data


def braid_windows(datum: CartanDatum) -> Dict[MoveKind, List[Tuple[Word, BraidMove]]]:
    """
    Every legal move on the longest word and on the words the rightmost
    scripts pass through, grouped by kind.
    """
    words = {longest_word(datum.family, datum.rank)}
    for i in datum.letters:
        words.update(rightmost_script(datum, i).trace())

    windows: Dict[MoveKind, List[Tuple[Word, BraidMove]]] = {}
    for word in sorted(words, key=lambda w: w.letters):
        for move in legal_moves(word):
            windows.setdefault(move.kind, []).append((word, move))
    return windows


def morphism_suite(datum: CartanDatum, cases: int, rng: np.random.Generator) -> SuiteResult:
    """
    Each braid map preserves wt, eps_j and phi_j and commutes with e_j and
    f_j. Window coordinates run through [-2, 2]^width, the others are drawn
    from {-1, 0, 1}.
    """
    result = SuiteResult("morphism")
    per_kind = {}
    for kind, windows in braid_windows(datum).items():
        targets = cycle(windows)
        box = list(product(range(-2, 3), repeat=kind.width))
        count = 0
        while count < max(cases, len(box)):
            for window_z in box:
                word, move = next(targets)
                z = rng.integers(-1, 2, size=len(word))
                z[move.window] = window_z
                element = CrystalElement(word, z.tolist())
                violations = morphism_violations(element, move)
                if violations:
                    result.fail(word=str(word), move=str(move), z=list(element.z), laws=violations)
                count += 1
        per_kind[kind.value] = count
        result.checked += count
    result.details["cases_per_map"] = per_kind
    return result


def inverse_suite() -> SuiteResult:
    """
    phi1 undoes itself across the word flip; phi2_ij and phi2_ji undo each
    other.
    """
    result = SuiteResult("inverse")
    for z in product(range(-2, 3), repeat=3):
        result.checked += 1
        if phi1(*phi1(*z)) != z:
            result.fail(map="phi1", z=list(z))
    for z in product(range(-2, 3), repeat=4):
        result.checked += 2
        if phi2_ji(*phi2_ij(*z)) != z:
            result.fail(map="phi2_ji . phi2_ij", z=list(z))
        if phi2_ij(*phi2_ji(*z)) != z:
            result.fail(map="phi2_ij . phi2_ji", z=list(z))
    return result


def move_inverse_suite(datum: CartanDatum, rng: np.random.Generator, cases: int) -> SuiteResult:
    result = inverse_suite()
    for kind, windows in braid_windows(datum).items():
        for word, move in windows[:cases]:
            element = CrystalElement(word, rng.integers(-2, 3, size=len(word)).tolist())
            result.checked += 1
            if inverse_violation(element, move):
                result.fail(word=str(word), move=str(move), z=list(element.z))
    return result


def oracle_suite(
    datum: CartanDatum,
    samples: int,
    rng: np.random.Generator,
    radius: int,
    exhaustive_length: int,
) -> SuiteResult:
    """
    The algorithmic and closed form eps_i^* agree: exhaustively on
    [-1, 1]^l for short words, on uniform samples from [-radius, radius]^l
    otherwise.
    """
    if samples < 0 or radius < 0:
        raise BoxSizeError(f"Cannot sample {samples} points from radius {radius}")

    result = SuiteResult("oracle")
    word = longest_word(datum.family, datum.rank)
    if len(word) <= exhaustive_length:
        points = product((-1, 0, 1), repeat=len(word))
        result.details["mode"] = "exhaustive"
    else:
        points = (tuple(z) for z in rng.integers(-radius, radius + 1, size=(samples, len(word))))
        result.details["mode"] = "sampled"

    for z in points:
        x = CrystalElement(word, z)
        result.checked += 1
        for i in datum.letters:
            alg, formula = eps_star_alg(x, i), eps_star_formula(x, i)
            if alg != formula:
                result.fail(z=list(x.z), i=i, eps_star_alg=alg, eps_star_formula=formula)
    return result


def unit_suite(
    datum: CartanDatum,
    radius: int,
    scanner: Optional[Callable[[CartanDatum, int], List[SubBoxResult]]] = None,
) -> SuiteResult:
    result = SuiteResult("unit")
    kwargs = {"scanner": scanner} if scanner else {}
    summary = verify_unit_theorem(datum, radius, **kwargs)
    result.checked = summary["wt_zero_count"]
    result.details.update(
        points_scanned=summary["points_scanned"],
        wt_zero_count=summary["wt_zero_count"],
        unit_candidates=summary["unit_candidates"],
    )
    if not summary["pass"]:
        result.fail(unit_candidates=summary["unit_candidates"])
    return result


def independence_suite(datum: CartanDatum) -> SuiteResult:
    """
    The two shipped A_3 scripts for the letter 3 end in the same coordinate.
    """
    result = SuiteResult("independence")
    if (datum.family, datum.rank) != (Family.A, 3):
        result.skipped = "only defined for A3"
        return result

    first, second = a3_letter3_scripts()
    for z in product(range(-2, 3), repeat=len(first.source)):
        x = CrystalElement(first.source, z)
        result.checked += 1
        left, right = apply_script(x, first).z[-1], apply_script(x, second).z[-1]
        if left != right:
            result.fail(z=list(z), scripts=[left, right])
    return result


def run_suites(
    datum: CartanDatum,
    suites,
    *,
    seed: int,
    samples: int,
    sample_radius: int,
    exhaustive_length: int,
    morphism_cases: int,
    unit_box: Optional[int] = None,
    scanner=None,
) -> dict:
    """
    Run the selected suites in a fixed order and collect a JSON-ready report.

    Sizes are checked before any suite runs.
    """
    for label, value, minimum in (
        ("samples", samples, 0),
        ("sample radius", sample_radius, 0),
        ("morphism cases", morphism_cases, 0),
        ("unit box", unit_box, 1),
    ):
        if value is not None and value < minimum:
            raise BoxSizeError(f"The {label} must be >= {minimum}, got {value}")

    rng = np.random.default_rng(seed)
    results = []
    for name in SUITES:
        if name not in suites:
            continue
        logger.info("Running %s suite for %s (seed %d)", name, datum.label, seed)
        if name == "morphism":
            results.append(morphism_suite(datum, morphism_cases, rng))
        elif name == "inverse":
            results.append(move_inverse_suite(datum, rng, morphism_cases))
        elif name == "oracle":
            results.append(
                oracle_suite(datum, samples, rng, sample_radius, exhaustive_length)
            )
        elif name == "unit":
            if unit_box is None:
                result = SuiteResult("unit", skipped="no --unit-box given")
            else:
                result = unit_suite(datum, unit_box, scanner)
            results.append(result)
        else:
            results.append(independence_suite(datum))

    return {
        "datum": datum.label,
        "seed": seed,
        "suites": {result.name: result.as_dict() for result in results},
        "pass": all(result.passed for result in results),
    }

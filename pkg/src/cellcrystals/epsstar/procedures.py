"""
Braid scripts that move a letter of the fixed longest word to the last
position.

The scripts are generated from the step descriptions rather than stored as
move lists: the letter is addressed by its occurrence, slid along with
2-moves past letters it commutes with, and carried over its neighbours with
3-moves (and the single 4-move of types B and C).
"""
import logging
from functools import lru_cache
from typing import List, Sequence, Tuple

from cellcrystals.braid.constants import MoveKind
from cellcrystals.braid.moves import BraidMove, BraidScript, four_move_kind, moved_letters
from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import CartanDatum, cartan_matrix
from cellcrystals.cartan.words import Word, longest_word
from cellcrystals.utils.exceptions import DatumError, ProcedureError

logger = logging.getLogger(__name__)


class ScriptBuilder:
    """
    Records braid moves while rewriting a mutable copy of the word.

    Positions are 0-based here; the recorded moves use the 1-based positions
    of ``BraidMove``.
    """

    def __init__(self, word: Word):
        self.source = word
        self.datum = word.datum
        self.letters: List[int] = list(word.letters)
        self.moves: List[BraidMove] = []

    def __str__(self) -> str:
        return str(self.source.replace(self.letters))

    def move(self, kind: MoveKind, position: int) -> None:
        move = BraidMove(kind, position + 1)
        self.letters[move.window] = moved_letters(self.datum, self.letters, move)
        self.moves.append(move)
        logger.debug("%s -> %s", move, self)

    def commutes(self, p: int, q: int) -> bool:
        return self.datum.entry(self.letters[p], self.letters[q]) == 0

    def slide_right(self, position: int) -> int:
        while position + 1 < len(self.letters) and self.commutes(position, position + 1):
            self.move(MoveKind.two, position)
            position += 1
        return position

    def slide_left(self, position: int) -> int:
        while position > 0 and self.commutes(position - 1, position):
            self.move(MoveKind.two, position - 1)
            position -= 1
        return position

    def occurrence_from_left(self, letter: int, count: int) -> int:
        found = [k for k, value in enumerate(self.letters) if value == letter]
        if len(found) < count:
            raise ProcedureError(
                f"{self} has fewer than {count} occurrences of letter {letter}"
            )
        return found[count - 1]

    def occurrence_from_right(self, letter: int, count: int) -> int:
        found = [k for k, value in enumerate(self.letters) if value == letter]
        if len(found) < count:
            raise ProcedureError(
                f"{self} has fewer than {count} occurrences of letter {letter}"
            )
        return found[-count]

    def next_occurrence(self, letter: int, after: int) -> int:
        for k in range(after + 1, len(self.letters)):
            if self.letters[k] == letter:
                return k
        raise ProcedureError(f"No letter {letter} right of position {after} in {self}")

    def last_occurrence(self, letter: int) -> int:
        return self.occurrence_from_right(letter, 1)

    def expect(self, pattern: Sequence[int], position: int) -> None:
        window = tuple(self.letters[position : position + len(pattern)])
        if position < 0 or window != tuple(pattern):
            raise ProcedureError(
                f"Expected {''.join(map(str, pattern))} at position {position + 1} "
                f"of {self}, found {''.join(map(str, window))}"
            )

    def build(self) -> BraidScript:
        return BraidScript(self.source, tuple(self.moves))


def _check_letter(datum: CartanDatum, i: int) -> None:
    if i not in datum.letters:
        raise DatumError(f"Letter {i} is out of range 1..{datum.rank} for {datum.label}")


def rightmost_script_A(n: int, i: int) -> BraidScript:
    """
    Move the i-th 1 (counting from the right) of 1(21)(321)...(n...1) to
    the end, turning it into the letter i with 3-moves k(k+1)k -> (k+1)k(k+1).
    """
    word = longest_word(Family.A, n)
    _check_letter(word.datum, i)
    builder = ScriptBuilder(word)
    if i == 1:
        return builder.build()

    p = builder.slide_right(builder.occurrence_from_right(1, i))
    for k in range(1, i):
        if k > 1:
            p = builder.slide_right(right)
        builder.expect((k, k + 1, k), p)
        builder.move(MoveKind.three, p)
        right = p + 2
    builder.slide_right(right)
    return builder.build()


def _ascend(builder: ScriptBuilder, i: int, top: int) -> int:
    """
    Carry the (i+1)-th 1 from the left up through 121, 232, ... as far as
    ``top``; returns the position of the carried letter.
    """
    pos = builder.occurrence_from_left(1, i + 1)
    right = None
    for k in range(1, top):
        if k > 1:
            pos = builder.next_occurrence(k, right)
        pos = builder.slide_left(pos)
        builder.expect((k, k + 1, k), pos - 2)
        builder.move(MoveKind.three, pos - 2)
        right = pos
    return pos if right is None else right


def _descend(builder: ScriptBuilder, right: int, top: int, i: int) -> None:
    """
    Carry the letter at ``right`` down through k(k-1)k for k = top ... i+1,
    then slide it to the end of the word.
    """
    for k in range(top, i, -1):
        p = builder.slide_right(right)
        builder.expect((k, k - 1, k), p)
        builder.move(MoveKind.three, p)
        right = p + 2
    builder.slide_right(right)


def rightmost_script_BC(n: int, i: int, family: Family = Family.B) -> BraidScript:
    """
    Move the (i+1)-th 1 (counting from the left) of (12...n)^n to the end as
    the letter i.

    The single 4-move at (n-1)n(n-1)n is oriented by the Cartan datum, so the
    same construction serves B_n and C_n.
    """
    family = Family(family)
    if family not in (Family.B, Family.C):
        raise DatumError(f"Family {family.value} has no double bond at n-1, n")
    word = longest_word(family, n)
    datum = word.datum
    _check_letter(datum, i)
    builder = ScriptBuilder(word)
    if i == n:
        return builder.build()

    top = n - 1
    pos = _ascend(builder, i, top)
    start = pos if n > 2 else pos - 2
    builder.expect((n - 1, n, n - 1, n), start)
    builder.move(four_move_kind(datum, n - 1, n), start)
    _descend(builder, start + 3, top, i)
    return builder.build()


def rightmost_script_D(n: int, i: int) -> BraidScript:
    """
    Move the (i+1)-th 1 (counting from the left) of (12...n)^(n-1) to the end
    as the letter i. Around the fork the window
    (n-2)(n-1)n(n-2)(n-1)n is rewritten by five simply laced moves.
    """
    word = longest_word(Family.D, n)
    _check_letter(word.datum, i)
    builder = ScriptBuilder(word)
    if i >= n - 1:
        builder.slide_right(builder.last_occurrence(i))
        return builder.build()

    start = _ascend(builder, i, n - 2)
    builder.expect((n - 2, n - 1, n, n - 2, n - 1, n), start)
    for kind, offset in (
        (MoveKind.two, 1),
        (MoveKind.three, 2),
        (MoveKind.three, 0),
        (MoveKind.two, 2),
        (MoveKind.three, 3),
    ):
        builder.move(kind, start + offset)
    _descend(builder, start + 5, n - 2, i)
    return builder.build()


@lru_cache(maxsize=None)
def rightmost_script(datum: CartanDatum, i: int) -> BraidScript:
    _check_letter(datum, i)
    if datum.family is Family.A:
        script = rightmost_script_A(datum.rank, i)
    elif datum.family is Family.D:
        script = rightmost_script_D(datum.rank, i)
    else:
        script = rightmost_script_BC(datum.rank, i, datum.family)
    logger.debug(
        "Rightmost script for letter %d of %s: %d moves, target %s",
        i,
        datum.label,
        len(script),
        script.target,
    )
    return script


def _script(word: Word, moves: Sequence[Tuple[MoveKind, int]]) -> BraidScript:
    return BraidScript(word, tuple(BraidMove(kind, position) for kind, position in moves))


def a3_letter3_scripts() -> Tuple[BraidScript, BraidScript]:
    """
    Two different ways of moving the letter 3 to the end of 121321.
    """
    word = longest_word(Family.A, 3)
    alternative = _script(
        word,
        [
            (MoveKind.two, 3),
            (MoveKind.three, 4),
            (MoveKind.three, 2),
            (MoveKind.two, 1),
            (MoveKind.two, 4),
            (MoveKind.three, 2),
            (MoveKind.three, 4),
        ],
    )
    return rightmost_script_A(3, 3), alternative


# (datum, letter, final word)
WORKED_EXAMPLES = {
    "A4": (cartan_matrix(Family.A, 4), 3, "1232143213"),
    "B4": (cartan_matrix(Family.B, 4), 2, "1234213243412342"),
    "D4": (cartan_matrix(Family.D, 4), 2, "123421423242"),
}

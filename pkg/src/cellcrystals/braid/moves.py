import logging
from dataclasses import dataclass, field
from typing import Iterator, List, Sequence, Tuple

from cellcrystals.cartan.datum import CartanDatum
from cellcrystals.cartan.words import Word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.utils.exceptions import (
    IllegalMove,
    ScriptMismatch,
    UnsupportedMove,
)

from .constants import UNSUPPORTED_KINDS, MoveKind
from .maps import phi0, phi1, phi2_ij, phi2_ji

logger = logging.getLogger(__name__)

MAPS = {
    MoveKind.two: phi0,
    MoveKind.three: phi1,
    MoveKind.four_ij: phi2_ij,
    MoveKind.four_ji: phi2_ji,
}


@dataclass(frozen=True)
class BraidMove:
    kind: MoveKind
    position: int  # 1-based, leftmost letter of the window

    def __str__(self) -> str:
        return f"{self.kind.value}@{self.position}"

    @property
    def window(self) -> slice:
        return slice(self.position - 1, self.position - 1 + self.kind.width)

    @property
    def inverse(self) -> "BraidMove":
        return BraidMove(self.kind.inverse, self.position)

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "pos": self.position}

    @classmethod
    def from_dict(cls, data: dict) -> "BraidMove":
        kind = str(data.get("kind", ""))
        if kind in UNSUPPORTED_KINDS:
            raise UnsupportedMove("unsupported: G_2 six-moves do not occur in types A-D")
        try:
            return cls(MoveKind(kind), int(data["pos"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise IllegalMove(f"Malformed braid move {data!r}: {exc}", data.get("pos", 0))


def four_move_kind(datum: CartanDatum, first: int, second: int) -> MoveKind:
    """
    The four-move that applies to the window ``first second first second``.
    """
    if datum.entry(first, second) == -1 and datum.entry(second, first) == -2:
        return MoveKind.four_ij
    if datum.entry(first, second) == -2 and datum.entry(second, first) == -1:
        return MoveKind.four_ji
    raise IllegalMove(
        f"Letters {first}, {second} of {datum.label} are not joined by a double bond", 0
    )


def moved_letters(
    datum: CartanDatum, letters: Sequence[int], move: BraidMove
) -> Tuple[int, ...]:
    """
    Check ``move`` against ``letters`` and return the braided window.
    """
    window = tuple(letters[move.window])
    if move.position < 1 or len(window) != move.kind.width:
        raise IllegalMove(
            f"{move.kind.value} window does not fit in a word of length {len(letters)}",
            move.position,
        )

    first, second = window[0], window[1]
    pattern = tuple((first, second)[k % 2] for k in range(move.kind.width))
    if first == second or window != pattern:
        raise IllegalMove(
            f"Window {window} does not alternate two letters", move.position
        )

    bond = datum.bond(first, second)
    if move.kind is MoveKind.two:
        legal = bond == 0
    elif move.kind is MoveKind.three:
        legal = bond == 1
    elif move.kind is MoveKind.four_ij:
        legal = datum.entry(first, second) == -1 and datum.entry(second, first) == -2
    else:
        legal = datum.entry(first, second) == -2 and datum.entry(second, first) == -1
    if not legal:
        raise IllegalMove(
            f"{move.kind.value} does not apply to letters {first}, {second} of {datum.label}",
            move.position,
        )

    return tuple((second, first)[k % 2] for k in range(move.kind.width))


def _apply_in_place(
    datum: CartanDatum, letters: List[int], z: List[int], move: BraidMove
) -> None:
    window = move.window
    letters[window] = moved_letters(datum, letters, move)
    z[window] = MAPS[move.kind](*z[window])


def apply_move(element: CrystalElement, move: BraidMove) -> CrystalElement:
    letters, z = list(element.word.letters), list(element.z)
    _apply_in_place(element.datum, letters, z, move)
    return CrystalElement(element.word.replace(letters), z)


def legal_moves(word: Word) -> Iterator[BraidMove]:
    """
    Every braid move that applies somewhere in ``word``.
    """
    for position in range(1, len(word) + 1):
        for kind in MoveKind:
            move = BraidMove(kind, position)
            try:
                moved_letters(word.datum, word.letters, move)
            except IllegalMove:
                continue
            yield move


@dataclass(frozen=True)
class BraidScript:
    source: Word
    moves: Tuple[BraidMove, ...] = ()
    _words: Tuple[Word, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        letters = list(self.source.letters)
        words = [self.source]
        for move in self.moves:
            letters[move.window] = moved_letters(self.source.datum, letters, move)
            words.append(self.source.replace(letters))
        object.__setattr__(self, "_words", tuple(words))

    def __len__(self) -> int:
        return len(self.moves)

    @property
    def target(self) -> Word:
        return self._words[-1]

    def trace(self) -> Tuple[Word, ...]:
        """
        The words before and after every move, source first.
        """
        return self._words

    def inverse(self) -> "BraidScript":
        return BraidScript(self.target, tuple(move.inverse for move in reversed(self.moves)))

    def as_dict(self) -> dict:
        return {
            "source": list(self.source.letters),
            "moves": [move.as_dict() for move in self.moves],
        }

    @classmethod
    def from_dict(cls, data: dict, datum: CartanDatum) -> "BraidScript":
        try:
            source = Word(tuple(data["source"]), datum)
            moves = tuple(BraidMove.from_dict(move) for move in data.get("moves", []))
        except (KeyError, TypeError) as exc:
            raise ScriptMismatch(f"Malformed braid script {data!r}: {exc}")
        return cls(source, moves)


def apply_script(element: CrystalElement, script: BraidScript) -> CrystalElement:
    if element.word != script.source:
        raise ScriptMismatch(
            f"Script starts at word {script.source}, element lives on {element.word}"
        )
    z = list(element.z)
    for move in script.moves:
        z[move.window] = MAPS[move.kind](*z[move.window])
    return CrystalElement(script.target, z)

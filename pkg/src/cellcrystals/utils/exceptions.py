class CrystalError(Exception):
    pass


class DatumError(CrystalError, ValueError):
    pass


class WordError(CrystalError, ValueError):
    pass


class PositionError(CrystalError, IndexError):
    pass


class LetterAbsent(CrystalError):
    """
    The letter does not occur in the word, so the operator is undefined.
    """

    def __init__(self, letter: int, word):
        self.letter = letter
        self.word = tuple(word)
        super().__init__(
            f"Letter {letter} does not occur in word {''.join(map(str, word))}"
        )


class IllegalMove(CrystalError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class UnsupportedMove(CrystalError):
    pass


class ScriptMismatch(CrystalError):
    pass


class HelperRangeError(CrystalError, ValueError):
    pass


class ProcedureError(CrystalError):
    """
    A rightmost-move procedure did not find the pattern it expects.
    """


class GraphTooLarge(CrystalError):
    pass


class ElementParseError(CrystalError, ValueError):
    pass


class BoxSizeError(CrystalError, ValueError):
    """
    A box radius or sample count outside the range a run accepts.
    """

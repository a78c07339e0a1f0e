from enum import Enum


class MoveKind(str, Enum):
    two = "Two"
    three = "Three"
    four_ij = "FourIJ"
    four_ji = "FourJI"

    @property
    def width(self) -> int:
        return {"Two": 2, "Three": 3}.get(self.value, 4)

    @property
    def inverse(self) -> "MoveKind":
        return {
            MoveKind.four_ij: MoveKind.four_ji,
            MoveKind.four_ji: MoveKind.four_ij,
        }.get(self, self)


# kinds that only exist outside the classical types
UNSUPPORTED_KINDS = {"Six", "6"}

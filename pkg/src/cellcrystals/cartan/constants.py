from enum import Enum


class Family(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def min_rank(self) -> int:
        return MIN_RANK[self]


MIN_RANK = {
    Family.A: 1,
    Family.B: 2,
    Family.C: 2,
    Family.D: 4,
}

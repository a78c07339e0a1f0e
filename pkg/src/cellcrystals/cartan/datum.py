"""
Cartan data of the classical finite types.

Nodes are numbered along the usual Dynkin diagrams: A_n is the path
1 - 2 - ... - n, B_n and C_n carry the double bond between n-1 and n (short
root alpha_n for B_n, long root alpha_n for C_n) and D_n forks at n-2.
"""
import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence, Tuple, Union

import numpy as np

from cellcrystals.utils.exceptions import DatumError

from .constants import Family

logger = logging.getLogger(__name__)

LABEL_RE = re.compile(r"^\s*([ABCD])\s*(\d+)\s*$", re.IGNORECASE)


@dataclass(frozen=True)
class CartanDatum:
    family: Family
    rank: int
    a: Tuple[Tuple[int, ...], ...]
    d: Tuple[int, ...]

    def __str__(self) -> str:
        return self.label

    @property
    def label(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def letters(self) -> range:
        return range(1, self.rank + 1)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.a, dtype=np.int64)

    @property
    def positive_root_count(self) -> int:
        n = self.rank
        return {
            Family.A: n * (n + 1) // 2,
            Family.B: n * n,
            Family.C: n * n,
            Family.D: n * (n - 1),
        }[self.family]

    def entry(self, i: int, j: int) -> int:
        """
        a_ij = <h_i, alpha_j>, 1-based.
        """
        return self.a[i - 1][j - 1]

    def bond(self, i: int, j: int) -> int:
        """
        a_ij * a_ji, which decides the braid relation between s_i and s_j.
        """
        return self.entry(i, j) * self.entry(j, i)

    def pairing(self, i: int, coefficients: Sequence[int]) -> int:
        """
        <h_i, sum_j c_j alpha_j>.
        """
        return int(self.matrix[i - 1] @ np.asarray(coefficients, dtype=np.int64))

    def check_letter(self, letter: int) -> None:
        if letter not in self.letters:
            raise DatumError(f"Letter {letter} is not a node of {self.label}")


def _validate(a: np.ndarray, d: np.ndarray) -> None:
    off_diagonal = ~np.eye(len(a), dtype=bool)
    if not (np.diag(a) == 2).all():
        raise DatumError("Diagonal entries of a Cartan matrix must be 2")
    if (a[off_diagonal] > 0).any():
        raise DatumError("Off-diagonal entries of a Cartan matrix must be <= 0")
    if not ((a == 0) == (a.T == 0)).all():
        raise DatumError("a_ij = 0 must imply a_ji = 0")
    symmetrized = np.diag(d) @ a
    if not (symmetrized == symmetrized.T).all():
        raise DatumError("DA must be symmetric")


@lru_cache(maxsize=None)
def cartan_matrix(family: Union[Family, str], n: int) -> CartanDatum:
    try:
        family = family if isinstance(family, Family) else Family(family.upper())
    except (AttributeError, ValueError):
        raise DatumError(f"Unknown family {family!r}, expected one of A, B, C, D")

    if n < family.min_rank:
        raise DatumError(
            f"Rank {n} is out of range for type {family.value}, "
            f"expected at least {family.min_rank}"
        )

    a = 2 * np.eye(n, dtype=np.int64)
    d = np.ones(n, dtype=np.int64)

    # the path 1 - 2 - ... (up to n-1 for D_n, which forks at n-2)
    path_end = n - 1 if family is Family.D else n
    for i in range(path_end - 1):
        a[i, i + 1] = a[i + 1, i] = -1

    if family is Family.B:
        a[n - 1, n - 2] = -2
        d[: n - 1] = 2
    elif family is Family.C:
        a[n - 2, n - 1] = -2
        d[n - 1] = 2
    elif family is Family.D:
        a[n - 3, n - 1] = a[n - 1, n - 3] = -1

    _validate(a, d)
    logger.debug("Built Cartan matrix for %s%d", family.value, n)
    return CartanDatum(
        family=family,
        rank=n,
        a=tuple(tuple(int(v) for v in row) for row in a),
        d=tuple(int(v) for v in d),
    )


def parse_datum(label: str) -> CartanDatum:
    """
    Parse a label such as ``"B4"`` into its Cartan datum.
    """
    match = LABEL_RE.match(label or "")
    if not match:
        raise DatumError(f"Cannot parse Cartan datum {label!r}, expected e.g. 'B4'")
    family, rank = match.groups()
    return cartan_matrix(Family(family.upper()), int(rank))

"""
Closed formulas for eps_i^* on the fixed longest words.

z_{j,k} is the coordinate of the j-th occurrence (left to right) of the
letter k, with z_{j,0} = 0.
"""
from dataclasses import dataclass
from typing import Optional

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.words import is_longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.utils.exceptions import HelperRangeError, WordError


@dataclass(frozen=True)
class HelperValues:
    eta: Optional[int] = None
    zeta: Optional[int] = None
    theta: Optional[int] = None
    kappa: Optional[int] = None

    def as_dict(self) -> dict:
        return {
            name: value
            for name, value in (
                ("eta", self.eta),
                ("zeta", self.zeta),
                ("theta", self.theta),
                ("kappa", self.kappa),
            )
            if value is not None
        }


def check_longest(x: CrystalElement) -> None:
    if not is_longest_word(x.word):
        raise WordError(
            f"Word {x.word} is not the fixed longest word of {x.datum.label}"
        )


def _eta(x: CrystalElement, i: int) -> int:
    n, z = x.datum.rank, x.z_at
    return -max(z(i + 1, k - 1) - z(i, k) for k in range(1, n))


def _theta(x: CrystalElement, i: int) -> int:
    n, z = x.datum.rank, x.z_at
    return -max(z(i + 1, k - 1) - z(i, k) for k in range(1, n - 1))


def helpers(x: CrystalElement, i: int) -> HelperValues:
    """
    eta and zeta for B_n and C_n (1 <= i <= n-1), theta and kappa for D_n
    (1 <= i <= n-2).
    """
    check_longest(x)
    family, n, z = x.datum.family, x.datum.rank, x.z_at

    if family in (Family.B, Family.C):
        if not 1 <= i <= n - 1:
            raise HelperRangeError(f"eta_{i}, zeta_{i} need 1 <= i <= {n - 1}")
        eta = _eta(x, i)
        if family is Family.B:
            zeta = -max(
                -z(i + 1, n - 1) + z(i + 1, n),
                -eta,
                z(i + 1, n - 1) - z(i, n),
            )
        else:
            zeta = -max(
                -2 * z(i, n) + z(i + 1, n - 1),
                -eta,
                2 * z(i + 1, n) - z(i + 1, n - 1),
            )
        return HelperValues(eta=eta, zeta=zeta)

    if family is Family.D:
        if not 1 <= i <= n - 2:
            raise HelperRangeError(f"theta_{i}, kappa_{i} need 1 <= i <= {n - 2}")
        theta = _theta(x, i)
        kappa = -max(
            -theta,
            z(i + 1, n - 1) - z(i, n),
            z(i + 1, n - 2) - z(i, n - 1) - z(i, n),
            z(i + 1, n) - z(i, n - 1),
            z(i + 1, n) + z(i + 1, n - 1) - z(i + 1, n - 2),
        )
        return HelperValues(theta=theta, kappa=kappa)

    raise HelperRangeError(f"Type {family.value} has no helper values")


def eps_star_formula(x: CrystalElement, i: int) -> int:
    check_longest(x)
    datum = x.datum
    datum.check_letter(i)
    family, n, z = datum.family, datum.rank, x.z_at

    if family is Family.A:
        return max(z(n - i + 2, k - 1) - z(n - i + 1, k) for k in range(1, i + 1))

    if family in (Family.B, Family.C):
        if i == n:
            return -z(n, n)
        zeta = helpers(x, i).zeta
        return max(
            [-zeta]
            + [
                z(i + k + 1, n - k) - z(i + k + 1, n - k - 1)
                for k in range(1, n - i)
            ]
        )

    if i == n:
        return -z(n - 1, n)
    if i == n - 1:
        return -z(n - 1, n - 1)
    kappa = helpers(x, i).kappa
    return max(
        [-kappa]
        + [
            z(i + k + 1, n - k - 1) - z(i + k + 1, n - k - 2)
            for k in range(1, n - i - 1)
        ]
    )

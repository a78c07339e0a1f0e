"""
Braid-type isomorphisms of cellular crystals in z-coordinates.

Each map sends the coordinates of B_i (x) B_j (x) ... to those of the braided
product B_j (x) B_i (x) ... and is a crystal isomorphism. The four-moves are
for a_ij = -1, a_ji = -2.
"""
from typing import Tuple


def phi0(z1: int, z2: int) -> Tuple[int, int]:
    """
    (z1)_i (z2)_j -> (z2)_j (z1)_i, for a_ij = a_ji = 0.
    """
    return z2, z1


def phi1(z1: int, z2: int, z3: int) -> Tuple[int, int, int]:
    """
    iji -> jij, for a_ij = a_ji = -1. The map is an involution.
    """
    return (
        max(z3, z2 - z1),
        z1 + z3,
        -max(-z1, z3 - z2),
    )


def phi2_ij(z1: int, z2: int, z3: int, z4: int) -> Tuple[int, int, int, int]:
    """
    ijij -> jiji.
    """
    return (
        max(z4, z2 - 2 * z1, 2 * z3 - z2),
        max(z1 + z4, z3, z1 - z2 + 2 * z3),
        -max(-z2, -z4 - 2 * z1, -2 * z2 + 2 * z3 - z4),
        -max(-z3 + z4, -z1, z3 - z2),
    )


def phi2_ji(y1: int, y2: int, y3: int, y4: int) -> Tuple[int, int, int, int]:
    """
    jiji -> ijij, the inverse of :func:`phi2_ij`.
    """
    return (
        max(-y2 + y3, -y1 + y2, y4),
        max(y1 - 2 * y2 + 2 * y3, y3, y1 + 2 * y4),
        -max(-2 * y2 + y3 - y4, -y1 - y4, -y2),
        -max(-2 * y2 + y3, -y1, -y3 + 2 * y4),
    )

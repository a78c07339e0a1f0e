"""
Crystal morphism laws of a braid move, checked on a single element.
"""
from typing import List

from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.crystals.operators import e_tilde, eps, f_tilde, phi, wt

from .moves import BraidMove, apply_move


def morphism_violations(element: CrystalElement, move: BraidMove) -> List[str]:
    """
    Laws the move breaks at ``element``; empty when it behaves as a crystal
    morphism there.
    """
    image = apply_move(element, move)
    violations = []
    if wt(image) != wt(element):
        violations.append("wt")

    for j in element.datum.letters:
        if eps(image, j) != eps(element, j):
            violations.append(f"eps_{j}")
        if phi(image, j) != phi(element, j):
            violations.append(f"phi_{j}")
        if apply_move(f_tilde(element, j), move) != f_tilde(image, j):
            violations.append(f"f_{j}")
        if apply_move(e_tilde(element, j), move) != e_tilde(image, j):
            violations.append(f"e_{j}")
    return violations


def inverse_violation(element: CrystalElement, move: BraidMove) -> bool:
    """
    Whether undoing ``move`` fails to return ``element``.
    """
    return apply_move(apply_move(element, move), move.inverse) != element

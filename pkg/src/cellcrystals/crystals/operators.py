"""
Crystal structure of B_i on Z^l.

With x_k = -z_k and sigma_k(x) = x_k + sum_{j<k} <h_(i_k), alpha_(i_j)> x_j:

* eps_i(x) is the maximum of sigma_k over the positions carrying i,
* phi_i(x) = <h_i, wt(x)> + eps_i(x),
* f_i raises x at the last position attaining that maximum, e_i lowers x at
  the first one.
"""
import logging
import re
from typing import List, Sequence, Tuple, Union

from cellcrystals.utils.exceptions import (
    ElementParseError,
    LetterAbsent,
    PositionError,
)

from .elements import CrystalElement, WeightVector

logger = logging.getLogger(__name__)

OPERATOR_RE = re.compile(r"^([ef])(\d+)$")


def sigmas(element: CrystalElement, letter: int) -> List[Tuple[int, int]]:
    """
    ``(k, sigma_k)`` for every 0-based position ``k`` carrying ``letter``.
    """
    element.datum.check_letter(letter)
    row = element.datum.a[letter - 1]
    running = 0
    values = []
    for k, (i_k, z_k) in enumerate(zip(element.word.letters, element.z)):
        if i_k == letter:
            values.append((k, running - z_k))
        running -= row[i_k - 1] * z_k
    if not values:
        raise LetterAbsent(letter, element.word.letters)
    return values


def sigma(element: CrystalElement, k: int) -> int:
    """
    sigma_k on the x-view, ``k`` 1-based.
    """
    if not 1 <= k <= len(element.z):
        raise PositionError(f"Position {k} is outside 1..{len(element.z)}")
    letters, x = element.word.letters, element.x
    row = element.datum.a[letters[k - 1] - 1]
    return x[k - 1] + sum(row[letters[j] - 1] * x[j] for j in range(k - 1))


def eps(element: CrystalElement, i: int) -> int:
    return max(value for _, value in sigmas(element, i))


def wt(element: CrystalElement) -> WeightVector:
    coefficients = [0] * element.datum.rank
    for letter, value in zip(element.word.letters, element.z):
        coefficients[letter - 1] += value
    return WeightVector(element.datum, tuple(coefficients))


def phi(element: CrystalElement, i: int) -> int:
    return eps(element, i) + wt(element).pairing(i)


def _argmax_positions(element: CrystalElement, i: int) -> List[int]:
    values = sigmas(element, i)
    top = max(value for _, value in values)
    return [k for k, value in values if value == top]


def _shift(element: CrystalElement, k: int, delta: int) -> CrystalElement:
    z = list(element.z)
    z[k] += delta
    return element.replace(z)


def f_tilde(element: CrystalElement, i: int) -> CrystalElement:
    # x_k + 1 at the largest argmax position, i.e. z_k - 1
    return _shift(element, max(_argmax_positions(element, i)), -1)


def e_tilde(element: CrystalElement, i: int) -> CrystalElement:
    return _shift(element, min(_argmax_positions(element, i)), 1)


def parse_operators(ops: Union[str, Sequence[str]]) -> List[Tuple[str, int]]:
    """
    Parse ``"f1 f2 e1"`` (or its tokens) into ``[("f", 1), ("f", 2), ("e", 1)]``.
    """
    tokens = ops.split() if isinstance(ops, str) else [t for op in ops for t in op.split()]
    parsed = []
    for token in tokens:
        match = OPERATOR_RE.match(token.strip().lower())
        if not match:
            raise ElementParseError(
                f"Cannot parse operator {token!r}, expected e.g. 'f1' or 'e2'"
            )
        parsed.append((match.group(1), int(match.group(2))))
    return parsed


def apply_operators(
    element: CrystalElement, ops: Union[str, Sequence[str]]
) -> List[Tuple[str, CrystalElement]]:
    """
    Apply the operators left to right, returning ``(op, result)`` per step.
    """
    trace = []
    for kind, i in parse_operators(ops):
        element.datum.check_letter(i)
        element = f_tilde(element, i) if kind == "f" else e_tilde(element, i)
        logger.debug("%s%d -> %s", kind, i, element)
        trace.append((f"{kind}{i}", element))
    return trace

"""
Tensor products of elementary crystals, evaluated by the tensor product rule.

This is an independent evaluation of the crystal structure of B_i used to
cross-check the flat sigma formulas in :mod:`.operators`. Values of eps and
phi live in Z together with -infinity.
"""
from dataclasses import dataclass
from typing import NamedTuple, Optional, Tuple, Union

from cellcrystals.cartan.datum import CartanDatum
from cellcrystals.cartan.words import Word

from .elements import CrystalElement, WeightVector

NEG_INF = float("-inf")

Value = Union[int, float]


@dataclass(frozen=True)
class Factor:
    """
    The element (value)_letter of the elementary crystal B_letter.
    """

    datum: CartanDatum
    letter: int
    value: int

    def eps(self, i: int) -> Value:
        return -self.value if i == self.letter else NEG_INF

    def phi(self, i: int) -> Value:
        return self.value if i == self.letter else NEG_INF

    def wt(self) -> WeightVector:
        return WeightVector(
            self.datum,
            tuple(self.value if j == self.letter else 0 for j in self.datum.letters),
        )

    def f(self, i: int) -> Optional["Factor"]:
        if i != self.letter:
            return None
        return Factor(self.datum, self.letter, self.value - 1)

    def e(self, i: int) -> Optional["Factor"]:
        if i != self.letter:
            return None
        return Factor(self.datum, self.letter, self.value + 1)

    def flatten(self) -> Tuple[Tuple[int, int], ...]:
        return ((self.letter, self.value),)


@dataclass(frozen=True)
class WeightFactor:
    """
    The single element t_lambda of T_lambda: eps = phi = -infinity, weight lambda.
    """

    weight: WeightVector

    def eps(self, i: int) -> Value:
        return NEG_INF

    def phi(self, i: int) -> Value:
        return NEG_INF

    def wt(self) -> WeightVector:
        return self.weight

    def f(self, i: int) -> None:
        return None

    def e(self, i: int) -> None:
        return None

    def flatten(self) -> Tuple[Tuple[int, int], ...]:
        return ()


@dataclass(frozen=True)
class Tensor:
    left: "Node"
    right: "Node"

    def eps(self, i: int) -> Value:
        return max(
            self.left.eps(i), self.right.eps(i) - self.left.wt().pairing(i)
        )

    def phi(self, i: int) -> Value:
        return max(
            self.right.phi(i), self.left.phi(i) + self.right.wt().pairing(i)
        )

    def wt(self) -> WeightVector:
        return self.left.wt() + self.right.wt()

    def f(self, i: int) -> Optional["Tensor"]:
        if self.left.phi(i) > self.right.eps(i):
            left = self.left.f(i)
            return None if left is None else Tensor(left, self.right)
        right = self.right.f(i)
        return None if right is None else Tensor(self.left, right)

    def e(self, i: int) -> Optional["Tensor"]:
        if self.left.phi(i) >= self.right.eps(i):
            left = self.left.e(i)
            return None if left is None else Tensor(left, self.right)
        right = self.right.e(i)
        return None if right is None else Tensor(self.left, right)

    def flatten(self) -> Tuple[Tuple[int, int], ...]:
        return self.left.flatten() + self.right.flatten()


Node = Union[Factor, WeightFactor, Tensor]


class OracleAction(NamedTuple):
    eps: Value
    phi: Value
    wt: WeightVector
    f: Optional[Node]
    e: Optional[Node]


def tensor_oracle(b1: Node, b2: Node, i: int) -> OracleAction:
    """
    The letter-i structure of ``b1 (x) b2``.
    """
    product = Tensor(b1, b2)
    return OracleAction(
        eps=product.eps(i),
        phi=product.phi(i),
        wt=product.wt(),
        f=product.f(i),
        e=product.e(i),
    )


def to_tree(element: CrystalElement, association: str = "left") -> Node:
    """
    Build ``((b1 (x) b2) (x) b3) ...`` (``"left"``) or ``b1 (x) (b2 (x) ...)``
    (``"right"``) from a flat element.
    """
    factors = [
        Factor(element.datum, letter, value)
        for letter, value in zip(element.word.letters, element.z)
    ]
    if not factors:
        raise ValueError("Cannot build a tensor tree for the empty word")
    if association == "left":
        tree = factors[0]
        for factor in factors[1:]:
            tree = Tensor(tree, factor)
        return tree
    if association == "right":
        tree = factors[-1]
        for factor in reversed(factors[:-1]):
            tree = Tensor(factor, tree)
        return tree
    raise ValueError(f"Unknown association {association!r}")


def from_tree(tree: Node, datum: CartanDatum) -> CrystalElement:
    flat = tree.flatten()
    return CrystalElement(
        Word(tuple(letter for letter, _ in flat), datum),
        tuple(value for _, value in flat),
    )

"""
Finite windows of the crystal graph of B_i.

The crystal graph has an i-coloured arrow b -> f_i(b). Since B_i is infinite
only the box [-radius, radius]^l is drawn, with the arrows that stay inside it.
"""
import logging
from itertools import product
from typing import Optional

import networkx as nx

from cellcrystals.cartan.words import Word
from cellcrystals.utils.exceptions import BoxSizeError, GraphTooLarge

from .elements import CrystalElement
from .operators import f_tilde

logger = logging.getLogger(__name__)

DEFAULT_VERTEX_CAP = 100_000

COLORS = ("red", "blue", "darkgreen", "orange", "purple", "brown", "black")


def box_size(length: int, radius: int) -> int:
    return (2 * radius + 1) ** length


def crystal_graph(
    word: Word, radius: int, vertex_cap: Optional[int] = DEFAULT_VERTEX_CAP
) -> nx.DiGraph:
    if radius < 0:
        raise BoxSizeError(f"The box radius must be >= 0, got {radius}")
    size = box_size(len(word), radius)
    if vertex_cap is not None and size > vertex_cap:
        raise GraphTooLarge(
            f"The box of radius {radius} for word {word} has {size} vertices, "
            f"more than the cap of {vertex_cap}"
        )

    logger.info("Building crystal graph of %s on a box of %d vertices", word, size)
    graph = nx.DiGraph(word=str(word), datum=word.datum.label, radius=radius)
    box = list(product(range(-radius, radius + 1), repeat=len(word)))
    for z in box:
        graph.add_node(z)

    letters = sorted(set(word.letters))
    for z in box:
        element = CrystalElement(word, z)
        for letter in letters:
            target = f_tilde(element, letter).z
            if target in graph:
                graph.add_edge(z, target, letter=letter)
    return graph


def to_dot(graph: nx.DiGraph) -> str:
    """
    Serialize with stable vertex names ``v0, v1, ...`` in box order.
    """
    names = {node: f"v{index}" for index, node in enumerate(graph.nodes)}
    labelled = nx.DiGraph()
    for node, name in names.items():
        labelled.add_node(name, label=f'"{",".join(map(str, node))}"')
    for source, target, letter in graph.edges(data="letter"):
        labelled.add_edge(
            names[source],
            names[target],
            label=str(letter),
            color=COLORS[(letter - 1) % len(COLORS)],
        )

    dot = nx.nx_pydot.to_pydot(labelled)
    dot.set_name("crystal")
    return dot.to_string()

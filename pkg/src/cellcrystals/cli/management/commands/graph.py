import logging

from django.conf import settings

from cellcrystals.cli.base import CrystalCommand
from cellcrystals.cli.config import dumps, write_output
from cellcrystals.crystals.graph import crystal_graph, to_dot

logger = logging.getLogger(__name__)


class Command(CrystalCommand):
    help = (
        "Export the crystal graph of B_i on the box [-radius, radius]^l, with\n"
        "an arrow b -> f_i(b) coloured by i whenever f_i(b) lies in the box."
    )
    formats = ("dot", "json")
    default_format = "dot"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument(
            "--word",
            help="Reduced word, e.g. 121 (default: the fixed longest word)",
        )
        parser.add_argument("--radius", type=int, default=1, help="Box radius (default: 1)")
        parser.add_argument(
            "--cap",
            type=int,
            help="Largest vertex count to build (default: GRAPH_VERTEX_CAP)",
        )

    def run(self, config, options):
        word = config.element.word
        cap = options["cap"]
        if cap is None:
            cap = settings.GRAPH_VERTEX_CAP
        graph = crystal_graph(word, config.radius, vertex_cap=cap)
        logger.info(
            "Exporting %d vertices and %d edges",
            graph.number_of_nodes(),
            graph.number_of_edges(),
        )

        if config.format == "dot":
            text = to_dot(graph)
        else:
            text = dumps(
                {
                    **graph.graph,
                    "nodes": [list(node) for node in graph.nodes],
                    "edges": [
                        {"source": list(source), "target": list(target), "letter": letter}
                        for source, target, letter in graph.edges(data="letter")
                    ],
                }
            )
        write_output(text, config.out, self.stdout)

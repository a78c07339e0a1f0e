import logging
from argparse import RawTextHelpFormatter

from django.core.management.base import BaseCommand, CommandError

from cellcrystals.utils.exceptions import CrystalError

from .config import RunConfig, read_datum, read_element

logger = logging.getLogger(__name__)

USAGE_ERROR = 2
CHECK_FAILURE = 1


class CrystalCommand(BaseCommand):
    """
    Shared parser setup: the datum is the first positional argument, library
    errors become usage errors with exit code 2.
    """

    formats = ("json", "text")
    default_format = "json"

    def create_parser(self, *args, **kwargs):
        parser = super().create_parser(*args, **kwargs)
        parser.formatter_class = RawTextHelpFormatter
        return parser

    def add_arguments(self, parser):
        parser.add_argument(
            "datum",
            help="Cartan datum, a family letter followed by the rank\n\nExample: B4",
        )
        parser.add_argument(
            "--format",
            choices=self.formats,
            default=self.default_format,
            help=f"Output format (default: {self.default_format})",
        )
        parser.add_argument("--out", help="Write the output to this file instead of stdout")

    def add_element_arguments(self, parser):
        parser.add_argument(
            "--word",
            help="Reduced word, e.g. 121 or 1,2,1 (default: the fixed longest word)",
        )
        coordinates = parser.add_mutually_exclusive_group()
        coordinates.add_argument(
            "--z",
            help="Coordinates z_1..z_l, comma separated\n\nExample: --z=1,-2,0",
        )
        coordinates.add_argument("--x", help="Coordinates in the x = -z convention")
        coordinates.add_argument(
            "--element",
            help='Element as inline JSON or a path to a JSON file\n\nExample: {"word": [1, 2, 1], "z": [0, 0, 1]}',
        )

    def handle(self, *args, **options):
        try:
            return self.run(self.build_config(options), options)
        except CrystalError as exc:
            raise CommandError(str(exc), returncode=USAGE_ERROR)

    def build_config(self, options) -> RunConfig:
        datum = read_datum(options["datum"])
        element = None
        if "word" in options:
            element = read_element(
                datum,
                word=options.get("word"),
                z=options.get("z"),
                x=options.get("x"),
                element=options.get("element"),
            )
        return RunConfig(
            datum=datum,
            command=self.__module__.rsplit(".", 1)[-1],
            element=element,
            radius=options.get("radius") if options.get("radius") is not None else 1,
            samples=options.get("samples"),
            seed=options.get("seed") or 0,
            out=options.get("out"),
            format=options["format"],
        )

    def run(self, config: RunConfig, options) -> None:
        raise NotImplementedError

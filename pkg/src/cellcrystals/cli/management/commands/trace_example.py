from typing import Optional

from cellcrystals.cartan.datum import CartanDatum
from cellcrystals.cli.base import CrystalCommand
from cellcrystals.cli.config import dumps, write_output
from cellcrystals.epsstar.procedures import WORKED_EXAMPLES, rightmost_script
from cellcrystals.utils.exceptions import DatumError


def render_trace(datum: CartanDatum, letter: Optional[int], fmt: str) -> str:
    """
    The word trace of the rightmost script, one word per line in text form.
    """
    if letter is None:
        if datum.label not in WORKED_EXAMPLES:
            raise DatumError(
                f"No worked example for {datum.label}, pass --letter "
                f"(worked examples: {', '.join(WORKED_EXAMPLES)})"
            )
        letter = WORKED_EXAMPLES[datum.label][1]

    script = rightmost_script(datum, letter)
    words = [str(word) for word in script.trace()]
    if fmt == "json":
        return dumps(
            {
                "datum": datum.label,
                "letter": letter,
                "script": script.as_dict(),
                "trace": words,
                "final_word": words[-1],
            }
        ) + "\n"

    lines = [words[0]]
    for move, word in zip(script.moves, words[1:]):
        lines.append(f"{word}  ({move})")
    return "\n".join(lines) + "\n"


class Command(CrystalCommand):
    help = (
        "Print the word trace of the script that moves a letter to the end of\n"
        "the fixed longest word. Without --letter the worked example of the\n"
        "datum is used (A4: 3, B4: 2, D4: 2)."
    )
    default_format = "text"

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--letter", type=int, help="Letter moved to the end")

    def run(self, config, options):
        write_output(
            render_trace(config.datum, options["letter"], config.format),
            config.out,
            self.stdout,
        )

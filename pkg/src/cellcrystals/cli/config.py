"""
Parsing of the shared command line inputs: the datum, an element and the
output target.
"""
import json
import os
import re
from dataclasses import dataclass
from typing import IO, Any, List, Optional

from django.core.serializers.json import DjangoJSONEncoder

from cellcrystals.cartan.datum import CartanDatum, parse_datum
from cellcrystals.cartan.words import Word, longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.utils.exceptions import BoxSizeError, ElementParseError

FORMATS = ("json", "text", "dot")

SEPARATOR_RE = re.compile(r"[\s,]+")


@dataclass
class RunConfig:
    datum: CartanDatum
    command: str
    element: Optional[CrystalElement] = None
    radius: int = 1
    samples: Optional[int] = None
    seed: int = 0
    out: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if self.radius < 0:
            raise BoxSizeError(f"The box radius must be >= 0, got {self.radius}")
        if self.samples is not None and self.samples < 0:
            raise BoxSizeError(f"The sample count must be >= 0, got {self.samples}")
        if self.format not in FORMATS:
            raise ElementParseError(f"Unknown output format {self.format!r}")


def parse_int_list(text: str, compact: bool = False) -> List[int]:
    """
    ``"1,-2, 0"`` or ``"1 -2 0"`` -> ``[1, -2, 0]``. With ``compact`` a single
    run of digits such as ``"121"`` is read digit by digit.
    """
    text = (text or "").strip().strip("[]()")
    if not text:
        return []
    parts = [part for part in SEPARATOR_RE.split(text) if part]
    try:
        if compact and len(parts) == 1 and parts[0].isdigit():
            return [int(char) for char in parts[0]]
        return [int(part) for part in parts]
    except ValueError:
        raise ElementParseError(f"Cannot read {text!r} as a list of integers")


def read_element(
    datum: CartanDatum,
    word: Optional[str] = None,
    z: Optional[str] = None,
    x: Optional[str] = None,
    element: Optional[str] = None,
) -> CrystalElement:
    """
    Build the element from ``--element`` (inline JSON or a file path) or from
    ``--word`` with ``--z``/``--x``. The word defaults to the fixed longest
    word, the coordinates to zero.
    """
    if element:
        if element.lstrip().startswith("{"):
            source = element
        elif os.path.exists(element):
            with open(element) as infile:
                source = infile.read()
        else:
            raise ElementParseError(f"{element!r} is neither JSON nor an existing file")
        try:
            data = json.loads(source)
        except json.JSONDecodeError as exc:
            raise ElementParseError(f"Invalid element JSON: {exc}")
        data.setdefault("datum", datum.label)
        return CrystalElement.from_dict(data, datum)

    if word:
        crystal_word = Word(tuple(parse_int_list(word, compact=True)), datum)
    else:
        crystal_word = longest_word(datum.family, datum.rank)

    if z is not None and x is not None:
        raise ElementParseError("Give the coordinates either as --z or as --x")
    if x is not None:
        return CrystalElement.from_x(crystal_word, parse_int_list(x))
    if z is not None:
        return CrystalElement(crystal_word, parse_int_list(z))
    return CrystalElement.zero(crystal_word)


def read_datum(label: str) -> CartanDatum:
    return parse_datum(label)


def dumps(data: Any) -> str:
    return json.dumps(data, cls=DjangoJSONEncoder, indent=2, sort_keys=True)


def write_output(text: str, out: Optional[str], stdout: IO) -> None:
    if out:
        with open(out, "w") as outfile:
            outfile.write(text.rstrip("\n") + "\n")
    else:
        stdout.write(text)

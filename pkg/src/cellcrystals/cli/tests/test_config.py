import json
import os
import tempfile

from django.test import SimpleTestCase

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import cartan_matrix
from cellcrystals.utils.exceptions import BoxSizeError, ElementParseError, WordError

from ..config import RunConfig, dumps, parse_int_list, read_element

B2 = cartan_matrix(Family.B, 2)


class ParseIntListTests(SimpleTestCase):
    def test_separators(self):
        self.assertEqual(parse_int_list("1,-2, 0"), [1, -2, 0])
        self.assertEqual(parse_int_list("1 -2 0"), [1, -2, 0])
        self.assertEqual(parse_int_list("[3]"), [3])
        self.assertEqual(parse_int_list(""), [])

    def test_compact_words(self):
        self.assertEqual(parse_int_list("1212", compact=True), [1, 2, 1, 2])
        self.assertEqual(parse_int_list("12"), [12])

    def test_garbage(self):
        with self.assertRaises(ElementParseError):
            parse_int_list("1,a")


class ReadElementTests(SimpleTestCase):
    def test_defaults_to_zero_on_longest_word(self):
        element = read_element(B2)

        self.assertEqual(element.word.letters, (1, 2, 1, 2))
        self.assertEqual(element.z, (0, 0, 0, 0))

    def test_inline_json(self):
        element = read_element(B2, element='{"word": [2, 1], "x": [1, -1]}')

        self.assertEqual(element.word.letters, (2, 1))
        self.assertEqual(element.z, (-1, 1))

    def test_json_file(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = os.path.join(tmpdir, "element.json")
            with open(path, "w") as outfile:
                json.dump({"word": [1, 2, 1, 2], "z": [1, 2, 3, 4]}, outfile)

            element = read_element(B2, element=path)

        self.assertEqual(element.z, (1, 2, 3, 4))

    def test_missing_file(self):
        with self.assertRaises(ElementParseError):
            read_element(B2, element="does-not-exist.json")

    def test_invalid_json(self):
        with self.assertRaises(ElementParseError):
            read_element(B2, element="{word")

    def test_length_mismatch(self):
        with self.assertRaises(ElementParseError):
            read_element(B2, z="1,2")

    def test_bad_letter(self):
        with self.assertRaises(WordError):
            read_element(B2, word="13")


class RunConfigTests(SimpleTestCase):
    def test_negative_radius(self):
        with self.assertRaises(BoxSizeError):
            RunConfig(datum=B2, command="graph", radius=-1)

    def test_negative_samples(self):
        with self.assertRaises(BoxSizeError):
            RunConfig(datum=B2, command="epsstar", samples=-1)

    def test_zero_samples(self):
        self.assertEqual(RunConfig(datum=B2, command="verify", samples=0).samples, 0)

    def test_unknown_format(self):
        with self.assertRaises(ElementParseError):
            RunConfig(datum=B2, command="graph", format="svg")


class DumpsTests(SimpleTestCase):
    def test_sorted_and_indented(self):
        self.assertEqual(dumps({"b": 1, "a": [1]}), '{\n  "a": [\n    1\n  ],\n  "b": 1\n}')

import json
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase


class TraceExampleCommandTests(SimpleTestCase):
    def call(self, *args, **kwargs):
        out = StringIO()
        call_command("trace_example", *args, stdout=out, **kwargs)
        return out.getvalue()

    def test_a4(self):
        words = [line.split()[0] for line in self.call("A4").splitlines()]

        self.assertEqual(
            words,
            [
                "1213214321",
                "1231214321",
                "1232124321",
                "1232142321",
                "1232143231",
                "1232143213",
            ],
        )

    def test_d4_json(self):
        data = json.loads(self.call("D4", format="json"))

        self.assertEqual(data["letter"], 2)
        self.assertEqual(data["final_word"], "123421423242")
        self.assertEqual(len(data["script"]["moves"]), len(data["trace"]) - 1)

    def test_other_datum_needs_letter(self):
        with self.assertRaises(CommandError) as context:
            self.call("C3")

        self.assertEqual(context.exception.returncode, 2)

    def test_letter(self):
        words = self.call("C3", letter=1).splitlines()

        self.assertEqual(words[0], "123123123")
        self.assertTrue(words[-1].split()[0].endswith("1"))

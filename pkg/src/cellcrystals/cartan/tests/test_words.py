from django.test import SimpleTestCase

from cellcrystals.utils.exceptions import WordError

from ..constants import Family
from ..datum import cartan_matrix
from ..words import Word, is_longest_word, longest_word


class LongestWordTests(SimpleTestCase):
    def test_a4(self):
        self.assertEqual(str(longest_word(Family.A, 4)), "1213214321")

    def test_d4(self):
        self.assertEqual(str(longest_word(Family.D, 4)), "123412341234")

    def test_b2(self):
        word = longest_word(Family.B, 2)

        self.assertEqual(word.letters, (1, 2, 1, 2))
        self.assertEqual(len(word), 4)

    def test_c3(self):
        self.assertEqual(str(longest_word("C", 3)), "123123123")

    def test_is_longest_word(self):
        a2 = cartan_matrix(Family.A, 2)

        self.assertTrue(is_longest_word(Word((1, 2, 1), a2)))
        self.assertFalse(is_longest_word(Word((2, 1, 2), a2)))


class WordTests(SimpleTestCase):
    def test_letters_must_be_nodes(self):
        with self.assertRaises(WordError):
            Word((1, 3), cartan_matrix(Family.A, 2))

    def test_positions(self):
        word = longest_word(Family.A, 3)

        self.assertEqual(word.positions(1), (0, 2, 5))
        self.assertEqual(word.positions(3), (3,))

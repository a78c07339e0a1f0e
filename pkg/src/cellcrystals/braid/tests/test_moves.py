from itertools import product

from django.test import SimpleTestCase

import numpy as np

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import cartan_matrix
from cellcrystals.cartan.weyl import is_reduced
from cellcrystals.cartan.words import Word, longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.crystals.operators import wt
from cellcrystals.utils.exceptions import IllegalMove, ScriptMismatch, UnsupportedMove

from ..constants import MoveKind
from ..laws import inverse_violation, morphism_violations
from ..moves import (
    BraidMove,
    BraidScript,
    apply_move,
    apply_script,
    four_move_kind,
    legal_moves,
)

A2 = cartan_matrix(Family.A, 2)


class ApplyMoveTests(SimpleTestCase):
    def test_three_move(self):
        element = CrystalElement(Word((1, 2, 1), A2), (1, 2, 3))

        result = apply_move(element, BraidMove(MoveKind.three, 1))

        self.assertEqual(result.word.letters, (2, 1, 2))
        self.assertEqual(result.z, (3, 4, -1))

    def test_zero_stays_zero(self):
        for family, rank in [(Family.A, 4), (Family.B, 3), (Family.C, 3), (Family.D, 4)]:
            word = longest_word(family, rank)
            for move in legal_moves(word):
                with self.subTest(word=str(word), move=str(move)):
                    result = apply_move(CrystalElement.zero(word), move)

                    self.assertEqual(result.z, (0,) * len(word))

    def test_move_outside_window(self):
        element = CrystalElement.zero(Word((1, 2, 1), A2))

        with self.assertRaises(IllegalMove) as context:
            apply_move(element, BraidMove(MoveKind.three, 2))

        self.assertEqual(context.exception.position, 2)

    def test_wrong_bond(self):
        element = CrystalElement.zero(Word((1, 2), A2))

        with self.assertRaises(IllegalMove):
            apply_move(element, BraidMove(MoveKind.two, 1))

    def test_four_move_orientation(self):
        b2 = cartan_matrix(Family.B, 2)
        c2 = cartan_matrix(Family.C, 2)

        self.assertIs(four_move_kind(b2, 1, 2), MoveKind.four_ij)
        self.assertIs(four_move_kind(c2, 1, 2), MoveKind.four_ji)
        with self.assertRaises(IllegalMove):
            apply_move(
                CrystalElement.zero(longest_word(Family.B, 2)),
                BraidMove(MoveKind.four_ji, 1),
            )
        with self.assertRaises(IllegalMove):
            four_move_kind(A2, 1, 2)

    def test_weight_preserved_on_random_cases(self):
        rng = np.random.default_rng(2024)
        words = [longest_word(family, rank) for family, rank in
                 [(Family.A, 4), (Family.B, 3), (Family.C, 4), (Family.D, 5)]]
        cases = 0
        while cases < 1000:
            word = words[cases % len(words)]
            moves = list(legal_moves(word))
            move = moves[int(rng.integers(len(moves)))]
            element = CrystalElement(word, rng.integers(-5, 6, size=len(word)).tolist())

            self.assertEqual(wt(apply_move(element, move)), wt(element))
            cases += 1

    def test_reducedness_preserved(self):
        script = BraidScript(
            longest_word(Family.A, 3),
            (BraidMove(MoveKind.three, 1), BraidMove(MoveKind.three, 3), BraidMove(MoveKind.two, 5)),
        )

        for word in script.trace():
            self.assertTrue(is_reduced(word))


class MorphismLawTests(SimpleTestCase):
    """
    The braid maps are crystal isomorphisms on small cellular crystals.
    """

    def assertLawsOnBox(self, word, move, radius=2):
        for z in product(range(-radius, radius + 1), repeat=len(word)):
            element = CrystalElement(word, z)
            with self.subTest(word=str(word), move=str(move), z=z):
                self.assertEqual(morphism_violations(element, move), [])
                self.assertFalse(inverse_violation(element, move))

    def test_three_move(self):
        self.assertLawsOnBox(Word((1, 2, 1), A2), BraidMove(MoveKind.three, 1))

    def test_four_move_ij(self):
        self.assertLawsOnBox(longest_word(Family.B, 2), BraidMove(MoveKind.four_ij, 1))

    def test_four_move_ji(self):
        self.assertLawsOnBox(longest_word(Family.C, 2), BraidMove(MoveKind.four_ji, 1))

    def test_four_move_ij_on_c2(self):
        self.assertLawsOnBox(
            Word((2, 1, 2, 1), cartan_matrix(Family.C, 2)), BraidMove(MoveKind.four_ij, 1)
        )

    def test_two_move(self):
        a3 = cartan_matrix(Family.A, 3)

        self.assertLawsOnBox(Word((1, 3, 2), a3), BraidMove(MoveKind.two, 1))


class BraidScriptTests(SimpleTestCase):
    def setUp(self):
        super().setUp()
        self.source = longest_word(Family.A, 3)
        self.script = BraidScript(
            self.source,
            (BraidMove(MoveKind.three, 1), BraidMove(MoveKind.three, 3), BraidMove(MoveKind.two, 5)),
        )

    def test_trace(self):
        self.assertEqual(
            [str(word) for word in self.script.trace()],
            ["121321", "212321", "213231", "213213"],
        )
        self.assertEqual(str(self.script.target), "213213")

    def test_empty_script(self):
        element = CrystalElement(self.source, (1, 2, 3, 4, 5, 6))

        self.assertEqual(apply_script(element, BraidScript(self.source)), element)

    def test_inverse_script_undoes(self):
        rng = np.random.default_rng(7)
        for _ in range(50):
            element = CrystalElement(self.source, rng.integers(-5, 6, size=6).tolist())

            there = apply_script(element, self.script)
            back = apply_script(there, self.script.inverse())

            self.assertEqual(back, element)

    def test_script_matches_moves(self):
        element = CrystalElement(self.source, (1, 1, 0, 1, 1, 0))
        expected = element
        for move in self.script.moves:
            expected = apply_move(expected, move)

        self.assertEqual(apply_script(element, self.script), expected)

    def test_source_mismatch(self):
        element = CrystalElement.zero(self.script.target)

        with self.assertRaises(ScriptMismatch):
            apply_script(element, self.script)

    def test_illegal_intermediate_move(self):
        with self.assertRaises(IllegalMove):
            BraidScript(self.source, (BraidMove(MoveKind.three, 1), BraidMove(MoveKind.three, 2)))

    def test_dict_round_trip(self):
        data = self.script.as_dict()

        self.assertEqual(data["moves"][0], {"kind": "Three", "pos": 1})
        self.assertEqual(BraidScript.from_dict(data, self.source.datum), self.script)

    def test_six_move_is_unsupported(self):
        with self.assertRaises(UnsupportedMove):
            BraidScript.from_dict(
                {"source": [1, 2, 1], "moves": [{"kind": "Six", "pos": 1}]}, A2
            )

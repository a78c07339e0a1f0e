from itertools import product

from django.test import SimpleTestCase

import factory.random
import numpy as np

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import cartan_matrix
from cellcrystals.cartan.words import Word, longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.crystals.operators import wt
from cellcrystals.crystals.tests.factories import CrystalElementFactory
from cellcrystals.utils.exceptions import HelperRangeError, WordError

from ..formulas import HelperValues, eps_star_formula, helpers
from ..functions import eps_star_alg, eps_star_report, eps_star_via
from ..procedures import a3_letter3_scripts
from .test_procedures import SUPPORTED

INTRO_Z = (1, 1, 0, 1, 1, 0)


class IntroElementTests(SimpleTestCase):
    def setUp(self):
        super().setUp()
        self.x = CrystalElement(longest_word(Family.A, 3), INTRO_Z)

    def test_eps_star_vanishes(self):
        for i in (1, 2, 3):
            with self.subTest(i=i):
                self.assertEqual(eps_star_alg(self.x, i), 0)
                self.assertEqual(eps_star_formula(self.x, i), 0)

    def test_weight_is_not_zero(self):
        self.assertFalse(wt(self.x).is_zero)

    def test_report(self):
        report = eps_star_report(self.x)

        self.assertTrue(report.matches)
        self.assertEqual(
            [entry.final_word for entry in report.entries],
            ["121321", "123212", "213213"],
        )
        data = report.as_dict()
        self.assertEqual(data["datum"], "A3")
        self.assertEqual(data["entries"][2]["script_length"], 3)


class ZeroElementTests(SimpleTestCase):
    def test_all_zero(self):
        for family, rank in SUPPORTED:
            x = CrystalElement.zero(longest_word(family, rank))
            for i in x.datum.letters:
                with self.subTest(datum=x.datum.label, i=i):
                    self.assertEqual(eps_star_alg(x, i), 0)
                    self.assertEqual(eps_star_formula(x, i), 0)

    def test_helpers_vanish(self):
        b4 = CrystalElement.zero(longest_word(Family.B, 4))
        d5 = CrystalElement.zero(longest_word(Family.D, 5))

        self.assertEqual(helpers(b4, 2), HelperValues(eta=0, zeta=0))
        self.assertEqual(helpers(d5, 3), HelperValues(theta=0, kappa=0))


class HelperTests(SimpleTestCase):
    def test_b4_eta_2(self):
        rng = np.random.default_rng(11)
        word = longest_word(Family.B, 4)
        for _ in range(200):
            x = CrystalElement(word, rng.integers(-5, 6, size=len(word)).tolist())
            z = x.z_at

            self.assertEqual(
                helpers(x, 2).eta, -max(-z(2, 1), z(3, 1) - z(2, 2), z(3, 2) - z(2, 3))
            )

    def test_d4_eps_star_2(self):
        rng = np.random.default_rng(12)
        word = longest_word(Family.D, 4)
        for _ in range(200):
            x = CrystalElement(word, rng.integers(-5, 6, size=len(word)).tolist())
            z = x.z_at
            theta = helpers(x, 2).theta

            self.assertEqual(
                eps_star_formula(x, 2),
                max(
                    -theta,
                    z(3, 3) - z(2, 4),
                    z(3, 2) - z(2, 3) - z(2, 4),
                    z(3, 4) - z(2, 3),
                    z(3, 4) + z(3, 3) - z(3, 2),
                ),
            )

    def test_a3_eps_star_3(self):
        x = CrystalElement(longest_word(Family.A, 3), INTRO_Z)
        z = x.z_at

        self.assertEqual(
            eps_star_formula(x, 3), max(-z(1, 1), z(2, 1) - z(1, 2), z(2, 2) - z(1, 3))
        )
        self.assertEqual(eps_star_formula(x, 1), -z(3, 1))

    def test_out_of_range(self):
        b3 = CrystalElement.zero(longest_word(Family.B, 3))
        d4 = CrystalElement.zero(longest_word(Family.D, 4))
        a3 = CrystalElement.zero(longest_word(Family.A, 3))

        with self.assertRaises(HelperRangeError):
            helpers(b3, 3)
        with self.assertRaises(HelperRangeError):
            helpers(d4, 3)
        with self.assertRaises(HelperRangeError):
            helpers(a3, 1)

    def test_word_must_be_longest(self):
        x = CrystalElement.zero(Word((2, 1, 2), cartan_matrix(Family.A, 2)))

        with self.assertRaises(WordError):
            eps_star_formula(x, 1)
        with self.assertRaises(WordError):
            eps_star_alg(x, 1)


class FormulaAgreesWithAlgorithmTests(SimpleTestCase):
    """
    The closed formulas reproduce the braid move computation.
    """

    def assertAgrees(self, x):
        for i in x.datum.letters:
            self.assertEqual(
                eps_star_alg(x, i), eps_star_formula(x, i), f"{x.datum.label} i={i} at {x}"
            )

    def test_exhaustive_small_words(self):
        for family, rank in [
            (Family.A, 1),
            (Family.A, 2),
            (Family.A, 3),
            (Family.B, 2),
            (Family.B, 3),
            (Family.C, 2),
            (Family.C, 3),
        ]:
            word = longest_word(family, rank)
            with self.subTest(datum=word.datum.label):
                for z in product((-1, 0, 1), repeat=len(word)):
                    self.assertAgrees(CrystalElement(word, z))

    def test_sampled_large_words(self):
        factory.random.reseed_random(2024)
        for family, rank in [
            (Family.A, 4),
            (Family.A, 5),
            (Family.A, 6),
            (Family.B, 4),
            (Family.C, 4),
            (Family.D, 4),
            (Family.D, 5),
        ]:
            with self.subTest(family=family, rank=rank):
                for x in CrystalElementFactory.build_batch(
                    300, family=family, rank=rank, radius=5
                ):
                    self.assertAgrees(x)


class ScriptIndependenceTests(SimpleTestCase):
    def test_a3_letter_3(self):
        procedure, alternative = a3_letter3_scripts()
        word = procedure.source

        for z in product(range(-2, 3), repeat=len(word)):
            x = CrystalElement(word, z)
            with self.subTest(z=z):
                self.assertEqual(
                    eps_star_via(x, procedure), eps_star_via(x, alternative)
                )

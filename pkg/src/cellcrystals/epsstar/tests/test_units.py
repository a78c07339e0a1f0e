from django.test import SimpleTestCase

from cellcrystals.cartan.constants import Family
from cellcrystals.cartan.datum import cartan_matrix
from cellcrystals.cartan.words import longest_word
from cellcrystals.crystals.elements import CrystalElement
from cellcrystals.utils.exceptions import BoxSizeError

from ..tasks import fan_out_scan, scan_unit_sub_box
from ..units import (
    SubBoxResult,
    is_unit,
    verify_unit_theorem,
    weight_zero_points,
    zero_sum_tuples,
)


class IsUnitTests(SimpleTestCase):
    def test_zero_is_unit(self):
        for family, rank in [(Family.A, 3), (Family.B, 3), (Family.C, 2), (Family.D, 4)]:
            word = longest_word(family, rank)

            self.assertTrue(is_unit(CrystalElement.zero(word)))

    def test_intro_element_fails_on_weight(self):
        x = CrystalElement(longest_word(Family.A, 3), (1, 1, 0, 1, 1, 0))

        verdict = is_unit(x)

        self.assertFalse(verdict)
        self.assertEqual(verdict.condition, "wt")
        self.assertEqual(verdict.letter, 1)
        self.assertEqual(verdict.value, 1)

    def test_single_nonzero_coordinate(self):
        word = longest_word(Family.B, 2)
        for k in range(len(word)):
            z = [0] * len(word)
            z[k] = -2
            with self.subTest(k=k):
                self.assertFalse(is_unit(CrystalElement(word, z)))

    def test_weight_zero_but_not_unit(self):
        # wt = 0 while eps_1^* = -z_(2,1) = 1
        x = CrystalElement(longest_word(Family.A, 2), (1, 0, -1))

        verdict = is_unit(x)

        self.assertFalse(verdict)
        self.assertEqual(verdict.condition, "eps_star")
        self.assertEqual(verdict.letter, 1)
        self.assertEqual(verdict.value, 1)


class EnumerationTests(SimpleTestCase):
    def test_zero_sum_tuples(self):
        self.assertEqual(zero_sum_tuples(1, 3), [(0,)])
        self.assertEqual(len(zero_sum_tuples(3, 2)), 19)
        self.assertEqual(len(zero_sum_tuples(3, 1)), 7)

    def test_weight_zero_points(self):
        a3 = cartan_matrix(Family.A, 3)

        points = list(weight_zero_points(a3, 2))

        self.assertEqual(len(points), 19 * 5)
        self.assertEqual(len(set(points)), len(points))
        self.assertEqual(
            len(list(weight_zero_points(a3, 2, first=0)))
            + len(list(weight_zero_points(a3, 2, first=1)))
            + len(list(weight_zero_points(a3, 2, first=-1)))
            + len(list(weight_zero_points(a3, 2, first=2)))
            + len(list(weight_zero_points(a3, 2, first=-2))),
            len(points),
        )


class UnitTheoremTests(SimpleTestCase):
    def assertUniqueUnit(self, family, rank, radius, wt_zero_count):
        datum = cartan_matrix(family, rank)
        length = len(longest_word(family, rank))

        summary = verify_unit_theorem(datum, radius)

        self.assertTrue(summary["pass"])
        self.assertEqual(summary["unit_candidates"], [[0] * length])
        self.assertEqual(summary["points_scanned"], (2 * radius + 1) ** length)
        self.assertEqual(summary["wt_zero_count"], wt_zero_count)

    def test_a2(self):
        self.assertUniqueUnit(Family.A, 2, 3, 7)

    def test_a3(self):
        self.assertUniqueUnit(Family.A, 3, 2, 95)

    def test_b3(self):
        self.assertUniqueUnit(Family.B, 3, 1, 7 ** 3)

    def test_c3(self):
        self.assertUniqueUnit(Family.C, 3, 1, 7 ** 3)

    def test_d4(self):
        self.assertUniqueUnit(Family.D, 4, 1, 7 ** 4)

    def test_radius_must_be_positive(self):
        for radius in (0, -2):
            with self.subTest(radius=radius):
                with self.assertRaises(BoxSizeError):
                    verify_unit_theorem(cartan_matrix(Family.A, 2), radius)


class TaskTests(SimpleTestCase):
    def test_task_result(self):
        data = scan_unit_sub_box.apply(args=("A3", 2, 0)).get()

        result = SubBoxResult.from_dict(data)
        self.assertEqual(result.first, 0)
        self.assertEqual(result.unit_candidates, [(0,) * 6])

    def test_fan_out_matches_in_process(self):
        datum = cartan_matrix(Family.B, 2)

        self.assertEqual(
            verify_unit_theorem(datum, 2, scanner=fan_out_scan),
            verify_unit_theorem(datum, 2),
        )

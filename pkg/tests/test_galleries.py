import unittest

from chamberzeta.algebra import series_from_ratfn
from chamberzeta.closed_form import closed_count, zeta_closed_form
from chamberzeta.errors import SeriesError
from chamberzeta.galleries import (ClosedWalk, classify, enumerate_closed, euler_product_series,
                                   primitive_classes_up_to, weighted_count)
from chamberzeta.quotient import PointedChamber, gallery_panel_types
from chamberzeta.transfer import trace_stabilized
from .samples import *

TRIANGLE_WALK = tuple(PointedChamber.parse(t) for t in TRIANGLE)


class TestEnumerateClosed(unittest.TestCase):
    def test_short_lengths(self):
        self.assertEqual(enumerate_closed(1), [])
        self.assertEqual(enumerate_closed(2), [])

    def test_triangle(self):
        walks = enumerate_closed(3)
        self.assertEqual(len(walks), 3)
        self.assertEqual({w.rotate(-w.chambers.index(TRIANGLE_WALK[0])).chambers for w in walks},
                         {TRIANGLE_WALK})

    def test_bad_length(self):
        self.assertRaises(ValueError, enumerate_closed, 0)

    def test_workers(self):
        self.assertEqual(len(enumerate_closed(6, workers=2)), len(enumerate_closed(6)))


class TestClassify(unittest.TestCase):
    def test_one_class(self):
        classes = classify(enumerate_closed(3))
        self.assertEqual(len(classes), 1)
        cls = classes[0]
        self.assertEqual((cls.length, cls.period), (3, 3))
        self.assertEqual(cls.weight, Q ** 2 * (Q - 1))
        self.assertEqual(cls.describe(),
                         "len=3 period=3 weight=q^3 - q^2 cycle=c:0,0,1>c:0,0,2>c:0,0,3")

    def test_doubled_triangle(self):
        doubled = ClosedWalk(TRIANGLE_WALK * 2)
        classes = classify([doubled, doubled.rotate(1)])
        self.assertEqual(len(classes), 1)
        self.assertEqual(classes[0].period, 3)
        self.assertEqual(classes[0].weight, (Q ** 2 * (Q - 1)) ** 2)

    def test_empty(self):
        self.assertEqual(classify([]), [])

    def test_rotation_invariant_weight(self):
        for walk in enumerate_closed(6):
            self.assertEqual(walk.weight(), walk.rotate(2).weight())

    def test_powers_come_from_primitive(self):
        primitive = {c.canonical: c for c in classify(enumerate_closed(3))}
        for cls in classify(enumerate_closed(6)):
            if cls.is_primitive:
                continue
            root = primitive[cls.canonical[:cls.period]]
            self.assertEqual(cls.weight, root.weight ** (cls.length // cls.period))


class TestWeightedCount(unittest.TestCase):
    def test_symbolic(self):
        self.assertEqual(weighted_count(3), 3 * Q ** 3 - 3 * Q ** 2)

    def test_q2(self):
        self.assertEqual(weighted_count(6, Q2), 96)
        self.assertEqual(weighted_count(5, Q2), 0)
        self.assertEqual(weighted_count(9, Q2), 1344)

    def test_primitive_mass(self):
        mass = sum((c.weight * c.period for c in primitive_classes_up_to(6, Q2) if c.length == 6),
                   QPoly())
        self.assertEqual(mass, 96 - 3 * 4 ** 2)

    def test_primitive_classes(self):
        self.assertEqual(primitive_classes_up_to(2), [])
        self.assertEqual(len(primitive_classes_up_to(3)), 1)
        self.assertRaises(ValueError, primitive_classes_up_to, 0)


class TestThreeRoutes(unittest.TestCase):
    def test_counts_agree_across_q(self):
        for value in (2, 3, 4, 5, 7):
            q_mode = QMode.numeric(value)
            for n in range(1, 13):
                expected = closed_count(n, q_mode)
                self.assertEqual(weighted_count(n, q_mode), expected, f"q={value} n={n}")
                self.assertEqual(trace_stabilized(n, q_mode), expected, f"q={value} n={n}")

    def test_panel_types_cycle(self):
        for n in (3, 6):
            for cls in classify(enumerate_closed(n)):
                cycle = list(cls.canonical)
                types = gallery_panel_types(cycle + cycle[:1])
                self.assertEqual(len(types), n)
                self.assertTrue(all((types[(j + 1) % n] - types[j]) % 3 == 1 for j in range(n)),
                                cls.describe())


class TestEulerProduct(unittest.TestCase):
    def test_q2(self):
        self.assertEqual(euler_product_series(3, Q2).to_upoly(), upoly(1, 0, 0, 4))
        self.assertEqual(euler_product_series(6, Q2).to_upoly(), upoly(1, 0, 0, 4, 0, 0, 24))

    def test_matches_closed_form(self):
        for q_mode in (Q2, Q3):
            self.assertEqual(euler_product_series(9, q_mode),
                             series_from_ratfn(zeta_closed_form(q_mode), 9))

    def test_empty_product(self):
        self.assertEqual(euler_product_series(2, Q2).to_upoly(), 1)

    def test_order_exceeds_length(self):
        self.assertRaises(SeriesError, euler_product_series, 3, Q2, 6)


if __name__ == "__main__":
    unittest.main()

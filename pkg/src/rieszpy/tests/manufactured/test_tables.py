import unittest
from rieszpy.manufactured import REFERENCE_TABLES, reference_row
from rieszpy.manufactured.tables import ALPHAS, DEGREES, FLOOR_CELLS, NS


class TablesTestCase(unittest.TestCase):
    def test_layout(self):
        for solution in ("poly33", "sinpix2"):
            self.assertEqual(sorted(REFERENCE_TABLES[solution]), list(ALPHAS))
            for alpha in ALPHAS:
                self.assertEqual(sorted(REFERENCE_TABLES[solution][alpha]), list(DEGREES))
                for rows in REFERENCE_TABLES[solution][alpha].values():
                    self.assertEqual([r[0] for r in rows], list(NS))
                    self.assertIsNone(rows[0][2])

    def test_lookup(self):
        self.assertEqual(reference_row("poly33", 1.5, 4, 32), (4.9498e-08, 4.37))
        self.assertEqual(reference_row("sinpix2", 1.8, 5, 64), (3.2796e-08, 4.45))
        self.assertEqual(reference_row("sinpix2", 1.2, 5, 64)[0], 1.0289e-08)
        self.assertIn(("sinpix2", 1.2, 5, 64), FLOOR_CELLS)

    def test_missing(self):
        with self.assertRaises(ValueError):
            reference_row("poly33", 1.3, 2, 8)
        with self.assertRaises(ValueError):
            reference_row("poly33", 1.2, 2, 128)

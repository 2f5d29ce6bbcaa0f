import time
import unittest

from src.enumalg import (
    brute_force_enumerate,
    enum_bounds,
    enumerate_semigroups,
    length_range,
    level_counts,
    lower_conductor,
    lower_last_generator,
    search_tree,
    sharp_family,
)
from src.errors import SemigroupError
from src.numsg import recursive_conductor, validate


def gens(classes):
    return [s.r for s in classes]


class LengthRangeTests(unittest.TestCase):
    def test_thresholds(self):
        self.assertEqual(length_range(2), [1])
        self.assertEqual(length_range(14), [1])
        self.assertEqual(length_range(16), [1, 2])
        self.assertEqual(length_range(83), [1, 2])
        self.assertEqual(length_range(84), [1, 2, 3])
        self.assertEqual(length_range(-1), [])

    def test_sharp_family_reaches_each_new_length(self):
        for h in range(1, 6):
            mu = int(lower_conductor(h))
            self.assertEqual(length_range(mu)[-1], h)
            if h > 1:
                self.assertEqual(length_range(mu - 2)[-1], h - 1)


class BoundsTests(unittest.TestCase):
    def test_level_two_windows(self):
        bounds = enum_bounds(28, 2)
        self.assertEqual(bounds.D, (2,))
        self.assertEqual(bounds.window(2), (19, 25))
        self.assertEqual(bounds.b_lower, 16)
        self.assertEqual(enum_bounds(16, 2).window(2), (13, 13))

    def test_exact_floors_of_M_and_a_h(self):
        self.assertEqual(enum_bounds(28, 2).M_floor, 5)
        self.assertEqual(enum_bounds(16, 2).M_floor, 4)
        self.assertEqual(enum_bounds(28, 2).a_floor, 2)
        for mu in range(0, 200, 2):
            for h in range(1, 5):
                bounds = enum_bounds(mu, h)
                self.assertTrue(bounds.a_h_at_least(bounds.a_floor))
                self.assertFalse(bounds.a_h_at_least(bounds.a_floor + 1))
                self.assertEqual(bounds.D, tuple(range(2, bounds.a_floor + 1)))
                self.assertEqual(bounds.D == (), mu < bounds.b_lower, (mu, h))
            self.assertEqual(len(length_range(mu)), max(bounds.M_floor.bit_length() - 1, 0), mu)

    def test_negative_conductor(self):
        with self.assertRaises(SemigroupError):
            enum_bounds(-2, 1)

    def test_window_for_missing_d(self):
        with self.assertRaises(SemigroupError):
            enum_bounds(28, 2).window(3)

    def test_polynomials_match_sharp_family(self):
        for h in range(1, 7):
            s = sharp_family(h)
            self.assertEqual(s.conductor, lower_conductor(h))
            self.assertEqual(s.r[-1], lower_last_generator(h))

    def test_sharp_family_members(self):
        self.assertEqual(sharp_family(1).r, (2, 3))
        self.assertEqual(sharp_family(2).r, (4, 6, 13))
        self.assertEqual(sharp_family(3).r, (8, 12, 26, 53))
        self.assertEqual([sharp_family(h).conductor for h in (1, 2, 3)], [2, 16, 84])
        with self.assertRaises(SemigroupError):
            sharp_family(0)


class EnumerationTests(unittest.TestCase):
    def test_milnor_28(self):
        self.assertEqual(gens(enumerate_semigroups(28)), [(2, 29), (4, 6, 25), (4, 10, 21), (5, 8)])

    def test_small_values(self):
        self.assertEqual(gens(enumerate_semigroups(2)), [(2, 3)])
        self.assertEqual(gens(enumerate_semigroups(16)), [(2, 17), (4, 6, 13)])
        self.assertEqual(enumerate_semigroups(0), [])
        self.assertEqual(enumerate_semigroups(15), [])
        self.assertEqual(enumerate_semigroups(-4), [])

    def test_agrees_with_brute_force(self):
        for m in range(2, 41, 2):
            self.assertEqual(gens(enumerate_semigroups(m)), gens(brute_force_enumerate(m, m + 1)), m)

    def test_brute_force_cap(self):
        with self.assertRaises(ValueError):
            brute_force_enumerate(10, 10)

    def test_every_class_is_valid_with_matching_conductor(self):
        for m in range(2, 101, 2):
            for s in enumerate_semigroups(m):
                self.assertTrue(validate(s.r).valid, s)
                self.assertEqual(s.conductor, m)
                self.assertEqual(recursive_conductor(s), m)

    def test_loop_order_does_not_change_the_result(self):
        for m in (28, 60, 84, 100):
            self.assertEqual(enumerate_semigroups(m, r_major=True), enumerate_semigroups(m))


class SearchTreeTests(unittest.TestCase):
    def test_nodes_reproduce_mu(self):
        def walk(nodes, mu):
            for node in nodes:
                self.assertEqual(node.mu, mu)
                walk(node.children, node.mu_prev)

        for m in (28, 84, 100):
            for h in length_range(m):
                walk(search_tree(m, h), m)

    def test_level_counts_cover_each_length(self):
        counts = level_counts(84)
        self.assertEqual(sorted(counts), [1, 2, 3])
        self.assertGreaterEqual(counts[3], 1)
        self.assertIn((8, 12, 26, 53), gens(enumerate_semigroups(84)))

    def test_per_level_and_per_window_counts_are_bounded(self):
        for m in range(2, 161, 2):
            for h, count in level_counts(m).items():
                bounds = enum_bounds(m, h)
                self.assertLessEqual(count, m - (bounds.b_lower / 2 - 1), (m, h))
                if h == 1:
                    continue
                nodes = search_tree(m, h)
                for d in bounds.D:
                    lo, hi = bounds.window(d)
                    self.assertLessEqual(sum(1 for node in nodes if node.d == d), max(hi - lo + 1, 0), (m, h, d))
                self.assertTrue(all(node.d in bounds.D for node in nodes))


class LowerBoundTests(unittest.TestCase):
    def test_every_class_meets_both_lower_bounds(self):
        for m in range(2, 161, 2):
            for s in enumerate_semigroups(m):
                self.assertGreaterEqual(s.conductor, lower_conductor(s.h), str(s))
                self.assertGreaterEqual(s.r[-1], lower_last_generator(s.h), str(s))

    def test_milnor_160_within_budget(self):
        search_tree.cache_clear()
        start = time.perf_counter()
        classes = enumerate_semigroups(160)
        self.assertLess(time.perf_counter() - start, 60)
        self.assertEqual(len(classes), 44)
        self.assertTrue(all(s.conductor == 160 for s in classes))


if __name__ == "__main__":
    unittest.main()

import unittest

from src.enumalg import enumerate_semigroups
from src.errors import InternalConsistencyError, SemigroupError
from src.numsg import (
    conductor,
    derive_char,
    from_puiseux_pairs,
    gaps,
    identity_defect,
    membership,
    minimal_arrangement,
    parse_generators,
    puiseux_pairs,
    recursive_conductor,
    scaled_prefix,
    theta_rep,
    theta_rep_scan,
    validate,
)


def dp_members(gens, limit):
    reach = [False] * (limit + 1)
    reach[0] = True
    for n in range(1, limit + 1):
        reach[n] = any(n >= g and reach[n - g] for g in gens)
    return reach


def is_minimal_by_dp(gens):
    for k in range(1, len(gens)):
        if dp_members(gens[:k], gens[k])[gens[k]]:
            return False
    return True


CORPUS = [(2, 3), (5, 8), (2, 29), (4, 6, 13), (4, 6, 25), (4, 10, 21), (8, 12, 50, 101), (6, 9, 22), (8, 12, 26, 53)]


class CharacteristicSequenceTests(unittest.TestCase):
    def test_worked_example_sequences(self):
        s = derive_char((8, 12, 50, 101))
        self.assertEqual(s.d, (8, 4, 2, 1))
        self.assertEqual(s.e, (2, 2, 2))
        self.assertEqual(s.m, (12, 38, 39))
        self.assertEqual(s.h, 3)
        self.assertEqual(s.conductor, 156)
        self.assertEqual(conductor(s), 156)
        self.assertEqual(str(s), "<8,12,50,101>")

    def test_smooth_branch_has_zero_conductor(self):
        s = derive_char((1,))
        self.assertTrue(s.is_valid)
        self.assertEqual(s.conductor, 0)
        self.assertEqual(gaps(s), [])

    def test_identity_between_r_and_m_holds(self):
        for gens in CORPUS:
            s = derive_char(gens)
            for k in range(2, s.h + 1):
                self.assertEqual(identity_defect(s, k), 0, gens)

    def test_conductor_formulas_agree_with_recursion(self):
        for gens in CORPUS:
            s = derive_char(gens)
            self.assertEqual(recursive_conductor(s), s.conductor, gens)

    def test_invalid_data_has_no_conductor(self):
        s = derive_char((4, 6, 11))
        self.assertIsNone(s.conductor)
        with self.assertRaises(SemigroupError):
            conductor(s)
        with self.assertRaises(SemigroupError):
            membership(s, 3)

    def test_parse_generators_accepts_commas_and_spaces(self):
        self.assertEqual(parse_generators("8, 12 50,101"), (8, 12, 50, 101))
        with self.assertRaises(SemigroupError):
            parse_generators("4 six")
        with self.assertRaises(SemigroupError):
            parse_generators("  ")

    def test_scaled_prefix_is_semigroup_of_approximate_root(self):
        s = derive_char((8, 12, 50, 101))
        self.assertEqual(scaled_prefix(s, 3).r, (4, 6, 25))
        self.assertEqual(scaled_prefix(s, 3).conductor, 28)
        self.assertEqual(scaled_prefix(s, 2).r, (2, 3))
        self.assertEqual(scaled_prefix(s, 1).r, (1,))


class ValidationTests(unittest.TestCase):
    def test_growth_condition_violation_is_reported_with_level(self):
        report = validate((4, 6, 11))
        self.assertFalse(report.valid)
        self.assertEqual([str(f) for f in report.failures], ["star-violated(1)"])

    def test_every_failure_is_reported(self):
        report = validate((4, 6, 8, 13))
        self.assertEqual([str(f) for f in report.failures], ["star-violated(1)", "not-minimal(2)"])
        self.assertEqual(validate((6, 4)).tags(), ["not-increasing", "gcd-not-one"])
        self.assertEqual(validate((4, 6)).tags(), ["gcd-not-one"])

    def test_degenerate_inputs(self):
        self.assertEqual(validate(()).tags(), ["empty"])
        self.assertEqual(validate((0, 3)).tags(), ["non-positive"])
        self.assertTrue(validate((1,)).valid)
        self.assertEqual(validate((2,)).tags(), ["gcd-not-one"])

    def test_valid_corpus(self):
        for gens in CORPUS:
            self.assertTrue(validate(gens).valid, gens)

    def test_gcd_chain_minimality_matches_dynamic_programming(self):
        for gens in [(4, 6, 13), (4, 8, 13), (6, 9, 12, 19), (4, 6, 9), (8, 12, 50, 101)]:
            by_chain = "not-minimal" not in validate(gens).tags()
            self.assertEqual(by_chain, is_minimal_by_dp(gens), gens)


class MembershipTests(unittest.TestCase):
    def test_membership_matches_dynamic_programming(self):
        for gens in CORPUS:
            s = derive_char(gens)
            reach = dp_members(gens, s.conductor + 5)
            for n in range(-3, s.conductor + 5):
                expected = n >= 0 and reach[n]
                self.assertEqual(membership(s, n), expected, (gens, n))

    def test_gaps_are_half_the_conductor(self):
        for m in (16, 28, 40):
            for s in enumerate_semigroups(m):
                self.assertEqual(len(gaps(s)), m // 2, s)
                self.assertFalse(membership(s, m - 1))

    def test_gaps_are_symmetric(self):
        for m in range(2, 61, 2):
            for s in enumerate_semigroups(m):
                c = s.conductor
                for a in range(c):
                    self.assertNotEqual(membership(s, a), membership(s, c - 1 - a), (str(s), a))

    def test_two_three_gaps(self):
        self.assertEqual(gaps(derive_char((2, 3))), [1])
        self.assertEqual(gaps(derive_char((4, 6, 13))), [1, 2, 3, 5, 7, 9, 11, 15])


class ThetaRepresentationTests(unittest.TestCase):
    def test_worked_example_thetas(self):
        s = derive_char((8, 12, 50, 101))
        self.assertEqual(theta_rep(s, 1), (3,))
        self.assertEqual(theta_rep(s, 2), (11, 1))
        self.assertEqual(theta_rep(s, 3), (19, 0, 1))

    def test_modular_solution_matches_scan(self):
        for m in (16, 28, 40, 60):
            for s in enumerate_semigroups(m):
                for k in range(1, s.h + 1):
                    self.assertEqual(theta_rep(s, k), theta_rep_scan(s, k), (s, k))

    def test_level_out_of_range(self):
        s = derive_char((4, 6, 13))
        with self.assertRaises(SemigroupError):
            theta_rep(s, 3)
        with self.assertRaises(SemigroupError):
            theta_rep(s, 0)


class PuiseuxPairTests(unittest.TestCase):
    def test_pairs_of_examples(self):
        self.assertEqual(puiseux_pairs(derive_char((2, 3))), [(3, 2)])
        self.assertEqual(puiseux_pairs(derive_char((4, 6, 13))), [(3, 2), (7, 2)])
        self.assertEqual(puiseux_pairs(derive_char((8, 12, 50, 101))), [(3, 2), (19, 2), (39, 2)])

    def test_pairs_rebuild_the_generators(self):
        for gens in CORPUS:
            s = derive_char(gens)
            self.assertEqual(from_puiseux_pairs(puiseux_pairs(s)).r, gens)
        self.assertEqual(from_puiseux_pairs([]).r, (1,))


class ArrangementTests(unittest.TestCase):
    def test_swapped_and_redundant_sequences_are_normalized(self):
        self.assertEqual(minimal_arrangement((3, 2)), (2, 3))
        self.assertEqual(minimal_arrangement((2, 1)), (1,))
        self.assertEqual(minimal_arrangement((4, 6, 13)), (4, 6, 13))
        self.assertEqual(minimal_arrangement((6, 4, 13)), (4, 6, 13))

    def test_internal_error_type_is_an_assertion(self):
        self.assertTrue(issubclass(InternalConsistencyError, AssertionError))


if __name__ == "__main__":
    unittest.main()

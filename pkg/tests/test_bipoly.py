import random
import unittest
from fractions import Fraction

from src.bipoly import (
    INFINITY,
    BiPoly,
    adic_expand,
    approximate_root,
    expand_in_powers,
    normalize_tschirnhausen,
    positive_leading,
    resultant_y,
    resultant_y_sylvester,
    x_order,
    y_divmod,
)
from src.errors import PolyError, PolyParseError
from src.polyparse import parse_poly
from src.reports import poly_out

X, Y = BiPoly.x(), BiPoly.y()


def random_poly(rng, terms=4, max_x=5, max_y=3):
    return BiPoly({(rng.randint(0, max_x), rng.randint(0, max_y)): rng.choice([-3, -2, -1, 1, 2, Fraction(1, 2)]) for _ in range(terms)})


class ParseAndPrintTests(unittest.TestCase):
    def test_nested_expression_expands(self):
        p = parse_poly("(y^2-x^3)^2-x^11*y")
        self.assertEqual(str(p), "y^4-2*x^3*y^2-x^11*y+x^6")
        self.assertEqual(p.degree_y, 4)

    def test_zero_and_rationals(self):
        self.assertTrue(parse_poly("0").is_zero)
        self.assertEqual(str(parse_poly("0")), "0")
        p = parse_poly("y^2 + (3/2)x")
        self.assertEqual(p.terms, {(0, 2): Fraction(1), (1, 0): Fraction(3, 2)})
        self.assertEqual(str(p), "y^2+3/2*x")

    def test_whitespace_inside_rationals(self):
        expected = parse_poly("y^2+3/2*x")
        for text in ("y^2 + (3 / 2)x", "y^2+3 /2*x", "y^2 + 3/ 2 x"):
            self.assertEqual(parse_poly(text), expected, text)
        with self.assertRaises(PolyParseError):
            parse_poly("y + 1 / 0")

    def test_degree_limit_stops_large_powers(self):
        with self.assertRaises(PolyParseError) as ctx:
            parse_poly("(x+y+1)^150", max_degree=10)
        self.assertIn("degree limit 10", str(ctx.exception))
        with self.assertRaises(PolyParseError):
            parse_poly("(x+y)^6*(x-y)^6", max_degree=10)
        with self.assertRaises(PolyParseError):
            parse_poly("2^11", max_degree=10)
        self.assertEqual(parse_poly("(x+y)^5*(x-y)^5", max_degree=10).degree_x, 10)

    def test_degree_limit_can_be_raised(self):
        with self.assertRaises(PolyParseError):
            parse_poly("y^5000")
        self.assertEqual(parse_poly("y^5000", max_degree=10000).degree_y, 5000)

    def test_print_parse_is_a_fixed_point(self):
        rng = random.Random(11)
        for _ in range(30):
            p = random_poly(rng)
            self.assertEqual(parse_poly(str(p)), p)

    def test_juxtaposition_and_leading_sign(self):
        self.assertEqual(parse_poly("2x^3y"), X**3 * Y * 2)
        self.assertEqual(str(parse_poly("-x^2+y^2")), "y^2-x^2")
        self.assertEqual(parse_poly("x y"), X * Y)

    def test_unknown_variable_reports_position(self):
        with self.assertRaises(PolyParseError) as ctx:
            parse_poly("y^2 + z")
        self.assertEqual(ctx.exception.position, 6)

    def test_syntax_errors(self):
        for text in ("y^^2", "(y", "y+", "", "1/0*x"):
            with self.assertRaises(PolyParseError, msg=text):
                parse_poly(text)

    def test_json_terms(self):
        p = parse_poly("y-x^11*y")
        out = poly_out(p)
        self.assertEqual(out.model_dump()["terms"][1], {"c": "-1", "x": 11, "y": 1})
        self.assertEqual(len(out.terms), 2)
        self.assertEqual(poly_out(BiPoly()).model_dump(), {"terms": []})


class RingTests(unittest.TestCase):
    def test_products_and_powers(self):
        self.assertEqual((Y**2 - X**3) * (Y**2 + X**3), Y**4 - X**6)
        self.assertEqual(str((Y**2 - X**3) ** 2), "y^4-2*x^3*y^2+x^6")
        self.assertEqual(Y**0, 1)
        with self.assertRaises(PolyError):
            Y ** -1

    def test_derivatives(self):
        self.assertEqual((Y**2 - X**3).derivative_y(), Y * 2)
        self.assertEqual((Y**2 - X**3).derivative_x(), X**2 * -3)

    def test_leibniz_rule(self):
        rng = random.Random(5)
        for _ in range(20):
            p, q = random_poly(rng), random_poly(rng)
            self.assertEqual((p * q).derivative_x(), p.derivative_x() * q + p * q.derivative_x())
            self.assertEqual((p**2).derivative_y(), p * p.derivative_y() * 2)

    def test_swap_xy(self):
        p = parse_poly("y^2-x^3")
        self.assertEqual(p.swap_xy(), parse_poly("x^2-y^3"))
        self.assertEqual(p.swap_xy().swap_xy(), p)

    def test_x_order(self):
        self.assertEqual(x_order(X**3 + X**5), 3)
        self.assertIs(x_order(BiPoly()), INFINITY)
        self.assertEqual(x_order(BiPoly.const(7)), 0)

    def test_infinity_orders_above_integers(self):
        self.assertTrue(10**9 < INFINITY)
        self.assertTrue(INFINITY > 0)
        self.assertEqual(min(INFINITY, 4), 4)
        self.assertFalse(INFINITY == 5)
        with self.assertRaises(TypeError):
            INFINITY + 1


class DivisionTests(unittest.TestCase):
    def test_single_division_step(self):
        f = parse_poly("(y^2-x^3)^2-x^11*y")
        q, r = y_divmod(f, parse_poly("y^2-x^3"))
        self.assertEqual(q, parse_poly("y^2-x^3"))
        self.assertEqual(r, parse_poly("-x^11*y"))

    def test_trivial_divisions(self):
        self.assertEqual(y_divmod(Y, Y), (BiPoly.const(1), BiPoly()))
        self.assertEqual(y_divmod(X**5, Y), (BiPoly(), X**5))

    def test_reconstruction_on_random_inputs(self):
        rng = random.Random(3)
        g = parse_poly("y^3-x*y+2x^2")
        for _ in range(20):
            a = random_poly(rng, terms=6, max_y=7)
            q, r = y_divmod(a, g)
            self.assertEqual(q * g + r, a)
            self.assertLess(r.degree_y, 3)

    def test_divisor_must_be_monic(self):
        with self.assertRaises(PolyError):
            y_divmod(Y**3, parse_poly("2y^2-x"))
        with self.assertRaises(PolyError):
            y_divmod(Y, X)


class AdicExpansionTests(unittest.TestCase):
    def test_single_digit(self):
        exp = adic_expand(parse_poly("x^2*y"), [Y, parse_poly("y^2-x^3")])
        self.assertEqual(len(exp.digits), 1)
        digit = exp.digits[0]
        self.assertEqual((digit.x_order, digit.exponents, digit.coeff), (2, (1, 0), X**2))

    def test_two_level_expansion(self):
        p = parse_poly("(y^2-x^3)^2-x^5*y")
        exp = adic_expand(p, [Y, parse_poly("y^2-x^3")])
        self.assertEqual([(d.exponents, str(d.coeff)) for d in exp.digits], [((0, 2), "1"), ((1, 0), "-x^5")])
        self.assertEqual(exp.reconstruct(), p)

    def test_zero_has_no_digits(self):
        self.assertEqual(adic_expand(BiPoly(), [Y]).digits, ())

    def test_random_reconstruction_respects_digit_bounds(self):
        rng = random.Random(8)
        basis = [Y, parse_poly("y^2-x^3"), parse_poly("(y^2-x^3)^2-x^5*y")]
        for _ in range(10):
            p = random_poly(rng, terms=5, max_y=9)
            exp = adic_expand(p, basis)
            self.assertEqual(exp.reconstruct(), p)
            for digit in exp.digits:
                self.assertLess(digit.exponents[0], 2)
                self.assertLess(digit.exponents[1], 2)

    def test_bad_basis(self):
        with self.assertRaises(PolyError):
            adic_expand(Y, [parse_poly("y^2-x^3")])
        with self.assertRaises(PolyError):
            adic_expand(Y, [Y, Y + X])
        with self.assertRaises(PolyError):
            adic_expand(Y, [Y, parse_poly("y^4-x"), parse_poly("y^6-x")])


class ResultantTests(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(positive_leading(resultant_y(parse_poly("y^2-x^3"), Y)), X**3)
        self.assertEqual(x_order(resultant_y(parse_poly("-3x^2"), Y * 2)), 2)
        self.assertEqual(positive_leading(resultant_y(Y - 1, Y + 1)), 2)
        self.assertTrue(resultant_y(BiPoly(), Y).is_zero)

    def test_multiplicative_x_order(self):
        f = parse_poly("y^2-x^3")
        g, h = Y - X, Y + X**2
        self.assertEqual(x_order(resultant_y(f, g)), 2)
        self.assertEqual(x_order(resultant_y(f, h)), 3)
        self.assertEqual(x_order(resultant_y(f, g * h)), 5)

    def test_common_factor_gives_zero(self):
        f = parse_poly("y^2-x^3")
        self.assertIs(x_order(resultant_y(f, f * (Y + X))), INFINITY)

    def test_sylvester_oracle(self):
        rng = random.Random(21)
        for _ in range(12):
            a = Y ** rng.randint(1, 3) + random_poly(rng, terms=3, max_y=1)
            b = Y ** rng.randint(1, 3) + random_poly(rng, terms=3, max_y=1)
            self.assertEqual(positive_leading(resultant_y(a, b)), positive_leading(resultant_y_sylvester(a, b)))

    def test_sylvester_degree_cap(self):
        with self.assertRaises(PolyError):
            resultant_y_sylvester(Y**7 - X, Y**2 - X, max_degree=6)


class TschirnhausenAndRootTests(unittest.TestCase):
    def test_shift_examples(self):
        self.assertEqual(normalize_tschirnhausen(parse_poly("y^2+2x*y+x^2")), Y**2)
        self.assertEqual(normalize_tschirnhausen(parse_poly("y^3-3y^2+y")), parse_poly("y^3-2y-1"))
        p = parse_poly("y^2-x^3")
        self.assertEqual(normalize_tschirnhausen(p), p)
        with self.assertRaises(PolyError):
            normalize_tschirnhausen(parse_poly("2y^2-x"))

    def test_approximate_root_examples(self):
        f = parse_poly("(y^2-x^3)^2-x^11*y")
        self.assertEqual(approximate_root(f, 2), parse_poly("y^2-x^3"))
        self.assertEqual(approximate_root(f, 4), Y)
        self.assertEqual(approximate_root(f, 1), f)
        with self.assertRaises(PolyError):
            approximate_root(f, 3)

    def test_approximate_root_needs_corrections(self):
        f = parse_poly("(y^2+x*y)^2-x^7")
        g = approximate_root(f, 2)
        self.assertEqual(g, parse_poly("y^2+x*y"))
        self.assertTrue(expand_in_powers(f, g)[1].is_zero)
        self.assertEqual(approximate_root(f, 2), g)


if __name__ == "__main__":
    unittest.main()

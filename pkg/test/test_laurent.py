import random
import unittest
from fractions import Fraction

import numpy as np

from pdmqes.symbolic import BaseCoordinate, LaurentPoly


# =====================================
# Test Laurent Polynomials
# =====================================


class TestLaurentPoly(unittest.TestCase):
    def setUp(self):
        self.line = BaseCoordinate.real_line()
        self.half = BaseCoordinate.half_line()
        self.exp = BaseCoordinate.exp_neg()

    def test_zero_coefficients_dropped(self):
        p = LaurentPoly({-1: 0, 2: 3, 5: Fraction(0)}, self.line)
        self.assertEqual(p.exponents, (2,))
        self.assertEqual(p.degree, 2)
        self.assertEqual(p.low_degree, 2)
        self.assertTrue(p.is_monomial)

    def test_zero_polynomial(self):
        p = LaurentPoly.zero(self.line)
        self.assertTrue(p.is_zero)
        self.assertIsNone(p.degree)
        self.assertEqual(str(p), "0")

    def test_exact_arithmetic(self):
        p = LaurentPoly({1: 3, 3: 2}, self.line)
        q = LaurentPoly({1: Fraction(1, 2)}, self.line)
        self.assertEqual(p + q, LaurentPoly({1: Fraction(7, 2), 3: 2}, self.line))
        self.assertEqual(p * q, LaurentPoly({2: Fraction(3, 2), 4: 1}, self.line))
        self.assertEqual(p - p, LaurentPoly.zero(self.line))
        self.assertTrue((p * q).is_exact)

    def test_scalar_arithmetic(self):
        p = LaurentPoly({-1: 2}, self.half)
        self.assertEqual(p + 1, LaurentPoly({-1: 2, 0: 1}, self.half))
        self.assertEqual(1 - p, LaurentPoly({-1: -2, 0: 1}, self.half))
        self.assertEqual(p / 4, LaurentPoly({-1: Fraction(1, 2)}, self.half))
        self.assertEqual(p**2, LaurentPoly({-2: 4}, self.half))

    def test_division_by_monomial(self):
        p = LaurentPoly({0: 3, 2: 6}, self.line)
        t = LaurentPoly({1: 3}, self.line)
        self.assertEqual(p / t, LaurentPoly({-1: 1, 1: 2}, self.line))

    def test_division_by_polynomial_rejected(self):
        p = LaurentPoly({0: 3, 2: 6}, self.line)
        with self.assertRaises(TypeError):
            p / LaurentPoly({0: 1, 1: 1}, self.line)

    def test_mixed_bases_rejected(self):
        with self.assertRaises(ValueError):
            LaurentPoly({1: 1}, self.line) + LaurentPoly({1: 1}, self.exp)

    def test_immutable(self):
        p = LaurentPoly({1: 1}, self.line)
        with self.assertRaises(AttributeError):
            p.base = self.half

    def test_float_coefficients(self):
        p = LaurentPoly({1: 0.5}, self.line)
        self.assertFalse(p.is_exact)
        self.assertTrue(p.almost_equal(LaurentPoly({1: Fraction(1, 2)}, self.line), 1e-15))


# =====================================
# Test Derivatives And Evaluation
# =====================================


class TestLaurentCalculus(unittest.TestCase):
    def test_identity_derivative(self):
        base = BaseCoordinate.real_line()
        p = LaurentPoly({-1: 2, 1: 3, 3: 2}, base)
        self.assertEqual(p.derivative(), LaurentPoly({-2: -2, 0: 3, 2: 6}, base))

    def test_exponential_derivative(self):
        # d/dx exp(-k x) = -k exp(-k x)
        base = BaseCoordinate.exp_neg()
        p = LaurentPoly({-2: 1, 1: 5}, base)
        self.assertEqual(p.derivative(), LaurentPoly({-2: 2, 1: -5}, base))

    def test_constant_derivative_vanishes(self):
        base = BaseCoordinate.exp_neg()
        self.assertTrue(LaurentPoly.constant(7, base).derivative().is_zero)

    def test_evaluate_identity(self):
        p = LaurentPoly({-1: 2, 2: 1}, BaseCoordinate.half_line())
        values = p.evaluate(np.array([1.0, 2.0]))
        np.testing.assert_allclose(values, [3.0, 5.0])

    def test_evaluate_exponential(self):
        p = LaurentPoly({1: 1, -1: 1}, BaseCoordinate.exp_neg())
        x = np.array([0.0, 1.0])
        np.testing.assert_allclose(p.evaluate(x), 2.0 * np.cosh(x))

    def test_derivative_matches_finite_difference(self):
        base = BaseCoordinate.exp_neg()
        p = LaurentPoly({2: Fraction(3, 4), 1: 12, -1: -10, -2: 1}, base)
        x, h = 0.3, 1e-5
        numeric = (p.evaluate(x + h) - p.evaluate(x - h)) / (2 * h)
        self.assertAlmostEqual(float(p.derivative().evaluate(x)), float(numeric), places=5)


# =====================================
# Test Ring Properties
# =====================================


def _random_poly(rng, base, terms=4):
    coeffs = {}
    for _ in range(terms):
        numerator = rng.choice([-1, 1]) * rng.randint(1, 9)
        coeffs[rng.randint(-3, 4)] = Fraction(numerator, rng.randint(1, 4))
    return LaurentPoly(coeffs, base)


class TestLaurentRing(unittest.TestCase):
    DRAWS = 50

    def setUp(self):
        self.rng = random.Random(5)
        # sample ranges keep t positive and away from zero
        self.samples = [
            (BaseCoordinate.real_line(), (0.5, 2.0)),
            (BaseCoordinate.half_line(), (0.5, 2.0)),
            (BaseCoordinate.exp_neg(), (-1.0, 1.0)),
        ]

    def _triples(self):
        for base, interval in self.samples:
            for _ in range(self.DRAWS):
                yield base, interval, [_random_poly(self.rng, base) for _ in range(3)]

    def test_commutative_and_associative(self):
        for _, _, (p, q, r) in self._triples():
            self.assertEqual(p + q, q + p)
            self.assertEqual(p * q, q * p)
            self.assertEqual((p + q) + r, p + (q + r))
            self.assertEqual((p * q) * r, p * (q * r))
            self.assertEqual(p * (q + r), p * q + p * r)

    def test_leibniz_rule(self):
        for _, _, (p, q, r) in self._triples():
            self.assertEqual((p * q).derivative(), p.derivative() * q + p * q.derivative())
            self.assertEqual((p * q * r).derivative(), (p * q).derivative() * r + p * q * r.derivative())

    def test_evaluation_agrees_with_arithmetic(self):
        for base, (lo, hi), (p, q, _) in self._triples():
            x = np.array([self.rng.uniform(lo, hi) for _ in range(20)])
            t = base.t_of_x(x)
            # the sum of |c_k| t^k bounds the rounding of every evaluation
            size_p = LaurentPoly({k: abs(c) for k, c in p.items()}, base).evaluate(x)
            size_q = LaurentPoly({k: abs(c) for k, c in q.items()}, base).evaluate(x)
            direct = sum(float(c) * t ** float(k) for k, c in p.items())
            self.assertTrue(np.all(np.abs(p.evaluate(x) - direct) <= 1e-12 * size_p))
            product = p.evaluate(x) * q.evaluate(x)
            self.assertTrue(np.all(np.abs((p * q).evaluate(x) - product) <= 1e-12 * size_p * size_q))
            total = p.evaluate(x) + q.evaluate(x)
            self.assertTrue(np.all(np.abs((p + q).evaluate(x) - total) <= 1e-12 * (size_p + size_q)))


# =====================================
# Test Serialization
# =====================================


class TestLaurentJson(unittest.TestCase):
    def test_to_json(self):
        p = LaurentPoly({2: -3, 4: -3, 6: 1}, BaseCoordinate.real_line())
        self.assertEqual(p.to_json(), {"2": "-3", "4": "-3", "6": "1"})

    def test_from_json(self):
        base = BaseCoordinate.exp_neg()
        p = LaurentPoly.from_json({"2": "3/4", "-1": "-10", "1": "0.5"}, base)
        self.assertEqual(p.coefficient(2), Fraction(3, 4))
        self.assertEqual(p.coefficient(-1), Fraction(-10))
        self.assertEqual(p.coefficient(1), 0.5)

    def test_repr(self):
        p = LaurentPoly({1: 3, 3: 2}, BaseCoordinate.real_line())
        self.assertEqual(repr(p.derivative()), "LaurentPoly(3 + 6*t^2, identity)")


if __name__ == "__main__":
    unittest.main()

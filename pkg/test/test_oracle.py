import math
import unittest
import warnings
from dataclasses import replace
from fractions import Fraction

import numpy as np

from pdmqes.catalog import (
    StartingPotential,
    build_ho,
    build_kc,
    build_morse,
    es_energy,
    es_level_count,
    figure_instances,
    starting_potential_poly,
)
from pdmqes.errors import TruncationInsufficient, UnsupportedDeformation
from pdmqes.oracle import (
    CoordinateMap,
    arbitrate_kc,
    count_bound_levels,
    eigenvectors_on_x,
    solve,
    solve_starting,
    transform,
    verify_figures,
    verify_instance,
)
from pdmqes.symbolic import BaseCoordinate, DeformingFunction, LaurentPoly


# =====================================
# Test Coordinate Maps
# =====================================


class TestCoordinateMap(unittest.TestCase):
    def setUp(self):
        self.functions = [
            (DeformingFunction.quadratic(Fraction(3, 2), BaseCoordinate.real_line()), [-3.0, 0.0, 0.5, 4.0]),
            (DeformingFunction.quadratic(2, BaseCoordinate.half_line()), [0.1, 1.0, 6.0]),
            (DeformingFunction.linear(Fraction(1, 2), BaseCoordinate.half_line()), [0.1, 1.0, 6.0]),
            (DeformingFunction.linear(3, BaseCoordinate.exp_neg()), [-2.0, 0.0, 3.0]),
            (DeformingFunction.quadratic(0, BaseCoordinate.real_line()), [-1.0, 2.0]),
        ]

    def test_measure(self):
        # du/dx f = 1
        h = 1e-6
        for f, points in self.functions:
            cmap = CoordinateMap(f)
            x = np.array(points)
            derivative = (cmap.u_of_x(x + h) - cmap.u_of_x(x - h)) / (2 * h)
            np.testing.assert_allclose(derivative * f.evaluate(x), 1.0, rtol=1e-6)

    def test_inverse(self):
        for f, points in self.functions:
            cmap = CoordinateMap(f)
            x = np.array(points)
            np.testing.assert_allclose(cmap.x_of_u(cmap.u_of_x(x)), x, rtol=1e-10, atol=1e-12)

    def test_natural_domains(self):
        self.assertEqual(
            CoordinateMap(DeformingFunction.quadratic(1, BaseCoordinate.real_line())).natural_domain,
            (-math.pi / 2, math.pi / 2),
        )
        self.assertEqual(
            CoordinateMap(DeformingFunction.quadratic(4, BaseCoordinate.half_line())).natural_domain,
            (0.0, math.pi / 4),
        )
        self.assertEqual(
            CoordinateMap(DeformingFunction.linear(1, BaseCoordinate.half_line())).natural_domain,
            (0.0, math.inf),
        )
        self.assertEqual(
            CoordinateMap(DeformingFunction.linear(2, BaseCoordinate.exp_neg())).natural_domain,
            (math.log(2.0), math.inf),
        )


# =====================================
# Test Transform
# =====================================


class TestTransform(unittest.TestCase):
    def test_unbounded_below(self):
        base = BaseCoordinate.real_line()
        with self.assertRaises(TruncationInsufficient):
            transform(LaurentPoly({2: -1}, base), DeformingFunction.quadratic(1, base))

    def test_unsupported_deformation(self):
        base = BaseCoordinate.real_line()
        with self.assertRaises(UnsupportedDeformation):
            transform(LaurentPoly({2: 1}, base), "1 + x^4")

    def test_mixed_bases(self):
        with self.assertRaises(ValueError):
            transform(
                LaurentPoly({2: 1}, BaseCoordinate.real_line()),
                DeformingFunction.linear(1, BaseCoordinate.half_line()),
            )

    def test_box_inside_natural_domain(self):
        instance = build_morse(1, 1, Fraction(3, 4), 1)
        tp = transform(instance.V, instance.f)
        lo, hi = tp.u_domain
        self.assertGreaterEqual(lo, tp.natural_domain[0])
        self.assertLess(hi, tp.natural_domain[1])
        self.assertTrue(tp.truncated[1])

    def test_enlarged(self):
        instance = build_kc(1, 1, 1, 1)
        tp = transform(instance.V, instance.f)
        enlarged = tp.enlarged(1.5)
        self.assertEqual(enlarged.u_domain[0], tp.u_domain[0])
        self.assertAlmostEqual(enlarged.width, 1.5 * tp.width)


# =====================================
# Test Solver
# =====================================


class TestSolver(unittest.TestCase):
    def test_reference_oscillator(self):
        instance = build_ho(1, 1, 1)
        result = solve(transform(instance.V, instance.f), 2)
        np.testing.assert_allclose(result.richardson_estimate, [0.0, 3.0], atol=1e-6)
        self.assertEqual(result.node_counts, [0, 1])
        self.assertEqual(result.levels, 2)

    def test_convergence_order(self):
        for figure in figure_instances():
            instance = figure.instance
            result = solve(transform(instance.V, instance.f), 1, grid_points=1000)
            coarse_error = abs(result.eigenvalues[0] - float(instance.E0))
            fine_error = abs(result.fine_eigenvalues[0] - float(instance.E0))
            self.assertGreaterEqual(coarse_error / fine_error, 3.5, figure.name)

    def test_deformed_oscillator_spectrum(self):
        sp = StartingPotential.ho(omega=1, alpha=1)
        result = solve_starting(sp, 6)
        expected = [float(es_energy(sp, n)) for n in range(6)]
        np.testing.assert_allclose(result.richardson_estimate, expected, atol=1e-5)
        self.assertEqual(result.node_counts, list(range(6)))
        self.assertEqual(result.grid_points, 32000)

    def test_constant_mass_limit(self):
        sp = StartingPotential.ho(omega=2, alpha=0)
        result = solve_starting(sp, 4)
        np.testing.assert_allclose(result.richardson_estimate, [1.0, 3.0, 5.0, 7.0], atol=1e-5)

    def test_small_deformation(self):
        sp = StartingPotential.ho(omega=2, alpha=Fraction(1, 10**6))
        result = solve_starting(sp, 3)
        np.testing.assert_allclose(result.richardson_estimate, [1.0, 3.0, 5.0], atol=1e-4)

    def test_deformed_morse_spectrum(self):
        sp = StartingPotential.morse(A=4, B=2, alpha=1)
        self.assertEqual(es_level_count(sp), 3)
        result = solve_starting(sp, 3)
        expected = [float(es_energy(sp, n)) for n in range(3)]
        np.testing.assert_allclose(result.richardson_estimate, expected, atol=1e-4)

    def test_bound_level_count(self):
        draws = [
            (StartingPotential.kc(Q=10, alpha=1, L=0), 3),
            (StartingPotential.kc(Q=20, alpha=1, L=0), 4),
            (StartingPotential.kc(Q=6, alpha=Fraction(1, 2), L=1), 2),
            (StartingPotential.kc(Q=30, alpha=2, L=0), 3),
            (StartingPotential.kc(Q=6, alpha=Fraction(1, 4), L=0), 4),
            (StartingPotential.morse(A=4, B=2, alpha=1), 3),
            (StartingPotential.morse(A=3, B=2, alpha=3), 1),
            (StartingPotential.morse(A=5, B=1, alpha=Fraction(3, 2)), 2),
            (StartingPotential.morse(A=10, B=Fraction(2, 3), alpha=1), 3),
            (StartingPotential.morse(A=5, B=3, alpha=Fraction(1, 2)), 4),
        ]
        for sp, expected in draws:
            self.assertEqual(es_level_count(sp), expected, sp)
            V, f, _ = starting_potential_poly(sp)
            self.assertEqual(count_bound_levels(transform(V, f)), expected, sp)

    def test_eigenvectors_on_x(self):
        instance = build_ho(1, 1, 1)
        tp = transform(instance.V, instance.f)
        result = solve(tp, 2)
        x, psi = eigenvectors_on_x(result, tp)
        self.assertEqual(psi.shape, (result.grid_points, 2))
        # the ground state is even and peaked at the origin
        self.assertAlmostEqual(float(x[np.argmax(psi[:, 0])]), 0.0, places=2)
        ratio = psi[:, 0] / instance.psi0.evaluate(x)
        central = np.abs(x) < 2.0
        self.assertLess(np.ptp(ratio[central]) / np.mean(ratio[central]), 1e-4)

    def test_invalid_requests(self):
        instance = build_ho(1, 1, 1)
        tp = transform(instance.V, instance.f)
        with self.assertRaises(ValueError):
            solve(tp, 0)
        with self.assertRaises(ValueError):
            solve(tp, 11)
        with self.assertRaises(ValueError):
            solve(tp, 2, grid_points=100)

    def test_to_json(self):
        instance = build_ho(1, 1, 1)
        document = solve(transform(instance.V, instance.f), 2, grid_points=400).to_json()
        self.assertEqual(document["node_counts"], [0, 1])
        self.assertEqual(document["grid_points"], 400)
        self.assertEqual(len(document["eigenvalues"]), 2)


# =====================================
# Test Verification
# =====================================


class TestVerification(unittest.TestCase):
    def test_reference_instances(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            reports = verify_figures()
        self.assertEqual(len(reports), 4)
        # only the Kepler-Coulomb caption disagrees
        captions = [w for w in caught if str(w.message).startswith("kc:")]
        self.assertEqual(len(captions), 1)
        for report in reports:
            self.assertTrue(report.passed, f"{report.instance.family}: {report.failures}")
            self.assertTrue(all(error <= 1e-5 for error in report.energy_errors))
            self.assertEqual(report.node_counts, [0, 1])
        self.assertLessEqual(reports[0].energy_errors[0], 1e-6)

    def test_oscillator_m2(self):
        # the cut box lies well inside the finite u interval of the quadratic deformation
        instance = build_ho(2, 1, 1)
        report = verify_instance(instance)
        self.assertTrue(report.passed, report.failures)
        self.assertLessEqual(report.spectrum.truncation_shift, 1e-7)
        np.testing.assert_allclose(report.spectrum.richardson_estimate, [-0.625, 3.125], atol=1e-5)

    def test_enlarged_box_stays_inside_natural_domain(self):
        instance = build_ho(2, 1, 1)
        tp = transform(instance.V, instance.f)
        enlarged = tp.enlarged(1.5)
        self.assertGreater(enlarged.u_domain[0], tp.natural_domain[0])
        self.assertLess(enlarged.u_domain[1], tp.natural_domain[1])
        self.assertGreater(enlarged.width, tp.width)

    def test_irrational_morse(self):
        instance = build_morse(1, 1, 1, 1)
        self.assertFalse(instance.V.is_exact)
        report = verify_instance(instance)
        self.assertTrue(report.checks["partner"])
        self.assertTrue(report.passed, report.failures)

    def test_corrupted_energy(self):
        instance = build_ho(1, 1, 1)
        corrupted = replace(instance, E0=instance.E0 + Fraction(1, 10))
        report = verify_instance(corrupted)
        self.assertFalse(report.passed)
        for name in ("riccati", "closed_forms", "residual_E0", "energy_E0"):
            self.assertIn(name, report.failures)
        self.assertTrue(report.checks["energy_E1"])

    def test_report_json(self):
        report = verify_instance(build_morse(1, 1, Fraction(3, 4), 1))
        document = report.to_json()
        self.assertTrue(document["passed"])
        self.assertEqual(document["spec"]["family"], "morse")
        self.assertEqual(document["node_counts"], [0, 1])

    def test_kepler_coulomb_arbitration(self):
        arbitration = arbitrate_kc(build_kc(1, 1, 1, 1))
        self.assertEqual(arbitration.matches, ["derived"])
        self.assertAlmostEqual(arbitration.numeric, -25.25, delta=1e-5)
        self.assertIn("derived", arbitration.verdict)


if __name__ == "__main__":
    unittest.main()

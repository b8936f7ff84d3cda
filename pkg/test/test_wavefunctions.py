import math
import unittest
from fractions import Fraction

import numpy as np

from pdmqes.catalog import build_kc, build_morse, build_rho
from pdmqes.errors import ProbeOutOfDomain
from pdmqes.susy import (
    boundary_decay,
    count_sign_changes,
    first_excited,
    generating_pair_from_wplus,
    ground_state,
    hamiltonian_residual,
    node_count,
    riccati_v1,
    superpotentials_from_generating,
)
from pdmqes.symbolic import BaseCoordinate, DeformingFunction, LaurentPoly


# =====================================
# Test Closed Forms
# =====================================


class TestClosedForms(unittest.TestCase):
    def setUp(self):
        self.base = BaseCoordinate.real_line()
        self.f = DeformingFunction.quadratic(1, self.base)
        self.pair = generating_pair_from_wplus(LaurentPoly({1: 3, 3: 2}, self.base), self.f)
        self.W, self.Wprime = superpotentials_from_generating(self.pair)

    def test_ground_state(self):
        # psi0 = exp(-x^2/2) for W = x^3
        psi = ground_state(self.W, self.f)
        self.assertEqual(psi.a, 0)
        self.assertEqual(psi.p, 0)
        self.assertEqual(psi.Q, LaurentPoly({2: Fraction(-1, 2)}, self.base))
        x = np.array([0.0, 1.0, 2.0])
        np.testing.assert_allclose(psi.evaluate(x), np.exp(-(x**2) / 2))

    def test_first_excited(self):
        psi = first_excited(self.pair, self.Wprime, self.f)
        self.assertEqual(psi.P, self.pair.Wplus)
        x = np.array([-1.0, 1.0])
        values = psi.evaluate(x)
        self.assertAlmostEqual(float(values[0]), -float(values[1]))

    def test_radial_powers(self):
        # W = -2/x + x/2 + x^3 integrates to -2 ln x + x^2/2 + 3/4 ln f
        psi = build_rho(1, 1, 1, 1).psi0
        self.assertEqual(psi.a, 2)
        self.assertEqual(psi.p, Fraction(-5, 4))
        self.assertEqual(psi.Q, LaurentPoly({2: Fraction(-1, 2)}, BaseCoordinate.half_line()))

    def test_log_abs_no_overflow(self):
        psi = ground_state(self.W, self.f)
        values = psi.log_abs(np.array([1e100]))
        self.assertTrue(np.isfinite(values[0]))
        self.assertEqual(float(psi.evaluate(np.array([1e100]))[0]), 0.0)

    def test_to_json(self):
        psi = ground_state(self.W, self.f)
        self.assertEqual(psi.to_json(), {"a": "0", "p": "0", "P": {"0": "1"}, "Q": {"2": "-1/2"}})


# =====================================
# Test Residuals
# =====================================


class TestResidual(unittest.TestCase):
    def test_ground_state_residual(self):
        base = BaseCoordinate.real_line()
        f = DeformingFunction.quadratic(1, base)
        W = LaurentPoly({3: 1}, base)
        psi = ground_state(W, f)
        V = riccati_v1(W, f)
        residuals = hamiltonian_residual(psi, V, f, 0, [-1.5, -0.5, 0.3, 1.0, 2.0])
        self.assertTrue(np.all(residuals < 1e-6))

    def test_wrong_energy_detected(self):
        base = BaseCoordinate.real_line()
        f = DeformingFunction.quadratic(1, base)
        W = LaurentPoly({3: 1}, base)
        residuals = hamiltonian_residual(ground_state(W, f), riccati_v1(W, f), f, Fraction(1, 10), [0.5])
        self.assertAlmostEqual(float(residuals[0]), 0.1, places=5)

    def test_excited_state_residual(self):
        instance = build_kc(1, 1, 1, 1)
        residuals = hamiltonian_residual(instance.psi1, instance.V, instance.f, instance.E1, [0.4, 1.5, 3.0])
        self.assertTrue(np.all(residuals < 1e-6))

    def test_probe_out_of_domain(self):
        instance = build_kc(1, 1, 1, 1)
        with self.assertRaises(ProbeOutOfDomain):
            hamiltonian_residual(instance.psi0, instance.V, instance.f, instance.E0, [1e-4])


# =====================================
# Test Structure Probes
# =====================================


class TestStructure(unittest.TestCase):
    def test_count_sign_changes(self):
        self.assertEqual(count_sign_changes([1.0, -1.0, 0.0, 2.0]), 2)
        self.assertEqual(count_sign_changes([0.0, 0.0]), 0)

    def test_node_counts(self):
        for instance in (build_rho(1, 1, 1, 1), build_kc(1, 1, 1, 1), build_morse(1, 1, Fraction(3, 4), 1)):
            self.assertEqual(node_count(instance.psi0), 0)
            self.assertEqual(node_count(instance.psi1), 1)

    def test_boundary_decay(self):
        instance = build_morse(1, 1, Fraction(3, 4), 1)
        probes = boundary_decay(instance.psi0)
        self.assertEqual([probe.endpoint for probe in probes], [-math.inf, math.inf])
        self.assertTrue(all(probe.decays for probe in probes))

    def test_half_line_decay(self):
        probes = boundary_decay(build_rho(1, 1, 1, 1).psi1)
        self.assertEqual(probes[0].endpoint, 0.0)
        self.assertTrue(all(probe.decays for probe in probes))

    def test_growing_state(self):
        base = BaseCoordinate.real_line()
        psi = ground_state(LaurentPoly({3: -1}, base), DeformingFunction.quadratic(1, base))
        probes = boundary_decay(psi)
        self.assertFalse(any(probe.decays for probe in probes))


if __name__ == "__main__":
    unittest.main()

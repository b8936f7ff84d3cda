import math
import random
import unittest
from fractions import Fraction

from pdmqes.catalog import (
    StartingPotential,
    angular_L,
    build_ho,
    build_instance,
    build_kc,
    build_morse,
    build_rho,
    es_energy,
    es_level_count,
    figure_instances,
    instance_to_json,
    parse_instance_spec,
    published_energies,
    published_parameters,
    published_partner,
    reduce_to_start,
    s_sum,
    spec_to_json,
    starting_potential_poly,
)
from pdmqes.errors import AboveNmax, InstanceSpecError, InvalidParams
from pdmqes.susy import partner_v2, riccati_v1
from pdmqes.symbolic import BaseCoordinate, LaurentPoly


def _random_parameters(rng):
    alpha = Fraction(rng.randint(1, 6), rng.randint(1, 3))
    top = Fraction(rng.randint(1, 7), rng.randint(1, 3)) ** 2
    L = Fraction(rng.randint(0, 6), 2)
    Delta = alpha + Fraction(rng.randint(1, 6), rng.randint(1, 3))
    return alpha, top, L, (Delta**2 - alpha**2) / 4


def _random_instances(rng, m):
    alpha, top, L, B2minus = _random_parameters(rng)
    return [
        build_ho(m, alpha, top),
        build_rho(m, alpha, L, top),
        build_kc(m, alpha, L, top),
        build_morse(m, alpha, B2minus, top),
    ]


# =====================================
# Test Reference Instances
# =====================================


class TestReferenceInstances(unittest.TestCase):
    def test_ho(self):
        instance = build_ho(1, 1, 1)
        self.assertEqual(instance.V, LaurentPoly({2: -3, 4: -3, 6: 1}, BaseCoordinate.real_line()))
        self.assertEqual((instance.E0, instance.E1), (0, 3))
        self.assertEqual(instance.partner_coeffs, LaurentPoly({2: 3, 4: 3, 6: 1}, BaseCoordinate.real_line()))
        self.assertEqual(instance.R, 0)

    def test_ho_m2(self):
        instance = build_ho(2, 1, 1)
        self.assertEqual((instance.E0, instance.E1), (Fraction(-5, 8), Fraction(25, 8)))

    def test_rho(self):
        instance = build_rho(1, 1, 1, 1)
        self.assertEqual((instance.E0, instance.E1), (Fraction(9, 2), Fraction(65, 2)))
        self.assertEqual(instance.V.coefficient(2), Fraction(-29, 4))
        self.assertEqual(instance.V.coefficient(4), -2)
        self.assertEqual(instance.V.coefficient(-2), 2)

    def test_kc(self):
        instance = build_kc(1, 1, 1, 1)
        self.assertEqual(instance.V, LaurentPoly({-2: 2, -1: 20, 1: -12, 2: 1}, BaseCoordinate.half_line()))
        self.assertEqual((instance.E0, instance.E1), (Fraction(-101, 4), Fraction(-45, 4)))
        self.assertEqual(instance.gap, 14)

    def test_morse(self):
        instance = build_morse(1, 1, Fraction(3, 4), 1)
        expected = LaurentPoly({2: Fraction(3, 4), 1: 12, -1: -10, -2: 1}, BaseCoordinate.exp_neg())
        self.assertEqual(instance.V, expected)
        self.assertEqual(instance.Delta, 2)
        self.assertEqual((instance.E0, instance.E1), (Fraction(-65, 4), Fraction(-17, 4)))

    def test_figures(self):
        figures = figure_instances()
        self.assertEqual([figure.name for figure in figures], ["ho", "rho", "kc", "morse"])
        # the quoted Kepler-Coulomb ground energy differs from the derived one
        self.assertEqual([figure.agrees for figure in figures], [True, True, False, True])
        self.assertEqual(figures[2].caption_E0, Fraction(-99, 4))

    def test_irrational_delta(self):
        instance = build_morse(1, 1, 1, 1)
        self.assertAlmostEqual(float(instance.Delta), math.sqrt(5.0))
        self.assertFalse(instance.V.is_exact)
        E0, E1 = published_energies("morse", 1, 1, 1, B2minus=1)
        self.assertAlmostEqual(float(instance.E0), float(E0), places=10)
        self.assertAlmostEqual(float(instance.E1), float(E1), places=10)


# =====================================
# Test Closed Forms
# =====================================


class TestClosedForms(unittest.TestCase):
    def test_s_sum(self):
        self.assertEqual(s_sum(1, 2, 0, 1), 3)

    def test_parameters_for_general_m(self):
        rng = random.Random(7)
        for m in range(1, 5):
            for _ in range(3):
                for instance in _random_instances(rng, m):
                    published = published_parameters(
                        instance.family, m, instance.alpha, instance.B_top, L=instance.L, B2minus=instance.B2minus
                    )
                    self.assertEqual(published, instance.V, f"{instance.spec}")

    def test_energies_for_general_m(self):
        rng = random.Random(8)
        for m in range(1, 5):
            for _ in range(3):
                for instance in _random_instances(rng, m):
                    energies = published_energies(
                        instance.family, m, instance.alpha, instance.B_top, L=instance.L, B2minus=instance.B2minus
                    )
                    self.assertEqual(energies, (instance.E0, instance.E1), f"{instance.spec}")

    def test_partner_for_general_m(self):
        rng = random.Random(9)
        for m in range(1, 5):
            alpha, top, _, _ = _random_parameters(rng)
            instance = build_ho(m, alpha, top)
            coeffs, R = published_partner(m, alpha, top)
            self.assertEqual(coeffs, instance.partner_coeffs)
            self.assertEqual(R, instance.R)

    def test_float_morse_for_general_m(self):
        for m in range(1, 5):
            instance = build_morse(m, Fraction(1, 2), 2, 3)
            published = published_parameters("morse", m, Fraction(1, 2), 3, B2minus=2)
            self.assertTrue(published.almost_equal(instance.V, 1e-9 * max(1.0, float(instance.B_top))))

    def test_missing_parameter(self):
        with self.assertRaises(InvalidParams):
            published_parameters("kc", 1, 1, 1)
        with self.assertRaises(InvalidParams):
            published_energies("shape", 1, 1, 1)


# =====================================
# Test Ring Identities
# =====================================


class TestRingIdentities(unittest.TestCase):
    DRAWS = 100

    def _assert_same(self, left, right, message, scale=None):
        if left.is_exact and right.is_exact:
            self.assertEqual(left, right, message)
            return
        if scale is None:
            scale = max((abs(float(c)) for poly in (left, right) for _, c in poly.items()), default=0.0)
        self.assertLessEqual(left.max_abs_difference(right), 1e-12 * max(1.0, scale), message)

    def _assert_identities(self, instance):
        f, message = instance.f, f"{instance.spec}"
        # V = W^2 - f W' + E0
        self._assert_same(riccati_v1(instance.W, f) + instance.E0, instance.V, message)
        # V2(W) and V1(W') differ by the gap, up to rounding in the cancelled powers
        v2 = partner_v2(instance.W, f)
        self._assert_same(
            v2 - riccati_v1(instance.Wprime, f),
            LaurentPoly.constant(instance.gap, instance.base),
            message,
            scale=max(abs(float(c)) for _, c in v2.items()),
        )
        # f W+' = W+ W- + gap
        self._assert_same(
            f.poly * instance.Wplus.derivative(), instance.Wplus * instance.Wminus + instance.gap, message
        )
        self._assert_same(instance.Wplus, instance.W + instance.Wprime, message)
        self.assertGreater(instance.gap, 0, message)

    def test_identities(self):
        builders = {
            "ho": lambda m, alpha, top, L, B2minus: build_ho(m, alpha, top),
            "rho": lambda m, alpha, top, L, B2minus: build_rho(m, alpha, L, top),
            "kc": lambda m, alpha, top, L, B2minus: build_kc(m, alpha, L, top),
            "morse": lambda m, alpha, top, L, B2minus: build_morse(m, alpha, B2minus, top),
        }
        for seed, (family, builder) in enumerate(builders.items()):
            rng = random.Random(11 + seed)
            for _ in range(self.DRAWS):
                instance = builder(rng.randint(1, 4), *_random_parameters(rng))
                self.assertEqual(instance.family, family)
                self.assertTrue(instance.V.is_exact)
                self._assert_identities(instance)

    def test_irrational_morse_identities(self):
        rng = random.Random(15)
        irrational = 0
        for _ in range(self.DRAWS):
            alpha = Fraction(rng.randint(1, 4), rng.randint(1, 2))
            top = Fraction(rng.randint(1, 5), rng.randint(1, 2)) ** 2
            instance = build_morse(rng.randint(1, 4), alpha, rng.randint(1, 9), top)
            irrational += not instance.V.is_exact
            self._assert_identities(instance)
        self.assertGreater(irrational, self.DRAWS // 2)

    def test_generating_pair_property(self):
        instance = build_kc(1, 1, 1, 1)
        pair = instance.generating_pair
        self.assertEqual(pair.gap, 14)
        self.assertEqual(pair.Wminus, instance.Wminus)


# =====================================
# Test Parameter Validation
# =====================================


class TestValidation(unittest.TestCase):
    def test_m_must_be_positive(self):
        with self.assertRaisesRegex(InvalidParams, "m must be ≥ 1"):
            build_ho(0, 1, 1)

    def test_alpha_must_be_positive(self):
        with self.assertRaises(InvalidParams):
            build_rho(1, 0, 1, 1)

    def test_top_must_be_positive(self):
        with self.assertRaises(InvalidParams):
            build_kc(1, 1, 1, -1)

    def test_angular_range(self):
        with self.assertRaises(InvalidParams):
            build_kc(1, 1, -1, 1)
        with self.assertRaises(InvalidParams):
            build_rho(1, 1, None, 1)

    def test_morse_coupling(self):
        with self.assertRaises(InvalidParams):
            build_morse(1, 1, 0, 1)

    def test_angular_L(self):
        self.assertEqual(angular_L(1, 3), 1)
        self.assertEqual(angular_L(0, 2), Fraction(-1, 2))


# =====================================
# Test Starting Potentials
# =====================================


class TestStartingPotentials(unittest.TestCase):
    def setUp(self):
        self.exact = [
            StartingPotential.ho(omega=3, alpha=4),
            StartingPotential.rho(omega=3, alpha=4, L=1),
            StartingPotential.kc(Q=10, alpha=1, L=0),
            StartingPotential.morse(A=2, B=Fraction(3, 2), alpha=4),
        ]

    def test_oscillator_energies(self):
        sp = StartingPotential.ho(omega=2, alpha=0)
        self.assertEqual([es_energy(sp, n) for n in range(4)], [1, 3, 5, 7])
        self.assertEqual(es_level_count(sp), math.inf)

    def test_undeformed_morse(self):
        sp = StartingPotential.morse(A=3, B=2, alpha=0)
        self.assertEqual([es_energy(sp, n) for n in range(3)], [-9, -4, -1])
        self.assertEqual(es_level_count(sp), 3)

    def test_coulomb_levels(self):
        sp = StartingPotential.kc(Q=10, alpha=1, L=0)
        self.assertEqual(es_level_count(sp), 3)
        self.assertEqual([es_energy(sp, n) for n in range(3)], [Fraction(-81, 4), Fraction(-9, 4), Fraction(-1, 36)])
        with self.assertRaises(AboveNmax):
            es_energy(sp, 3)

    def test_undeformed_coulomb(self):
        sp = StartingPotential.kc(Q=2, alpha=0, L=0)
        self.assertEqual(es_level_count(sp), math.inf)
        self.assertEqual(es_energy(sp, 1), Fraction(-1, 4))

    def test_tiny_morse_well(self):
        sp = StartingPotential.morse(A=Fraction(1, 10), B=Fraction(1, 10), alpha=1)
        self.assertEqual(es_level_count(sp), 0)
        with self.assertRaises(AboveNmax):
            es_energy(sp, 0)

    def test_negative_level(self):
        with self.assertRaises(ValueError):
            es_energy(StartingPotential.ho(omega=1, alpha=1), -1)

    def test_invalid_couplings(self):
        with self.assertRaises(InvalidParams):
            StartingPotential.ho(omega=0, alpha=1)
        with self.assertRaises(InvalidParams):
            StartingPotential.kc(Q=1, alpha=-1, L=0)
        with self.assertRaises(InvalidParams):
            StartingPotential.rho(omega=1, alpha=1, L=-1)

    def test_riccati_identity(self):
        for sp in self.exact:
            V, f, W = starting_potential_poly(sp)
            self.assertEqual(riccati_v1(W, f) + es_energy(sp, 0), V, sp.family)

    def test_reduce_round_trip(self):
        for sp in self.exact:
            V, _, _ = starting_potential_poly(sp)
            self.assertEqual(reduce_to_start(sp.family, V, sp.alpha), sp)

    def test_reduce_rejects_extra_terms(self):
        V = LaurentPoly({2: 1, 4: 1}, BaseCoordinate.real_line())
        with self.assertRaises(InvalidParams):
            reduce_to_start("ho", V, 1)


# =====================================
# Test Specifications
# =====================================


class TestSpecification(unittest.TestCase):
    def test_parse_aliases(self):
        spec = parse_instance_spec({"family": "morse", "m": 1, "alpha": 1, "B": 0.75, "Btop": "1"})
        self.assertEqual(
            spec,
            {
                "family": "morse",
                "m": 1,
                "alpha": Fraction(1),
                "B2minus": Fraction(3, 4),
                "B_top": Fraction(1),
            },
        )

    def test_parse_errors(self):
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec({"family": "pt", "m": 1})
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec({"family": "ho", "m": 1, "alpha": "1"})
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec({"family": "ho", "m": 1, "alpha": "1", "B_top": "1", "L": "1"})
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec({"family": "ho", "m": 1.5, "alpha": "1", "B_top": "1"})
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec({"family": "ho", "m": 1, "alpha": "one", "B_top": "1"})
        with self.assertRaises(InstanceSpecError):
            parse_instance_spec(["ho"])

    def test_build_instance(self):
        instance = build_instance({"family": "rho", "m": "1", "alpha": "1", "L": "1", "B_top": "1"})
        self.assertEqual(instance.E0, Fraction(9, 2))

    def test_build_instance_invalid_m(self):
        with self.assertRaisesRegex(InvalidParams, "m must be ≥ 1"):
            build_instance({"family": "ho", "m": 0, "alpha": "1", "B_top": "1"})

    def test_spec_round_trip(self):
        instance = build_kc(2, Fraction(1, 2), Fraction(3, 2), 4)
        document = spec_to_json(instance.spec)
        self.assertEqual(document, {"family": "kc", "m": 2, "alpha": "1/2", "B_top": "4", "L": "3/2"})
        self.assertEqual(build_instance(document).V, instance.V)

    def test_instance_json(self):
        document = instance_to_json(build_ho(1, 1, 1))
        self.assertEqual(document["E0"], "0")
        self.assertEqual(document["E1"], "3")
        self.assertEqual((document["E0_exact"], document["gap_exact"]), ("0", "3"))
        self.assertEqual(document["V"], {"2": "-3", "4": "-3", "6": "1"})
        self.assertEqual(document["domain"], [None, None])
        self.assertIsNone(document["Delta"])

    def test_morse_json(self):
        document = instance_to_json(build_morse(1, 1, Fraction(3, 4), 1))
        self.assertEqual(document["base"], "expneg")
        self.assertEqual(document["E0"], "-16.25")
        self.assertEqual(document["E0_exact"], "-65/4")
        self.assertEqual((document["E1"], document["gap"]), ("-4.25", "12"))
        self.assertEqual(document["Delta"], "2")


if __name__ == "__main__":
    unittest.main()

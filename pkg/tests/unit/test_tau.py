"""
Unit tests for the three tau recursions and the bridge to the Laurent coefficients
"""

import os
import random
import sys
import unittest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from hamcrest import assert_that, empty, equal_to, is_

from p1series.core.exceptions import CoverageError, SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.weighted_polynomial import g2, g3, lam
from p1series.laurent import laurent_coeffs
from p1series.tau import (
    bilinear_residual, euler_defect, gauge_transform, hamiltonian_check, hirota_b, integrality_report,
    quartic_residual, tau_coeffs, tau_coeffs_bilinear, tau_coeffs_quartic, tau_from_triple_sum,
    triple_sum_coeffs, u_from_tau
)
from p1series.tau.bridge import laurent_from_tau_series
from p1series.tau.triple_sum import s_of, triples_with_s

GENERIC = ParameterTriple(Fraction(1, 2), Fraction(1), Fraction(1, 3))


class TestBilinear(unittest.TestCase):

    def test_hirota_coefficients(self):
        """Test D^4 z^j . z^k coefficients"""
        self.assertEqual(hirota_b(1, 1), 0)
        self.assertEqual(hirota_b(2, 2), 24)
        self.assertEqual(hirota_b(4, 0), 24)
        with self.assertRaises(SeriesDomainError):
            hirota_b(-1, 2)

    def test_low_order_symbolic_coefficients(self):
        """Test C_4 = -g2/240, C_5 = -lambda/20, C_6 = -g3/840"""
        tau = tau_coeffs_bilinear(ParameterTriple.symbolic(), 6)
        self.assertEqual(tau.C(0), 1)
        self.assertTrue(all(tau.C(n).is_zero() for n in (1, 2, 3)))
        self.assertEqual(tau.C(4), -g2() / 240)
        self.assertEqual(tau.C(5), -lam() / 20)
        self.assertEqual(tau.C(6), -g3() / 840)

    def test_pentagonal_coefficients(self):
        """Test C_5, C_10, C_15, C_20 at g2 = g3 = 0, lambda = 1"""
        tau = tau_coeffs_bilinear(ParameterTriple.pentagonal(), 20)
        assert_that([tau.C(5), tau.C(10), tau.C(15), tau.C(20)],
                    equal_to([Fraction(-1, 20), Fraction(-7, 26400), Fraction(1, 1232000),
                              Fraction(83, 117976320000)]))

    def test_residual_vanishes(self):
        """Test the bilinear equation holds exactly below z^(N-1)"""
        tau = tau_coeffs_bilinear(GENERIC, 40)
        assert_that(bilinear_residual(tau).nonzero_terms(), is_(empty()))

    def test_symbolic_coefficients_are_homogeneous(self):
        """Test the Euler relation through weighted homogeneity"""
        tau = tau_coeffs_bilinear(ParameterTriple.symbolic(), 24)
        assert_that(euler_defect(tau), is_(empty()))

    def test_euler_defect_needs_symbolic_table(self):
        """Test the homogeneity check refuses rational tables"""
        with self.assertRaises(SeriesDomainError):
            euler_defect(tau_coeffs_bilinear(GENERIC, 8))


class TestQuartic(unittest.TestCase):

    def test_agrees_with_bilinear(self):
        """Test the degree four recursion reproduces the bilinear table"""
        self.assertEqual(list(tau_coeffs_quartic(GENERIC, 40).coeffs.values),
                         list(tau_coeffs_bilinear(GENERIC, 40).coeffs.values))

    def test_agrees_symbolically(self):
        """Test agreement over the polynomial ring"""
        symbolic = ParameterTriple.symbolic()
        self.assertEqual(list(tau_coeffs_quartic(symbolic, 16).coeffs.values),
                         list(tau_coeffs_bilinear(symbolic, 16).coeffs.values))

    def test_residual_vanishes(self):
        """Test the quartic equation holds exactly below z^(N-1)"""
        tau = tau_coeffs_quartic(GENERIC, 30)
        assert_that(quartic_residual(tau).nonzero_terms(), is_(empty()))


class TestTripleSum(unittest.TestCase):

    def test_seed_values(self):
        """Test A_000 = 1 and A_001 = -3"""
        table = triple_sum_coeffs(13)
        self.assertEqual(table.get(0, 0, 0), 1)
        self.assertEqual(table.get(0, 0, 1), -3)

    def test_index_enumeration(self):
        """Test the triples of a given s"""
        self.assertEqual(list(triples_with_s(11)), [(0, 2, 0), (1, 0, 1)])
        for key in triples_with_s(21):
            self.assertEqual(s_of(key), 21)

    def test_integrality(self):
        """Test every A with s <= 60 is an integer"""
        assert_that(integrality_report(60), is_(empty()))

    def test_assembled_tau_matches_bilinear(self):
        """Test tau from the triple sum equals the bilinear table"""
        table = triple_sum_coeffs(41)
        self.assertEqual(list(tau_from_triple_sum(table, GENERIC, 40).coeffs.values),
                         list(tau_coeffs_bilinear(GENERIC, 40).coeffs.values))

    def test_coverage(self):
        """Test a shallow table is refused"""
        with self.assertRaises(CoverageError):
            tau_from_triple_sum(triple_sum_coeffs(10), GENERIC, 20)

    def test_matrices(self):
        """Test the 3x3 blocks of A_{l,m,n} for m = 0, 1, 2, rows over l and columns over n"""
        table = triple_sum_coeffs(31)
        self.assertEqual(table.matrix(0), [[1, -3, -54], [-1, -18, 4968], [-9, 513, 257580]])
        self.assertEqual(table.matrix(1), [[-6, -216, 89424], [-84, 18720, 5786640], [1650, 1358640, 1168920720]])
        self.assertEqual(table.matrix(2), [[-294, 144144, 47585880], [18774, 15053040, 22914336240],
                                           [1112436, 3160803600, -2734614623160]])
        sigma = table.sigma_coefficients()
        self.assertEqual(sigma[(0, 0)], 1)
        self.assertEqual(sigma[(0, 1)], -3)
        self.assertEqual(sigma[(2, 2)], 257580)

    def test_dispatch(self):
        """Test tau_coeffs selects the recursion by name"""
        self.assertEqual(tau_coeffs(GENERIC, 12, "triple-sum").method, "triple-sum")
        with self.assertRaises(SeriesDomainError):
            tau_coeffs(GENERIC, 12, "cubic")


class TestThreeRecursions(unittest.TestCase):
    """The bilinear, quartic and triple-sum paths give the same C_n at random rational points"""

    def test_random_points(self):
        """Test exact agreement up to C_60 at three seeded random parameter points"""
        rng = random.Random(20240611)
        table = triple_sum_coeffs(61)
        for _ in range(3):
            params = ParameterTriple(*(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)))
            bilinear = list(tau_coeffs_bilinear(params, 60).coeffs.values)
            self.assertEqual(list(tau_coeffs_quartic(params, 60).coeffs.values), bilinear, str(params))
            self.assertEqual(list(tau_from_triple_sum(table, params, 60).coeffs.values), bilinear, str(params))


class TestBridge(unittest.TestCase):

    def test_u_from_tau(self):
        """Test -(log tau)'' reproduces the Laurent coefficients"""
        tau = tau_coeffs_bilinear(GENERIC, 40)
        self.assertEqual(list(u_from_tau(tau, 40).coeffs.values),
                         list(laurent_coeffs(GENERIC, 40).coeffs.values))

    def test_gauge_invariance(self):
        """Test exp(a z) tau gives the same u"""
        tau = tau_coeffs_bilinear(GENERIC, 30)
        transformed = gauge_transform(tau, Fraction(3, 7), Fraction(2))
        self.assertEqual(list(laurent_from_tau_series(transformed, GENERIC, 30).coeffs.values),
                         list(laurent_coeffs(GENERIC, 30).coeffs.values))

    def test_hamiltonian_identities(self):
        """Test h' = 6 lambda u and the Hamiltonian formula"""
        report = hamiltonian_check(GENERIC, 30)
        self.assertTrue(report.is_zero)
        self.assertEqual(report.max_deviation, 0)
        self.assertEqual(report.checked_below, 25)

    def test_hamiltonian_needs_order_six(self):
        """Test the check refuses very short tables"""
        with self.assertRaises(SeriesDomainError):
            hamiltonian_check(GENERIC, 5)

    def test_coverage(self):
        """Test asking for more Laurent coefficients than tau determines"""
        with self.assertRaises(CoverageError):
            u_from_tau(tau_coeffs_bilinear(GENERIC, 10), 12)


if __name__ == '__main__':
    unittest.main()

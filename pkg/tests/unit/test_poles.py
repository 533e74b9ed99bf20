"""
Unit tests for polynomial roots, tau truncations, trusted zeros and pole map export
"""

import os
import shutil
import sys
import tempfile
import unittest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

import mpmath
from hamcrest import assert_that, equal_to, has_length, starts_with

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import (
    CacheFileSystemError, InsufficientOrderError, NumericalFailureError, SeriesDomainError
)
from p1series.elliptic import EllipticCase, half_period
from p1series.exact.params import ParameterTriple
from p1series.poles import (
    export_pole_map, gamma_constant, gamma_report, newton_polygon_radii, pole_map_csv, pole_map_svg, polynomial_roots,
    trusted_zeros, truncated_tau_poly
)
from p1series.poles.export import pole_rows
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.poles.trusted import PoleSet, TrustedZero, comparison_order, residual_tolerance

SLOW = os.environ.get("P1SERIES_SLOW_TESTS", "").lower() in ("1", "true", "yes")


class TestAberth(unittest.TestCase):

    def test_quadratic(self):
        """Test the roots of w^2 - 3w + 2"""
        roots = polynomial_roots([2, -3, 1], digits=30)
        with mpmath.workdps(40):
            values = sorted(float(mpmath.re(r)) for r in roots)
            self.assertTrue(all(abs(mpmath.im(r)) < mpmath.mpf("1e-30") for r in roots))
            self.assertTrue(min(abs(r - 1) for r in roots) < mpmath.mpf("1e-29"))
            self.assertTrue(min(abs(r - 2) for r in roots) < mpmath.mpf("1e-29"))
        self.assertEqual(values, [1.0, 2.0])

    def test_roots_of_unity_and_zero_roots(self):
        """Test z^2 (z^5 - 1) keeps the two zero roots"""
        roots = polynomial_roots([0, 0, -1, 0, 0, 0, 0, 1], digits=20)
        assert_that(roots, has_length(7))
        self.assertEqual(sum(1 for r in roots if r == 0), 2)
        with mpmath.workdps(30):
            self.assertTrue(all(abs(abs(r) - 1) < mpmath.mpf("1e-19") for r in roots if r != 0))

    def test_widely_spread_coefficients(self):
        """Test roots spanning many orders of magnitude"""
        roots = polynomial_roots([10 ** 40, -(10 ** 20 + 1), 1], digits=20)
        with mpmath.workdps(30):
            moduli = sorted(abs(r) for r in roots)
            self.assertLess(abs(moduli[0] / mpmath.mpf(10) ** 20 - 1), mpmath.mpf("1e-18"))

    def test_newton_polygon(self):
        """Test hull radii add up to the degree"""
        radii = newton_polygon_radii([1, 0, 0, 1e-12])
        self.assertEqual(sum(count for _, count in radii), 3)
        self.assertAlmostEqual(float(radii[0][0]), 1e4, delta=1)

    def test_domain(self):
        """Test constant and degenerate input"""
        with self.assertRaises(SeriesDomainError):
            polynomial_roots([1])
        with self.assertRaises(SeriesDomainError):
            polynomial_roots([1, 2, 0])

    def test_iteration_cap(self):
        """Test the cap reports the partial roots"""
        with self.assertRaises(NumericalFailureError) as context:
            polynomial_roots([1, 0, 0, 0, 0, 0, 0, 3, 1], digits=30, max_iterations=1)
        self.assertEqual(len(context.exception.partial), 8)


class TestTruncation(unittest.TestCase):

    def test_pentagonal_stride(self):
        """Test only exponents 5m + 1 occur at the pentagonal point"""
        poly = truncated_tau_poly(ParameterTriple.pentagonal(), 30, 20)
        self.assertEqual(poly.stride, 5)
        self.assertEqual(poly.degree, 31)
        self.assertTrue(all(e % 5 == 1 for e in poly.exponent_support()))
        self.assertEqual(len(poly.reduced_coeffs()), 7)

    def test_generic_stride(self):
        """Test a generic point has stride one"""
        params = ParameterTriple(Fraction(1, 2), Fraction(1), Fraction(1, 3))
        self.assertEqual(truncated_tau_poly(params, 12, 15).stride, 1)

    def test_roots_are_roots(self):
        """Test every reported root makes the truncation small"""
        poly = truncated_tau_poly(ParameterTriple.lemniscatic(), 24, 40)
        with mpmath.workdps(50):
            for root in poly.roots(20):
                self.assertLess(abs(poly.evaluate(root)), mpmath.mpf("1e-15") * max(1, abs(root) ** 25))

    def test_domain(self):
        """Test short and symbolic truncations are refused"""
        with self.assertRaises(SeriesDomainError):
            truncated_tau_poly(ParameterTriple.pentagonal(), 5)
        with self.assertRaises(SeriesDomainError):
            truncated_tau_poly(ParameterTriple.symbolic(), 12)


class TestTrustedZeros(unittest.TestCase):

    def test_comparison_order(self):
        """Test N' is rounded up to the stride"""
        self.assertEqual(comparison_order(100, 5, 0.25), 125)
        self.assertEqual(comparison_order(101, 4, 0.25), 129)
        self.assertEqual(comparison_order(8, 5, 0.01), 13)

    def test_lemniscatic_lattice_points(self):
        """Test the nearest zeros of the sigma function sit at 2 omega_1 and its rotations"""
        case = EllipticCase.lemniscatic()
        poles = trusted_zeros(case.params, 80, digits=20)
        nearest = poles.zeros[:4]
        with mpmath.workdps(30):
            expected = 2 * half_period(case, 20)
            self.assertLess(abs(expected - mpmath.mpf("2.6220575543")), mpmath.mpf("1e-9"))
            for zero in nearest:
                self.assertLess(abs(zero.modulus - expected), mpmath.mpf("1e-9"))
            self.assertLess(poles.rotation_defect(4), mpmath.mpf("1e-9"))
        self.assertTrue(all(zero.stability < poles.tolerance for zero in poles.zeros))
        self.assertEqual(poles.nearest().value, poles.zeros[0].value)
        self.assertEqual(poles.N_prime, 100)

    def test_pentagonal_nearest_pole(self):
        """Test the five nearest pentagonal zeros have modulus gamma^(1/5)"""
        poles = trusted_zeros(ParameterTriple.pentagonal(), 100, digits=20)
        with mpmath.workdps(30):
            for zero in poles.zeros[:5]:
                self.assertLess(abs(zero.modulus - mpmath.mpf("1.788923")), mpmath.mpf("1e-5"))
            self.assertLess(poles.rotation_defect(5), mpmath.mpf("1e-9"))

    def test_residual_at_kept_zeros(self):
        """Test |tau_N| is below the residual tolerance at every kept zero"""
        poles = trusted_zeros(EllipticCase.lemniscatic().params, 80, digits=20)
        with mpmath.workdps(30):
            self.assertLess(abs(poles.residual_tolerance - mpmath.mpf("1e-10")), mpmath.mpf("1e-25"))
            for zero in poles.zeros:
                self.assertLess(zero.residual, poles.residual_tolerance)
                self.assertGreater(zero.derivative, mpmath.mpf("1e-6"))

    def test_configured_residual_tolerance(self):
        """Test a residual bound no root can meet leaves nothing trusted"""
        config = ConfigurationsManager()
        config.set_object_for_key(SP.RESIDUAL_TOLERANCE, "1e-300")
        try:
            with mpmath.workdps(30):
                self.assertLess(abs(residual_tolerance(20) / mpmath.mpf("1e-300") - 1), mpmath.mpf("1e-12"))
            with self.assertRaises(InsufficientOrderError):
                trusted_zeros(EllipticCase.lemniscatic().params, 80, digits=20)
        finally:
            config.set_object_for_key(SP.RESIDUAL_TOLERANCE, "")
        with mpmath.workdps(30):
            self.assertLess(abs(residual_tolerance(20) - mpmath.mpf("1e-10")), mpmath.mpf("1e-25"))

    @unittest.skipUnless(SLOW, "set P1SERIES_SLOW_TESTS=1 to run")
    def test_pentagonal_pole_map(self):
        """Test the N=501 pentagonal zeros: rotation invariance, nearest modulus and residuals within 1e-10"""
        poles = trusted_zeros(ParameterTriple.pentagonal(), 501, digits=25)
        self.assertEqual(len(poles) % 5, 0)
        with mpmath.workdps(40):
            self.assertLess(poles.rotation_defect(5), mpmath.mpf("1e-10"))
            self.assertEqual(mpmath.nstr(poles.nearest().modulus, 7), "1.788923")
            for zero in poles.zeros:
                self.assertLess(zero.residual, mpmath.mpf("1e-10"))
                self.assertLess(zero.stability, mpmath.mpf("1e-10"))

    def test_too_short_truncation(self):
        """Test a truncation with nothing stable"""
        with self.assertRaises(InsufficientOrderError):
            trusted_zeros(ParameterTriple.pentagonal(), 6, digits=60)


class TestGamma(unittest.TestCase):

    def test_ratio_and_root_agree(self):
        """Test gamma to 12 digits from both methods"""
        report = gamma_report(digits=12, N=201)
        with mpmath.workdps(30):
            self.assertLess(abs(report.value - mpmath.mpf("18.321382684724838871")), mpmath.mpf("1e-11"))
            self.assertLess(abs(report.ratio - report.root), mpmath.mpf("1e-10"))
        self.assertGreater(report.agreement, 10)
        self.assertEqual(report.n_max, 30)
        with mpmath.workdps(30):
            self.assertLess(abs(gamma_constant(12, N=201) - report.value), mpmath.mpf("1e-11"))

    @unittest.skipUnless(SLOW, "set P1SERIES_SLOW_TESTS=1 to run")
    def test_gamma_23_digits(self):
        """Test gamma = 18.32138268472483887119960 at the default truncation"""
        report = gamma_report(digits=23)
        with mpmath.workdps(40):
            self.assertLess(abs(report.value - mpmath.mpf("18.32138268472483887119960")), mpmath.mpf("1e-22"))

    def test_precision_limit(self):
        """Test more than 40 digits are refused"""
        with self.assertRaises(SeriesDomainError):
            gamma_report(digits=41)


class TestExport(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        with mpmath.workdps(30):
            zeros = [TrustedZero(mpmath.mpc(0, -2), mpmath.mpf("1e-20"), 0, 1),
                     TrustedZero(mpmath.mpc(1, 0), mpmath.mpf("2e-20"), 0, 1),
                     TrustedZero(mpmath.mpc(-1, 0), mpmath.mpf("3e-20"), 0, 1)]
        self.poleset = PoleSet(ParameterTriple.pentagonal(), 10, 15, 20, zeros, mpmath.mpf(2))

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_rows_sorted_by_modulus_then_argument(self):
        """Test CSV rows are ordered and fixed-point"""
        rows = pole_rows(self.poleset, decimals=4)
        assert_that([row[:2] for row in rows],
                    equal_to([("1.0000", "0.0000"), ("-1.0000", "0.0000"), ("0.0000", "-2.0000")]))

    def test_csv(self):
        """Test the CSV header and row count"""
        text = pole_map_csv(self.poleset)
        lines = text.splitlines()
        self.assertEqual(lines[0], "re,im,stability")
        self.assertEqual(len(lines), 4)

    def test_svg(self):
        """Test one circle per pole"""
        text = pole_map_svg(self.poleset)
        assert_that(text, starts_with("<svg"))
        self.assertEqual(text.count("<circle"), 3)

    def test_export_to_file(self):
        """Test writing both formats"""
        path = export_pole_map(self.poleset, os.path.join(self.temp_dir, "maps", "poles.csv"))
        with open(path, encoding="utf-8") as f:
            self.assertEqual(f.read(), pole_map_csv(self.poleset))
        svg = export_pole_map(self.poleset, os.path.join(self.temp_dir, "poles.svg"), "svg")
        self.assertTrue(os.path.exists(svg))

    def test_export_errors(self):
        """Test empty sets, unknown formats and unwritable paths"""
        empty = PoleSet(ParameterTriple.pentagonal(), 10, 15, 20)
        with self.assertRaises(InsufficientOrderError):
            pole_map_csv(empty)
        with self.assertRaises(SeriesDomainError):
            export_pole_map(self.poleset, os.path.join(self.temp_dir, "poles.png"), "png")
        blocker = os.path.join(self.temp_dir, "file")
        with open(blocker, "w") as f:
            f.write("x")
        with self.assertRaises(CacheFileSystemError):
            export_pole_map(self.poleset, os.path.join(blocker, "poles.csv"))


if __name__ == '__main__':
    unittest.main()

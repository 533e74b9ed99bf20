"""
Unit tests for the Laurent recursion, the pentagonal sequence and the stratified tables
"""

import os
import random
import sys
import unittest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

import mpmath
from hamcrest import assert_that, contains_exactly, empty, equal_to, is_

from p1series.core.exceptions import CoverageError, PoleError, SeriesDomainError
from p1series.elliptic import EllipticCase, half_period
from p1series.exact.params import ParameterTriple
from p1series.exact.weighted_polynomial import g2, g3, lam
from p1series.laurent import (
    decay_ratios, evaluate_u, laurent_coeffs, modular_polynomials, nearest_pole_estimate, ode_residual,
    pentagonal_coeffs, power_sums_F, stratified_g2zero, stratified_g3zero, stratified_reassemble
)
from p1series.laurent.stratified import generating_function_residual, w_hat_step, w_step

GAMMA_TEXT = "18.32138268472483887119960"

PENTAGONAL_F5N = {
    1: "4.58034567118120971779", 2: "5.08595550727477491732", 3: "4.99187877676419618477",
    4: "5.00112762186482314743", 5: "4.99986996982708054870", 6: "5.00001616272241466829",
    11: "4.99999999957591996469", 12: "5.00000000005151463070", 13: "4.99999999999374379484",
    14: "5.00000000000075986460",
}


def gamma_value():
    with mpmath.workdps(40):
        return mpmath.mpf(GAMMA_TEXT)


class TestLaurentRecursion(unittest.TestCase):

    def test_weierstrass_coefficients(self):
        """Test the lambda = 0 coefficients are those of the Weierstrass function"""
        c = laurent_coeffs(ParameterTriple.symbolic(), 8)
        self.assertEqual(c.c(0), 1)
        for n in (1, 2, 3, 7):
            self.assertTrue(c.c(n).is_zero(), f"c_{n} should vanish")
        self.assertEqual(c.c(4), g2() / 20)
        self.assertEqual(c.c(5), lam())
        self.assertEqual(c.c(6), g3() / 28)
        self.assertEqual(c.c(8), g2() ** 2 / 1200)

    def test_modular_polynomials_are_homogeneous(self):
        """Test P_n has weight n"""
        table = modular_polynomials(30)
        for n, value in table.items():
            self.assertTrue(value.is_homogeneous(n), f"P_{n} = {value}")

    def test_rational_point_matches_symbolic(self):
        """Test substituting into P_n gives the rational recursion"""
        params = ParameterTriple(Fraction(1, 2), Fraction(-3), Fraction(2, 7))
        numeric = laurent_coeffs(params, 25)
        symbolic = modular_polynomials(25).evaluate(params)
        assert_that(list(symbolic.values), equal_to(list(numeric.coeffs.values)))

    def test_ode_residual_vanishes(self):
        """Test the truncated series satisfies the equation exactly"""
        expansion = laurent_coeffs(ParameterTriple(Fraction(1), Fraction(1, 3), Fraction(-2)), 40)
        assert_that(ode_residual(expansion).nonzero_terms(), is_(empty()))

    def test_seed_prefix_is_reused(self):
        """Test a shorter table seeds a longer computation"""
        params = ParameterTriple.pentagonal()
        short = laurent_coeffs(params, 20)
        longer = laurent_coeffs(params, 40, seed=short.coeffs)
        self.assertEqual(list(longer.coeffs.values), list(laurent_coeffs(params, 40).coeffs.values))

    def test_seed_from_other_point_is_refused(self):
        """Test seeding with a table of another parameter point"""
        seed = laurent_coeffs(ParameterTriple.lemniscatic(), 10).coeffs
        with self.assertRaises(SeriesDomainError):
            laurent_coeffs(ParameterTriple.pentagonal(), 20, seed=seed)

    def test_negative_order(self):
        """Test a negative truncation order is refused"""
        with self.assertRaises(SeriesDomainError):
            laurent_coeffs(ParameterTriple.pentagonal(), -1)

    def test_table_coverage(self):
        """Test reading past the computed range"""
        expansion = laurent_coeffs(ParameterTriple.pentagonal(), 10)
        with self.assertRaises(CoverageError):
            expansion.c(11)


class TestPentagonal(unittest.TestCase):

    def test_first_values(self):
        """Test v_1, v_2, v_3"""
        v = pentagonal_coeffs(3)
        assert_that(list(v.values), contains_exactly(Fraction(1), Fraction(3, 22), Fraction(1, 88)))

    def test_v_n_are_every_fifth_laurent_coefficient(self):
        """Test v_n = c_5n and the other coefficients vanish"""
        v = pentagonal_coeffs(12)
        c = laurent_coeffs(ParameterTriple.pentagonal(), 60)
        for n in range(1, 13):
            self.assertEqual(v[n], c.c(5 * n))
        self.assertTrue(all(c.c(k) == 0 for k in range(1, 61) if k % 5))

    def test_nearest_pole_ratio(self):
        """Test the strided ratios converge to gamma"""
        estimate = nearest_pole_estimate(ParameterTriple.pentagonal(), 30, step=5, digits=20)
        with mpmath.workdps(30):
            self.assertLess(abs(estimate.value - gamma_value()), mpmath.mpf("1e-15"))
            self.assertLess(abs(estimate.modulus - mpmath.mpf("1.788923")), mpmath.mpf("1e-5"))

    def test_power_sums(self):
        """Test F_5 and F_60 from gamma"""
        expansion = laurent_coeffs(ParameterTriple.pentagonal(), 60)
        with mpmath.workdps(40):
            omega = mpmath.root(gamma_value(), 5)
        first, twelfth = power_sums_F(expansion, omega, [5, 60], digits=25)
        with mpmath.workdps(30):
            self.assertLess(abs(first - mpmath.mpf("4.58034567118120971779")), mpmath.mpf("1e-18"))
            self.assertLess(abs(twelfth - mpmath.mpf("5.00000000005151463070")), mpmath.mpf("1e-17"))

    def test_power_sums_table(self):
        """Test F_5n for n in 1..6 and 11..14 to twenty decimals"""
        expansion = laurent_coeffs(ParameterTriple.pentagonal(), 70)
        with mpmath.workdps(40):
            omega = mpmath.root(gamma_value(), 5)
        indices = sorted(PENTAGONAL_F5N)
        values = power_sums_F(expansion, omega, [5 * n for n in indices], digits=30)
        with mpmath.workdps(40):
            for n, value in zip(indices, values):
                self.assertLess(abs(value - mpmath.mpf(PENTAGONAL_F5N[n])), mpmath.mpf("2e-20"), f"n={n}")

    def test_power_sums_domain(self):
        """Test indices below 3 are refused"""
        expansion = laurent_coeffs(ParameterTriple.pentagonal(), 10)
        with self.assertRaises(SeriesDomainError):
            power_sums_F(expansion, 2, [2])


class TestPowerSumDecay(unittest.TestCase):
    """F_kn - k shrinks geometrically for the three symmetric solutions"""

    def _check_decay(self, params, omega, k, limit_ratio):
        expansion = laurent_coeffs(params, k * 14)
        values = power_sums_F(expansion, omega, [k * n for n in range(1, 15)], digits=30)
        ratios = decay_ratios(values, k)
        self.assertEqual(len(ratios), 13)
        with mpmath.workdps(30):
            self.assertTrue(all(ratio < 1 for ratio in ratios), [mpmath.nstr(r, 5) for r in ratios])
            for ratio in ratios[-4:]:
                self.assertLess(abs(ratio - mpmath.mpf(limit_ratio)), mpmath.mpf("0.005"))

    def test_pentagonal(self):
        """Test |F_5n - 5| decays with ratio near 0.1214"""
        with mpmath.workdps(40):
            omega = mpmath.root(gamma_value(), 5)
        self._check_decay(ParameterTriple.pentagonal(), omega, 5, "0.1214")

    def test_lemniscatic(self):
        """Test |F_4n - 4| decays with ratio 1/4 from the poles at (1 + i) omega"""
        case = EllipticCase.lemniscatic()
        with mpmath.workdps(40):
            omega = 2 * half_period(case, 35)
        self._check_decay(case.params, omega, 4, "0.25")

    def test_equianharmonic(self):
        """Test |F_6n - 6| decays with ratio 1/27 from the second shell of the hexagonal lattice"""
        case = EllipticCase.equianharmonic()
        with mpmath.workdps(40):
            omega = 2 * half_period(case, 35)
        self._check_decay(case.params, omega, 6, "0.037037")

    def test_values_on_the_limit_are_skipped(self):
        """Test a value sitting on the limit is not used as a divisor"""
        with mpmath.workdps(20):
            ratios = decay_ratios([mpmath.mpf(3), mpmath.mpf(5), mpmath.mpf("5.5"), mpmath.mpf("5.25")], 5)
            assert_that(ratios, contains_exactly(0, mpmath.mpf("0.5")))


class TestEvaluation(unittest.TestCase):

    def test_partial_sum_inside_radius(self):
        """Test u at z = 1/2 satisfies the equation to high accuracy"""
        result = evaluate_u(ParameterTriple.pentagonal(), Fraction(1, 2), 80, digits=20)
        self.assertTrue(result.inside)
        self.assertIsNone(result.warning)
        with mpmath.workdps(30):
            self.assertLess(result.residual, mpmath.mpf("1e-15"))
            self.assertLess(abs(result.value - 4 - mpmath.mpf(1) / 8), mpmath.mpf("0.01"))

    def test_warning_outside_radius(self):
        """Test a point beyond the nearest pole is flagged"""
        result = evaluate_u(ParameterTriple.pentagonal(), Fraction(5, 2), 80, digits=15)
        self.assertFalse(result.inside)
        self.assertIsNotNone(result.warning)

    def test_pole_at_origin(self):
        """Test evaluation at the pole"""
        with self.assertRaises(PoleError):
            evaluate_u(ParameterTriple.pentagonal(), 0, 20)


class TestStratified(unittest.TestCase):

    def test_pentagonal_row(self):
        """Test the m = 0, p = 0 row of both families is v_n"""
        v = list(pentagonal_coeffs(8).values)
        self.assertEqual(stratified_g2zero(8, 1).row(0, 0), v)
        self.assertEqual(stratified_g3zero(8, 1).row(0, 0), v)

    def test_g2zero_reassembly(self):
        """Test the g2 = 0 table reassembles c_n at alpha = 2/7, lambda = 3/5"""
        alpha, lam_value = Fraction(2, 7), Fraction(3, 5)
        table = stratified_g2zero(8, 2)
        c = laurent_coeffs(ParameterTriple(0, lam_value, 28 * alpha), 44)
        for n in range(1, 9):
            for p in range(5):
                self.assertEqual(table.reassemble(n, p, alpha, lam_value), c.c(5 * n + p), f"n={n}, p={p}")

    def test_g3zero_reassembly(self):
        """Test the g3 = 0 table reassembles c_n at beta = 1/3, lambda = 3/5"""
        beta, lam_value = Fraction(1, 3), Fraction(3, 5)
        table = stratified_g3zero(8, 2)
        c = laurent_coeffs(ParameterTriple(20 * beta, lam_value, 0), 40)
        for n in range(1, 9):
            for p in range(5):
                self.assertEqual(table.reassemble(n, p, beta, lam_value), c.c(5 * n - p), f"n={n}, p={p}")

    def test_first_families_follow_linear_steps(self):
        """Test w_n and what_n from their linear recursions"""
        v = list(pentagonal_coeffs(10).values)
        for table, step in ((stratified_g2zero(10, 0), w_step), (stratified_g3zero(10, 0), w_hat_step)):
            family = table.first_family()
            self.assertEqual(family[0], 1)
            for n in range(2, 11):
                self.assertEqual(step(family[:n - 1], v), family[n - 1])

    def test_steps_are_linear_in_the_prefix(self):
        """Test w_step and w_hat_step commute with linear combinations of random prefixes"""
        rng = random.Random(5)
        v = list(pentagonal_coeffs(12).values)
        for step in (w_step, w_hat_step):
            for n in range(2, 13):
                x = [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(n - 1)]
                y = [Fraction(rng.randint(-50, 50), rng.randint(1, 20)) for _ in range(n - 1)]
                a, b = Fraction(rng.randint(-9, 9), rng.randint(1, 9)), Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                combined = [a * p + b * q for p, q in zip(x, y)]
                self.assertEqual(step(combined, v), a * step(x, v) + b * step(y, v), f"{step.__name__} n={n}")

    def test_generating_function(self):
        """Test x G'' + 12/5 G' - 12/25 G psi vanishes for the first g2 = 0 family"""
        v = list(pentagonal_coeffs(10).values)
        w = stratified_g2zero(10, 0).first_family()
        self.assertEqual(w[1], Fraction(1, 5))
        residual = generating_function_residual(w, v)
        assert_that(residual.truncate(9).nonzero_terms(), is_(empty()))

    def test_bounds(self):
        """Test empty tables are refused"""
        with self.assertRaises(SeriesDomainError):
            stratified_g2zero(0, 1)

    def test_reassemble_function(self):
        """Test the index and value of a rebuilt coefficient"""
        lam_value = Fraction(3, 5)
        c = laurent_coeffs(ParameterTriple(Fraction(20), lam_value, 0), 20).coeffs
        index, value = stratified_reassemble(stratified_g3zero(4, 2), 3, 2, Fraction(1), lam_value)
        self.assertEqual(index, 13)
        self.assertEqual(value, c[13])
        self.assertEqual(stratified_reassemble(stratified_g2zero(4, 1), 2, 0, Fraction(1), lam_value)[0], 10)
        with self.assertRaises(SeriesDomainError):
            stratified_reassemble(stratified_g2zero(4, 1), 5, 0, Fraction(1), lam_value)


if __name__ == '__main__':
    unittest.main()

#!/usr/bin/env python3
"""
Tests for the cross-recursion identity suite
"""

import os
import sys
import unittest
from fractions import Fraction
from unittest.mock import patch

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

from hamcrest import assert_that, contains_string, empty, has_item, is_

from p1series.cli.verify import run_verification
from p1series.core.exceptions import VerificationError
from p1series.exact.params import ParameterTriple

SLOW = os.environ.get("P1SERIES_SLOW_TESTS", "").lower() in ("1", "true", "yes")


class TestVerification(unittest.TestCase):
    """Test cases for run_verification"""

    def test_generic_point(self):
        """Test every identity holds at a point with all parameters nonzero"""
        params = ParameterTriple(Fraction(1, 2), Fraction(1), Fraction(1, 3))
        report = run_verification(params, 30, s_max=30)
        self.assertTrue(report.valid, "\n".join(report.errors))
        assert_that(report.errors, is_(empty()))
        assert_that(report.passed, has_item("quartic and bilinear recursions agree"))
        self.assertEqual(report.details["N"], 30)
        report.raise_on_failure()

    def test_special_points(self):
        """Test the pentagonal and lemniscatic points"""
        for params in (ParameterTriple.pentagonal(), ParameterTriple.lemniscatic()):
            report = run_verification(params, 24, s_max=20)
            self.assertTrue(report.valid, f"{params}: {report.errors}")

    def test_failure_is_reported(self):
        """Test a broken identity marks the report invalid"""
        with patch("p1series.cli.verify.hurwitz_from_laurent", return_value=Fraction(0)):
            report = run_verification(ParameterTriple.pentagonal(), 12, s_max=12)
        self.assertFalse(report.valid)
        assert_that(report.errors, has_item(contains_string("Hurwitz recurrence")))
        with self.assertRaises(VerificationError) as context:
            report.raise_on_failure()
        self.assertEqual(len(context.exception.failures), 1)

    @unittest.skipUnless(SLOW, "set P1SERIES_SLOW_TESTS=1 to run")
    def test_generic_point_high_order(self):
        """Test the identity suite at order 200"""
        params = ParameterTriple(Fraction(1, 2), Fraction(1), Fraction(1, 3))
        report = run_verification(params, 200, s_max=60)
        self.assertTrue(report.valid, "\n".join(report.errors))


if __name__ == '__main__':
    unittest.main()

"""
Unit tests for rational parsing, the coefficient cache and result rendering
"""

import json
import os
import shutil
import sys
import tempfile
import unittest
from fractions import Fraction

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..'))

import mpmath
from hamcrest import assert_that, contains_string, equal_to

from p1series.cli.cache import CacheFile, cache_roundtrip, load_seed, read_table, write_table
from p1series.cli.parser import build_parser, parse_indices, parse_rational
from p1series.cli.report import ResultTable, format_value, render, to_csv, to_json
from p1series.core.exceptions import (
    CacheCorruptionError, CacheFileSystemError, CacheVersionError, RationalParseError, SeriesDomainError
)
from p1series.exact.params import ParameterTriple
from p1series.laurent import laurent_coeffs, pentagonal_coeffs
from p1series.tau import triple_sum_coeffs


class TestRationalParsing(unittest.TestCase):

    def test_accepted_forms(self):
        """Test integers, fractions and finite decimals"""
        test_cases = [
            ("3", Fraction(3)),
            ("-7", Fraction(-7)),
            ("1/3", Fraction(1, 3)),
            (" -2 / 6 ", Fraction(-1, 3)),
            ("0.125", Fraction(1, 8)),
            ("-.5", Fraction(-1, 2)),
        ]
        for text, expected in test_cases:
            self.assertEqual(parse_rational(text), expected, f"Failed for input: {text}")

    def test_rejected_forms(self):
        """Test zero denominators and non-numbers"""
        for text in ("1/0", "abc", "1e5", "", "1/2/3", "0.1.2"):
            with self.assertRaises(RationalParseError, msg=f"accepted '{text}'"):
                parse_rational(text)

    def test_parameter_triple_from_strings(self):
        """Test the parameter point of a command line"""
        params = ParameterTriple.from_strings("1/2", "1", "0.25")
        self.assertEqual(params.values(), (Fraction(1, 2), Fraction(1), Fraction(1, 4)))
        self.assertEqual(str(params), "(g2=1/2, lambda=1, g3=1/4)")

    def test_indices(self):
        """Test index lists with ranges"""
        self.assertEqual(parse_indices("1-6,11-14"), [1, 2, 3, 4, 5, 6, 11, 12, 13, 14])
        self.assertEqual(parse_indices("3, 5"), [3, 5])
        with self.assertRaises(SeriesDomainError):
            parse_indices("1-x")

    def test_parser_defaults(self):
        """Test common defaults come from the configuration"""
        args = build_parser().parse_args(["laurent"])
        self.assertEqual((args.g2, args.lam, args.g3), ("0", "1", "0"))
        self.assertEqual(args.terms, 100)
        self.assertEqual(args.digits, 25)
        self.assertEqual(args.format, "json")

    def test_parser_rejects_unknown_choice(self):
        """Test argparse refuses an unknown format"""
        with self.assertRaises(SystemExit):
            build_parser().parse_args(["tau", "--format", "xml"])


class TestCoefficientCache(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.mkdtemp()
        self.path = os.path.join(self.temp_dir, "cache", "table.p1c")

    def tearDown(self):
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def _rewrite(self, old, new):
        with open(self.path, encoding="utf-8") as f:
            text = f.read()
        with open(self.path, "w", encoding="utf-8") as f:
            f.write(text.replace(old, new, 1))

    def test_roundtrip_rational(self):
        """Test a rational Laurent table survives a write and read"""
        table = laurent_coeffs(ParameterTriple(Fraction(1, 2), Fraction(1), Fraction(1, 3)), 30).coeffs
        back = cache_roundtrip(table, self.path)
        self.assertEqual(back, table)

    def test_roundtrip_symbolic(self):
        """Test polynomial entries survive a write and read"""
        table = laurent_coeffs(ParameterTriple.symbolic(), 16).coeffs
        back = cache_roundtrip(table, self.path)
        self.assertEqual(list(back.values), list(table.values))
        self.assertTrue(back.params.is_symbolic())

    def test_roundtrip_triple_sum(self):
        """Test the A table with triple keys"""
        table = triple_sum_coeffs(30)
        back = cache_roundtrip(table, self.path)
        self.assertEqual(back.entries, table.entries)
        self.assertEqual(back.s_max, 30)

    def test_header(self):
        """Test the text header"""
        write_table(pentagonal_coeffs(5), self.path)
        with open(self.path, encoding="utf-8") as f:
            text = f.read()
        assert_that(text, contains_string("recursion=pentagonal"))
        assert_that(text, contains_string("version=1"))
        assert_that(text, contains_string("2 3/22"))

    def test_version_bump(self):
        """Test a cache of another format version is refused"""
        write_table(pentagonal_coeffs(5), self.path)
        self._rewrite("version=1", "version=2")
        with self.assertRaises(CacheVersionError) as context:
            read_table(self.path)
        self.assertEqual(context.exception.found, "2")

    def test_checksum_corruption(self):
        """Test an edited body fails its checksum"""
        write_table(pentagonal_coeffs(5), self.path)
        self._rewrite("2 3/22", "2 3/23")
        with self.assertRaises(CacheCorruptionError):
            read_table(self.path)

    def test_not_a_cache(self):
        """Test arbitrary text is refused"""
        with self.assertRaises(CacheCorruptionError):
            CacheFile.from_text("hello\n---\n1 1/1\n")

    def test_missing_file(self):
        """Test reading a missing cache"""
        with self.assertRaises(CacheFileSystemError):
            read_table(os.path.join(self.temp_dir, "missing.p1c"))
        self.assertIsNone(load_seed(os.path.join(self.temp_dir, "missing.p1c"), "pentagonal"))

    def test_seed_for_other_request_is_ignored(self):
        """Test a cache of another recursion or point is not used as a seed"""
        write_table(laurent_coeffs(ParameterTriple.lemniscatic(), 10).coeffs, self.path)
        self.assertIsNone(load_seed(self.path, "pentagonal"))
        self.assertIsNone(load_seed(self.path, "laurent", ParameterTriple.pentagonal()))
        self.assertIsNotNone(load_seed(self.path, "laurent", ParameterTriple.lemniscatic()))


class TestReport(unittest.TestCase):

    def setUp(self):
        self.table = ResultTable("sample", ["n", "value", "float"], meta={"N": 3})
        with mpmath.workdps(30):
            self.table.add(1, Fraction(3, 22), mpmath.mpf(1) / 3)
            self.table.add(2, Fraction(-4), mpmath.mpc(1, -2))

    def test_format_value(self):
        """Test exact and floating tokens"""
        self.assertEqual(format_value(Fraction(3, 22), 10), "3/22")
        self.assertEqual(format_value(Fraction(4, 2), 10), "2")
        self.assertEqual(format_value(True, 10), "true")
        with mpmath.workdps(30):
            self.assertEqual(format_value(mpmath.mpf(1) / 4, 5), "0.25000")
            self.assertEqual(format_value(mpmath.mpc(1, -2), 3), "1.00-2.00j")

    def test_json_and_csv_carry_the_same_tokens(self):
        """Test both renderings expose identical strings"""
        document = json.loads(to_json(self.table, 12))
        csv_rows = [line.split(",") for line in to_csv(self.table, 12).splitlines()]
        self.assertEqual(csv_rows[0], ["n", "value", "float"])
        json_rows = [[row[column] for column in document["columns"]] for row in document["rows"]]
        assert_that(json_rows, equal_to(csv_rows[1:]))
        self.assertEqual(document["meta"], {"N": "3"})

    def test_render_dispatch(self):
        """Test render picks the format"""
        self.assertTrue(render(self.table, "csv", 8).startswith("n,value,float"))
        self.assertTrue(render(self.table, "json", 8).startswith("{"))


if __name__ == '__main__':
    unittest.main()

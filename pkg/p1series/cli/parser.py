"""
Command line parsing: exact rationals, the request object and the argument parser.
"""
import argparse
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import RationalParseError, SeriesDomainError
from p1series.keys.series_properties import SeriesProperties as SP

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*$")
INTEGER_PATTERN = re.compile(r"^\s*[+-]?\d+\s*$")
DECIMAL_PATTERN = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+)\s*$")

SUBCOMMANDS = ("laurent", "tau", "triple-sum", "elliptic", "pentagon", "poles", "verify")
FORMATS = ("json", "csv", "svg")


def parse_rational(text: str) -> Fraction:
    """
    Exact value of an integer, a fraction ``p/q`` or a finite decimal.

    Raises:
        RationalParseError: for a zero denominator or anything else
    """
    if not isinstance(text, str):
        raise RationalParseError(f"expected text, got {type(text).__name__}", text=str(text))
    match = RATIONAL_PATTERN.match(text)
    if match:
        numerator, denominator = int(match.group(1)), int(match.group(2))
        if denominator == 0:
            raise RationalParseError(f"zero denominator in '{text}'", text=text)
        return Fraction(numerator, denominator)
    if INTEGER_PATTERN.match(text) or DECIMAL_PATTERN.match(text):
        return Fraction(text.strip())
    raise RationalParseError(f"'{text}' is not an integer, a fraction p/q or a finite decimal", text=text)


@dataclass
class CommandRequest:
    """
    One command line invocation.

    Attributes:
        subcommand: one of SUBCOMMANDS
        g2, lam, g3: exact rational strings
        terms: truncation order N
        digits: output precision
        format: json, csv or svg
        cache: optional coefficient cache path
        out: optional output path; stdout otherwise
        options: subcommand specific flags
    """
    subcommand: str
    g2: str
    lam: str
    g3: str
    terms: int
    digits: int
    format: str = "json"
    cache: Optional[str] = None
    out: Optional[str] = None
    options: Dict[str, Any] = field(default_factory=dict)

    @property
    def params(self):
        from p1series.exact.params import ParameterTriple

        return ParameterTriple.from_strings(self.g2, self.lam, self.g3)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'CommandRequest':
        common = {"subcommand", "g2", "lam", "g3", "terms", "digits", "format", "cache", "out", "verbose"}
        options = {k: v for k, v in vars(args).items() if k not in common}
        return cls(args.subcommand, args.g2, args.lam, args.g3, args.terms, args.digits, args.format,
                   args.cache, args.out, options)


def _common_arguments() -> argparse.ArgumentParser:
    config = ConfigurationsManager()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--g2', default=config.get_str_for_key(SP.DEFAULT_G2, "0"),
                        help='g2 as an exact rational (default: %(default)s)')
    common.add_argument('--lambda', dest='lam', default=config.get_str_for_key(SP.DEFAULT_LAMBDA, "1"),
                        help='lambda as an exact rational (default: %(default)s)')
    common.add_argument('--g3', default=config.get_str_for_key(SP.DEFAULT_G3, "0"),
                        help='g3 as an exact rational (default: %(default)s)')
    common.add_argument('--terms', '-n', type=int, default=config.get_int_for_key(SP.DEFAULT_TERMS, 100),
                        help='truncation order N (default: %(default)s)')
    common.add_argument('--digits', '-d', type=int, default=config.get_int_for_key(SP.DEFAULT_DIGITS, 25),
                        help='decimal digits of floating output (default: %(default)s)')
    common.add_argument('--format', '-f', choices=FORMATS, default='json',
                        help='output format (default: %(default)s)')
    common.add_argument('--cache', help='coefficient cache file, read when present and written afterwards')
    common.add_argument('--out', '-o', help='output file (default: standard output)')
    common.add_argument('--verbose', '-v', action='store_true', help='debug logging')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_arguments()
    parser = argparse.ArgumentParser(prog='p1series',
                                     description='Exact series expansions for the first Painleve equation')
    subparsers = parser.add_subparsers(dest='subcommand', required=True, metavar='{' + ','.join(SUBCOMMANDS) + '}')

    laurent = subparsers.add_parser('laurent', parents=[common], help='Laurent coefficients c_n or P_n')
    laurent.add_argument('--symbolic', action='store_true',
                         help='modular polynomials P_n in g2, lambda, g3 instead of values')
    laurent.add_argument('--stratified', choices=['g2-zero', 'g3-zero'],
                         help='coefficients sorted by powers of g3 (g2 = 0) or g2 (g3 = 0)')
    laurent.add_argument('--orders', type=int, default=2, help='highest order m of a stratified table')
    laurent.add_argument('--at', dest='point', help='evaluate u at this point, e.g. 0.5 or 1/2')

    tau = subparsers.add_parser('tau', parents=[common], help='tau coefficients C_n')
    tau.add_argument('--method', choices=['bilinear', 'quartic', 'triple-sum'], default='bilinear',
                     help='recursion (default: %(default)s)')
    tau.add_argument('--symbolic', action='store_true', help='C_n as polynomials in g2, lambda, g3')

    triple = subparsers.add_parser('triple-sum', parents=[common], help='integer coefficients A_{l,m,n}')
    triple.add_argument('--check-integrality', action='store_true',
                        help='list the A with s <= terms that are not integers')
    triple.add_argument('--matrices', action='store_true', help='only the 3x3 matrices M(0), M(1), M(2)')

    elliptic = subparsers.add_parser('elliptic', parents=[common], help='lambda = 0 constants and tables')
    elliptic.add_argument('--case', choices=['equianharmonic', 'lemniscatic'], default='equianharmonic')
    elliptic.add_argument('--table', choices=['eisenstein', 'hurwitz', 'half-period'], default='eisenstein')
    elliptic.add_argument('--indices', default='1-6,11-14', help='indices n, e.g. 1-6,11-14')

    pentagon = subparsers.add_parser('pentagon', parents=[common], help='pentagonal v_n, gamma and F_n')
    pentagon.add_argument('--table', choices=['coefficients', 'gamma', 'power-sums'], default='coefficients')
    pentagon.add_argument('--indices', default='1-6,11-14', help='indices n of the power sums F_5n')

    poles = subparsers.add_parser('poles', parents=[common], help='trusted zeros of truncated tau')
    poles.add_argument('--growth', type=float, help='relative growth of the comparison order')

    verify = subparsers.add_parser('verify', parents=[common], help='cross-recursion identity suite')
    verify.add_argument('--s-max', type=int, default=60, help='triple-sum integrality bound')
    return parser


def parse_indices(text: str) -> list:
    """'1-6,11-14' -> [1, ..., 6, 11, ..., 14]."""
    indices = []
    try:
        for part in text.split(','):
            part = part.strip()
            if not part:
                continue
            if '-' in part:
                low, high = part.split('-', 1)
                indices.extend(range(int(low), int(high) + 1))
            else:
                indices.append(int(part))
    except ValueError as e:
        raise SeriesDomainError(f"malformed index list '{text}'", details={"error": str(e)}) from e
    return indices

"""
tau as a triple sum

    tau = sum A_{l,m,n} (g2/2)^l (6 lambda)^m (2 g3)^n z^s / s!,   s = 4l + 5m + 6n + 1

with A_{0,0,0} = 1 and A_{0,0,1} = -3. Writing s_1, s_2 for the indices of the two factors,
the bilinear equation becomes (after multiplying by (s+1)!/(s-3)!)

    2 (s+1) s (s-1) (s-2) (s-7) A = - sum' b(s_1, s_2) C(s+1, s_1) A_1 A_2
        + 2 (s+1) s (s-1) (s-2) [ (s-3) sum_{m-1} C(s-4, s_1) A_1 A_2 + sum_{l-1} C(s-3, s_1) A_1 A_2 ]

where sum' runs over splittings of (l, m, n) without the trivial ones, and the other two
sums over splittings of (l, m-1, n) and (l-1, m, n). Everything stays in the integers
until the final division.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Dict, Iterator, List, Tuple, Union

from p1series.core.exceptions import CoverageError, SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.scalars import divide
from p1series.exact.tables import CoefficientTable
from p1series.laurent.recursion import normalise_scalar
from p1series.tau.bilinear import hirota_b
from p1series.tau.expansion import TRIPLE_SUM, TauExpansion

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]
Number = Union[int, Fraction]


def s_of(key: Triple) -> int:
    l, m, n = key
    return 4 * l + 5 * m + 6 * n + 1


def triples_with_s(s: int) -> Iterator[Triple]:
    """All (l, m, n) with 4l + 5m + 6n + 1 = s in lexicographic order."""
    weight = s - 1
    for l in range(weight // 4 + 1):
        for m in range((weight - 4 * l) // 5 + 1):
            rest = weight - 4 * l - 5 * m
            if rest % 6 == 0:
                yield l, m, rest // 6


def splittings(key: Triple) -> Iterator[Tuple[Triple, Triple]]:
    l, m, n = key
    for l1 in range(l + 1):
        for m1 in range(m + 1):
            for n1 in range(n + 1):
                yield (l1, m1, n1), (l - l1, m - m1, n - n1)


@dataclass
class TripleSumTable:
    s_max: int
    entries: Dict[Triple, Number] = field(default_factory=dict)

    def get(self, l: int, m: int, n: int) -> Number:
        return self.entries.get((l, m, n), 0)

    def keys_by_s(self) -> List[Triple]:
        """Keys ordered by s, ties broken lexicographically."""
        return sorted(self.entries, key=lambda key: (s_of(key), key))

    def sigma_coefficients(self) -> Dict[Tuple[int, int], Number]:
        """The lambda = 0 slice a_{m,n} = A_{m,0,n}."""
        return {(l, n): value for (l, m, n), value in self.entries.items() if m == 0}

    def matrix(self, m: int, size: int = 3) -> List[List[Number]]:
        """A_{l,m,n} for 0 <= l, n < size as rows over l."""
        return [[self.get(l, m, n) for n in range(size)] for l in range(size)]


def _bilinear_part(table: Dict[Triple, Number], key: Triple, s: int) -> Number:
    total = 0
    diagonal = 0
    for first, second in splittings(key):
        if first == (0, 0, 0) or first == key:
            continue
        if first > second:
            continue
        s1, s2 = s_of(first), s_of(second)
        a1, a2 = table[first], table[second]
        if not a1 or not a2:
            continue
        term = hirota_b(s1, s2) * comb(s + 1, s1) * a1 * a2
        if first == second:
            diagonal += term
        else:
            total += term
    return 2 * total + diagonal


def _shifted_part(table: Dict[Triple, Number], reduced: Triple, top: int) -> Number:
    total = 0
    for first, second in splittings(reduced):
        a1, a2 = table[first], table[second]
        if a1 and a2:
            total += comb(top, s_of(first)) * a1 * a2
    return total


def triple_sum_coeffs(s_max: int) -> TripleSumTable:
    """
    Every A_{l,m,n} with s <= s_max, computed in order of s.

    Non-integral values, if any, are kept as Fractions.
    """
    if s_max < 1:
        raise SeriesDomainError("s_max must be at least 1", details={"s_max": s_max})
    table: Dict[Triple, Number] = {(0, 0, 0): 1}
    for s in range(2, s_max + 1):
        for key in triples_with_s(s):
            if key == (0, 0, 1):
                table[key] = -3
                continue
            l, m, n = key
            scale = 2 * (s + 1) * s * (s - 1) * (s - 2)
            total = -_bilinear_part(table, key, s)
            if m >= 1:
                total += scale * (s - 3) * _shifted_part(table, (l, m - 1, n), s - 4)
            if l >= 1:
                total += scale * _shifted_part(table, (l - 1, m, n), s - 3)
            denominator = scale * (s - 7)
            value = Fraction(total, denominator)
            table[key] = value.numerator if value.denominator == 1 else value
        if s % 25 == 0:
            logger.debug("triple sum reached s = %d (%d coefficients)", s, len(table))
    return TripleSumTable(s_max, table)


def integrality_report(s_max: int, table: TripleSumTable = None) -> List[Triple]:
    """Keys whose coefficient is not an integer; empty when the integrality pattern holds."""
    if table is None or table.s_max < s_max:
        table = triple_sum_coeffs(s_max)
    return sorted((key for key, value in table.entries.items()
                   if s_of(key) <= s_max and not isinstance(value, int)),
                  key=lambda key: (s_of(key), key))


def tau_from_triple_sum(table: TripleSumTable, params: ParameterTriple, N: int) -> TauExpansion:
    """
    C_0 .. C_N assembled from the A coefficients.

    Raises:
        CoverageError: when the table stops below s = N + 1
    """
    if table.s_max < N + 1:
        raise CoverageError(f"triple sum table reaches s = {table.s_max}, s = {N + 1} needed",
                            requested=N + 1, available=table.s_max)
    g2, lam, g3 = params.values()
    half_g2, six_lam, two_g3 = divide(g2, 2), 6 * lam, 2 * g3
    C = []
    for n in range(N + 1):
        s = n + 1
        total = 0
        for l, m, k in triples_with_s(s):
            A = table.get(l, m, k)
            if not A:
                continue
            term = (half_g2 ** l if l else 1) * (six_lam ** m if m else 1) * (two_g3 ** k if k else 1)
            if term != 0:
                total = total + A * term
        C.append(normalise_scalar(divide(total, factorial(s)) if total != 0 else 0, params))
    coeffs = CoefficientTable(tuple(C), 0, TRIPLE_SUM, N, params)
    return TauExpansion(params, coeffs, TRIPLE_SUM)

"""
Laurent coefficients sorted by powers of one parameter.

With g2 = 0 and alpha = g3/28:

    c_{5n+p} = sum_m c^(m)_{5n+p} alpha^(5m+p) lambda^(n-6m-p)

With g3 = 0 and beta = g2/20:

    c_{5n-p} = sum_m chat^(m)_{5n-p} beta^(5m+p) lambda^(n-4m-p)

Each family obeys a rational recursion on its own; the m = 0, p = 0 row of both is the
pentagonal sequence v_n.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.power_series import PowerSeries, series_product

logger = logging.getLogger(__name__)

G2_ZERO = "g2-zero"
G3_ZERO = "g3-zero"

Key = Tuple[int, int, int]


def K(n: int, p: int) -> Fraction:
    """6 / ((5n+p+1)(5n+p-6)); the g3 = 0 family uses K(n, -p)."""
    return Fraction(6, (5 * n + p + 1) * (5 * n + p - 6))


@dataclass
class StratifiedTable:
    case: str
    n_max: int
    m_max: int
    entries: Dict[Key, Fraction] = field(default_factory=dict)

    def get(self, m: int, n: int, p: int) -> Fraction:
        return self.entries.get((m, n, p), Fraction(0))

    def index(self, n: int, p: int) -> int:
        return 5 * n + p if self.case == G2_ZERO else 5 * n - p

    def parameter_exponents(self, m: int, n: int, p: int) -> Tuple[int, int]:
        """Exponents of (alpha or beta, lambda) carried by entry (m, n, p)."""
        stride = 6 if self.case == G2_ZERO else 4
        return 5 * m + p, n - stride * m - p

    def row(self, m: int, p: int) -> List[Fraction]:
        return [self.get(m, n, p) for n in range(1, self.n_max + 1)]

    def first_family(self) -> List[Fraction]:
        """w_n (coefficient of alpha lambda^(n-1)) or what_n (coefficient of beta lambda^(n-1))."""
        return self.row(0, 1)

    def reassemble(self, n: int, p: int, scale, lam):
        """Sum over m of the entries at (n, p) weighted by the parameter powers."""
        total = Fraction(0)
        for m in range(self.m_max + 1):
            value = self.get(m, n, p)
            if value:
                a, b = self.parameter_exponents(m, n, p)
                total += value * scale ** a * lam ** b
        return total


def stratified_reassemble(table: StratifiedTable, n: int, p: int, scale, lam) -> Tuple[int, Fraction]:
    """
    The Laurent coefficient rebuilt from a stratified table.

    ``scale`` is alpha = g3/28 for the g2 = 0 family and beta = g2/20 for the g3 = 0 family.

    Returns:
        (index, value): the index 5n+p or 5n-p of the coefficient and its value
    """
    if not 1 <= n <= table.n_max or not 0 <= p <= 4:
        raise SeriesDomainError("entry outside the stratified table",
                                details={"n": n, "p": p, "n_max": table.n_max})
    return table.index(n, p), table.reassemble(n, p, scale, lam)


def _check_bounds(n_max: int, m_max: int):
    if n_max < 1 or m_max < 0:
        raise SeriesDomainError("stratified tables need n_max >= 1 and m_max >= 0",
                                details={"n_max": n_max, "m_max": m_max})


def stratified_g2zero(n_max: int, m_max: int) -> StratifiedTable:
    """
    Table of c^(m)_{5n+p} for 1 <= n <= n_max, 0 <= p <= 4, 0 <= m <= m_max.

    A product c_i c_k with i = 5a+q, k = 5b+r lands on 5n+p either with q + r = p and
    a + b = n, or with q + r = p + 5 and a + b = n - 1; the second kind raises the
    alpha exponent by five, so it pairs orders j and m - 1 - j.
    """
    _check_bounds(n_max, m_max)
    table = StratifiedTable(G2_ZERO, n_max, m_max)
    table.entries[(0, 1, 0)] = Fraction(1)
    table.entries[(0, 1, 1)] = Fraction(1)
    get = table.get
    for n in range(2, n_max + 1):
        for p in range(5):
            for m in range(m_max + 1):
                if 6 * m + p > n:
                    break
                total = Fraction(0)
                for a in range(1, n):
                    b = n - a
                    for q in range(p + 1):
                        for j in range(m + 1):
                            x = get(j, a, q)
                            if x:
                                total += x * get(m - j, b, p - q)
                if m >= 1:
                    for a in range(0, n):
                        b = n - 1 - a
                        for q in range(p + 1, 5):
                            for j in range(m):
                                x = get(j, a, q)
                                if x:
                                    total += x * get(m - 1 - j, b, p + 5 - q)
                if total:
                    table.entries[(m, n, p)] = K(n, p) * total
        logger.debug("g2-zero family: row %d done", n)
    return table


def stratified_g3zero(n_max: int, m_max: int) -> StratifiedTable:
    """
    Table of chat^(m)_{5n-p} for 1 <= n <= n_max, 0 <= p <= 4, 0 <= m <= m_max.

    Within a row, p runs downwards so that smaller indices come first; index 6
    (n = 2, p = 4) is the resonance and carries no entry.
    """
    _check_bounds(n_max, m_max)
    table = StratifiedTable(G3_ZERO, n_max, m_max)
    table.entries[(0, 1, 1)] = Fraction(1)
    table.entries[(0, 1, 0)] = Fraction(1)
    get = table.get
    for n in range(2, n_max + 1):
        for p in range(4, -1, -1):
            if 5 * n - p == 6:
                continue
            for m in range(m_max + 1):
                if 4 * m + p > n:
                    break
                total = Fraction(0)
                for a in range(1, n):
                    b = n - a
                    for q in range(p + 1):
                        for j in range(m + 1):
                            x = get(j, a, q)
                            if x:
                                total += x * get(m - j, b, p - q)
                if m >= 1:
                    for a in range(1, n + 1):
                        b = n + 1 - a
                        for q in range(p + 1, 5):
                            for j in range(m):
                                x = get(j, a, q)
                                if x:
                                    total += x * get(m - 1 - j, b, p + 5 - q)
                if total:
                    table.entries[(m, n, p)] = K(n, -p) * total
        logger.debug("g3-zero family: row %d done", n)
    return table


def w_step(w_prefix: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """
    Next member of the first g2 = 0 family from w_1 .. w_{n-1} and v_1 .. v_{n-1}.

    ``w_n = 2 K(n, 1) sum_{a=1}^{n-1} v_a w_{n-a}``: linear in the w's once v is fixed.
    """
    n = len(w_prefix) + 1
    total = sum((Fraction(v[a - 1]) * w_prefix[n - a - 1] for a in range(1, n)), Fraction(0))
    return 2 * K(n, 1) * total


def w_hat_step(w_prefix: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    """Same for the first g3 = 0 family: ``what_n = 2 K(n, -1) sum v_a what_{n-a}``."""
    n = len(w_prefix) + 1
    total = sum((Fraction(v[a - 1]) * w_prefix[n - a - 1] for a in range(1, n)), Fraction(0))
    return 2 * K(n, -1) * total


def generating_function_residual(w: Sequence[Fraction], v: Sequence[Fraction]) -> PowerSeries:
    """
    ``x G'' + (12/5) G' - (12/25) G psi`` for G = sum w_n x^(n-1), psi = sum v_n x^(n-1).

    Vanishes identically when w follows the first g2 = 0 family.
    """
    N = min(len(w), len(v))
    G = PowerSeries(0, tuple(w[:N]), N)
    psi = PowerSeries(0, tuple(v[:N]), N)
    G1 = G.derivative()
    G2 = G1.derivative()
    return G2.shift(1) + Fraction(12, 5) * G1 - Fraction(12, 25) * series_product(G, psi)

"""
Taylor coefficients of tau from the equation of degree four in tau and its derivatives:

    tau^2 tau'''^2 - 6 tau tau' tau'' tau''' + 4 tau'^3 tau''' + 4 tau tau''^3 - 3 tau'^2 tau''^2
      - (g2 + 12 lambda z) tau^2 (tau tau'' - tau'^2) + 12 lambda tau^3 tau' + g3 tau^4 = 0

C_n first enters the coefficient of z^(n-2), through 4 tau'^3 tau''' only, with the factor
4 n (n^2 - 1). Each step evaluates that coefficient with C_n = 0 and solves for C_n. The
parameter g3 enters through the equation; only C_0 = 1 and C_1 = 0 are seeded.
"""
import logging
from typing import Any, Dict, List, Tuple

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries, series_product
from p1series.exact.scalars import divide
from p1series.exact.tables import CoefficientTable
from p1series.laurent.recursion import normalise_scalar, one_like
from p1series.tau.expansion import QUARTIC, TauExpansion

logger = logging.getLogger(__name__)

# pairs of derivative orders whose products the equation uses
PAIRS: Tuple[Tuple[int, int], ...] = ((0, 0), (3, 3), (0, 1), (2, 3), (1, 1), (1, 3), (0, 2), (2, 2))


class _DerivativeProducts:
    """
    Coefficients of tau^(x) tau^(y) built up as C grows.

    ``d(k, i)`` is the coefficient of z^i in the k-th derivative of tau; it needs C_{i+k-1}.
    Products at index i are final once every C up to C_{i+2} is known.
    """

    def __init__(self, C: List[Any]):
        self.C = C
        self.final: Dict[Tuple[int, int], List[Any]] = {pair: [] for pair in PAIRS}

    def d(self, k: int, i: int):
        j = i + k - 1
        if j < 0 or j >= len(self.C) or self.C[j] == 0:
            return 0
        factor = 1
        for t in range(i + 1, i + k + 1):
            factor *= t
        return factor * self.C[j]

    def _pair_at(self, pair, i: int):
        x, y = pair
        total = 0
        for a in range(i + 1):
            left = self.d(x, a)
            if left == 0:
                continue
            right = self.d(y, i - a)
            if right != 0:
                total = total + left * right
        return total

    def advance(self, i: int):
        """Record the final products at index i."""
        for pair in PAIRS:
            series = self.final[pair]
            while len(series) <= i:
                series.append(self._pair_at(pair, len(series)))

    def snapshot(self, i: int) -> Dict[Tuple[int, int], List[Any]]:
        """Final products below index i plus the provisional product at index i."""
        return {pair: self.final[pair][:i] + [self._pair_at(pair, i)] for pair in PAIRS}


def _cross(x: List[Any], y: List[Any], n: int):
    """Coefficient of z^n in the product of the two coefficient lists."""
    total = 0
    for i in range(max(0, n - len(y) + 1), min(n, len(x) - 1) + 1):
        if x[i] != 0 and y[n - i] != 0:
            total = total + x[i] * y[n - i]
    return total


def _equation_coefficient(S, n: int, g2, lam, g3):
    """Coefficient of z^n of the degree four equation from the pair products S."""
    s00, s33, s01, s23 = S[(0, 0)], S[(3, 3)], S[(0, 1)], S[(2, 3)]
    s11, s13, s02, s22 = S[(1, 1)], S[(1, 3)], S[(0, 2)], S[(2, 2)]
    total = (_cross(s00, s33, n) - 6 * _cross(s01, s23, n) + 4 * _cross(s11, s13, n)
             + 4 * _cross(s02, s22, n) - 3 * _cross(s11, s22, n))
    wronskian = [a - b for a, b in zip(s02, s11)]
    if g2 != 0:
        total = total - g2 * _cross(s00, wronskian, n)
    if lam != 0:
        if n >= 1:
            total = total - 12 * lam * _cross(s00, wronskian, n - 1)
        total = total + 12 * lam * _cross(s00, s01, n)
    if g3 != 0:
        total = total + g3 * _cross(s00, s00, n)
    return total


def tau_coeffs_quartic(params: ParameterTriple, N: int) -> TauExpansion:
    """
    C_0 .. C_N from the degree four equation.

    Args:
        params: rational, symbolic or multiprecision parameters
        N: last index

    Returns:
        TauExpansion: method ``quartic``
    """
    if N < 0:
        raise SeriesDomainError("truncation order must be non-negative", details={"N": N})
    g2, lam, g3 = params.values()
    C: List[Any] = [one_like(params), 0]
    products = _DerivativeProducts(C)
    for n in range(2, N + 1):
        if n >= 3:
            products.advance(n - 3)
        S = products.snapshot(n - 2)
        residual = _equation_coefficient(S, n - 2, g2, lam, g3)
        C.append(-divide(residual, 4 * n * (n * n - 1)) if residual != 0 else 0)
        if n % 50 == 0:
            logger.debug("quartic recursion reached index %d", n)
    C = [normalise_scalar(value, params) for value in C[:N + 1]]
    table = CoefficientTable(tuple(C), 0, QUARTIC, N, params)
    return TauExpansion(params, table, QUARTIC)


def quartic_residual(tau: TauExpansion) -> PowerSeries:
    """Left-hand side of the degree four equation from a coefficient table; zero below z^(N-1)."""
    g2, lam, g3 = tau.params.values()
    t0 = tau.as_series()
    t1 = t0.derivative()
    t2 = t1.derivative()
    t3 = t2.derivative()
    p = series_product
    s00, s33, s01, s23 = p(t0, t0), p(t3, t3), p(t0, t1), p(t2, t3)
    s11, s13, s02, s22 = p(t1, t1), p(t1, t3), p(t0, t2), p(t2, t2)
    wronskian = s02 - s11
    forcing = PowerSeries(0, (g2, 12 * lam), s00.order)
    return (p(s00, s33) - 6 * p(s01, s23) + 4 * p(s11, s13) + 4 * p(s02, s22) - 3 * p(s11, s22)
            - p(p(forcing, s00, s00.order), wronskian) + 12 * lam * p(s00, s01) + g3 * p(s00, s00))

"""
Taylor coefficients of tau from the bilinear equation ``D_z^4 tau.tau = (12 lambda z + g2) tau^2``.

With tau = sum C_n z^(n+1), collecting z^(n-2) gives

    n(n^2-1)(n-6) C_n = -1/2 sum_{j=1}^{n-1} b(j+1, n-j+1) C_j C_{n-j}
                        + g2/2 sum_{j=0}^{n-4} C_j C_{n-4-j} + 6 lambda sum_{j=0}^{n-5} C_j C_{n-5-j}

where D_z^4 z^j . z^k = b(j, k) z^(j+k-4). Index 6 is the resonance and takes C_6 = -g3/840.
"""
import logging
from functools import lru_cache
from math import comb
from typing import Any, List

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries, series_product
from p1series.exact.scalars import divide
from p1series.laurent.recursion import normalise_scalar, one_like
from p1series.tau.expansion import BILINEAR, TauExpansion
from p1series.exact.tables import CoefficientTable

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def hirota_b(j: int, k: int) -> int:
    """b(j, k) = 4! sum_l (-1)^l C(j, l) C(k, 4 - l)."""
    if j < 0 or k < 0:
        raise SeriesDomainError("Hirota coefficients need non-negative exponents", details={"j": j, "k": k})
    return 24 * sum((-1) ** l * comb(j, l) * comb(k, 4 - l) for l in range(5))


def plain_convolution(C: List[Any], n: int):
    """sum_{j=0}^{n} C_j C_{n-j} for n >= 0."""
    if n < 0:
        return 0
    total = 0
    for j in range(n + 1):
        if C[j] != 0 and C[n - j] != 0:
            total = total + C[j] * C[n - j]
    return total


def hirota_convolution(C: List[Any], n: int):
    """sum_{j=1}^{n-1} b(j+1, n-j+1) C_j C_{n-j}, folded on its symmetry."""
    total = 0
    for j in range(1, (n - 1) // 2 + 1):
        if C[j] != 0 and C[n - j] != 0:
            total = total + hirota_b(j + 1, n - j + 1) * (C[j] * C[n - j])
    total = 2 * total if total != 0 else 0
    if n % 2 == 0 and C[n // 2] != 0:
        total = total + hirota_b(n // 2 + 1, n // 2 + 1) * (C[n // 2] * C[n // 2])
    return total


def tau_coeffs_bilinear(params: ParameterTriple, N: int) -> TauExpansion:
    """
    C_0 .. C_N from the bilinear recursion.

    Args:
        params: rational, symbolic or multiprecision parameters
        N: last index

    Returns:
        TauExpansion: method ``bilinear``
    """
    if N < 0:
        raise SeriesDomainError("truncation order must be non-negative", details={"N": N})
    g2, lam, g3 = params.values()
    C: List[Any] = [one_like(params), 0]
    for n in range(2, N + 1):
        if n == 6:
            C.append(-divide(g3, 840))
            continue
        rhs = -divide(hirota_convolution(C, n), 2) if n > 2 else 0
        if n >= 4:
            rhs = rhs + divide(g2, 2) * plain_convolution(C, n - 4)
        if n >= 5:
            rhs = rhs + 6 * lam * plain_convolution(C, n - 5)
        C.append(divide(rhs, n * (n * n - 1) * (n - 6)) if rhs != 0 else 0)
        if n % 50 == 0:
            logger.debug("bilinear recursion reached index %d", n)
    C = [normalise_scalar(value, params) for value in C[:N + 1]]
    table = CoefficientTable(tuple(C), 0, BILINEAR, N, params)
    return TauExpansion(params, table, BILINEAR)


def hirota_d4(tau: PowerSeries) -> PowerSeries:
    """D_z^4 tau.tau = 2 (tau tau'''' - 4 tau' tau''' + 3 tau''^2)."""
    d1 = tau.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    d4 = d3.derivative()
    return 2 * (series_product(tau, d4) - 4 * series_product(d1, d3) + 3 * series_product(d2, d2))


def bilinear_residual(tau: TauExpansion) -> PowerSeries:
    """``D_z^4 tau.tau - (12 lambda z + g2) tau^2``; zero below z^(N-1) for a consistent table."""
    g2, lam, _ = tau.params.values()
    series = tau.as_series()
    square = series_product(series, series)
    factor = PowerSeries(0, (g2, 12 * lam), square.order)
    return hirota_d4(series) - series_product(factor, square, square.order)

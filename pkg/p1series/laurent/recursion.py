"""
Laurent coefficients of u around a pole.

With ``u = sum c_n z^(n-2)`` the equation ``u'' = 6u^2 - 6 lambda z - g2/2`` gives, for n != 6,

    (n+1)(n-6) c_n = 6 sum_{j=1}^{n-1} c_j c_{n-j} - (g2/2) [n == 4] - 6 lambda [n == 5]

with c_0 = 1. Index 6 is the resonance; c_6 = g3/28 fixes the solution.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Optional

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries, series_product
from p1series.exact.scalars import divide
from p1series.exact.tables import CoefficientTable
from p1series.exact.weighted_polynomial import WeightedPolynomial

logger = logging.getLogger(__name__)

RESONANCE = 6


@dataclass(frozen=True)
class LaurentExpansion:
    params: ParameterTriple
    coeffs: CoefficientTable

    @property
    def N(self) -> int:
        return self.coeffs.order

    def c(self, n: int):
        return self.coeffs[n]

    def as_series(self) -> PowerSeries:
        """u as a series in z, exact below z^(N-1)."""
        return self.coeffs.as_series(offset_shift=-2)


def one_like(params: ParameterTriple):
    if params.is_symbolic():
        return WeightedPolynomial.constant(1)
    if params.is_rational():
        return Fraction(1)
    return params.g2 * 0 + 1


def self_convolution(c: List[Any], n: int):
    """sum_{j=1}^{n-1} c_j c_{n-j}, folded on its symmetry."""
    total = 0
    half = (n - 1) // 2
    for j in range(1, half + 1):
        if c[j] != 0 and c[n - j] != 0:
            total = total + c[j] * c[n - j]
    total = total * 2 if total != 0 else 0
    if n % 2 == 0 and c[n // 2] != 0:
        total = total + c[n // 2] * c[n // 2]
    return total


def _check_seed(seed: Optional[CoefficientTable], recursion: str, params=None) -> List[Any]:
    if seed is None:
        return []
    if seed.recursion != recursion or seed.start not in (0, 1):
        raise SeriesDomainError(f"seed table was produced by '{seed.recursion}', not '{recursion}'")
    if params is not None and seed.params is not None and seed.params != params:
        raise SeriesDomainError("seed table belongs to another parameter point",
                                details={"seed": str(seed.params), "requested": str(params)})
    return list(seed.values)


def laurent_coeffs(params: ParameterTriple, N: int, seed: Optional[CoefficientTable] = None) -> LaurentExpansion:
    """
    Laurent coefficients c_0 .. c_N at a parameter point.

    Args:
        params: rational, symbolic or multiprecision parameters
        N: last index computed
        seed: a previously computed table for the same point; its prefix is reused

    Returns:
        LaurentExpansion: exact for rational and symbolic parameters
    """
    if N < 0:
        raise SeriesDomainError("truncation order must be non-negative", details={"N": N})
    recursion = "modular" if params.is_symbolic() else "laurent"
    c = _check_seed(seed, recursion, params)[:N + 1]
    if not c:
        c = [one_like(params)]
    g2, lam, g3 = params.values()
    for n in range(len(c), N + 1):
        if n == RESONANCE:
            c.append(divide(g3, 28))
            continue
        rhs = 6 * self_convolution(c, n) if n > 1 else 0
        if n == 4:
            rhs = rhs - divide(g2, 2)
        elif n == 5:
            rhs = rhs - 6 * lam
        c.append(divide(rhs, (n + 1) * (n - 6)) if rhs != 0 else 0)
        if n % 100 == 0:
            logger.debug("laurent recursion reached index %d", n)
    c = [normalise_scalar(value, params) for value in c]
    table = CoefficientTable(tuple(c), 0, recursion, N, params)
    return LaurentExpansion(params, table)


def normalise_scalar(value, params):
    if params.is_symbolic() and not isinstance(value, WeightedPolynomial):
        return WeightedPolynomial.constant(value)
    if params.is_rational() and isinstance(value, int):
        return Fraction(value)
    return value


def modular_polynomials(N: int) -> CoefficientTable:
    """The coefficients P_n as polynomials in g2, lambda, g3; P_n is homogeneous of weight n."""
    return laurent_coeffs(ParameterTriple.symbolic(), N).coeffs


def pentagonal_coeffs(N: int, seed: Optional[CoefficientTable] = None) -> CoefficientTable:
    """
    v_1 .. v_N of the solution with g2 = g3 = 0, lambda = 1, where c_{5n} = v_n.

    ``v_n = 6 / ((5n+1)(5n-6)) * sum_{k=1}^{n-1} v_k v_{n-k}``, v_1 = 1.
    """
    if N < 1:
        raise SeriesDomainError("pentagonal table needs N >= 1", details={"N": N})
    v = [Fraction(0)] + _check_seed(seed, "pentagonal")[:N]
    if len(v) == 1:
        v.append(Fraction(1))
    for n in range(len(v), N + 1):
        v.append(Fraction(6, (5 * n + 1) * (5 * n - 6)) * self_convolution(v, n))
    return CoefficientTable(tuple(v[1:]), 1, "pentagonal", N, ParameterTriple.pentagonal())


def ode_residual(expansion: LaurentExpansion) -> PowerSeries:
    """
    ``u'' - 6u^2 + 6 lambda z + g2/2`` recomputed from the coefficients.

    Differentiation and squaring are done afresh on the series, so the result is the zero
    series exactly when the table satisfies the equation.
    """
    u = expansion.as_series()
    g2, lam, _ = expansion.params.values()
    second = u.derivative().derivative()
    square = series_product(u, u)
    forcing = PowerSeries(0, (divide(g2, 2), 6 * lam), max(second.order, 2))
    return second - 6 * square + forcing

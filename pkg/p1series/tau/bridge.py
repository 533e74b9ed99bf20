"""
Passage between tau and u = -(log tau)'' and the Hamiltonian identities tying them together.

In the chosen gauge tau = z T(z) with T(0) = 1, so log tau = log z + L with L = log T and

    c_0 = 1,   c_n = -n (n - 1) L_n   (n >= 1)

The Hamiltonian h = v^2/2 - 2u^3 + g2 u/2 + 6 lambda z u + g3/2, v = u', satisfies
h' = 6 lambda u and h = -6 lambda (log tau)' up to the gauge.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Tuple

from p1series.core.exceptions import CoverageError, SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries, series_exp, series_log_unit, series_product
from p1series.exact.scalars import divide
from p1series.exact.tables import CoefficientTable
from p1series.exact.weighted_polynomial import WeightedPolynomial
from p1series.laurent.recursion import LaurentExpansion, laurent_coeffs, normalise_scalar
from p1series.tau.bilinear import tau_coeffs_bilinear
from p1series.tau.expansion import TauExpansion

logger = logging.getLogger(__name__)


def _unit_part(series: PowerSeries) -> PowerSeries:
    """T = tau / (leading coefficient * z) for a series starting at z^1."""
    if series.offset > 1 or series.coefficient(1) == 0 or \
            any(series.coefficient(m) != 0 for m in range(series.offset, 1)):
        raise SeriesDomainError("tau must have a simple zero at the origin")
    unit = series.shift(-1)
    leading = unit.coefficient(0)
    if leading != 1:
        unit = unit.map(lambda c: divide(c, leading))
    return PowerSeries(0, unit.dense(0, unit.order), unit.order)


def laurent_from_tau_series(series: PowerSeries, params: ParameterTriple, N: int) -> LaurentExpansion:
    """
    Laurent coefficients c_0 .. c_N of -(log tau)'' for any tau with a simple zero at 0.

    Raises:
        CoverageError: when the series is not exact through z^(N+1)
    """
    if series.order < N + 2:
        raise CoverageError(f"tau is exact below z^{series.order}, z^{N + 1} needed",
                            requested=N + 2, available=series.order)
    log_unit = series_log_unit(_unit_part(series), N + 1)
    c = [normalise_scalar(1, params)]
    for n in range(1, N + 1):
        value = log_unit.coefficient(n)
        c.append(normalise_scalar(-n * (n - 1) * value if value != 0 else 0, params))
    table = CoefficientTable(tuple(c), 0, "laurent-from-tau", N, params)
    return LaurentExpansion(params, table)


def u_from_tau(tau: TauExpansion, N: int) -> LaurentExpansion:
    """Laurent coefficients c_0 .. c_N of u from C_0 .. C_N."""
    if tau.N < N:
        raise CoverageError(f"tau table reaches C_{tau.N}, C_{N} needed", requested=N, available=tau.N)
    return laurent_from_tau_series(tau.as_series(), tau.params, N)


def gauge_transform(tau: TauExpansion, a, scale=1) -> PowerSeries:
    """
    ``scale * exp(a z) * tau`` as a series exact below z^(N+2).

    u is unchanged by the transformation; the tables of the three recursions all use a = 0,
    scale = 1.
    """
    series = tau.as_series()
    exponential = series_exp(PowerSeries(0, (0, a), series.order), series.order)
    return series_product(exponential, series, series.order).map(lambda c: scale * c)


def euler_defect(tau: TauExpansion) -> List[int]:
    """
    Indices whose symbolic C_n is not homogeneous of weight n.

    Homogeneity is tested by rescaling the parameters with zeta = 2, which is the Euler
    relation (4 g2 d/dg2 + 5 lambda d/dlambda + 6 g3 d/dg3 - z d/dz + 1) tau = 0 read
    coefficient-wise.
    """
    defects = []
    for n, value in tau.coeffs.items():
        if not isinstance(value, WeightedPolynomial):
            raise SeriesDomainError("euler_defect needs a symbolic table")
        if value.scale_weights(2) != value * Fraction(2) ** n:
            defects.append(n)
    return defects


@dataclass
class HamiltonianReport:
    params: ParameterTriple
    N: int
    checked_below: int
    derivative_residual: PowerSeries
    hamiltonian_residual: PowerSeries
    nonzero: List[Tuple[str, int, Any]] = field(default_factory=list)

    @property
    def max_deviation(self):
        """Largest |coefficient| of both residuals (0 for an exact match); symbolic entries count as 1."""
        worst = 0
        for _, _, value in self.nonzero:
            size = abs(value) if not isinstance(value, WeightedPolynomial) else 1
            worst = max(worst, size)
        return worst

    @property
    def is_zero(self) -> bool:
        return not self.nonzero


def hamiltonian_check(params: ParameterTriple, N: int, tau: Optional[TauExpansion] = None,
                      expansion: Optional[LaurentExpansion] = None) -> HamiltonianReport:
    """
    Compare h = -6 lambda (log tau)' from the tau table with the Hamiltonian built from u.

    Checks (i) h' - 6 lambda u and (ii) h - (v^2/2 - 2u^3 + g2 u/2 + 6 lambda z u + g3/2) as
    formal series, u coming from the Laurent recursion; both are exact below z^(N-5).
    """
    if N < 6:
        raise SeriesDomainError("the Hamiltonian check needs N >= 6", details={"N": N})
    g2, lam, g3 = params.values()
    if tau is None or tau.N < N:
        tau = tau_coeffs_bilinear(params, N)
    if expansion is None or expansion.N < N:
        expansion = laurent_coeffs(params, N)

    log_unit = series_log_unit(_unit_part(tau.as_series()), N + 1)
    # h = -6 lambda (1/z + L')
    h = (PowerSeries(-1, (1,), log_unit.order - 1) + log_unit.derivative()).map(lambda c: -6 * lam * c)

    u = expansion.as_series()
    v = u.derivative()
    u2 = series_product(u, u)
    u3 = series_product(u2, u)
    linear = PowerSeries(0, (divide(g2, 2), 6 * lam), u.order + 2)
    hamiltonian = (series_product(v, v).map(lambda c: divide(c, 2)) - 2 * u3
                   + series_product(linear, u) + PowerSeries(0, (divide(g3, 2),), u.order))
    checked_below = N - 5
    hamiltonian_residual = (h - hamiltonian).truncate(checked_below)
    derivative_residual = (h.derivative() - u.map(lambda c: 6 * lam * c)).truncate(checked_below)

    nonzero = [("h' - 6 lambda u", e, c) for e, c in derivative_residual.nonzero_terms()]
    nonzero += [("hamiltonian", e, c) for e, c in hamiltonian_residual.nonzero_terms()]
    if nonzero:
        logger.warning("Hamiltonian identities fail at %d coefficient(s) for %s", len(nonzero), params)
    return HamiltonianReport(params, N, checked_below, derivative_residual, hamiltonian_residual, nonzero)

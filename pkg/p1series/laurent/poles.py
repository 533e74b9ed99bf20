"""
Nearest pole from coefficient ratios, normalised power sums and evaluation of u.

If the pole nearest the origin is unique up to the rotation symmetry of order k, the
power sums F_n = c_n Omega^n / (n - 1) tend to k along multiples of k, so

    Omega^k = lim (kn + k - 1) c_{kn} / ((kn - 1) c_{kn+k})
"""
import logging
from dataclasses import dataclass, field
from typing import Any, Iterable, List, Optional

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import (
    NonGenericConfigurationError,
    NumericalError,
    PoleError,
    SeriesDomainError,
)
from p1series.exact.params import ParameterTriple
from p1series.exact.precision import to_mp, working_precision
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.laurent.recursion import LaurentExpansion, laurent_coeffs

logger = logging.getLogger(__name__)


@dataclass
class NearestPoleEstimate:
    value: Any
    step: int
    n_max: int
    ratios: List[Any] = field(default_factory=list)
    differences: List[Any] = field(default_factory=list)
    contraction: Optional[float] = None

    @property
    def modulus(self):
        """|Omega_*|, the radius of convergence of the Laurent series."""
        return abs(self.value) ** (mpmath.mpf(1) / self.step)

    def root(self):
        """Principal k-th root of the estimate."""
        return mpmath.root(self.value, self.step)


def _ratio_settings():
    config = ConfigurationsManager()
    return (config.get_int_for_key(SP.RATIO_WINDOW, 5),
            config.get_float_for_key(SP.RATIO_CONTRACTION, 1.05))


def nearest_pole_estimate(params: ParameterTriple, n_max: int, step: Optional[int] = None,
                          digits: int = 25, expansion: Optional[LaurentExpansion] = None) -> NearestPoleEstimate:
    """
    Estimate Omega_*^k from the strided coefficient ratios up to ratio index ``n_max``.

    Args:
        params: rational parameter point
        n_max: last ratio index; coefficients up to k (n_max + 1) are used
        step: stride k; detected from the vanishing parameters when omitted
        digits: precision of the reported estimate
        expansion: coefficients already at hand

    Returns:
        NearestPoleEstimate: value, ratio history and contraction of the last differences

    Raises:
        NonGenericConfigurationError: when a needed coefficient vanishes or the ratios do not settle
    """
    if step is None:
        step = params.symmetry_order()
        if step == 0:
            raise SeriesDomainError("u = 1/z^2 has no other poles", details={"params": str(params)})
    if step < 1:
        raise SeriesDomainError("stride must be positive", details={"step": step})
    window, contraction = _ratio_settings()
    needed = step * (n_max + 1)
    if expansion is None or expansion.N < needed:
        expansion = laurent_coeffs(params, needed, seed=expansion.coeffs if expansion else None)
    ratios = []
    with working_precision(digits):
        for n in range(1, n_max + 1):
            kn = step * n
            low, high = expansion.c(kn), expansion.c(kn + step)
            if low == 0 or high == 0 or kn == 1:
                # low indices may vanish structurally; only the tail has to be free of zeros
                if n > n_max - window:
                    raise NonGenericConfigurationError(
                        f"coefficient c_{kn if low == 0 else kn + step} vanishes; stride {step} does not "
                        f"fit the symmetry of {params}", ratios=[mpmath.nstr(r, 15) for r in ratios],
                        details={"step": step, "n_max": n_max})
                ratios = []
                continue
            ratios.append(to_mp(low) * (kn + step - 1) / (to_mp(high) * (kn - 1)))
        differences = [abs(b - a) for a, b in zip(ratios, ratios[1:])]
        tolerance = mpmath.mpf(10) ** (-digits)
        tail = differences[-window:]
        observed = None
        if len(tail) >= 2 and tail[-1] > 0 and tail[0] > 0:
            observed = float((tail[0] / tail[-1]) ** (mpmath.mpf(1) / (len(tail) - 1)))
        settled = bool(tail) and all(d < tolerance for d in tail)
        if not settled and (len(tail) < window or observed is None or observed < contraction):
            raise NonGenericConfigurationError(
                f"ratios with stride {step} do not settle for {params}; several poles of equal modulus?",
                ratios=[mpmath.nstr(r, 15) for r in ratios[-window:]],
                differences=[mpmath.nstr(d, 5) for d in tail],
                details={"step": step, "n_max": n_max, "contraction": observed})
        value = +ratios[-1]
    logger.debug("nearest pole estimate with stride %d: %s", step, mpmath.nstr(value, digits))
    return NearestPoleEstimate(value, step, n_max, ratios, differences, observed)


def power_sums_F(expansion: LaurentExpansion, omega_star, indices: Iterable[int], digits: int = 25) -> List[Any]:
    """
    F_n = c_n Omega_*^n / (n - 1) for each requested index.

    Raises:
        SeriesDomainError: for an index below 3 or a zero Omega_*
    """
    indices = list(indices)
    if any(n < 3 for n in indices):
        raise SeriesDomainError("power sums are defined for n >= 3", details={"indices": indices})
    if omega_star == 0:
        raise SeriesDomainError("Omega_* must be nonzero")
    with working_precision(digits):
        omega = to_mp(omega_star)
        values = [to_mp(expansion.c(n)) * omega ** n / (n - 1) for n in indices]
    return values


def decay_ratios(values: List[Any], limit) -> List[Any]:
    """Successive ratios |F_{k(n+1)} - k| / |F_{kn} - k| of the distances to the limit."""
    distances = [abs(v - limit) for v in values]
    return [b / a for a, b in zip(distances, distances[1:]) if a != 0]


@dataclass
class EvaluationResult:
    value: Any
    residual: Any
    radius: Any
    inside: bool
    warning: Optional[str] = None


def evaluate_u(params: ParameterTriple, z, N: int, digits: int = 25,
               expansion: Optional[LaurentExpansion] = None) -> EvaluationResult:
    """
    Partial sum of the Laurent series at z with its equation residual.

    The residual ``|u'' - 6u^2 + 6 lambda z + g2/2|`` uses the term-wise differentiated
    partial sum. A warning is set when z is not strictly inside the estimated radius of
    convergence or when no radius could be estimated.

    Raises:
        PoleError: at z = 0
    """
    if z == 0:
        raise PoleError("u has a double pole at z = 0")
    if expansion is None or expansion.N < N:
        expansion = laurent_coeffs(params, N)
    radius, warning = None, None
    try:
        estimate = nearest_pole_estimate(params, max(N // max(params.symmetry_order(), 1) - 1, 2),
                                         digits=max(digits // 2, 10), expansion=expansion)
        radius = estimate.modulus
    except (NumericalError, SeriesDomainError) as e:
        warning = f"radius of convergence unknown: {e}"
    with working_precision(digits):
        zz = to_mp(z)
        g2, lam, _ = (to_mp(v) for v in params.values())
        u = mpmath.mpf(0)
        u2 = mpmath.mpf(0)
        for n in range(N + 1):
            c = expansion.c(n)
            if c == 0:
                continue
            c = to_mp(c)
            u += c * zz ** (n - 2)
            u2 += c * (n - 2) * (n - 3) * zz ** (n - 4)
        residual = abs(u2 - 6 * u ** 2 + 6 * lam * zz + g2 / 2)
        inside = radius is not None and abs(zz) < radius
        if radius is not None and not inside:
            warning = f"|z| = {mpmath.nstr(abs(zz), 8)} is not inside the radius {mpmath.nstr(radius, 8)}"
        if warning:
            logger.warning(warning)
        return EvaluationResult(+u, +residual, radius, inside, warning)

"""
Zeros of tau that survive a longer truncation, and the pentagonal constant gamma.

A root of the degree N + 1 truncation is trusted when the truncation of order N' has a root
within 10^(-digits/2) of it; N' exceeds N by the configured growth rounded up to the stride.
Truncations of an entire function also carry rings of spurious roots near the edge of the
region where the partial sum is accurate, and those move when terms are added.
"""
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Any, List, Optional

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import InconsistencyError, InsufficientOrderError, SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.precision import agreeing_digits, working_precision
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.laurent.poles import nearest_pole_estimate
from p1series.poles.aberth import polynomial_roots, root_working_digits
from p1series.poles.truncation import TruncatedTauPoly, exponent_stride, truncated_tau_poly
from p1series.tau.bilinear import tau_coeffs_bilinear

logger = logging.getLogger(__name__)


@dataclass
class TrustedZero:
    value: Any
    stability: Any
    residual: Any
    derivative: Any

    @property
    def modulus(self):
        return abs(self.value)


@dataclass
class PoleSet:
    """
    Trusted zeros of tau, i.e. double poles of u.

    Attributes:
        params: the parameter point
        N: order of the reported truncation
        N_prime: order of the comparison truncation
        digits: requested digits; the tolerance is 10^(-digits/2)
        zeros: trusted zeros, sorted by modulus then argument
        trust_radius: largest modulus among the zeros
    """
    params: ParameterTriple
    N: int
    N_prime: int
    digits: int
    zeros: List[TrustedZero] = field(default_factory=list)
    trust_radius: Any = None

    @property
    def tolerance(self):
        return mpmath.mpf(10) ** (-mpmath.mpf(self.digits) / 2)

    @property
    def residual_tolerance(self):
        return residual_tolerance(self.digits)

    def __len__(self):
        return len(self.zeros)

    def values(self) -> List[Any]:
        return [zero.value for zero in self.zeros]

    def nearest(self) -> TrustedZero:
        if not self.zeros:
            raise InsufficientOrderError("the pole set is empty")
        return self.zeros[0]

    def rotation_defect(self, k: int):
        """Largest distance from a rotated zero e^(2 pi i/k) zeta to the nearest zero of the set."""
        rotation = mpmath.expjpi(mpmath.mpf(2) / k)
        values = self.values()
        worst = mpmath.mpf(0)
        for value in values:
            image = value * rotation
            worst = max(worst, min(abs(image - other) for other in values))
        return worst


def sort_key(value, digits: int):
    """Order by modulus (rounded to ``digits``) and then by argument in (-pi, pi]."""
    return int(mpmath.nint(abs(value) * mpmath.mpf(10) ** digits)), float(mpmath.arg(value))


def residual_tolerance(digits: int):
    """Bound on |tau_N| at a kept zero: 10^(-digits/2), or the configured value when smaller."""
    tolerance = mpmath.mpf(10) ** (-mpmath.mpf(digits) / 2)
    configured = ConfigurationsManager().get_str_for_key(SP.RESIDUAL_TOLERANCE)
    if configured:
        tolerance = min(tolerance, mpmath.mpf(configured))
    return tolerance


def comparison_order(N: int, stride: int, growth: Optional[float] = None) -> int:
    """N' = N plus the configured growth, rounded up to a multiple of the stride."""
    if growth is None:
        growth = ConfigurationsManager().get_float_for_key(SP.TRUNCATION_GROWTH, 0.25)
    return N + stride * max(1, math.ceil(growth * N / stride))


def trusted_zeros(params: ParameterTriple, N: int, digits: int = 25, growth: Optional[float] = None,
                  poly: Optional[TruncatedTauPoly] = None) -> PoleSet:
    """
    Zeros of the order-N truncation that move less than 10^(-digits/2) at order N' and where
    |tau_N| is below the residual tolerance.

    Raises:
        InsufficientOrderError: when no zero is stable at this order
    """
    first = poly if poly is not None and poly.N == N else None
    tau = tau_coeffs_bilinear(params, N) if first is None else first.exact
    stride = exponent_stride([0] + [tau.C(n) for n in range(N + 1)])
    N_prime = comparison_order(N, stride, growth)
    if tau.N < N_prime:
        tau = tau_coeffs_bilinear(params, N_prime)
    work = root_working_digits(digits, N_prime // stride + 1)
    if first is None or first.digits < work:
        first = truncated_tau_poly(params, N, work, tau)
    second = truncated_tau_poly(params, N_prime, work, tau)
    logger.info("locating zeros of the order %d and %d truncations for %s", N, N_prime, params)
    roots = first.roots(digits)
    comparison = second.roots(digits)
    if not comparison:
        raise InsufficientOrderError(f"the order {N_prime} truncation has no nonzero roots")

    zeros = []
    with working_precision(work):
        tolerance = mpmath.mpf(10) ** (-mpmath.mpf(digits) / 2)
        bound = residual_tolerance(digits)
        for root in roots:
            displacement = min(abs(root - other) for other in comparison)
            if displacement >= tolerance:
                continue
            residual = abs(first.evaluate(root))
            if residual >= bound:
                logger.debug("dropping stable root %s: residual %s", mpmath.nstr(root, 12), mpmath.nstr(residual, 5))
                continue
            zeros.append(TrustedZero(root, displacement, residual, abs(first.derivative(root))))
    if not zeros:
        raise InsufficientOrderError(f"no zero of the order {N} truncation is stable at order {N_prime}",
                                     details={"N": N, "N_prime": N_prime, "digits": digits})
    zeros.sort(key=lambda zero: sort_key(zero.value, max(digits // 2 - 2, 1)))
    radius = max(zero.modulus for zero in zeros)
    logger.info("%d of %d roots are trusted; trust radius %s", len(zeros), len(roots), mpmath.nstr(radius, 10))
    return PoleSet(params, N, N_prime, digits, zeros, radius)


@dataclass
class GammaReport:
    """Both estimates of gamma = Omega_*^5 with their cost."""
    ratio: Any
    root: Any
    n_max: int
    N: int
    agreement: float
    ratio_seconds: float
    root_seconds: float

    @property
    def value(self):
        return self.root


def smallest_positive_root(poly: TruncatedTauPoly, digits: int):
    """Smallest real positive root of the reduced polynomial P_hat."""
    reduced = poly.reduced_coeffs()
    while reduced[-1] == 0:
        reduced.pop()
    roots = polynomial_roots(reduced, digits)
    tolerance = mpmath.mpf(10) ** (-mpmath.mpf(digits) / 2)
    real = [mpmath.re(w) for w in roots if mpmath.re(w) > 0 and abs(mpmath.im(w)) <= tolerance * abs(w)]
    if not real:
        raise InsufficientOrderError("the reduced polynomial has no positive real root", details={"N": poly.N})
    return min(real)


def gamma_report(digits: int = 23, N: Optional[int] = None, n_max: Optional[int] = None) -> GammaReport:
    """
    gamma from the strided ratio of the pentagonal Laurent coefficients and from the smallest
    positive root of P_hat of the order-N truncation.

    Raises:
        SeriesDomainError: for digits > 40
        InconsistencyError: when the two methods disagree beyond 10^-(digits-2)
    """
    if digits > 40:
        raise SeriesDomainError("gamma_constant is meant for at most 40 digits", details={"digits": digits})
    if N is None:
        N = ConfigurationsManager().get_int_for_key(SP.GAMMA_TRUNCATION_ORDER, 501)
    if n_max is None:
        n_max = max(30, math.ceil(1.35 * digits))
    params = ParameterTriple.pentagonal()

    started = time.perf_counter()
    ratio = nearest_pole_estimate(params, n_max, step=5, digits=digits + 5).value
    ratio_seconds = time.perf_counter() - started

    started = time.perf_counter()
    poly = truncated_tau_poly(params, N, root_working_digits(digits + 5, N // 5 + 1))
    root = smallest_positive_root(poly, digits + 5)
    root_seconds = time.perf_counter() - started

    with working_precision(digits):
        agreement = agreeing_digits(root, ratio)
        if abs(root - ratio) > mpmath.mpf(10) ** (-(digits - 2)):
            raise InconsistencyError("ratio and root estimates of gamma disagree",
                                     values={"ratio": mpmath.nstr(ratio, digits + 2),
                                             "root": mpmath.nstr(root, digits + 2)},
                                     details={"n_max": n_max, "N": N})
    logger.info("gamma: ratio method %.2fs, root method %.2fs, agreement %.1f digits",
                ratio_seconds, root_seconds, agreement)
    return GammaReport(ratio, root, n_max, N, agreement, ratio_seconds, root_seconds)


def gamma_constant(digits: int = 23, N: Optional[int] = None):
    """gamma = 18.3213826847... to ``digits`` decimal places, checked by both methods."""
    return gamma_report(digits, N).value

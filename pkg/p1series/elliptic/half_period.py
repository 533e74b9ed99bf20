"""
Real half-period omega_1 of the two symmetric lattices.

Both are computed by tanh-sinh quadrature of the defining integral

    omega_1 = int_{e_1}^inf dx / sqrt(4x^3 - g2 x - g3)

(for g2 = 4, g3 = 0 after x = 1/t^2 this is int_0^1 dt / sqrt(1 - t^4)); the closed forms
Gamma(1/3)^3 / (4 pi), B(1/4, 1/2) / 4 and pi / (2 agm(1, sqrt 2)) serve as independent checks.
"""
import logging

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import UnsupportedCaseError
from p1series.elliptic.cases import EQUIANHARMONIC, LEMNISCATIC, EllipticCase
from p1series.exact.precision import working_precision
from p1series.keys.series_properties import SeriesProperties as SP

logger = logging.getLogger(__name__)


def _quadrature_extra() -> int:
    return ConfigurationsManager().get_int_for_key(SP.QUADRATURE_EXTRA_DIGITS, 10)


def half_period(case: EllipticCase, digits: int = 25):
    """
    omega_1 to ``digits`` digits by quadrature.

    Raises:
        UnsupportedCaseError: for anything but the equianharmonic and lemniscatic cases
    """
    with working_precision(digits, extra=_quadrature_extra()):
        if case.kind == EQUIANHARMONIC:
            e1 = mpmath.cbrt(mpmath.mpf(1) / 4)
            value = mpmath.quad(lambda x: 1 / mpmath.sqrt(4 * x ** 3 - 1), [e1, e1 + 1, mpmath.inf],
                                method='tanh-sinh')
        elif case.kind == LEMNISCATIC:
            value = mpmath.quad(lambda t: 1 / mpmath.sqrt(1 - t ** 4), [0, 1], method='tanh-sinh')
        else:
            raise UnsupportedCaseError("half periods are only computed for the equianharmonic and lemniscatic cases",
                                       details={"kind": case.kind})
        # tanh-sinh nodes next to e_1 can round 4x^3 - 1 below zero
        value = mpmath.re(value)
    logger.debug("omega_1(%s) = %s", case.kind, mpmath.nstr(value, digits))
    return value


def half_period_closed_form(case: EllipticCase, digits: int = 25):
    """Gamma(1/3)^3 / (4 pi) or B(1/4, 1/2) / 4."""
    with working_precision(digits):
        if case.kind == EQUIANHARMONIC:
            value = mpmath.gamma(mpmath.mpf(1) / 3) ** 3 / (4 * mpmath.pi)
        elif case.kind == LEMNISCATIC:
            value = mpmath.beta(mpmath.mpf(1) / 4, mpmath.mpf(1) / 2) / 4
        else:
            raise UnsupportedCaseError("no closed form for a custom lattice", details={"kind": case.kind})
    return value


def lemniscatic_half_period_agm(digits: int = 25):
    """pi / (2 agm(1, sqrt 2))."""
    with working_precision(digits):
        value = mpmath.pi / (2 * mpmath.agm(1, mpmath.sqrt(2)))
    return value

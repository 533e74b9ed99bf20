"""
Simultaneous root refinement by the Aberth-Ehrlich iteration.

    z_i <- z_i - r_i / (1 - r_i sum_{j != i} 1 / (z_i - z_j)),   r_i = p(z_i) / p'(z_i)

Starting points sit on circles whose radii come from the upper convex hull (Newton polygon)
of the points (i, log |a_i|); a polynomial whose coefficients span hundreds of orders of
magnitude then starts with every root near its final modulus.
"""
import logging
from typing import Any, List, Optional, Sequence, Tuple

import mpmath

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import NumericalFailureError, SeriesDomainError
from p1series.keys.series_properties import SeriesProperties as SP

logger = logging.getLogger(__name__)


def root_working_digits(digits: int, degree: int) -> int:
    """Twice the requested digits plus the configured padding per degree."""
    padding = ConfigurationsManager().get_float_for_key(SP.ROOT_PADDING_PER_DEGREE, 0.25)
    return 2 * int(digits) + int(padding * degree + 0.5)


def newton_polygon_radii(coeffs: Sequence[Any]) -> List[Tuple[Any, int]]:
    """
    (radius, count) for each edge of the upper hull of (i, log |a_i|), ascending coefficients.

    The counts add up to the degree; a vanishing constant term contributes radius 0.
    """
    with mpmath.workdps(30):
        points = [(i, mpmath.log(abs(a))) for i, a in enumerate(coeffs) if a != 0]
        hull: List[Tuple[int, Any]] = []
        for point in points:
            while len(hull) >= 2:
                (i0, y0), (i1, y1) = hull[-2], hull[-1]
                # drop the middle point when it lies on or below the chord
                if (y1 - y0) * (point[0] - i0) <= (point[1] - y0) * (i1 - i0):
                    hull.pop()
                else:
                    break
            hull.append(point)
        radii = []
        if points[0][0] > 0:
            radii.append((mpmath.mpf(0), points[0][0]))
        for (i0, y0), (i1, y1) in zip(hull, hull[1:]):
            radii.append((mpmath.exp((y0 - y1) / (i1 - i0)), i1 - i0))
    return radii


def initial_guesses(coeffs: Sequence[Any]) -> List[Any]:
    guesses = []
    for edge, (radius, count) in enumerate(newton_polygon_radii(coeffs)):
        if radius == 0:
            guesses.extend([mpmath.mpc(0)] * count)
            continue
        offset = mpmath.mpf(0.4) + edge
        for j in range(count):
            guesses.append(radius * mpmath.expj(2 * mpmath.pi * j / count + offset / count))
    return guesses


def _value_and_derivative(descending: Sequence[Any], z) -> Tuple[Any, Any]:
    value = descending[0]
    derivative = mpmath.mpf(0)
    for a in descending[1:]:
        derivative = derivative * z + value
        value = value * z + a
    return value, derivative


def polynomial_roots(coeffs: Sequence[Any], digits: int = 25, max_iterations: Optional[int] = None,
                     initial: Optional[Sequence[Any]] = None) -> List[Any]:
    """
    All complex roots of ``sum a_i x^i`` to ``digits`` digits.

    Args:
        coeffs: a_0 .. a_n in ascending order, a_n != 0
        digits: requested precision of the roots
        max_iterations: sweep cap; configured value when omitted
        initial: starting points, the Newton polygon guesses when omitted

    Returns:
        list: n roots (with multiplicity), at the working precision

    Raises:
        SeriesDomainError: for degree < 1 or a vanishing leading coefficient
        NumericalFailureError: when the sweep cap is hit; ``partial`` holds the current roots
    """
    degree = len(coeffs) - 1
    if degree < 1:
        raise SeriesDomainError("polynomial_roots needs degree >= 1", details={"degree": degree})
    if coeffs[-1] == 0:
        raise SeriesDomainError("leading coefficient is zero")
    if max_iterations is None:
        max_iterations = ConfigurationsManager().get_int_for_key(SP.ABERTH_MAX_ITERATIONS, 400)

    zero_roots = next(i for i, a in enumerate(coeffs) if a != 0)
    with mpmath.workdps(root_working_digits(digits, degree)):
        coeffs = [mpmath.mpmathify(a) for a in coeffs[zero_roots:]]
        reduced = len(coeffs) - 1
        if reduced == 0:
            return [mpmath.mpc(0)] * zero_roots
        descending = list(reversed(coeffs))
        roots = [mpmath.mpc(z) for z in initial] if initial is not None else initial_guesses(coeffs)
        if len(roots) != reduced:
            raise SeriesDomainError("need one starting point per root",
                                    details={"given": len(roots), "degree": reduced})
        tolerance = mpmath.mpf(10) ** (-digits)
        done = [False] * reduced
        for sweep in range(1, max_iterations + 1):
            for i in range(reduced):
                if done[i]:
                    continue
                z = roots[i]
                value, derivative = _value_and_derivative(descending, z)
                if value == 0:
                    done[i] = True
                    continue
                ratio = value / derivative if derivative != 0 else value
                repulsion = mpmath.fsum(1 / (z - roots[j]) for j in range(reduced) if j != i and roots[j] != z)
                step = ratio / (1 - ratio * repulsion)
                roots[i] = z - step
                if abs(step) <= tolerance * max(abs(roots[i]), tolerance):
                    done[i] = True
            if all(done):
                logger.debug("Aberth iteration converged after %d sweeps for degree %d", sweep, reduced)
                break
        else:
            missing = done.count(False)
            logger.warning("Aberth iteration left %d of %d roots unconverged", missing, reduced)
            raise NumericalFailureError(f"{missing} of {reduced} roots did not converge",
                                        partial=[mpmath.mpc(0)] * zero_roots + roots, iterations=max_iterations,
                                        details={"degree": degree, "digits": digits})
    return [mpmath.mpc(0)] * zero_roots + roots

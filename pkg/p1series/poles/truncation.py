"""
Polynomial truncations of tau = sum_{n<=N} C_n z^(n+1).

When every exponent with a nonzero coefficient is of the form k m + 1, the truncation
factors as z P_hat(z^k) and its zeros are the k-th roots of the zeros of P_hat.
"""
import logging
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Any, List, Optional, Tuple

import mpmath

from p1series.core.exceptions import SeriesDomainError
from p1series.exact.params import ParameterTriple
from p1series.exact.precision import to_mp, working_precision
from p1series.tau.bilinear import tau_coeffs_bilinear
from p1series.tau.expansion import TauExpansion

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncatedTauPoly:
    """
    Attributes:
        params: the parameter point
        N: last tau coefficient kept; the polynomial has degree N + 1
        digits: precision the float image was taken at
        coeffs: coefficient of z^e at position e, e = 0 .. N + 1
        stride: k such that only exponents k m + 1 occur
        exact: the exact coefficient table
    """
    params: ParameterTriple
    N: int
    digits: int
    coeffs: Tuple[Any, ...]
    stride: int
    exact: TauExpansion

    @property
    def degree(self) -> int:
        return self.N + 1

    def exponent_support(self) -> List[int]:
        return [e for e, a in enumerate(self.coeffs) if a != 0]

    def reduced_coeffs(self) -> List[Any]:
        """Coefficients of P_hat(w) in ascending order, with z P_hat(z^k) the truncation."""
        k = self.stride
        return [self.coeffs[k * m + 1] for m in range((len(self.coeffs) - 2) // k + 1)]

    def evaluate(self, z):
        return mpmath.polyval(list(reversed(self.coeffs)), z)

    def derivative(self, z):
        return mpmath.polyval([e * a for e, a in reversed(list(enumerate(self.coeffs))) if e > 0], z)

    def roots(self, digits: int, max_iterations: Optional[int] = None) -> List[Any]:
        """
        All nonzero roots, via P_hat when the stride allows it.

        The trivial root at the origin is left out.
        """
        from p1series.poles.aberth import polynomial_roots

        reduced = self.reduced_coeffs()
        while reduced and reduced[-1] == 0:
            reduced.pop()
        if len(reduced) < 2:
            return []
        w_roots = polynomial_roots(reduced, digits, max_iterations=max_iterations)
        k = self.stride
        if k == 1:
            return [w for w in w_roots if w != 0]
        with working_precision(2 * digits):
            unity = [mpmath.expjpi(mpmath.mpf(2 * j) / k) for j in range(k)]
            return [mpmath.root(w, k) * u for w in w_roots if w != 0 for u in unity]


def exponent_stride(coeffs) -> int:
    """gcd of e - 1 over the exponents e with a nonzero coefficient."""
    return reduce(gcd, (e - 1 for e, a in enumerate(coeffs) if a != 0 and e != 1), 0) or 1


def truncated_tau_poly(params: ParameterTriple, N: int, digits: int = 25,
                       tau: Optional[TauExpansion] = None) -> TruncatedTauPoly:
    """
    The degree N + 1 truncation of tau with coefficients converted once at ``digits``.

    Raises:
        SeriesDomainError: for N < 6 or symbolic parameters
    """
    if N < 6:
        raise SeriesDomainError("the truncation needs N >= 6", details={"N": N})
    if params.is_symbolic():
        raise SeriesDomainError("polynomial truncations need a numeric parameter point")
    if tau is None or tau.N < N:
        tau = tau_coeffs_bilinear(params, N)
    with working_precision(digits):
        coeffs = (mpmath.mpf(0),) + tuple(to_mp(tau.C(n)) for n in range(N + 1))
    stride = exponent_stride([0] + [tau.C(n) for n in range(N + 1)])
    logger.debug("truncation of degree %d with exponent stride %d", N + 1, stride)
    return TruncatedTauPoly(params, N, digits, coeffs, stride, tau)

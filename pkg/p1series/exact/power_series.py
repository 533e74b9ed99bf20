"""
Dense truncated power series with exactness bookkeeping.

A ``PowerSeries`` stores the coefficients of ``z^offset, z^(offset+1), ...`` and an
``order``: every coefficient of ``z^m`` with ``m < order`` is known exactly (stored, or
an exact zero when ``m`` lies past the stored list). Coefficients of ``z^m`` with
``m >= order`` are unknown. Scalars may be Fractions, WeightedPolynomials or mpmath
numbers; the integer 0 serves as the additive identity for all of them.
"""
from dataclasses import dataclass
from typing import Any, List, Optional, Sequence, Tuple

from p1series.core.exceptions import SeriesDomainError, TruncationOrderError
from p1series.exact.scalars import divide


@dataclass(frozen=True)
class PowerSeries:
    offset: int
    coeffs: Tuple[Any, ...]
    order: Optional[int] = None

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        order = self.order if self.order is not None else self.offset + len(coeffs)
        if order < self.offset + len(coeffs):
            coeffs = coeffs[:max(order - self.offset, 0)]
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    @classmethod
    def from_list(cls, coeffs: Sequence, offset: int = 0, order: Optional[int] = None) -> 'PowerSeries':
        return cls(offset, tuple(coeffs), order)

    @classmethod
    def zero(cls, order: int, offset: int = 0) -> 'PowerSeries':
        return cls(offset, (), order)

    def coefficient(self, exponent: int):
        if exponent >= self.order:
            raise TruncationOrderError(f"coefficient of z^{exponent} lies beyond the exact order {self.order}",
                                       requested=exponent, available=self.order)
        index = exponent - self.offset
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def dense(self, start: int, stop: int) -> List[Any]:
        """Coefficients of z^start .. z^(stop-1)."""
        return [self.coefficient(m) for m in range(start, stop)]

    def truncate(self, order: int) -> 'PowerSeries':
        if order > self.order:
            raise TruncationOrderError(f"cannot raise the order from {self.order} to {order}",
                                       requested=order, available=self.order)
        return PowerSeries(self.offset, self.coeffs, order)

    def shift(self, k: int) -> 'PowerSeries':
        """Multiply by z^k."""
        return PowerSeries(self.offset + k, self.coeffs, self.order + k)

    def derivative(self) -> 'PowerSeries':
        coeffs = [(self.offset + i) * c for i, c in enumerate(self.coeffs)]
        return PowerSeries(self.offset - 1, coeffs, self.order - 1)

    def nonzero_terms(self) -> List[Tuple[int, Any]]:
        return [(self.offset + i, c) for i, c in enumerate(self.coeffs) if c != 0]

    def is_zero(self) -> bool:
        return not self.nonzero_terms()

    def map(self, func) -> 'PowerSeries':
        return PowerSeries(self.offset, tuple(func(c) for c in self.coeffs), self.order)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries(0, (other,), self.order)
        order = min(self.order, other.order)
        low = min(self.offset, other.offset)
        coeffs = [self._raw(m) + other._raw(m) for m in range(low, order)]
        return PowerSeries(low, tuple(coeffs), order)

    __radd__ = __add__

    def __neg__(self):
        return self.map(lambda c: -c)

    def __sub__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries(0, (other,), self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_product(self, other)
        return self.map(lambda c: c * other)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def _raw(self, exponent: int):
        index = exponent - self.offset
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0


def product_order(a: PowerSeries, b: PowerSeries) -> int:
    return min(a.order + b.offset, b.order + a.offset)


def series_product(a: PowerSeries, b: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """
    Cauchy product of two series, exact below ``order``.

    Args:
        a, b: factors
        order: exclusive bound on the exponents wanted; defaults to the largest exact one

    Returns:
        PowerSeries: the product

    Raises:
        TruncationOrderError: when ``order`` exceeds what the factors determine
    """
    available = product_order(a, b)
    if order is None:
        order = available
    elif order > available:
        raise TruncationOrderError(f"product is exact only below z^{available}, z^{order} requested",
                                   requested=order, available=available)
    offset = a.offset + b.offset
    length = max(order - offset, 0)
    result = [0] * length
    a_terms = [(i, c) for i, c in enumerate(a.coeffs) if c != 0]
    b_terms = [(j, c) for j, c in enumerate(b.coeffs) if c != 0]
    for i, ca in a_terms:
        if i >= length:
            break
        for j, cb in b_terms:
            if i + j >= length:
                break
            result[i + j] = result[i + j] + ca * cb
    return PowerSeries(offset, tuple(result), order)


def series_log_unit(a: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """
    Logarithm of a series with constant term 1, from ``L' = a'/a``.

    Raises:
        SeriesDomainError: when ``a`` does not start with the constant 1
        TruncationOrderError: when ``order`` exceeds the exact range of ``a``
    """
    if a.offset > 0 or any(a.coefficient(m) != 0 for m in range(a.offset, 0)) or a.coefficient(0) != 1:
        raise SeriesDomainError("logarithm needs a series starting with the constant term 1",
                                details={"offset": a.offset})
    if order is None:
        order = a.order
    elif order > a.order:
        raise TruncationOrderError(f"series is exact only below z^{a.order}", requested=order, available=a.order)
    coeffs = a.dense(0, order)
    support = [k for k in range(1, order) if coeffs[k] != 0]
    log_coeffs = [0] * order
    for n in range(1, order):
        # n L_n = n a_n - sum_{k=1}^{n-1} k L_k a_{n-k}
        total = n * coeffs[n]
        for k in support:
            if k >= n:
                break
            if log_coeffs[n - k] != 0:
                total = total - (n - k) * log_coeffs[n - k] * coeffs[k]
        log_coeffs[n] = divide(total, n) if total != 0 else 0
    return PowerSeries(0, tuple(log_coeffs), order)


def series_exp(log_series: PowerSeries, order: Optional[int] = None) -> PowerSeries:
    """
    Exponential of a series with zero constant term, from ``E' = L' E``.

    Raises:
        SeriesDomainError: when the constant term is nonzero
    """
    if log_series.offset < 0 and any(log_series.coefficient(m) != 0 for m in range(log_series.offset, 1)):
        raise SeriesDomainError("exponential needs a series without constant or negative terms")
    if log_series.offset <= 0 and log_series.coefficient(0) != 0:
        raise SeriesDomainError("exponential needs a series without constant term")
    if order is None:
        order = log_series.order
    elif order > log_series.order:
        raise TruncationOrderError(f"series is exact only below z^{log_series.order}",
                                   requested=order, available=log_series.order)
    log_coeffs = log_series.dense(0, order)
    support = [k for k in range(1, order) if log_coeffs[k] != 0]
    exp_coeffs = [0] * order
    if order > 0:
        exp_coeffs[0] = 1
    for n in range(1, order):
        # n E_n = sum_{k=1}^{n} k L_k E_{n-k}
        total = 0
        for k in support:
            if k > n:
                break
            if exp_coeffs[n - k] != 0:
                total = total + k * log_coeffs[k] * exp_coeffs[n - k]
        exp_coeffs[n] = divide(total, n) if total != 0 else 0
    return PowerSeries(0, tuple(exp_coeffs), order)

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Tuple

from p1series.core.exceptions import CoverageError
from p1series.exact.power_series import PowerSeries
from p1series.exact.weighted_polynomial import WeightedPolynomial


@dataclass(frozen=True)
class CoefficientTable:
    """
    Consecutive series coefficients ``values[i]`` of index ``start + i`` with provenance.

    Attributes:
        values: the coefficients (Fraction, WeightedPolynomial or mpmath scalars)
        start: index of the first value
        recursion: name of the recursion that produced the values
        order: last index computed
        params: the parameter point, when there is one
    """
    values: Tuple[Any, ...]
    start: int = 0
    recursion: str = ""
    order: Optional[int] = None
    params: Any = None
    extra: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.order is None:
            object.__setattr__(self, "order", self.start + len(self.values) - 1)

    def __getitem__(self, index: int):
        if not self.start <= index <= self.order:
            raise CoverageError(f"index {index} outside the table range {self.start}..{self.order}",
                                requested=index, available=self.order)
        return self.values[index - self.start]

    def get(self, index: int, default=0):
        if self.start <= index <= self.order:
            return self.values[index - self.start]
        return default

    def __len__(self):
        return len(self.values)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.values)

    def items(self) -> List[Tuple[int, Any]]:
        return [(self.start + i, v) for i, v in enumerate(self.values)]

    def indices(self) -> range:
        return range(self.start, self.order + 1)

    def prefix(self, order: int) -> 'CoefficientTable':
        """The same table cut after index ``order``."""
        if order > self.order:
            raise CoverageError(f"table reaches index {self.order}, {order} requested",
                                requested=order, available=self.order)
        return CoefficientTable(self.values[:order - self.start + 1], self.start, self.recursion, order,
                                self.params)

    def is_symbolic(self) -> bool:
        return any(isinstance(v, WeightedPolynomial) for v in self.values)

    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction, WeightedPolynomial)) for v in self.values)

    def evaluate(self, params) -> 'CoefficientTable':
        """Substitute a parameter point into a symbolic table."""
        values = [v.evaluate(*params.values()) if isinstance(v, WeightedPolynomial) else v for v in self.values]
        if params.is_rational():
            values = [Fraction(v) for v in values]
        return CoefficientTable(tuple(values), self.start, self.recursion, self.order, params)

    def as_series(self, offset_shift: int = 0) -> PowerSeries:
        """Series with coefficient ``values[i]`` at ``z^(start + i + offset_shift)``."""
        return PowerSeries(self.start + offset_shift, self.values, self.order + 1 + offset_shift)

    def with_values(self, values, recursion: Optional[str] = None) -> 'CoefficientTable':
        return CoefficientTable(tuple(values), self.start, recursion or self.recursion, None, self.params)

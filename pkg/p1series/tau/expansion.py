from dataclasses import dataclass

from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries
from p1series.exact.tables import CoefficientTable

BILINEAR = "bilinear"
QUARTIC = "quartic"
TRIPLE_SUM = "triple-sum"
METHODS = (BILINEAR, QUARTIC, TRIPLE_SUM)


@dataclass(frozen=True)
class TauExpansion:
    """tau = sum_{n>=0} C_n z^(n+1) in the gauge C_0 = 1, C_1 = 0."""
    params: ParameterTriple
    coeffs: CoefficientTable
    method: str

    @property
    def N(self) -> int:
        return self.coeffs.order

    def C(self, n: int):
        return self.coeffs[n]

    def as_series(self) -> PowerSeries:
        """tau as a series in z, exact below z^(N+2)."""
        return self.coeffs.as_series(offset_shift=1)

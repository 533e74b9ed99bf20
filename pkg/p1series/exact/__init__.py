from p1series.exact.params import ParameterTriple
from p1series.exact.power_series import PowerSeries, series_exp, series_log_unit, series_product
from p1series.exact.tables import CoefficientTable
from p1series.exact.weighted_polynomial import WeightedPolynomial, g2, g3, lam, poly_evaluate, poly_scale_weights

__all__ = [
    "ParameterTriple", "PowerSeries", "CoefficientTable", "WeightedPolynomial",
    "series_product", "series_log_unit", "series_exp",
    "poly_evaluate", "poly_scale_weights", "g2", "lam", "g3",
]

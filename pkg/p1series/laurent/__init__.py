from p1series.laurent.poles import (
    EvaluationResult, NearestPoleEstimate, decay_ratios, evaluate_u, nearest_pole_estimate, power_sums_F
)
from p1series.laurent.recursion import LaurentExpansion, laurent_coeffs, modular_polynomials, ode_residual, pentagonal_coeffs
from p1series.laurent.stratified import StratifiedTable, stratified_g2zero, stratified_g3zero, stratified_reassemble

__all__ = [
    "LaurentExpansion", "laurent_coeffs", "modular_polynomials", "pentagonal_coeffs", "ode_residual",
    "StratifiedTable", "stratified_g2zero", "stratified_g3zero", "stratified_reassemble",
    "NearestPoleEstimate", "nearest_pole_estimate", "power_sums_F", "decay_ratios", "EvaluationResult", "evaluate_u",
]

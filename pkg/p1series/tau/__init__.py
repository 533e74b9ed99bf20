from p1series.core.exceptions import SeriesDomainError
from p1series.tau.bilinear import bilinear_residual, hirota_b, tau_coeffs_bilinear
from p1series.tau.bridge import HamiltonianReport, euler_defect, gauge_transform, hamiltonian_check, \
    laurent_from_tau_series, u_from_tau
from p1series.tau.expansion import METHODS, TauExpansion
from p1series.tau.quartic import quartic_residual, tau_coeffs_quartic
from p1series.tau.triple_sum import TripleSumTable, integrality_report, tau_from_triple_sum, triple_sum_coeffs


def tau_coeffs(params, N: int, method: str = "bilinear") -> TauExpansion:
    """Dispatch to one of the three recursions by name."""
    if method == "bilinear":
        return tau_coeffs_bilinear(params, N)
    if method == "quartic":
        return tau_coeffs_quartic(params, N)
    if method == "triple-sum":
        return tau_from_triple_sum(triple_sum_coeffs(N + 1), params, N)
    raise SeriesDomainError(f"unknown tau method '{method}'", details={"known": list(METHODS)})


__all__ = [
    "TauExpansion", "METHODS", "tau_coeffs", "hirota_b", "tau_coeffs_bilinear", "bilinear_residual",
    "tau_coeffs_quartic", "quartic_residual", "TripleSumTable", "triple_sum_coeffs", "tau_from_triple_sum",
    "integrality_report", "u_from_tau", "laurent_from_tau_series", "gauge_transform", "euler_defect",
    "hamiltonian_check", "HamiltonianReport",
]

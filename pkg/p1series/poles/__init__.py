from p1series.poles.aberth import newton_polygon_radii, polynomial_roots
from p1series.poles.export import export_pole_map, pole_map_csv, pole_map_svg
from p1series.poles.truncation import TruncatedTauPoly, truncated_tau_poly
from p1series.poles.trusted import GammaReport, PoleSet, TrustedZero, gamma_constant, gamma_report, trusted_zeros

__all__ = [
    "TruncatedTauPoly", "truncated_tau_poly", "polynomial_roots", "newton_polygon_radii",
    "PoleSet", "TrustedZero", "trusted_zeros", "GammaReport", "gamma_report", "gamma_constant",
    "export_pole_map", "pole_map_csv", "pole_map_svg",
]

"""
The cross-recursion identity suite behind ``p1series verify``.

Every check compares exact values, so a single failure is a genuine defect.
"""
import logging
from fractions import Fraction

from hamcrest import empty, equal_to, is_

from p1series.elliptic.hurwitz import hurwitz_from_laurent, hurwitz_numbers
from p1series.exact.params import ParameterTriple
from p1series.laurent.recursion import laurent_coeffs, modular_polynomials, ode_residual, pentagonal_coeffs
from p1series.laurent.stratified import generating_function_residual, stratified_g2zero, stratified_g3zero
from p1series.tau.bilinear import bilinear_residual, tau_coeffs_bilinear
from p1series.tau.bridge import euler_defect, hamiltonian_check, u_from_tau
from p1series.tau.quartic import quartic_residual, tau_coeffs_quartic
from p1series.tau.triple_sum import integrality_report, tau_from_triple_sum, triple_sum_coeffs
from p1series.util.validator import Validator, VerificationReport

logger = logging.getLogger(__name__)

SYMBOLIC_ORDER = 24
STRATIFIED_ROWS = 8
HURWITZ_ROWS = 10


def _values(table):
    return list(table.values)


def _verify_laurent(params: ParameterTriple, N: int, report: VerificationReport):
    expansion = laurent_coeffs(params, N)
    Validator.verify_that(ode_residual(expansion).nonzero_terms(), is_(empty()),
                          "Laurent series satisfies the equation exactly", report)
    order = min(N, SYMBOLIC_ORDER)
    symbolic = modular_polynomials(order).evaluate(params)
    Validator.verify_that(_values(symbolic), equal_to(_values(expansion.coeffs.prefix(order))),
                          f"modular polynomials P_0..P_{order} evaluate to c_n", report)
    return expansion


def _verify_tau(params: ParameterTriple, N: int, expansion, s_max: int, report: VerificationReport):
    bilinear = tau_coeffs_bilinear(params, N)
    quartic = tau_coeffs_quartic(params, N)
    triple = tau_from_triple_sum(triple_sum_coeffs(N + 1), params, N)
    Validator.verify_that(_values(quartic.coeffs), equal_to(_values(bilinear.coeffs)),
                          "quartic and bilinear recursions agree", report)
    Validator.verify_that(_values(triple.coeffs), equal_to(_values(bilinear.coeffs)),
                          "triple sum and bilinear recursion agree", report)
    Validator.verify_that(bilinear_residual(bilinear).nonzero_terms(), is_(empty()),
                          "bilinear equation holds exactly", report)
    Validator.verify_that(quartic_residual(bilinear).nonzero_terms(), is_(empty()),
                          "quartic equation holds exactly", report)
    Validator.verify_that(_values(u_from_tau(bilinear, N).coeffs), equal_to(_values(expansion.coeffs)),
                          "u = -(log tau)'' reproduces the Laurent coefficients", report)
    hamiltonian = hamiltonian_check(params, N, tau=bilinear, expansion=expansion)
    Validator.verify_that(hamiltonian.nonzero, is_(empty()), "Hamiltonian identities hold", report)
    symbolic = tau_coeffs_bilinear(ParameterTriple.symbolic(), min(N, SYMBOLIC_ORDER))
    Validator.verify_that(euler_defect(symbolic), is_(empty()), "symbolic C_n are weighted homogeneous", report)
    Validator.verify_that(integrality_report(s_max), is_(empty()),
                          f"triple sum coefficients are integers for s <= {s_max}", report)


def _verify_pentagonal(report: VerificationReport):
    tau = tau_coeffs_bilinear(ParameterTriple.pentagonal(), 20)
    displayed = [tau.C(5), tau.C(10), tau.C(15), tau.C(20)]
    expected = [Fraction(-1, 20), Fraction(-7, 26400), Fraction(1, 1232000), Fraction(83, 117976320000)]
    Validator.verify_that(displayed, equal_to(expected), "pentagonal C_5, C_10, C_15, C_20", report)
    v = pentagonal_coeffs(STRATIFIED_ROWS + 2)
    Validator.verify_that([v[1], v[2], v[3]], equal_to([Fraction(1), Fraction(3, 22), Fraction(1, 88)]),
                          "pentagonal v_1, v_2, v_3", report)

    g2zero = stratified_g2zero(STRATIFIED_ROWS, 2)
    alpha, lam = Fraction(2, 7), Fraction(3, 5)
    c = laurent_coeffs(ParameterTriple(0, lam, 28 * alpha), 5 * STRATIFIED_ROWS + 4)
    mismatches = [(n, p) for n in range(1, STRATIFIED_ROWS + 1) for p in range(5)
                  if g2zero.reassemble(n, p, alpha, lam) != c.c(5 * n + p)]
    Validator.verify_that(mismatches, is_(empty()), "g2 = 0 stratified table reassembles c_n", report)

    g3zero = stratified_g3zero(STRATIFIED_ROWS, 2)
    beta = Fraction(1, 3)
    c = laurent_coeffs(ParameterTriple(20 * beta, lam, 0), 5 * STRATIFIED_ROWS)
    mismatches = [(n, p) for n in range(1, STRATIFIED_ROWS + 1) for p in range(5)
                  if g3zero.reassemble(n, p, beta, lam) != c.c(5 * n - p)]
    Validator.verify_that(mismatches, is_(empty()), "g3 = 0 stratified table reassembles c_n", report)

    residual = generating_function_residual(g2zero.first_family(), list(v.values))
    Validator.verify_that(residual.truncate(STRATIFIED_ROWS - 1).nonzero_terms(), is_(empty()),
                          "generating function of the first g2 = 0 family", report)


def _verify_hurwitz(report: VerificationReport):
    H = hurwitz_numbers(HURWITZ_ROWS)
    from_laurent = [hurwitz_from_laurent(n) for n in range(1, HURWITZ_ROWS + 1)]
    Validator.verify_that(_values(H), equal_to(from_laurent), "Hurwitz recurrence matches the Laurent side", report)


def run_verification(params: ParameterTriple, N: int, s_max: int = 60) -> VerificationReport:
    """
    Run every exact identity at ``params`` up to order ``N``.

    Returns:
        VerificationReport: one entry per identity; ``valid`` is False when any fails
    """
    report = VerificationReport()
    report.details.update({"params": str(params), "N": N, "s_max": s_max})
    logger.info("verifying identities at %s up to order %d", params, N)
    expansion = _verify_laurent(params, N, report)
    _verify_tau(params, N, expansion, s_max, report)
    _verify_pentagonal(report)
    _verify_hurwitz(report)
    logger.info("%d identities passed, %d failed", len(report.passed), len(report.errors))
    return report

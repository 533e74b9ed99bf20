#!/usr/bin/env python3
"""
p1series command line

Subcommands: laurent, tau, triple-sum, elliptic, pentagon, poles, verify.
Results go to standard output (or --out), logs to standard error.

Exit codes: 0 success, 2 parse or usage error, 3 numerical failure, 4 verification failure,
5 cache or file failure.
"""
import logging
import os
import sys
from typing import Callable, Dict, Optional

import mpmath

from p1series.cli.cache import TRIPLE_SUM_TABLE, load_seed, write_table
from p1series.cli.parser import CommandRequest, build_parser, parse_indices, parse_rational
from p1series.cli.report import ResultTable, render
from p1series.cli.verify import run_verification
from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import SeriesDomainError, SeriesError, exit_code_for, handle_exception
from p1series.elliptic import (
    EllipticCase,
    eisenstein_from_laurent,
    eisenstein_q_oracle,
    half_period,
    half_period_closed_form,
    hurwitz_numbers,
)
from p1series.elliptic.hurwitz import HURWITZ
from p1series.exact.params import ParameterTriple
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.laurent import evaluate_u, laurent_coeffs, pentagonal_coeffs, power_sums_F
from p1series.laurent.recursion import LaurentExpansion
from p1series.laurent.stratified import stratified_g2zero, stratified_g3zero
from p1series.poles import export_pole_map, gamma_report, pole_map_csv, pole_map_svg, trusted_zeros
from p1series.tau import tau_coeffs
from p1series.tau.expansion import TauExpansion
from p1series.tau.triple_sum import integrality_report, s_of, triple_sum_coeffs

logger = logging.getLogger(__name__)


def configure_logging(verbose: bool = False):
    config = ConfigurationsManager()
    level = logging.DEBUG if verbose else config.get_str_for_key(SP.LOG_LEVEL, "INFO").upper()
    log_format = config.get_str_for_key(SP.LOG_FORMAT, "%(levelname)s:%(name)s:%(message)s")
    logging.basicConfig(level=level, format=log_format, stream=sys.stderr, force=True)


@handle_exception
def emit(text: str, out: Optional[str]):
    if not out:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(out)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(out, "w", encoding="utf-8", newline="") as fp:
        fp.write(text)
    logger.info("wrote %s", out)


def _params_meta(params: ParameterTriple) -> Dict[str, str]:
    return params.as_strings() if not params.is_symbolic() else {"params": "symbolic"}


def _finish(request: CommandRequest, table: ResultTable) -> int:
    if request.format == "svg":
        raise SeriesDomainError("svg output is only available for the poles subcommand")
    emit(render(table, request.format, request.digits), request.out)
    return 0


def handle_laurent(request: CommandRequest) -> int:
    options = request.options
    if options.get("stratified"):
        return _handle_stratified(request)
    params = ParameterTriple.symbolic() if options.get("symbolic") else request.params
    recursion = "modular" if params.is_symbolic() else "laurent"
    seed = load_seed(request.cache, recursion, params)
    expansion = laurent_coeffs(params, request.terms, seed=seed)
    if request.cache:
        write_table(expansion.coeffs, request.cache)
    if options.get("point"):
        return _handle_evaluation(request, params, expansion)
    table = ResultTable("laurent coefficients c_n", ["n", "c_n"], meta=_params_meta(params))
    for n, value in expansion.coeffs.items():
        table.add(n, value)
    return _finish(request, table)


def _handle_evaluation(request: CommandRequest, params: ParameterTriple, expansion: LaurentExpansion) -> int:
    z = parse_rational(request.options["point"])
    result = evaluate_u(params, z, request.terms, request.digits, expansion)
    table = ResultTable("u(z) from the partial Laurent sum", ["z", "u", "residual", "radius", "inside"],
                        meta=_params_meta(params))
    table.add(z, result.value, result.residual, result.radius if result.radius is not None else "unknown",
              result.inside)
    return _finish(request, table)


def _handle_stratified(request: CommandRequest) -> int:
    case = request.options["stratified"]
    m_max = request.options.get("orders", 2)
    build = stratified_g2zero if case == "g2-zero" else stratified_g3zero
    stratified = build(request.terms, m_max)
    table = ResultTable(f"stratified {case} coefficients", ["m", "n", "p", "index", "value"], meta={"case": case})
    for (m, n, p) in sorted(stratified.entries):
        table.add(m, n, p, stratified.index(n, p), stratified.entries[(m, n, p)])
    return _finish(request, table)


def handle_tau(request: CommandRequest) -> int:
    options = request.options
    params = ParameterTriple.symbolic() if options.get("symbolic") else request.params
    method = options.get("method", "bilinear")
    seed = load_seed(request.cache, method, params)
    if seed is not None and seed.order >= request.terms:
        tau = TauExpansion(params, seed.prefix(request.terms), method)
    else:
        tau = tau_coeffs(params, request.terms, method)
        if request.cache:
            write_table(tau.coeffs, request.cache)
    table = ResultTable(f"tau coefficients C_n ({method})", ["n", "C_n"], meta=_params_meta(params))
    for n, value in tau.coeffs.items():
        table.add(n, value)
    return _finish(request, table)


def handle_triple_sum(request: CommandRequest) -> int:
    options = request.options
    s_max = request.terms
    seed = load_seed(request.cache, TRIPLE_SUM_TABLE)
    coefficients = seed if seed is not None and seed.s_max >= s_max else triple_sum_coeffs(s_max)
    if request.cache and coefficients is not seed:
        write_table(coefficients, request.cache)
    if options.get("check_integrality"):
        violations = integrality_report(s_max, coefficients)
        table = ResultTable("non-integral triple sum coefficients", ["l", "m", "n", "A"],
                            meta={"s_max": s_max, "violations": len(violations)})
        for key in violations:
            table.add(*key, coefficients.entries[key])
        return _finish(request, table)
    if options.get("matrices"):
        table = ResultTable("matrices M(m) of A_{l,m,n}", ["m", "l", "n0", "n1", "n2"])
        for m in range(3):
            for l, row in enumerate(coefficients.matrix(m)):
                table.add(m, l, *row)
        return _finish(request, table)
    table = ResultTable("triple sum coefficients A_{l,m,n}", ["l", "m", "n", "s", "A"], meta={"s_max": s_max})
    for key in coefficients.keys_by_s():
        if s_of(key) <= s_max:
            table.add(*key, s_of(key), coefficients.entries[key])
    return _finish(request, table)


def handle_elliptic(request: CommandRequest) -> int:
    options = request.options
    case = EllipticCase.named(options.get("case", "equianharmonic"))
    digits = request.digits
    which = options.get("table", "eisenstein")
    if which == "half-period":
        table = ResultTable("real half-period omega_1", ["case", "quadrature", "closed_form"])
        table.add(case.kind, half_period(case, digits), half_period_closed_form(case, digits))
        return _finish(request, table)
    indices = parse_indices(options.get("indices", "1-6,11-14"))
    if which == "hurwitz":
        seed = load_seed(request.cache, HURWITZ)
        top = max(indices)
        numbers = seed if seed is not None and seed.order >= top else hurwitz_numbers(top)
        if request.cache and numbers is not seed:
            write_table(numbers, request.cache)
        table = ResultTable("Hurwitz numbers H_n", ["n", "H_n"])
        for n in indices:
            table.add(n, numbers[n])
        return _finish(request, table)
    omega1 = half_period(case, digits)
    expansion = laurent_coeffs(case.params, case.symmetry * max(indices))
    table = ResultTable(f"Eisenstein series of the {case.kind} lattice", ["n", "weight", "laurent", "q_series"],
                        meta={"omega1": omega1})
    for n in indices:
        weight = case.symmetry * n
        laurent = eisenstein_from_laurent(case, n, digits, expansion, omega1)
        oracle = mpmath.re(eisenstein_q_oracle(case, weight, digits))
        table.add(n, weight, laurent, oracle)
    return _finish(request, table)


def handle_pentagon(request: CommandRequest) -> int:
    options = request.options
    which = options.get("table", "coefficients")
    digits = request.digits
    if which == "gamma":
        result = gamma_report(digits)
        table = ResultTable("pentagonal constant gamma", ["method", "value"],
                            meta={"n_max": result.n_max, "N": result.N, "agreement": f"{result.agreement:.1f}"})
        table.add("ratio", result.ratio)
        table.add("root", result.root)
        return _finish(request, table)
    if which == "power-sums":
        indices = parse_indices(options.get("indices", "1-6,11-14"))
        gamma = gamma_report(min(digits, 40)).value
        params = ParameterTriple.pentagonal()
        expansion = laurent_coeffs(params, 5 * max(indices))
        with mpmath.workdps(digits + 10):
            omega = mpmath.root(gamma, 5)
        values = power_sums_F(expansion, omega, [5 * n for n in indices], digits)
        table = ResultTable("pentagonal power sums F_5n", ["n", "F_5n"], meta={"gamma": gamma})
        for n, value in zip(indices, values):
            table.add(n, value)
        return _finish(request, table)
    seed = load_seed(request.cache, "pentagonal")
    v = pentagonal_coeffs(request.terms, seed=seed)
    if request.cache:
        write_table(v, request.cache)
    table = ResultTable("pentagonal coefficients v_n = c_5n", ["n", "v_n"])
    for n, value in v.items():
        table.add(n, value)
    return _finish(request, table)


def handle_poles(request: CommandRequest) -> int:
    poleset = trusted_zeros(request.params, request.terms, request.digits, request.options.get("growth"))
    if request.out:
        export_pole_map(poleset, request.out, "svg" if request.format == "svg" else "csv")
        return 0
    if request.format == "svg":
        emit(pole_map_svg(poleset), None)
        return 0
    if request.format == "csv":
        emit(pole_map_csv(poleset), None)
        return 0
    table = ResultTable("trusted zeros of tau", ["re", "im", "stability"],
                        meta={"N": poleset.N, "N_prime": poleset.N_prime, "trust_radius": poleset.trust_radius})
    for zero in poleset.zeros:
        table.add(mpmath.re(zero.value), mpmath.im(zero.value), zero.stability)
    return _finish(request, table)


def handle_verify(request: CommandRequest) -> int:
    report = run_verification(request.params, request.terms, request.options.get("s_max", 60))
    table = ResultTable("identity checks", ["check", "passed"], meta={"valid": report.valid})
    for name in report.passed:
        table.add(name, True)
    for error in report.errors:
        table.add(error.splitlines()[0], False)
    _finish(request, table)
    report.raise_on_failure()
    return 0


HANDLERS: Dict[str, Callable[[CommandRequest], int]] = {
    "laurent": handle_laurent,
    "tau": handle_tau,
    "triple-sum": handle_triple_sum,
    "elliptic": handle_elliptic,
    "pentagon": handle_pentagon,
    "poles": handle_poles,
    "verify": handle_verify,
}


def main(argv=None) -> int:
    """Main entry point; returns the exit code"""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    request = CommandRequest.from_args(args)
    try:
        return HANDLERS[request.subcommand](request)
    except SeriesError as e:
        logger.error(e.get_detailed_message())
        return exit_code_for(e)


def run():
    sys.exit(main())


if __name__ == '__main__':
    sys.exit(main())

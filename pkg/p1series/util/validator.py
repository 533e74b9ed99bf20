import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from hamcrest.core.matcher import Matcher
from hamcrest.core.string_description import StringDescription

from p1series.core.exceptions import VerificationError

logger = logging.getLogger(__name__)


@dataclass
class CheckResult:
    """Outcome of one named identity check"""
    name: str
    passed: bool
    description: str = ""


@dataclass
class VerificationReport:
    """Collected results of a series of checks"""
    valid: bool = True
    errors: List[str] = field(default_factory=list)
    passed: List[str] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def add(self, result: CheckResult):
        if result.passed:
            self.passed.append(result.name)
        else:
            self.errors.append(f"{result.name}: {result.description.strip()}")
            self.valid = False

    def raise_on_failure(self):
        if not self.valid:
            raise VerificationError(f"{len(self.errors)} check(s) failed", failures=list(self.errors))


class Validator:
    """
    Hamcrest based checks that log their outcome and optionally record it in a report.
    """

    @staticmethod
    def verify_that(arg1, matcher=None, reason='', report: Optional[VerificationReport] = None) -> bool:
        if isinstance(matcher, Matcher):
            result = Validator._assert_match(actual=arg1, matcher=matcher, reason=reason)
        else:
            result = Validator._assert_bool(assertion=arg1, reason=matcher or reason)
        if report is not None:
            report.add(result)
        return result.passed

    @staticmethod
    def assert_that(arg1, matcher=None, reason=''):
        if not Validator.verify_that(arg1=arg1, matcher=matcher, reason=reason):
            raise VerificationError(f"check failed: {reason or matcher}")

    @staticmethod
    def _assert_match(actual, matcher, reason) -> CheckResult:
        description = StringDescription()
        description.append_text(reason) \
            .append_text('\nExpected: ') \
            .append_description_of(matcher) \
            .append_text('\n     Actual: ')
        matcher.describe_mismatch(actual, description)
        description.append_text('\n')

        if not matcher.matches(actual):
            logger.error(str(description))
            return CheckResult(reason, False, str(description))
        logger.info("PASS: %s", reason)
        return CheckResult(reason, True, str(description))

    @staticmethod
    def _assert_bool(assertion, reason=None) -> CheckResult:
        reason = reason or "Assertion"
        if not assertion:
            logger.error("FAIL: %s", reason)
            return CheckResult(reason, False, "expected true")
        logger.info("PASS: %s", reason)
        return CheckResult(reason, True)

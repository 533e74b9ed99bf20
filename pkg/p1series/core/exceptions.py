"""
Exception hierarchy for series computations, cache persistence and verification
"""

from typing import Any, Dict, List, Optional


class SeriesError(Exception):
    """Base exception for all series operations"""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None, error_code: str = None):
        self.message = message
        self.details = details or {}
        self.error_code = error_code or self.__class__.__name__
        super().__init__(self.message)

    def __str__(self):
        return f"[{self.error_code}] {self.message}"

    def get_detailed_message(self) -> str:
        """Get detailed error message with context"""
        msg = str(self)
        if self.details:
            msg += f"\nDetails: {self.details}"
        return msg


class SeriesDomainError(SeriesError, ValueError):
    """Exception raised when an argument lies outside the domain of an operation"""
    pass


class TruncationOrderError(SeriesDomainError):
    """Exception raised when a requested order exceeds the exact range of a series"""

    def __init__(self, message: str, requested: int = None, available: int = None, **kwargs):
        self.requested = requested
        self.available = available
        details = kwargs.get('details', {})
        if requested is not None:
            details['requested'] = requested
        if available is not None:
            details['available'] = available
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class CoverageError(TruncationOrderError):
    """Exception raised when a coefficient table is too shallow for the requested order"""
    pass


class PoleError(SeriesDomainError):
    """Exception raised when a series is evaluated at its pole"""
    pass


class UnsupportedCaseError(SeriesDomainError):
    """Exception raised for a case the operation has no method for"""
    pass


class RationalParseError(SeriesDomainError):
    """Exception raised when text cannot be read as an exact rational"""

    def __init__(self, message: str, text: str = None, **kwargs):
        self.text = text
        details = kwargs.get('details', {})
        if text is not None:
            details['text'] = text
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class NumericalError(SeriesError):
    """Base for failures of iterative numerics"""
    pass


class NonGenericConfigurationError(NumericalError):
    """Exception raised when coefficient ratios do not settle, e.g. several poles of equal modulus"""

    def __init__(self, message: str, ratios: List[Any] = None, differences: List[Any] = None, **kwargs):
        self.ratios = ratios or []
        self.differences = differences or []
        super().__init__(message, **kwargs)

    def get_detailed_message(self) -> str:
        msg = super().get_detailed_message()
        if self.differences:
            msg += "\nLast ratio differences:\n" + "\n".join(f"  - {d}" for d in self.differences)
        return msg


class NumericalFailureError(NumericalError):
    """Exception raised when an iteration hits its cap; carries the partial result"""

    def __init__(self, message: str, partial: List[Any] = None, iterations: int = None, **kwargs):
        self.partial = partial or []
        self.iterations = iterations
        details = kwargs.get('details', {})
        if iterations is not None:
            details['iterations'] = iterations
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class InsufficientOrderError(NumericalError):
    """Exception raised when a truncation is too short for any zero to stabilise"""
    pass


class InconsistencyError(NumericalError):
    """Exception raised when two independent methods disagree"""

    def __init__(self, message: str, values: Dict[str, Any] = None, **kwargs):
        self.values = values or {}
        details = kwargs.get('details', {})
        details.update({k: str(v) for k, v in self.values.items()})
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class CacheError(SeriesError):
    """Base for coefficient cache failures"""
    pass


class CacheVersionError(CacheError):
    """Exception raised when a cache file was written by an unsupported format version"""

    def __init__(self, message: str, found: str = None, supported: List[str] = None, **kwargs):
        self.found = found
        self.supported = supported or []
        details = kwargs.get('details', {})
        details['found'] = found
        details['supported'] = self.supported
        details['hint'] = "recompute the table or upgrade p1series to a release that reads this version"
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class CacheCorruptionError(CacheError):
    """Exception raised when a cache file fails its checksum or cannot be parsed"""
    pass


class CacheFileSystemError(CacheError):
    """Exception raised when file system operations fail"""

    def __init__(self, message: str, file_path: str = None, operation: str = None, **kwargs):
        self.file_path = file_path
        self.operation = operation
        details = kwargs.get('details', {})
        if file_path:
            details['file_path'] = file_path
        if operation:
            details['operation'] = operation
        kwargs['details'] = details
        super().__init__(message, **kwargs)


class VerificationError(SeriesError):
    """Exception raised when an identity check fails"""

    def __init__(self, message: str, failures: List[str] = None, **kwargs):
        self.failures = failures or []
        super().__init__(message, **kwargs)

    def get_detailed_message(self) -> str:
        msg = super().get_detailed_message()
        if self.failures:
            msg += "\nFailed checks:\n" + "\n".join(f"  - {failure}" for failure in self.failures)
        return msg


ERROR_CODES = {
    'DOMAIN_ERROR': SeriesDomainError,
    'TRUNCATION_ORDER': TruncationOrderError,
    'COVERAGE': CoverageError,
    'POLE': PoleError,
    'UNSUPPORTED_CASE': UnsupportedCaseError,
    'PARSE_ERROR': RationalParseError,
    'NON_GENERIC': NonGenericConfigurationError,
    'NUMERICAL_FAILURE': NumericalFailureError,
    'INSUFFICIENT_ORDER': InsufficientOrderError,
    'INCONSISTENCY': InconsistencyError,
    'CACHE_VERSION': CacheVersionError,
    'CACHE_CORRUPTION': CacheCorruptionError,
    'FILESYSTEM_ERROR': CacheFileSystemError,
    'VERIFICATION_FAILED': VerificationError,
    'SERIES_ERROR': SeriesError
}

# exit status of the command line for each failure family; most specific class first
EXIT_CODES = [
    (VerificationError, 4),
    (NumericalError, 3),
    (SeriesDomainError, 2),
    (CacheVersionError, 2),
    (CacheError, 5),
    (SeriesError, 3),
]


def create_error(error_code: str, message: str, **kwargs) -> SeriesError:
    """
    Factory function to create specific error types based on error codes

    Args:
        error_code: Error code from ERROR_CODES
        message: Error message
        **kwargs: Additional parameters for specific error types

    Returns:
        Appropriate exception instance
    """
    error_class = ERROR_CODES.get(error_code, SeriesError)
    return error_class(message, error_code=error_code, **kwargs)


def exit_code_for(error: BaseException) -> int:
    for error_class, code in EXIT_CODES:
        if isinstance(error, error_class):
            return code
    return 1


def handle_exception(func):
    """
    Decorator giving file operations consistent exception handling

    Usage:
        @handle_exception
        def write_table(path, table):
            # operation code
    """
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except SeriesError:
            raise
        except FileNotFoundError as e:
            raise CacheFileSystemError(f"File not found: {str(e)}", file_path=str(e.filename),
                                       operation=func.__name__) from e
        except PermissionError as e:
            raise CacheFileSystemError(f"Permission denied: {str(e)}", file_path=str(e.filename),
                                       operation=func.__name__) from e
        except OSError as e:
            raise CacheFileSystemError(f"File system error: {str(e)}", operation=func.__name__) from e

    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper

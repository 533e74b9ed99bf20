"""
Versioned plain-text cache of exact coefficient tables.

    # p1series coefficient cache
    version=1
    recursion=pentagonal
    params=g2=0;lambda=1;g3=0
    order=50
    start=1
    checksum=sha256:<hex digest of the body>
    ---
    1 1/1
    2 3/22

Symbolic values are written as ``i,j,k=p/q`` terms joined by ``;``; triple-sum-coefficients keys are
written ``l,m,n``.
"""
import hashlib
import logging
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Tuple, Union

from p1series.core.configurations_manager import ConfigurationsManager
from p1series.core.exceptions import (
    CacheCorruptionError,
    CacheVersionError,
    SeriesDomainError,
    handle_exception,
)
from p1series.exact.params import ParameterTriple
from p1series.exact.tables import CoefficientTable
from p1series.exact.weighted_polynomial import WeightedPolynomial
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.tau.triple_sum import TripleSumTable

logger = logging.getLogger(__name__)

MAGIC = "# p1series coefficient cache"
SEPARATOR = "---"
SYMBOLIC = "symbolic"
TRIPLE_SUM_TABLE = "triple-sum-coefficients"

Key = Union[int, Tuple[int, int, int]]


def format_version() -> str:
    return str(ConfigurationsManager().get_int_for_key(SP.CACHE_FORMAT_VERSION, 1))


def supported_versions() -> List[str]:
    return ConfigurationsManager().get_list_for_key(SP.CACHE_SUPPORTED_VERSIONS, [format_version()])


def _fraction_text(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def value_text(value) -> str:
    if isinstance(value, WeightedPolynomial):
        if value.is_zero():
            return "0/1"
        return ";".join(f"{i},{j},{k}={_fraction_text(c)}" for (i, j, k), c in value.items())
    if isinstance(value, (int, Fraction)):
        return _fraction_text(value)
    raise SeriesDomainError(f"only exact values can be cached, got {type(value).__name__}")


def parse_value(text: str, symbolic: bool):
    if "=" in text:
        terms = {}
        for term in text.split(";"):
            exponent, coefficient = term.split("=")
            terms[tuple(int(e) for e in exponent.split(","))] = Fraction(coefficient)
        return WeightedPolynomial(terms)
    value = Fraction(text)
    return WeightedPolynomial.constant(value) if symbolic else value


def params_text(params: Optional[ParameterTriple]) -> str:
    if params is None:
        return ""
    if params.is_symbolic():
        return SYMBOLIC
    if not params.is_rational():
        raise SeriesDomainError("only tables at rational parameter points can be cached")
    return ";".join(f"{name}={text}" for name, text in params.as_strings().items())


def parse_params(text: str) -> Optional[ParameterTriple]:
    if not text:
        return None
    if text == SYMBOLIC:
        return ParameterTriple.symbolic()
    values = dict(item.split("=", 1) for item in text.split(";"))
    return ParameterTriple(Fraction(values["g2"]), Fraction(values["lambda"]), Fraction(values["g3"]))


@dataclass
class CacheFile:
    """Header fields and ``(index, value)`` body lines of one cache file."""
    recursion: str
    params: Optional[ParameterTriple]
    order: int
    start: int
    entries: List[Tuple[Key, Any]] = field(default_factory=list)
    version: str = field(default_factory=format_version)

    def body(self) -> str:
        lines = []
        for key, value in self.entries:
            index = ",".join(str(k) for k in key) if isinstance(key, tuple) else str(key)
            lines.append(f"{index} {value_text(value)}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        body = self.body()
        header = [
            MAGIC,
            f"version={self.version}",
            f"recursion={self.recursion}",
            f"params={params_text(self.params)}",
            f"order={self.order}",
            f"start={self.start}",
            f"checksum=sha256:{hashlib.sha256(body.encode('utf-8')).hexdigest()}",
            SEPARATOR,
        ]
        return "\n".join(header) + "\n" + body

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> 'CacheFile':
        head, separator, body = text.partition("\n" + SEPARATOR + "\n")
        lines = head.splitlines()
        if not separator or not lines or lines[0].strip() != MAGIC:
            raise CacheCorruptionError(f"{source} is not a p1series cache file")
        fields = dict(line.split("=", 1) for line in lines[1:] if "=" in line)
        version = fields.get("version", "")
        if version not in supported_versions():
            raise CacheVersionError(f"{source} has cache format version {version or '?'}",
                                    found=version, supported=supported_versions())
        expected = fields.get("checksum", "")
        actual = "sha256:" + hashlib.sha256(body.encode("utf-8")).hexdigest()
        if expected != actual:
            raise CacheCorruptionError(f"checksum mismatch in {source}",
                                       details={"expected": expected, "actual": actual})
        try:
            params = parse_params(fields.get("params", ""))
            symbolic = params is not None and params.is_symbolic()
            entries = []
            for line in body.splitlines():
                if not line.strip():
                    continue
                index, value = line.split(None, 1)
                key = tuple(int(k) for k in index.split(",")) if "," in index else int(index)
                entries.append((key, parse_value(value.strip(), symbolic)))
            return cls(fields["recursion"], params, int(fields["order"]), int(fields["start"]), entries, version)
        except (KeyError, ValueError, ZeroDivisionError) as e:
            raise CacheCorruptionError(f"cannot parse {source}: {e}") from e


def table_to_cache(table: Union[CoefficientTable, TripleSumTable]) -> CacheFile:
    if isinstance(table, TripleSumTable):
        entries = [(key, table.entries[key]) for key in table.keys_by_s()]
        return CacheFile(TRIPLE_SUM_TABLE, None, table.s_max, 0, entries)
    return CacheFile(table.recursion, table.params, table.order, table.start, table.items())


def cache_to_table(cache: CacheFile) -> Union[CoefficientTable, TripleSumTable]:
    if cache.recursion == TRIPLE_SUM_TABLE:
        return TripleSumTable(cache.order, {key: value.numerator if value.denominator == 1 else value
                                            for key, value in cache.entries})
    indices = [key for key, _ in cache.entries]
    if indices != list(range(cache.start, cache.order + 1)):
        raise CacheCorruptionError("cache body does not hold consecutive indices",
                                   details={"start": cache.start, "order": cache.order})
    values = [value for _, value in cache.entries]
    return CoefficientTable(tuple(values), cache.start, cache.recursion, cache.order, cache.params)


@handle_exception
def write_table(table: Union[CoefficientTable, TripleSumTable], path: str) -> str:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fp:
        fp.write(table_to_cache(table).to_text())
    logger.debug("cached %s table in %s", getattr(table, "recursion", TRIPLE_SUM_TABLE), path)
    return path


@handle_exception
def read_table(path: str) -> Union[CoefficientTable, TripleSumTable]:
    with open(path, encoding="utf-8", newline="") as fp:
        text = fp.read()
    return cache_to_table(CacheFile.from_text(text, path))


def cache_roundtrip(table: Union[CoefficientTable, TripleSumTable], path: str):
    """Write ``table`` to ``path`` and read it back."""
    write_table(table, path)
    return read_table(path)


def load_seed(path: Optional[str], recursion: str, params: Optional[ParameterTriple] = None):
    """
    The cached table at ``path`` when it was produced by ``recursion`` at ``params``.

    A missing file gives None; a file for another recursion or point is ignored with a warning.
    """
    if not path or not os.path.exists(path):
        return None
    table = read_table(path)
    produced_by = TRIPLE_SUM_TABLE if isinstance(table, TripleSumTable) else table.recursion
    if produced_by != recursion or (params is not None and getattr(table, "params", None) not in (None, params)):
        logger.warning("ignoring cache %s: it holds a %s table for another request", path, produced_by)
        return None
    return table

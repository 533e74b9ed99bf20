import json
import logging
import os
import re
from fractions import Fraction
from typing import Dict, Iterator, Optional, Tuple

from simpleeval import EvalWithCompoundTypes, NameNotDefined

logger = logging.getLogger(__name__)

_REFERENCE = re.compile(r"\$\{([^}]+)\}")
_EXPRESSION_PREFIX = "expr:"
RESOURCES_KEY = "env.resources"


def read_properties(path: str) -> Iterator[Tuple[str, str]]:
    """
    ``key=value`` pairs of a .properties/.ini file.

    ``#`` starts a comment line; a trailing backslash joins the next line.
    """
    pending = ""
    with open(path, 'r', encoding='UTF-8') as fp:
        for raw in fp:
            line = raw.strip()
            if not pending and (not line or line.startswith("#")):
                continue
            if pending and line.startswith("#"):
                line = ""
            if line.endswith("\\"):
                pending += line[:-1]
                continue
            entry, pending = pending + line, ""
            key, sep, value = entry.partition("=")
            if sep:
                yield key.strip(), value.strip()
    if pending:
        key, sep, value = pending.partition("=")
        if sep:
            yield key.strip(), value.strip()


def read_json(path: str) -> Iterator[Tuple[str, str]]:
    with open(path, 'r', encoding='UTF-8') as fp:
        for key, value in json.load(fp).items():
            yield key, value if isinstance(value, str) else json.dumps(value)


READERS = {'.properties': read_properties, '.ini': read_properties, '.json': read_json}


class PropertyUtil(dict):
    """
    Property bundle backing the configuration manager.

    Values are stored raw and resolved on read:
    - ``${other.key}`` is replaced by the resolved value of ``other.key``
    - ``${expr:1/4}`` is evaluated with simpleeval; ``Fraction`` is available for exact values
    - an environment variable named like a key overrides the file value

    Files listed under ``env.resources`` (semicolon separated files or directories) are loaded
    after the file that names them.
    """

    def __init__(self, *args, **kw):
        super(PropertyUtil, self).__init__(*args, **kw)
        self.loaded_paths = []
        self.evaluator = EvalWithCompoundTypes(functions={"Fraction": Fraction, "int": int, "max": max, "min": min})

    def load(self, resources_path: Optional[str]) -> None:
        """
        Load every file named in ``resources_path``.

        Args:
            resources_path (str): semicolon separated files or directories, loaded in order
        """
        if not resources_path or resources_path in self.loaded_paths:
            return
        self.loaded_paths.append(resources_path)
        for entry in (part.strip() for part in resources_path.split(";")):
            if os.path.isdir(entry):
                for root, _, files in os.walk(entry):
                    for name in sorted(files):
                        self.load_file(os.path.join(root, name))
            elif os.path.isfile(entry):
                self.load_file(entry)
            elif entry:
                logger.warning("configuration resource %s does not exist", entry)
        self.load(self.get_string(RESOURCES_KEY))

    def load_file(self, path: str) -> None:
        reader = READERS.get(os.path.splitext(path)[1])
        if reader is None:
            logger.debug("skipping %s: not a configuration file", path)
            return
        for key, value in reader(path):
            self.set_property(key, value)
        logger.debug("loaded configuration from %s", path)

    def contains_key(self, key: str) -> bool:
        return key in self

    def get_string(self, key: str, default: str = None) -> Optional[str]:
        """
        Returns the resolved value for key as a string.

        Args:
            key (str): property key
            default (Optional(str)): returned when the key is absent

        Returns:
            Optional(str): resolved value for key or default
        """
        value = self.get(key, default)
        return str(value) if value is not None else None

    def get_int(self, key: str, default: int = None) -> Optional[int]:
        value = self.get(key, default)
        return int(value) if value is not None else None

    def get_float(self, key: str, default: float = None) -> Optional[float]:
        value = self.get(key, default)
        return float(value) if value is not None else None

    def set_property(self, key: str, value) -> None:
        self[key] = os.environ.get(key, value)

    def get(self, key: str, default=None):
        value = self.get_raw_value(key)
        return self.resolve(value) if value is not None else default

    def get_raw_value(self, key: str, default=None):
        return super(PropertyUtil, self).get(key, default)

    def resolve(self, value, names: Optional[Dict[str, object]] = None, seen: Tuple[str, ...] = ()):
        """Expand ``${...}`` references in ``value``; non-strings are returned unchanged."""
        if not value or not isinstance(value, str):
            return value
        names = names or {}

        def substitute(match):
            reference = match.group(1)
            if reference.startswith(_EXPRESSION_PREFIX):
                return str(self.evaluate(reference[len(_EXPRESSION_PREFIX):], names))
            if reference in names:
                return str(names[reference])
            if reference in seen or reference not in self:
                return match.group(0)
            return str(self.resolve(self.get_raw_value(reference), names, seen + (reference,)))

        return _REFERENCE.sub(substitute, value)

    def evaluate(self, expression: str, names: Optional[Dict[str, object]] = None):
        self.evaluator.names = dict(names or {})
        try:
            return self.evaluator.eval(self.resolve(expression, names))
        except NameNotDefined as e:
            logger.warning("cannot evaluate configuration expression '%s': %s", expression, e)
            return False

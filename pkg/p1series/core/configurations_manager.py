import logging
import os
from fractions import Fraction
from typing import List, Optional

from p1series.core.singleton import Singleton
from p1series.keys.series_properties import SeriesProperties as SP
from p1series.util.property_util import PropertyUtil

__all__ = [
    "ConfigurationsManager", "DEFAULT_PROPERTIES_PATH", "LOCAL_PROPERTIES_PATH"
]

logger = logging.getLogger(__name__)

DEFAULT_PROPERTIES_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'config',
                                       'application.properties')
LOCAL_PROPERTIES_PATH = os.path.join('resources', 'application.properties')


class ConfigurationsManager(metaclass=Singleton):
    """
    Process-wide configuration.

    Load order: the packaged defaults, ``resources/application.properties`` in the working
    directory when present, then whatever ``env.resources`` lists. Later values win; an
    environment variable named like a key wins over every file.
    """

    def __init__(self):
        self.__bundle = PropertyUtil()
        self.__bundle.load(DEFAULT_PROPERTIES_PATH)
        if os.path.exists(LOCAL_PROPERTIES_PATH):
            self.__bundle.load(LOCAL_PROPERTIES_PATH)
        self.__bundle.load(self.__bundle.get_string(SP.RESOURCES))
        logger.debug("configuration loaded from %s", "; ".join(self.__bundle.loaded_paths))

    def contains_key(self, key: str) -> bool:
        return self.__bundle.contains_key(key)

    def set_object_for_key(self, key: str, value) -> None:
        self.__bundle.set_property(key, value)

    def get_str_for_key(self, key: str, default_value=None) -> Optional[str]:
        return self.__bundle.get_string(key, default_value)

    def get_int_for_key(self, key: str, default_value=None) -> Optional[int]:
        return self.__bundle.get_int(key, default_value)

    def get_float_for_key(self, key: str, default_value=None) -> Optional[float]:
        return self.__bundle.get_float(key, default_value)

    def get_fraction_for_key(self, key: str, default_value=None) -> Optional[Fraction]:
        """
        Returns the value for key as an exact rational.

        Args:
            key (str): property key holding an integer, ``p/q`` or finite decimal
            default_value (Optional(Fraction)): returned when the key is absent

        Returns:
            Optional(Fraction): stored value for key
        """
        value = self.__bundle.get_string(key)
        return Fraction(value.strip()) if value is not None else default_value

    def get_list_for_key(self, key: str, default_value=None) -> List[str]:
        """Semicolon separated values of key."""
        value = self.__bundle.get_string(key)
        if value is None:
            return list(default_value or [])
        return [item.strip() for item in value.split(";") if item.strip()]

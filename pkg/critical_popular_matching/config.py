# coding: utf-8
"""
Description:
    Holds the tunable defaults of the package. One Config is built by the CLI (or by the caller)
    and passed down explicitly; library functions fall back to Config() when given nothing.
Classes:
    Config: Dataclass of defaults, optionally overridden by CPM_* environment variables
"""


# --------------------------------------------------------------------------------
# > Imports
# --------------------------------------------------------------------------------
# Built-in
import logging
import os
from dataclasses import dataclass, fields, replace

# Third-party

# Local
from .exceptions import ConfigError


# --------------------------------------------------------------------------------
# > Constants
# --------------------------------------------------------------------------------
ENV_PREFIX = "CPM_"
log = logging.getLogger(__name__)


# --------------------------------------------------------------------------------
# > Main
# --------------------------------------------------------------------------------
@dataclass(frozen=True)
class Config:
    """Defaults shared by the oracle, the generator, the verification suite and the CLI"""
    # ----------------------------------------
    # Fields
    # ----------------------------------------
    oracle_edge_cap: int = 24
    generator_retries: int = 64
    default_density: float = 0.6
    verify_count: int = 20
    log_level: str = "WARNING"

    # ----------------------------------------
    # Custom Methods
    # ----------------------------------------
    @classmethod
    def from_env(cls, environ=None):
        """
        Description:
            Builds a Config from the defaults, overridden by any CPM_<FIELD> environment variable
            (for instance CPM_ORACLE_EDGE_CAP=30)
        Args:
            environ (Mapping, optional): Mapping to read instead of os.environ. Defaults to None.
        Returns:
            Config: The resulting configuration
        """
        environ = os.environ if environ is None else environ
        overrides = {}
        for field in fields(cls):
            raw = environ.get(ENV_PREFIX + field.name.upper())
            if raw is None:
                continue
            try:
                overrides[field.name] = type(field.default)(raw)
            except (TypeError, ValueError):
                raise ConfigError(f"Invalid value {raw!r} for {ENV_PREFIX}{field.name.upper()}")
        if overrides:
            log.debug("configuration overrides from environment: %s", overrides)
        return cls(**overrides)

    def with_overrides(self, **changes):
        """Returns a copy where every non-None keyword replaces the matching field"""
        changes = {key: value for key, value in changes.items() if value is not None}
        return replace(self, **changes)

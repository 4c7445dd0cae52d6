"""
Binrec Settings

Configuration management using environment variables.

Malformed numeric variables never break the import: the default is kept
and validate() reports the variable by name.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import List, Optional


def _env_number(name: str, default, convert, errors: List[str]):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return convert(raw)
    except ValueError:
        errors.append(f"{name} must be a number, got '{raw}'")
        return default


@dataclass
class Settings:
    """Application settings loaded from environment."""

    # Enumeration caps
    enumeration_cap: int = 12
    path_cap: int = 14
    isomorphism_dim_cap: int = 4

    # Reproducibility
    seed: int = 20240101

    # Output
    log_level: str = "WARNING"

    # Diagnostics
    norm_ratio_floor: float = 0.1

    # Variables that could not be parsed
    env_errors: List[str] = field(default_factory=list, repr=False)

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables."""
        errors: List[str] = []
        cap: Optional[int] = _env_number("BINREC_CAP", None, int, errors)
        enumeration_cap = 12 if cap is None else cap
        path_cap = _env_number("BINREC_PATH_CAP", 14, int, errors)
        if cap is not None:
            path_cap = min(path_cap, enumeration_cap)

        return cls(
            # Caps
            enumeration_cap=enumeration_cap,
            path_cap=path_cap,
            isomorphism_dim_cap=_env_number("BINREC_ISO_DIM", 4, int, errors),

            # Reproducibility
            seed=_env_number("BINREC_SEED", 20240101, int, errors),

            # Output
            log_level=os.getenv("BINREC_LOG_LEVEL", "WARNING").upper(),

            # Diagnostics
            norm_ratio_floor=_env_number("BINREC_NORM_FLOOR", 0.1, float, errors),

            env_errors=errors,
        )

    def validate(self) -> list[str]:
        """Validate settings and return list of errors."""
        errors = list(self.env_errors)

        if self.enumeration_cap < 2:
            errors.append("BINREC_CAP must be at least 2")

        if self.path_cap < 1:
            errors.append("BINREC_PATH_CAP must be at least 1")

        if not 0.0 < self.norm_ratio_floor < 1.0:
            errors.append("BINREC_NORM_FLOOR must lie in (0, 1)")

        if not isinstance(logging.getLevelName(self.log_level), int):
            errors.append(f"BINREC_LOG_LEVEL '{self.log_level}' is not a logging level")

        return errors


# Global settings instance
settings = Settings.from_env()

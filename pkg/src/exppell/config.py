"""Run configuration: defaults < config file < command-line flags < EXPPELL_* environment."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Mapping

from .errors import ExppellError

ENV_PREFIX = "EXPPELL_"


class ConfigError(ExppellError, ValueError):
    pass


@dataclass(frozen=True)
class Config:
    degree: int = 4
    height: int = 10
    samples: int = 4096
    tolerance: float = 1e-6
    pell_index_cap: int = 10_000
    budget: int = 1_000_000

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) <= 0 and f.name not in ("degree", "height"):
                raise ConfigError(f"{f.name} must be positive")
        if self.degree < 0 or self.height < 0:
            raise ConfigError("degree and height must be nonnegative")
        if not 0 < self.tolerance <= 1e-3:
            raise ConfigError(f"tolerance must lie in (0, 1e-3], got {self.tolerance}")


# accepted spellings in files and the environment
_ALIASES = {"d": "degree", "h": "height", "tol": "tolerance", "cap": "pell_index_cap"}


def _convert(key: str, raw: str):
    kind = {f.name: f.type for f in fields(Config)}[key]
    try:
        return float(raw) if kind in ("float", float) else int(raw)
    except ValueError:
        raise ConfigError(f"bad value for {key}: {raw!r}") from None


def _canonical(key: str) -> str:
    key = key.strip().lower().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in {f.name for f in fields(Config)}:
        raise ConfigError(f"unknown configuration key {key!r}")
    return key


def parse_config_text(text: str) -> dict:
    """key=value lines; '#' starts a comment."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value")
        key, value = line.split("=", 1)
        key = _canonical(key)
        out[key] = _convert(key, value.strip())
    return out


def from_env(environ: Mapping[str, str]) -> dict:
    out = {}
    for name, value in environ.items():
        if name.startswith(ENV_PREFIX):
            key = _canonical(name[len(ENV_PREFIX):])
            out[key] = _convert(key, value)
    return out


def load_config(path: str | None = None, flags: Mapping[str, object] | None = None,
                environ: Mapping[str, str] | None = None) -> Config:
    layers: dict = {}
    if path:
        try:
            with open(path, encoding="utf-8") as fh:
                layers.update(parse_config_text(fh.read()))
        except OSError as e:
            raise ConfigError(f"cannot read config file: {e}") from None
    layers.update({k: v for k, v in (flags or {}).items() if v is not None})
    layers.update(from_env(os.environ if environ is None else environ))
    return replace(Config(), **layers)

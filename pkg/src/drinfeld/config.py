"""Run configuration: flat key = value text files.

Values are JSON fragments (numbers, lists, nested lists); everything else
is taken as a bare string.  '#' starts a comment.  Example:

    p = 3
    e = 1
    phi = [[1]]          # a_1..a_r, ascending code lists: the Carlitz module
    base = [1]
    deg_min = 1
    deg_max = 4
    seed = 42
    format = jsonl
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field as dc_field, fields as dc_fields

from .dmodule import DrinfeldModule
from .errors import ConfigError, UnsupportedFieldError
from .field import field as make_field
from .poly import Poly

_KNOWN_KEYS = {
    "p", "e", "field_modulus", "phi", "base", "deg_min", "deg_max",
    "seed", "out", "format",
}


@dataclass
class RunConfig:
    p: int = 3
    e: int = 1
    field_modulus: list | None = None
    phi: list = dc_field(default_factory=lambda: [[1]])
    base: list = dc_field(default_factory=lambda: [1])
    deg_min: int = 1
    deg_max: int = 1
    seed: int = 0
    out: str | None = None
    format: str = "jsonl"

    def validate(self):
        for name in ("p", "e", "deg_min", "deg_max", "seed"):
            if not isinstance(getattr(self, name), int):
                raise ConfigError(f"field '{name}': expected an integer")
        if self.format not in ("jsonl", "csv"):
            raise ConfigError(f"field 'format': {self.format!r} is not jsonl or csv")
        if not (isinstance(self.phi, list) and self.phi
                and all(isinstance(c, list) for c in self.phi)):
            raise ConfigError("field 'phi': expected a non-empty list of code lists")
        if not isinstance(self.base, list):
            raise ConfigError("field 'base': expected a code list")
        if self.field_modulus is not None and not isinstance(self.field_modulus, list):
            raise ConfigError("field 'field_modulus': expected a code list")
        return self


def parse_config_text(text: str, path: str = "<config>") -> RunConfig:
    cfg = RunConfig()
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key '{key}'")
        if key in seen:
            raise ConfigError(f"{path}:{lineno}: duplicate key '{key}'")
        seen.add(key)
        try:
            parsed = json.loads(value)
        except json.JSONDecodeError:
            parsed = value
        setattr(cfg, key, parsed)
    return cfg.validate()


def load_config(path: str) -> RunConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config_text(text, path)


def config_hash(cfg: RunConfig) -> str:
    """Stable 12-hex digest of the run-defining fields (not out/format)."""
    h = hashlib.sha256()
    for f in dc_fields(RunConfig):
        if f.name in ("out", "format"):
            continue
        h.update(f.name.encode())
        h.update(b"=")
        h.update(json.dumps(getattr(cfg, f.name), sort_keys=True).encode())
        h.update(b"\n")
    return h.hexdigest()[:12]


def build_objects(cfg: RunConfig, backend: str | None = None):
    """(field, module, base polynomial) from a validated config."""
    try:
        F = make_field(cfg.p, cfg.e,
                       tuple(cfg.field_modulus) if cfg.field_modulus else None,
                       backend)
    except UnsupportedFieldError as exc:
        raise ConfigError(f"field 'p'/'e': {exc}") from exc
    try:
        phi = DrinfeldModule(F, [Poly(F, c) for c in cfg.phi])
    except ValueError as exc:
        raise ConfigError(f"field 'phi': {exc}") from exc
    try:
        base = Poly(F, cfg.base)
    except ValueError as exc:
        raise ConfigError(f"field 'base': {exc}") from exc
    return F, phi, base

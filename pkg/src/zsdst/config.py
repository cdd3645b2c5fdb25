"""Run configuration read from one INI file.

Paths are resolved against the directory of the config file, except ``output``,
which is resolved against the working directory.
"""
from __future__ import annotations

import configparser
from dataclasses import dataclass, field, fields
from pathlib import Path

from . import resources
from .backend import FAULT, REMOTE, REPLAY, BackendConfig
from .evaluation import PER_DOMAIN_PROTOCOLS, RESTRICT_FILTER


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    schema: Path
    requestables: Path
    corpus: tuple[Path, ...]
    variants: Path
    normalization: Path
    emptiness: Path
    referents: Path
    references: Path | None
    output: Path
    backend_kind: str = REPLAY
    store: tuple[Path, ...] = ()
    fault_script: Path | None = None
    backend: BackendConfig = field(default_factory=BackendConfig)
    parallelism: int = 1
    per_domain_protocol: str = RESTRICT_FILTER

    def check_files(self) -> None:
        needed = [self.schema, self.requestables, self.variants, self.normalization, self.emptiness,
                  self.referents, *self.corpus]
        if self.backend_kind == REPLAY:
            needed += list(self.store)
        if self.backend_kind == FAULT and self.fault_script is not None:
            needed.append(self.fault_script)
        missing = [str(p) for p in needed if not p.is_file()]
        if missing:
            raise ConfigError("missing input files: " + ", ".join(missing))


def _paths(value: str, base: Path) -> tuple[Path, ...]:
    return tuple(base / p.strip() for p in value.split(",") if p.strip())


def load_config(path=None, output: str | None = None) -> RunConfig:
    path = Path(path or resources.DEFAULT_CONFIG)
    if not path.is_file():
        raise ConfigError(f"config file not found: {path}")
    parser = configparser.ConfigParser()
    try:
        parser.read(path, encoding="utf-8")
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from exc
    base = path.parent

    try:
        p = parser["paths"]
        b = parser["backend"] if parser.has_section("backend") else {}
        r = parser["run"] if parser.has_section("run") else {}
        kind = b.get("kind", REPLAY).strip()
        if kind not in (REMOTE, REPLAY, FAULT):
            raise ConfigError(f"unknown backend kind {kind!r}")
        casts = {"int": int, "float": float}
        backend_fields = {f.name: casts.get(f.type, str)(b[f.name].strip())
                          for f in fields(BackendConfig) if f.name in b}
        protocol = r.get("per_domain_protocol", RESTRICT_FILTER)
        if protocol not in PER_DOMAIN_PROTOCOLS:
            raise ConfigError(f"unknown per-domain protocol {protocol!r}")
        references = p.get("references", "").strip()
        cfg = RunConfig(
            schema=base / p["schema"],
            requestables=base / p["requestables"],
            corpus=_paths(p["corpus"], base),
            variants=base / p["variants"],
            normalization=base / p["normalization"],
            emptiness=base / p["emptiness"],
            referents=base / p["referents"],
            references=base / references if references else None,
            output=Path(output or p.get("output", "zsdst-output")),
            backend_kind=kind,
            store=_paths(b.get("store", ""), base),
            fault_script=base / b["fault_script"] if b.get("fault_script", "").strip() else None,
            backend=BackendConfig(**backend_fields),
            parallelism=int(r.get("parallelism", "1")),
            per_domain_protocol=protocol,
        )
    except KeyError as exc:
        raise ConfigError(f"config {path} lacks required key {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(f"bad value in config {path}: {exc}") from exc
    if cfg.parallelism < 1:
        raise ConfigError("parallelism must be >= 1")
    return cfg

"""Line-oriented key/value analysis configuration.

Example::

    component=main
    architecture=amd64
    seed=ubuntu-minimal
    meta_packages=ubuntu-minimal,ubuntu-standard
    rules=manual_rules.tsv
    upstream=upstream_releases.csv
    release.22.04.codename=jammy
    release.22.04.mirror=http://archive.ubuntu.com/ubuntu
    release.22.04.file=fixtures/packages-22.04-main-amd64.gz
    release.22.04.snapshot_date=2022-04-21

Relative paths are resolved against the directory containing the config
file.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass, field
from pathlib import Path


class ConfigError(ValueError):
    pass


@dataclass
class ReleaseConfig:
    release_id: str
    codename: str | None = None
    mirror: str | None = None
    file: Path | None = None
    snapshot_date: dt.date | None = None


@dataclass
class AnalysisConfig:
    config_dir: Path
    component: str = "main"
    architecture: str = "amd64"
    seed: str = "ubuntu-minimal"
    meta_packages: set[str] = field(default_factory=lambda: {"ubuntu-minimal", "ubuntu-standard"})
    rules_path: Path | None = None
    upstream_path: Path | None = None
    releases: dict[str, ReleaseConfig] = field(default_factory=dict)

    def release(self, release_id: str) -> ReleaseConfig:
        try:
            return self.releases[release_id]
        except KeyError:
            raise ConfigError(f"release {release_id!r} not configured") from None


def load_config(path: str | Path) -> AnalysisConfig:
    path = Path(path)
    cfg = AnalysisConfig(config_dir=path.parent)

    def resolve(value: str) -> Path:
        p = Path(value)
        return p if p.is_absolute() else cfg.config_dir / p

    for lineno, line in enumerate(path.read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected key=value")
        key, _, value = line.partition("=")
        key = key.strip()
        value = value.strip()
        if key == "component":
            cfg.component = value
        elif key == "architecture":
            cfg.architecture = value
        elif key == "seed":
            cfg.seed = value
        elif key == "meta_packages":
            cfg.meta_packages = {p.strip() for p in value.split(",") if p.strip()}
        elif key == "rules":
            cfg.rules_path = resolve(value)
        elif key == "upstream":
            cfg.upstream_path = resolve(value)
        elif key.startswith("release."):
            parts = key.split(".")
            if len(parts) < 3:
                raise ConfigError(f"{path}:{lineno}: malformed release key {key!r}")
            release_id = ".".join(parts[1:-1])
            attr = parts[-1]
            rel = cfg.releases.setdefault(release_id, ReleaseConfig(release_id))
            if attr == "codename":
                rel.codename = value
            elif attr == "mirror":
                rel.mirror = value
            elif attr == "file":
                rel.file = resolve(value)
            elif attr == "snapshot_date":
                try:
                    rel.snapshot_date = dt.date.fromisoformat(value)
                except ValueError:
                    raise ConfigError(f"{path}:{lineno}: bad date {value!r}") from None
            else:
                raise ConfigError(f"{path}:{lineno}: unknown release attribute {attr!r}")
        else:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
    return cfg

"""Libyears freshness metrics.

Two views of how far a packaged version lags its latest upstream
release: a weighted version-number delta
(0.7 * major + 0.2 * minor + 0.1 * patch, applied to the field
differences) and a calendar-day distance between the upstream release
date and the snapshot date. The curated upstream dataset is consumed
from a CSV; nothing here scrapes forges.
"""

from __future__ import annotations

import csv
import datetime as dt
import logging
from dataclasses import dataclass, field
from pathlib import Path

from .classifier import SemVersion, VersionClass

log = logging.getLogger(__name__)

MAJOR_WEIGHT = 0.7
MINOR_WEIGHT = 0.2
PATCH_WEIGHT = 0.1

# Day totals sum the absolute distance between the upstream release date
# and the snapshot date of the analyzed release.
DAY_DELTA_CONVENTION = "sum of abs(upstream_date - snapshot_date) per package"


class UpstreamDatasetError(ValueError):
    """Raised for malformed upstream dataset files."""


@dataclass(frozen=True)
class UpstreamRelease:
    package: str
    major: int
    minor: int
    patch: int
    release_date: dt.date


@dataclass
class FreshnessReport:
    release_id: str
    snapshot_date: dt.date
    libyears_version_delta: float = 0.0
    libyears_days: int = 0
    # (name, version-delta contribution, day contribution)
    per_package: list[tuple[str, float, int]] = field(default_factory=list)
    requested: int = 0
    evaluated: int = 0
    day_convention: str = DAY_DELTA_CONVENTION

    @property
    def coverage(self) -> float:
        return self.evaluated / self.requested if self.requested else 0.0

    def to_dict(self) -> dict:
        return {
            "release": self.release_id,
            "snapshot_date": self.snapshot_date.isoformat(),
            "libyears_version_delta": self.libyears_version_delta,
            "libyears_days": self.libyears_days,
            "requested": self.requested,
            "evaluated": self.evaluated,
            "coverage": self.coverage,
            "day_convention": self.day_convention,
            "negative_contributions": sorted(
                name for name, vd, _ in self.per_package if vd < 0
            ),
            "per_package": [
                {"package": name, "ver_delta": vd, "day_delta": days}
                for name, vd, days in self.per_package
            ],
        }


def _parse_date(text: str) -> dt.date:
    """Accept ISO ``YYYY-MM-DD`` and ``M/D/YY`` (two-digit years resolve
    to 2000-2099)."""
    text = text.strip()
    try:
        return dt.date.fromisoformat(text)
    except ValueError:
        pass
    parts = text.split("/")
    if len(parts) == 3:
        try:
            month, day, year = (int(p) for p in parts)
        except ValueError:
            raise UpstreamDatasetError(f"unparseable date: {text!r}") from None
        if year < 100:
            year += 2000
        return dt.date(year, month, day)
    raise UpstreamDatasetError(f"unparseable date: {text!r}")


EXPECTED_HEADER = ["package", "class", "major", "minor", "patch", "upstream_date"]


def load_upstream_dataset(path: str | Path) -> dict[str, UpstreamRelease]:
    """Load the curated latest-upstream CSV.

    Header ``package,class,major,minor,patch,upstream_date``; duplicate
    package rows are an error; malformed rows report their line number.
    """
    releases: dict[str, UpstreamRelease] = {}
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != EXPECTED_HEADER:
            raise UpstreamDatasetError(f"{path}: unexpected header {header!r}")
        for lineno, row in enumerate(reader, 2):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 6:
                raise UpstreamDatasetError(f"{path}:{lineno}: expected 6 columns")
            package, _klass, major, minor, patch, date_text = row
            if package in releases:
                raise UpstreamDatasetError(f"{path}:{lineno}: duplicate package {package}")
            try:
                rel = UpstreamRelease(
                    package, int(major), int(minor), int(patch), _parse_date(date_text)
                )
            except (ValueError, UpstreamDatasetError) as e:
                raise UpstreamDatasetError(f"{path}:{lineno}: {e}") from None
            releases[package] = rel
    return releases


def version_delta_libyear(packaged: SemVersion, upstream: UpstreamRelease) -> float:
    """Weighted version-number delta, signed and not clamped."""
    if packaged.version_class is VersionClass.UNKNOWN:
        raise ValueError(f"cannot compute libyears for Unknown version {packaged.raw!r}")
    return (
        MAJOR_WEIGHT * (upstream.major - packaged.major)
        + MINOR_WEIGHT * (upstream.minor - packaged.minor)
        + PATCH_WEIGHT * (upstream.patch - packaged.patch)
    )


def date_delta_days(package_snapshot_date: dt.date, upstream_date: dt.date) -> int:
    """Signed day difference, upstream minus snapshot."""
    return (upstream_date - package_snapshot_date).days


def aggregate_freshness(
    packages: set[str],
    packaged: dict[str, SemVersion],
    upstream: dict[str, UpstreamRelease],
    release_id: str,
    snapshot_date: dt.date,
) -> FreshnessReport:
    """Sum per-package contributions over a package set.

    Packages without upstream coverage (or with Unknown packaged
    versions) are skipped and reflected in the coverage fraction.
    Summation runs in sorted name order so totals are bit-stable.
    """
    report = FreshnessReport(release_id, snapshot_date, requested=len(packages))
    total_delta = 0.0
    total_days = 0
    for name in sorted(packages):
        rel = upstream.get(name)
        sem = packaged.get(name)
        if rel is None or sem is None:
            continue
        if sem.version_class is VersionClass.UNKNOWN:
            continue
        vd = version_delta_libyear(sem, rel)
        days = abs(date_delta_days(snapshot_date, rel.release_date))
        report.per_package.append((name, vd, days))
        total_delta += vd
        total_days += days
        report.evaluated += 1
    report.libyears_version_delta = total_delta
    report.libyears_days = total_days
    if report.evaluated == 0:
        log.warning("freshness: no evaluable packages for release %s", release_id)
    return report

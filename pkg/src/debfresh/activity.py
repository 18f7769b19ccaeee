"""Cross-release development-activity classification (PVAC).

Compares the extracted version fields of the same package in two
distribution releases. Versions with differing epochs are not
field-comparable and are excluded rather than mislabeled; packaging
revision changes are deliberately invisible here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .classifier import SemVersion, VersionClass


class ActivityLevel(enum.Enum):
    MAJOR_CHANGE = "MajorChange"
    MODERATELY_ACTIVE = "ModeratelyActive"
    LIGHTLY_ACTIVE = "LightlyActive"
    SEDENTARY = "Sedentary"


class ExclusionReason(enum.Enum):
    EPOCH_MISMATCH = "epoch-mismatch"
    UNKNOWN_CLASS = "unknown-class"
    MISSING_IN_RELEASE = "missing-in-release"


@dataclass(frozen=True)
class Excluded:
    reason: ExclusionReason

    @property
    def label(self) -> str:
        return f"Excluded({self.reason.value})"


def pvac(a: SemVersion, b: SemVersion) -> ActivityLevel | Excluded:
    """Classify per-package activity between two releases.

    Callers must pre-filter Unknown-class versions; passing one is a
    contract violation. All comparisons are inequality tests, so the
    result is symmetric in its arguments.
    """
    if a.version_class is VersionClass.UNKNOWN or b.version_class is VersionClass.UNKNOWN:
        raise ValueError("pvac requires classified versions; got Unknown input")
    if a.epoch != b.epoch:
        return Excluded(ExclusionReason.EPOCH_MISMATCH)
    if a.major != b.major:
        return ActivityLevel.MAJOR_CHANGE
    if a.minor != b.minor:
        return ActivityLevel.MODERATELY_ACTIVE
    if a.patch != b.patch:
        return ActivityLevel.LIGHTLY_ACTIVE
    return ActivityLevel.SEDENTARY


@dataclass
class ActivityReport:
    release_pair: tuple[str, str]
    per_package: dict[str, ActivityLevel | Excluded] = field(default_factory=dict)

    @property
    def counts(self) -> dict[ActivityLevel, int]:
        out = {level: 0 for level in ActivityLevel}
        for outcome in self.per_package.values():
            if isinstance(outcome, ActivityLevel):
                out[outcome] += 1
        return out

    @property
    def excluded_counts(self) -> dict[ExclusionReason, int]:
        out = {reason: 0 for reason in ExclusionReason}
        for outcome in self.per_package.values():
            if isinstance(outcome, Excluded):
                out[outcome.reason] += 1
        return out

    @property
    def evaluable(self) -> int:
        return sum(self.counts.values())

    def summary(self) -> dict:
        return {
            "release_pair": list(self.release_pair),
            "evaluable": self.evaluable,
            "counts": {level.value: n for level, n in self.counts.items()},
            "excluded": {reason.value: n for reason, n in self.excluded_counts.items()},
        }


def activity_report(
    common: set[str],
    versions_a: dict[str, SemVersion],
    versions_b: dict[str, SemVersion],
    release_pair: tuple[str, str] = ("a", "b"),
    diagnostics: list[str] | None = None,
) -> ActivityReport:
    """Run PVAC over a common package set.

    Packages Unknown in either release are excluded (unknown-class) and
    reported separately; packages missing from either version map are
    excluded (missing-in-release) with a diagnostic.
    """
    report = ActivityReport(release_pair)
    for name in sorted(common):
        va = versions_a.get(name)
        vb = versions_b.get(name)
        if va is None or vb is None:
            msg = f"{name}: in common set but missing from a release version map"
            if diagnostics is not None:
                diagnostics.append(msg)
            report.per_package[name] = Excluded(ExclusionReason.MISSING_IN_RELEASE)
            continue
        if (
            va.version_class is VersionClass.UNKNOWN
            or vb.version_class is VersionClass.UNKNOWN
        ):
            report.per_package[name] = Excluded(ExclusionReason.UNKNOWN_CLASS)
            continue
        report.per_package[name] = pvac(va, vb)
    return report

"""Version string classification.

Every raw version string is assigned exactly one class by a fixed-order
cascade:

  1. Semantic      - matches the official semantic-versioning pattern
  2. ExtSemantic   - ``<epoch>:`` prefix followed by a Semantic remainder
  3. SemiSemantic  - Semantic relaxed: leading zeros, optional patch
                     (defaults to 0), ``p``/``pl`` patch separators,
                     a tolerated dotted-word or ``+``/``~`` suffix, and a
                     hyphen-prefixed packaging revision
  4. DistNative    - the SemiSemantic core with the packaging tag appended
                     directly (no hyphen anywhere in the string)
  5. ManualMap     - first matching hand-written rule, by priority
  6. Unknown       - sink for strings with no recognizable major field

Numeric fields are extracted through named groups; missing minor/patch
and epoch default to 0, and leading zeros parse as plain decimals.
"""

from __future__ import annotations

import enum
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .repo_ingest import ReleaseSnapshot


class VersionClass(enum.Enum):
    SEMANTIC = "Semantic"
    EXT_SEMANTIC = "ExtSemantic"
    SEMI_SEMANTIC = "SemiSemantic"
    DIST_NATIVE = "DistNative"
    MANUAL_MAP = "ManualMap"
    UNKNOWN = "Unknown"


class UnknownVersionError(ValueError):
    """Numeric fields of an Unknown-class version were consumed."""


# Official semantic-versioning pattern (named groups), anchored.
_SEMVER_BODY = (
    r"(?P<major>0|[1-9]\d*)\.(?P<minor>0|[1-9]\d*)\.(?P<patch>0|[1-9]\d*)"
    r"(?:-(?P<prerelease>(?:0|[1-9]\d*|\d*[a-zA-Z-][0-9a-zA-Z-]*)"
    r"(?:\.(?:0|[1-9]\d*|\d*[a-zA-Z-][0-9a-zA-Z-]*))*))?"
    r"(?:\+(?P<buildmetadata>[0-9a-zA-Z-]+(?:\.[0-9a-zA-Z-]+)*))?"
)
SEMANTIC_RE = re.compile(rf"^{_SEMVER_BODY}$")
EXT_SEMANTIC_RE = re.compile(rf"^(?P<epoch>\d+):{_SEMVER_BODY}$")

# Relaxed core shared by SemiSemantic and DistNative. The dotted suffix
# must start with a letter so that directly-appended ``.NN`` patch fields
# are not swallowed (e.g. ``1.5.51ubuntu2`` must *not* match here).
_SEMI_CORE = (
    r"(?:(?P<epoch>\d+):)?"
    r"(?P<major>\d+)\.(?P<minor>\d+)"
    r"(?:(?:\.|pl|p)(?P<patch>\d+))?"
    r"(?P<suffix>(?:\.[A-Za-z][0-9A-Za-z.+~]*|[+~][0-9A-Za-z.+~]*)?)"
)
SEMI_SEMANTIC_RE = re.compile(rf"^{_SEMI_CORE}(?:-(?P<revision>[0-9A-Za-z.+~-]+))?$")
DIST_NATIVE_RE = re.compile(
    r"^(?:(?P<epoch>\d+):)?"
    r"(?P<major>\d+)\.(?P<minor>\d+)"
    r"(?:(?:\.|pl|p)(?P<patch>\d+))?"
    r"(?P<tag>[0-9A-Za-z.+~]*)$"
)


@dataclass(frozen=True)
class ManualRule:
    """A hand-written classification rule.

    Matches when the package name matches ``name_pattern`` and the raw
    version matches ``version_pattern`` (both full matches). The version
    pattern must capture at least a ``major`` group.
    """

    name_pattern: str
    version_pattern: str
    priority: int

    def __post_init__(self):
        object.__setattr__(self, "_name_re", re.compile(self.name_pattern))
        object.__setattr__(self, "_version_re", re.compile(self.version_pattern))
        if "major" not in self._version_re.groupindex:
            raise ValueError(
                f"manual rule {self.version_pattern!r} captures no major group"
            )

    def match(self, package: str, raw: str) -> re.Match | None:
        if not self._name_re.fullmatch(package):
            return None
        return self._version_re.fullmatch(raw)


def load_manual_rules(path: str | Path) -> list[ManualRule]:
    """Load tab-separated rules (``name_pattern TAB version_pattern TAB
    priority``), ``#`` comments and blank lines ignored. Rules are
    returned sorted by priority, file order breaking ties."""
    rules = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ValueError(f"{path}:{lineno}: expected 3 tab-separated fields")
        name_pat, version_pat, prio = parts
        rules.append(ManualRule(name_pat, version_pat, int(prio)))
    rules.sort(key=lambda r: r.priority)
    return rules


class SemVersion:
    """Extracted numeric fields plus the class that produced them.

    Field access is guarded: consuming major/minor/patch of an Unknown
    version raises UnknownVersionError.
    """

    __slots__ = ("raw", "version_class", "epoch", "_major", "_minor", "_patch")

    def __init__(self, raw, version_class, epoch=0, major=None, minor=None, patch=None):
        self.raw = raw
        self.version_class = version_class
        self.epoch = epoch
        self._major = major
        self._minor = minor
        self._patch = patch

    def _guard(self, value):
        if self.version_class is VersionClass.UNKNOWN:
            raise UnknownVersionError(
                f"version {self.raw!r} is Unknown; numeric fields are meaningless"
            )
        return value

    @property
    def major(self) -> int:
        return self._guard(self._major)

    @property
    def minor(self) -> int:
        return self._guard(self._minor)

    @property
    def patch(self) -> int:
        return self._guard(self._patch)

    def fields(self) -> tuple[int, int, int]:
        return (self.major, self.minor, self.patch)

    def __repr__(self) -> str:
        if self.version_class is VersionClass.UNKNOWN:
            return f"SemVersion({self.raw!r}, Unknown)"
        return (
            f"SemVersion({self.raw!r}, {self.version_class.value},"
            f" {self.epoch}:{self._major}.{self._minor}.{self._patch})"
        )


def _from_match(raw: str, klass: VersionClass, m: re.Match) -> SemVersion:
    groups = m.groupdict()

    def num(name):
        v = groups.get(name)
        return int(v) if v is not None else 0

    return SemVersion(raw, klass, num("epoch"), num("major"), num("minor"), num("patch"))


def classify(raw: str, rules: list[ManualRule], package: str = "") -> SemVersion:
    """Run the classification cascade on one raw version string."""
    m = SEMANTIC_RE.match(raw)
    if m:
        return _from_match(raw, VersionClass.SEMANTIC, m)
    m = EXT_SEMANTIC_RE.match(raw)
    if m:
        return _from_match(raw, VersionClass.EXT_SEMANTIC, m)
    m = SEMI_SEMANTIC_RE.match(raw)
    if m:
        return _from_match(raw, VersionClass.SEMI_SEMANTIC, m)
    m = DIST_NATIVE_RE.match(raw)
    if m:
        return _from_match(raw, VersionClass.DIST_NATIVE, m)
    for rule in rules:
        rm = rule.match(package, raw)
        if rm:
            return _from_match(raw, VersionClass.MANUAL_MAP, rm)
    return SemVersion(raw, VersionClass.UNKNOWN)


_SIGNATURE_RE = re.compile(r"[0-9]+|[A-Za-z]+")


def basic_signature(raw: str) -> str:
    """Abstract a version string to its format signature.

    Maximal digit runs become ``N``, maximal letter runs ``A``;
    delimiters are preserved. Used for the format-diversity census.
    """
    return _SIGNATURE_RE.sub(lambda m: "N" if m.group(0)[0].isdigit() else "A", raw)


def census(
    snapshot: ReleaseSnapshot, rules: list[ManualRule]
) -> tuple[Counter, Counter, dict[str, SemVersion]]:
    """Classify every real package in a snapshot.

    Returns (class counts, signature counts, per-package SemVersion).
    Counts cover all records, meta packages included; virtual names are
    not records and never enter the census.
    """
    class_counts: Counter = Counter({klass: 0 for klass in VersionClass})
    signatures: Counter = Counter()
    per_package: dict[str, SemVersion] = {}
    for name in sorted(snapshot.records):
        rec = snapshot.records[name]
        sem = classify(rec.raw_version, rules, package=name)
        per_package[name] = sem
        class_counts[sem.version_class] += 1
        signatures[basic_signature(rec.raw_version)] += 1
    return class_counts, signatures, per_package


_DATE_LIKE_RE = re.compile(r"^(19|20)\d{2}[._]\d{1,2}[._]\d{1,2}")


def date_like_warning(raw: str) -> bool:
    """Heuristic flag for YYYY.MM.DD-style versions that classify as
    semantic but probably encode a date."""
    return bool(_DATE_LIKE_RE.match(raw))

"""Debian version strings: decomposition and policy ordering.

A full version has the shape ``[epoch:]upstream_version[-debian_revision]``.
The comparison below follows dpkg's verrevcmp: alternating non-digit and
digit segments, with ``~`` sorting before everything (including the end of
a segment) and letters sorting before non-letters.
"""

from __future__ import annotations

from dataclasses import dataclass


class VersionFormatError(ValueError):
    """Raised for version strings that violate the Debian grammar."""


@dataclass(frozen=True)
class DebVersion:
    epoch: int
    upstream_version: str
    debian_revision: str | None = None

    def __str__(self) -> str:
        s = self.upstream_version
        if self.epoch:
            s = f"{self.epoch}:{s}"
        if self.debian_revision is not None:
            s = f"{s}-{self.debian_revision}"
        return s


def split_deb_version(raw: str) -> DebVersion:
    """Split a raw Debian version into epoch, upstream and revision.

    The epoch is everything before the first colon; the revision is
    everything after the *last* hyphen (upstream versions may contain
    hyphens themselves).
    """
    if not raw:
        raise VersionFormatError("empty version string")
    epoch = 0
    rest = raw
    if ":" in raw:
        head, rest = raw.split(":", 1)
        if not head.isdigit():
            raise VersionFormatError(f"non-numeric epoch in {raw!r}")
        epoch = int(head)
    revision = None
    if "-" in rest:
        rest, revision = rest.rsplit("-", 1)
    if not rest:
        raise VersionFormatError(f"empty upstream version in {raw!r}")
    return DebVersion(epoch, rest, revision)


def _char_order(c: str) -> int:
    # ~ sorts before everything, even the end of a part (which is 0).
    if c == "~":
        return -1
    if c.isalpha():
        return ord(c)
    return ord(c) + 256


def _verrevcmp(a: str, b: str) -> int:
    i = j = 0
    la, lb = len(a), len(b)
    while i < la or j < lb:
        while (i < la and not a[i].isdigit()) or (j < lb and not b[j].isdigit()):
            ac = _char_order(a[i]) if i < la else 0
            bc = _char_order(b[j]) if j < lb else 0
            if ac != bc:
                return -1 if ac < bc else 1
            i += 1
            j += 1
        while i < la and a[i] == "0":
            i += 1
        while j < lb and b[j] == "0":
            j += 1
        first_diff = 0
        while i < la and j < lb and a[i].isdigit() and b[j].isdigit():
            if first_diff == 0 and a[i] != b[j]:
                first_diff = -1 if a[i] < b[j] else 1
            i += 1
            j += 1
        if i < la and a[i].isdigit():
            return 1
        if j < lb and b[j].isdigit():
            return -1
        if first_diff:
            return first_diff
    return 0


def compare_deb_versions(a: DebVersion, b: DebVersion) -> int:
    """Total order on parsed Debian versions: -1, 0 or 1.

    Epoch dominates; upstream version and revision are compared with the
    segment-alternation algorithm. A missing revision compares as the
    empty string.
    """
    if a.epoch != b.epoch:
        return -1 if a.epoch < b.epoch else 1
    c = _verrevcmp(a.upstream_version, b.upstream_version)
    if c:
        return c
    return _verrevcmp(a.debian_revision or "", b.debian_revision or "")


def compare_raw_versions(a: str, b: str) -> int:
    """Convenience wrapper comparing two raw version strings."""
    return compare_deb_versions(split_deb_version(a), split_deb_version(b))

"""Ingestion of Debian ``Packages`` indices.

Parses blank-line separated control stanzas, builds immutable release
snapshots, and walks the dependency graph. Virtual packages (names that
only ever appear as a ``Provides`` target or dependency without a stanza
of their own) are tracked separately and never enter the record map.
"""

from __future__ import annotations

import gzip
import hashlib
import logging
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path

from .version_core import VersionFormatError, compare_raw_versions

log = logging.getLogger(__name__)

_NAME_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9+.\-]*$")


class TransportError(Exception):
    """Raised when an index cannot be retrieved."""

    def __init__(self, url: str, detail: str):
        super().__init__(f"failed to fetch {url}: {detail}")
        self.url = url
        self.detail = detail


@dataclass(frozen=True)
class DependencyClause:
    """One comma-separated element of a Depends field.

    A clause is satisfied by any one of its alternatives; each alternative
    is a (package name, raw version constraint or None) pair. Constraints
    are carried verbatim and never evaluated.
    """

    alternatives: tuple[tuple[str, str | None], ...]


@dataclass
class PackageRecord:
    name: str
    raw_version: str
    depends: list[DependencyClause] = field(default_factory=list)
    pre_depends: list[DependencyClause] = field(default_factory=list)
    provides: list[str] = field(default_factory=list)
    source: str | None = None
    homepage: str | None = None
    is_meta: bool = False


@dataclass
class ReleaseSnapshot:
    release_id: str
    records: dict[str, PackageRecord]
    virtual_names: set[str]


def fetch_packages_index(
    release_id: str,
    mirror_url: str,
    component: str = "main",
    architecture: str = "amd64",
    codename: str | None = None,
    local_file: str | Path | None = None,
) -> bytes:
    """Return the raw (possibly gzip-compressed) index bytes.

    A configured local file path takes precedence over the mirror. The
    mirror layout is ``<mirror>/dists/<codename>/<component>/binary-<arch>/Packages.gz``.
    """
    if local_file is not None:
        path = Path(local_file)
        try:
            return path.read_bytes()
        except OSError as e:
            raise TransportError(str(path), str(e)) from e
    url = (
        f"{mirror_url.rstrip('/')}/dists/{codename or release_id}/"
        f"{component}/binary-{architecture}/Packages.gz"
    )
    try:
        with urllib.request.urlopen(url) as resp:
            if getattr(resp, "status", 200) >= 400:
                raise TransportError(url, f"HTTP {resp.status}")
            return resp.read()
    except urllib.error.URLError as e:
        raise TransportError(url, str(e)) from e


def decompress_index(data: bytes) -> str:
    """Decode index bytes, transparently handling gzip."""
    if data[:2] == b"\x1f\x8b":
        data = gzip.decompress(data)
    return data.decode("utf-8", errors="replace")


def content_hash(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


_QUALIFIER_RE = re.compile(r"(\[[^\]]*\]|<[^>]*>)")


def parse_depends(field_value: str, diagnostics: list[str] | None = None) -> list[DependencyClause]:
    """Parse a Depends/Pre-Depends value into clauses.

    Grammar: comma-separated clauses, ``|``-separated alternatives,
    parenthesized version constraints, architecture/profile qualifiers
    in ``[...]`` / ``<...>`` stripped. Unparseable tokens are reported as
    diagnostics and skipped; the rest of the field is still parsed.
    """
    clauses: list[DependencyClause] = []
    for raw_clause in field_value.split(","):
        raw_clause = raw_clause.strip()
        if not raw_clause:
            continue
        alts: list[tuple[str, str | None]] = []
        for alt in raw_clause.split("|"):
            alt = _QUALIFIER_RE.sub("", alt).strip()
            if not alt:
                continue
            constraint = None
            m = re.match(r"^([^\s(]+)\s*(?:\(([^)]*)\))?\s*$", alt)
            if not m or not _NAME_RE.match(m.group(1)):
                msg = f"unparseable dependency token: {alt!r}"
                log.warning(msg)
                if diagnostics is not None:
                    diagnostics.append(msg)
                continue
            name = m.group(1)
            if m.group(2) is not None:
                constraint = m.group(2).strip()
            alts.append((name, constraint))
        if alts:
            clauses.append(DependencyClause(tuple(alts)))
    return clauses


def _iter_stanzas(text: str):
    fields: list[tuple[str, str]] = []
    for line in text.splitlines():
        if not line.strip():
            if fields:
                yield fields
                fields = []
            continue
        if line[:1] in (" ", "\t"):
            if fields:
                name, value = fields[-1]
                fields[-1] = (name, value + "\n" + line[1:])
            continue
        if ":" in line:
            name, _, value = line.partition(":")
            fields.append((name.strip(), value.strip()))
    if fields:
        yield fields


def parse_stanzas(index_text: str, diagnostics: list[str] | None = None) -> list[PackageRecord]:
    """Parse a decompressed Packages index into records.

    Stanzas missing ``Package`` or ``Version`` are skipped with a
    diagnostic; unknown fields are ignored; continuation lines are folded
    into the preceding field value.
    """
    records: list[PackageRecord] = []
    for fields in _iter_stanzas(index_text):
        by_name: dict[str, str] = {}
        for name, value in fields:
            by_name.setdefault(name, value)
        pkg = by_name.get("Package")
        version = by_name.get("Version")
        if not pkg or not version:
            msg = f"stanza missing Package/Version (Package={pkg!r})"
            log.warning(msg)
            if diagnostics is not None:
                diagnostics.append(msg)
            continue
        provides = []
        if "Provides" in by_name:
            for clause in parse_depends(by_name["Provides"], diagnostics):
                provides.extend(name for name, _ in clause.alternatives)
        records.append(
            PackageRecord(
                name=pkg,
                raw_version=version,
                depends=parse_depends(by_name.get("Depends", ""), diagnostics),
                pre_depends=parse_depends(by_name.get("Pre-Depends", ""), diagnostics),
                provides=provides,
                source=by_name.get("Source"),
                homepage=by_name.get("Homepage"),
            )
        )
    return records


def build_snapshot(
    records: list[PackageRecord],
    release_id: str,
    meta_packages: set[str] | frozenset[str] = frozenset(),
    diagnostics: list[str] | None = None,
) -> ReleaseSnapshot:
    """Assemble a snapshot, resolving duplicates and virtual names.

    Duplicate stanzas for a name keep the greater Debian version. Virtual
    names are all names referenced in provides/depends that have no
    stanza of their own.
    """
    by_name: dict[str, PackageRecord] = {}
    for rec in records:
        prev = by_name.get(rec.name)
        if prev is not None:
            try:
                keep_new = compare_raw_versions(rec.raw_version, prev.raw_version) > 0
            except VersionFormatError:
                keep_new = False
            msg = (
                f"duplicate stanza for {rec.name}: "
                f"{prev.raw_version} vs {rec.raw_version}"
            )
            log.warning(msg)
            if diagnostics is not None:
                diagnostics.append(msg)
            if not keep_new:
                continue
        rec.is_meta = rec.name in meta_packages
        by_name[rec.name] = rec

    referenced: set[str] = set()
    for rec in by_name.values():
        referenced.update(rec.provides)
        for clause in rec.depends + rec.pre_depends:
            referenced.update(name for name, _ in clause.alternatives)
    virtual = {name for name in referenced if name not in by_name}
    return ReleaseSnapshot(release_id, by_name, virtual)


class UnknownSeedError(KeyError):
    def __init__(self, seed: str):
        super().__init__(seed)
        self.seed = seed

    def __str__(self) -> str:
        return f"unknown seed package: {self.seed}"


def dependency_closure(snapshot: ReleaseSnapshot, seed: str) -> set[str]:
    """Transitive dependency closure of ``seed`` over Depends/Pre-Depends.

    Every alternative of every clause is traversed. Virtual names expand
    to all providers and are excluded from the result, as is the seed
    itself.
    """
    if seed not in snapshot.records and seed not in snapshot.virtual_names:
        raise UnknownSeedError(seed)

    providers: dict[str, list[str]] = {}
    for rec in snapshot.records.values():
        for virt in rec.provides:
            providers.setdefault(virt, []).append(rec.name)

    visited: set[str] = set()
    stack = [seed]
    while stack:
        name = stack.pop()
        if name in visited:
            continue
        visited.add(name)
        rec = snapshot.records.get(name)
        if rec is None:
            # virtual or missing: expand to providers
            stack.extend(providers.get(name, []))
            continue
        for clause in rec.depends + rec.pre_depends:
            for dep, _constraint in clause.alternatives:
                if dep not in visited:
                    stack.append(dep)
    visited.discard(seed)
    return {name for name in visited if name in snapshot.records}


def common_real_packages(a: ReleaseSnapshot, b: ReleaseSnapshot) -> set[str]:
    """Names present as real, non-meta records in both snapshots."""
    common = set(a.records) & set(b.records)
    return {
        name
        for name in common
        if not a.records[name].is_meta and not b.records[name].is_meta
    }


def render_stanzas(records: list[PackageRecord]) -> str:
    """Render records back to index text (inverse of parse_stanzas for
    the fields this toolkit retains)."""
    chunks = []
    for rec in records:
        lines = [f"Package: {rec.name}", f"Version: {rec.raw_version}"]
        for label, clauses in (("Depends", rec.depends), ("Pre-Depends", rec.pre_depends)):
            if clauses:
                rendered = ", ".join(
                    " | ".join(
                        name + (f" ({constraint})" if constraint else "")
                        for name, constraint in clause.alternatives
                    )
                    for clause in clauses
                )
                lines.append(f"{label}: {rendered}")
        if rec.provides:
            lines.append("Provides: " + ", ".join(rec.provides))
        if rec.source:
            lines.append(f"Source: {rec.source}")
        if rec.homepage:
            lines.append(f"Homepage: {rec.homepage}")
        chunks.append("\n".join(lines))
    return "\n\n".join(chunks) + "\n"


def dump_snapshot_tsv(snapshot: ReleaseSnapshot) -> str:
    """Line-delimited ``name<TAB>raw_version<TAB>source<TAB>homepage`` dump."""
    lines = []
    for name in sorted(snapshot.records):
        rec = snapshot.records[name]
        lines.append(
            "\t".join([rec.name, rec.raw_version, rec.source or "", rec.homepage or ""])
        )
    return "\n".join(lines) + ("\n" if lines else "")

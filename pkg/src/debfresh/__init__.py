"""Freshness and staleness analysis for Debian-style package repositories."""

from .activity import ActivityLevel, Excluded, ExclusionReason, activity_report, pvac
from .classifier import (
    ManualRule,
    SemVersion,
    VersionClass,
    basic_signature,
    census,
    classify,
    load_manual_rules,
)
from .freshness import (
    UpstreamRelease,
    aggregate_freshness,
    date_delta_days,
    load_upstream_dataset,
    version_delta_libyear,
)
from .repo_ingest import (
    DependencyClause,
    PackageRecord,
    ReleaseSnapshot,
    build_snapshot,
    common_real_packages,
    dependency_closure,
    parse_depends,
    parse_stanzas,
)
from .version_core import DebVersion, compare_deb_versions, compare_raw_versions, split_deb_version

__version__ = "0.1.0"

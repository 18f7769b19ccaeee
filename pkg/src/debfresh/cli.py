"""Command-line orchestration.

Subcommands: ``classify``, ``pvac``, ``libyears``, ``closure``. All
output files use comma-separated values with a header row, UTF-8 and LF
line endings; emission orders are sorted and aggregate floats are
printed with two decimals, so identical inputs yield byte-identical
outputs.

Exit codes: 0 success, 1 I/O or parse failure, 2 usage/config error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import activity as activity_mod
from . import classifier as classifier_mod
from . import freshness as freshness_mod
from . import repo_ingest as ingest
from .config import AnalysisConfig, ConfigError, ReleaseConfig, load_config

log = logging.getLogger("debfresh")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _cache_paths(cache_dir: Path):
    cache_dir.mkdir(parents=True, exist_ok=True)
    return cache_dir, cache_dir / "urls.tsv"


def _cache_lookup(cache_dir: Path, url: str) -> bytes | None:
    _, index = _cache_paths(cache_dir)
    if not index.exists():
        return None
    for line in index.read_text().splitlines():
        cached_url, _, digest = line.partition("\t")
        if cached_url == url:
            blob = cache_dir / digest
            if blob.exists():
                return blob.read_bytes()
    return None


def _cache_store(cache_dir: Path, url: str, data: bytes) -> None:
    cache_dir, index = _cache_paths(cache_dir)
    digest = ingest.content_hash(data)
    blob = cache_dir / digest
    if not blob.exists():
        blob.write_bytes(data)
    line = f"{url}\t{digest}"
    existing = index.read_text().splitlines() if index.exists() else []
    if line not in existing:
        with open(index, "a") as fh:
            fh.write(line + "\n")


def _load_snapshot(cfg: AnalysisConfig, release_id: str, offline: bool, cache_dir: Path):
    rel: ReleaseConfig = cfg.release(release_id)
    if rel.file is not None:
        data = ingest.fetch_packages_index(release_id, "", local_file=rel.file)
    else:
        if rel.mirror is None:
            raise ConfigError(f"release {release_id!r} has neither file nor mirror")
        url = (
            f"{rel.mirror.rstrip('/')}/dists/{rel.codename or release_id}/"
            f"{cfg.component}/binary-{cfg.architecture}/Packages.gz"
        )
        if offline:
            data = _cache_lookup(cache_dir, url)
            if data is None:
                raise ingest.TransportError(url, "offline and not in cache")
        else:
            data = ingest.fetch_packages_index(
                release_id, rel.mirror, cfg.component, cfg.architecture, rel.codename
            )
            _cache_store(cache_dir, url, data)
    text = ingest.decompress_index(data)
    records = ingest.parse_stanzas(text)
    return ingest.build_snapshot(records, release_id, cfg.meta_packages)


def _load_rules(cfg: AnalysisConfig):
    if cfg.rules_path is None:
        return []
    return classifier_mod.load_manual_rules(cfg.rules_path)


def _write_csv(path: Path, header: list[str], rows: list[list]) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(str(cell) for cell in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _write_json(path: Path, payload: dict) -> None:
    path.write_text(
        json.dumps(payload, indent=2, sort_keys=True) + "\n",
        encoding="utf-8",
        newline="\n",
    )


def cmd_classify(cfg: AnalysisConfig, args) -> int:
    snapshot = _load_snapshot(cfg, args.release, args.offline, args.cache)
    rules = _load_rules(cfg)
    class_counts, signatures, per_package = classifier_mod.census(snapshot, rules)

    out = args.output
    out.mkdir(parents=True, exist_ok=True)
    class_rows = sorted(
        ((klass.value, n) for klass, n in class_counts.items()),
        key=lambda kv: (-kv[1], kv[0]),
    )
    _write_csv(out / "census_classes.csv", ["class", "count"], [list(r) for r in class_rows])
    sig_rows = sorted(signatures.items(), key=lambda kv: (-kv[1], kv[0]))
    _write_csv(out / "census_signatures.csv", ["signature", "count"], [list(r) for r in sig_rows])

    rows = []
    for name in sorted(per_package):
        sem = per_package[name]
        if sem.version_class is classifier_mod.VersionClass.UNKNOWN:
            rows.append([name, sem.raw, sem.version_class.value, "", "", "", ""])
        else:
            if classifier_mod.date_like_warning(sem.raw):
                log.warning("%s: version %r looks date-like; fields may mislead", name, sem.raw)
            rows.append(
                [name, sem.raw, sem.version_class.value, sem.epoch, sem.major, sem.minor, sem.patch]
            )
    _write_csv(
        out / "classified.csv",
        ["package", "raw_version", "class", "epoch", "major", "minor", "patch"],
        rows,
    )
    total = sum(class_counts.values())
    non_meta = sum(1 for r in snapshot.records.values() if not r.is_meta)
    print(f"classified {total} packages ({non_meta} excluding meta) in {args.release}")
    for klass, n in class_rows:
        print(f"  {klass}: {n}")
    return EXIT_OK


def cmd_pvac(cfg: AnalysisConfig, args) -> int:
    snap_a = _load_snapshot(cfg, args.release_a, args.offline, args.cache)
    snap_b = _load_snapshot(cfg, args.release_b, args.offline, args.cache)
    rules = _load_rules(cfg)
    common = ingest.common_real_packages(snap_a, snap_b)
    if args.seed:
        closure = ingest.dependency_closure(snap_b, args.seed)
        common &= closure
    _, _, versions_a = classifier_mod.census(snap_a, rules)
    _, _, versions_b = classifier_mod.census(snap_b, rules)
    report = activity_mod.activity_report(
        common, versions_a, versions_b, (args.release_a, args.release_b)
    )

    out = args.output
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for name in sorted(report.per_package):
        outcome = report.per_package[name]
        label = outcome.value if isinstance(outcome, activity_mod.ActivityLevel) else outcome.label
        va = snap_a.records[name].raw_version if name in snap_a.records else ""
        vb = snap_b.records[name].raw_version if name in snap_b.records else ""
        rows.append([name, va, vb, label])
    _write_csv(out / "activity.csv", ["package", "version_a", "version_b", "activity"], rows)
    _write_json(out / "activity_summary.json", report.summary())
    hist_rows = [[level.value, n] for level, n in report.counts.items()]
    _write_csv(out / "activity_hist.csv", ["activity", "count"], hist_rows)
    print(
        f"pvac {args.release_a} vs {args.release_b}: common={len(common)} "
        f"evaluable={report.evaluable}"
    )
    for level, n in report.counts.items():
        print(f"  {level.value}: {n}")
    return EXIT_OK


def cmd_libyears(cfg: AnalysisConfig, args) -> int:
    if cfg.upstream_path is None:
        raise ConfigError("no upstream dataset configured (key: upstream)")
    if not cfg.upstream_path.exists():
        print(f"upstream dataset not found: {cfg.upstream_path}", file=sys.stderr)
        return EXIT_FAILURE
    upstream = freshness_mod.load_upstream_dataset(cfg.upstream_path)
    snapshot = _load_snapshot(cfg, args.release, args.offline, args.cache)
    rel = cfg.release(args.release)
    if rel.snapshot_date is None:
        raise ConfigError(f"release {args.release!r} has no snapshot_date configured")
    rules = _load_rules(cfg)
    seed = args.seed or cfg.seed
    packages = ingest.dependency_closure(snapshot, seed)
    _, _, versions = classifier_mod.census(snapshot, rules)
    report = freshness_mod.aggregate_freshness(
        packages, versions, upstream, args.release, rel.snapshot_date
    )

    out = args.output
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "freshness.json", report.to_dict())
    _write_csv(
        out / "freshness.csv",
        ["package", "ver_delta", "day_delta"],
        [[name, repr(vd), days] for name, vd, days in report.per_package],
    )
    if report.evaluated == 0:
        print("warning: upstream dataset covers none of the requested packages", file=sys.stderr)
    print(f"{report.libyears_version_delta:.2f}")
    print(f"{report.libyears_days}")
    return EXIT_OK


def cmd_closure(cfg: AnalysisConfig, args) -> int:
    snapshot = _load_snapshot(cfg, args.release, args.offline, args.cache)
    seed = args.seed or cfg.seed
    try:
        names = ingest.dependency_closure(snapshot, seed)
    except ingest.UnknownSeedError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    out = args.output
    out.mkdir(parents=True, exist_ok=True)
    text = "\n".join(sorted(names)) + ("\n" if names else "")
    (out / "closure.txt").write_text(text, encoding="utf-8", newline="\n")
    sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, type=Path, help="analysis config file")
    common.add_argument("--offline", action="store_true", help="never touch the network")
    common.add_argument("--output", type=Path, default=Path("out"), help="output directory")
    common.add_argument("--cache", type=Path, default=Path(".debfresh-cache"), help="cache directory")
    common.add_argument("--seed", help="seed meta-package (overrides config)")

    parser = argparse.ArgumentParser(
        prog="debfresh",
        description="Freshness and staleness analysis for Debian-style package repositories",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify one release's versions")
    p.add_argument("--release", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("pvac", parents=[common], help="cross-release activity classification")
    p.add_argument("--release-a", required=True)
    p.add_argument("--release-b", required=True)
    p.set_defaults(func=cmd_pvac)

    p = sub.add_parser("libyears", parents=[common], help="libyears freshness for a release")
    p.add_argument("--release", required=True)
    p.set_defaults(func=cmd_libyears)

    p = sub.add_parser("closure", parents=[common], help="dependency closure of the seed package")
    p.add_argument("--release", required=True)
    p.set_defaults(func=cmd_closure)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
    except (OSError, ConfigError) as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(cfg, args)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ingest.UnknownSeedError as e:
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except (ingest.TransportError, freshness_mod.UpstreamDatasetError, OSError) as e:
        print(str(e), file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

"""Shared fixtures: the bundled corpus, loaded once per session."""

from pathlib import Path

import pytest

from debfresh import classifier, freshness, repo_ingest

DATA = Path(__file__).resolve().parent.parent / "data"
FIXTURES = DATA / "fixtures"

RELEASES = ("14.04", "20.04", "22.04")


@pytest.fixture(scope="session")
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope="session")
def rules():
    return classifier.load_manual_rules(DATA / "manual_rules.tsv")


@pytest.fixture(scope="session")
def snapshots():
    meta = {"ubuntu-minimal", "ubuntu-standard"}
    snaps = {}
    for rid in RELEASES:
        raw = (FIXTURES / f"packages-{rid}-main-amd64.gz").read_bytes()
        text = repo_ingest.decompress_index(raw)
        records = repo_ingest.parse_stanzas(text)
        snaps[rid] = repo_ingest.build_snapshot(records, rid, meta)
    return snaps


@pytest.fixture(scope="session")
def upstream():
    return freshness.load_upstream_dataset(DATA / "upstream_releases.csv")

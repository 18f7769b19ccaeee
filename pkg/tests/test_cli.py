"""End-to-end CLI behavior against the bundled corpus.

Most tests drive ``debfresh.cli.main`` in-process; one smoke test runs
the installed console script.
"""

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from debfresh.cli import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main

DATA = Path(__file__).resolve().parent.parent / "data"
CONF = DATA / "analysis.conf"


def run(tmp_path, *argv):
    out = tmp_path / "out"
    cache = tmp_path / "cache"
    code = main([argv[0], "--config", str(CONF), "--output", str(out),
                 "--cache", str(cache), *argv[1:]])
    return code, out


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_outputs(tmp_path, capsys):
    code, out = run(tmp_path, "classify", "--release", "22.04")
    assert code == EXIT_OK
    classes = dict(
        line.split(",") for line in
        (out / "census_classes.csv").read_text().splitlines()[1:]
    )
    assert classes == {
        "Semantic": "2967", "ExtSemantic": "809", "SemiSemantic": "1743",
        "DistNative": "90", "ManualMap": "466", "Unknown": "15",
    }
    lines = (out / "classified.csv").read_text().splitlines()
    assert lines[0] == "package,raw_version,class,epoch,major,minor,patch"
    assert len(lines) == 6091
    # Unknown rows leave the numeric columns empty
    unknown_rows = [l for l in lines[1:] if ",Unknown," in l]
    assert len(unknown_rows) == 15
    assert all(l.endswith(",,,") for l in unknown_rows)
    assert (out / "census_signatures.csv").exists()
    assert "classified 6090 packages" in capsys.readouterr().out


def test_classify_deterministic(tmp_path):
    _, out1 = run(tmp_path / "a", "classify", "--release", "22.04")
    _, out2 = run(tmp_path / "b", "classify", "--release", "22.04")
    for name in ("census_classes.csv", "census_signatures.csv", "classified.csv"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


# ---------------------------------------------------------------------------
# pvac
# ---------------------------------------------------------------------------

def test_pvac_summary(tmp_path):
    code, out = run(tmp_path, "pvac", "--release-a", "14.04", "--release-b", "22.04")
    assert code == EXIT_OK
    summary = json.loads((out / "activity_summary.json").read_text())
    assert summary["evaluable"] == 3266
    assert summary["counts"] == {
        "MajorChange": 1300, "ModeratelyActive": 1298,
        "LightlyActive": 374, "Sedentary": 294,
    }
    assert summary["excluded"]["unknown-class"] == 91
    rows = (out / "activity.csv").read_text().splitlines()
    assert rows[0] == "package,version_a,version_b,activity"
    assert len(rows) == 3358


def test_pvac_seed_restriction(tmp_path):
    code, out = run(tmp_path, "pvac", "--release-a", "14.04",
                    "--release-b", "22.04", "--seed", "ubuntu-minimal")
    assert code == EXIT_OK
    summary = json.loads((out / "activity_summary.json").read_text())
    assert summary["counts"]["LightlyActive"] == 8
    assert summary["counts"]["Sedentary"] == 1
    rows = (out / "activity.csv").read_text().splitlines()[1:]
    sedentary = [r.split(",")[0] for r in rows if r.endswith(",Sedentary")]
    assert sedentary == ["libdb5.3"]


# ---------------------------------------------------------------------------
# libyears
# ---------------------------------------------------------------------------

def test_libyears_20_04(tmp_path, capsys):
    code, out = run(tmp_path, "libyears", "--release", "20.04")
    assert code == EXIT_OK
    printed = capsys.readouterr().out.splitlines()
    assert printed == ["53.90", "68362"]
    report = json.loads((out / "freshness.json").read_text())
    assert report["libyears_days"] == 68362
    assert report["evaluated"] == 98
    assert (out / "freshness.csv").exists()


def test_libyears_22_04(tmp_path, capsys):
    code, _ = run(tmp_path, "libyears", "--release", "22.04")
    assert code == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["15.90", "44496"]


# ---------------------------------------------------------------------------
# closure
# ---------------------------------------------------------------------------

def test_closure(tmp_path, capsys):
    code, out = run(tmp_path, "closure", "--release", "22.04")
    assert code == EXIT_OK
    names = (out / "closure.txt").read_text().splitlines()
    assert len(names) == 99
    assert names == sorted(names)
    assert capsys.readouterr().out.splitlines() == names


def test_closure_unknown_seed_is_usage_error(tmp_path, capsys):
    code, _ = run(tmp_path, "closure", "--release", "22.04", "--seed", "no-such-package")
    assert code == EXIT_USAGE
    assert "no-such-package" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# failure modes
# ---------------------------------------------------------------------------

def test_missing_config_is_usage_error(tmp_path, capsys):
    code = main(["classify", "--config", str(tmp_path / "absent.conf"),
                 "--release", "22.04"])
    assert code == EXIT_USAGE


def test_unconfigured_release_is_usage_error(tmp_path):
    code, _ = run(tmp_path, "classify", "--release", "99.10")
    assert code == EXIT_USAGE


def test_missing_fixture_is_failure(tmp_path, capsys):
    conf = tmp_path / "c.conf"
    conf.write_text(
        "release.22.04.file=absent.gz\nrelease.22.04.snapshot_date=2022-04-21\n"
    )
    code = main(["classify", "--config", str(conf), "--release", "22.04",
                 "--output", str(tmp_path / "out"), "--cache", str(tmp_path / "cache")])
    assert code == EXIT_FAILURE


def test_offline_without_cache_is_failure(tmp_path, capsys):
    conf = tmp_path / "c.conf"
    conf.write_text(
        "release.22.04.codename=jammy\n"
        "release.22.04.mirror=http://192.0.2.1/ubuntu\n"
    )
    code = main(["classify", "--config", str(conf), "--release", "22.04", "--offline",
                 "--output", str(tmp_path / "out"), "--cache", str(tmp_path / "cache")])
    assert code == EXIT_FAILURE
    assert "offline" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# console script
# ---------------------------------------------------------------------------

@pytest.mark.skipif(shutil.which("debfresh") is None, reason="entry point not installed")
def test_console_script(tmp_path):
    proc = subprocess.run(
        ["debfresh", "libyears", "--config", str(CONF), "--release", "22.04",
         "--output", str(tmp_path / "out"), "--cache", str(tmp_path / "cache")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines() == ["15.90", "44496"]


def test_module_invocation(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "debfresh.cli", "closure", "--config", str(CONF),
         "--release", "22.04", "--output", str(tmp_path / "out"),
         "--cache", str(tmp_path / "cache")],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert len(proc.stdout.splitlines()) == 99

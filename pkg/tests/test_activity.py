"""Cross-release activity classification."""

import itertools

import pytest

from debfresh.activity import (
    ActivityLevel,
    Excluded,
    ExclusionReason,
    activity_report,
    pvac,
)
from debfresh.classifier import SemVersion, VersionClass


def sv(major, minor, patch, epoch=0, klass=VersionClass.SEMANTIC, raw="x"):
    return SemVersion(raw, klass, epoch, major, minor, patch)


def unknown(raw="0+gitabc"):
    return SemVersion(raw, VersionClass.UNKNOWN)


# ---------------------------------------------------------------------------
# per-pair classification
# ---------------------------------------------------------------------------

def test_levels():
    assert pvac(sv(1, 2, 3), sv(2, 2, 3)) is ActivityLevel.MAJOR_CHANGE
    assert pvac(sv(1, 2, 3), sv(1, 5, 3)) is ActivityLevel.MODERATELY_ACTIVE
    assert pvac(sv(1, 2, 3), sv(1, 2, 9)) is ActivityLevel.LIGHTLY_ACTIVE
    assert pvac(sv(1, 2, 3), sv(1, 2, 3)) is ActivityLevel.SEDENTARY


def test_major_beats_lower_fields():
    # precedence: any major difference wins, whatever minor/patch do
    assert pvac(sv(1, 9, 9), sv(2, 0, 0)) is ActivityLevel.MAJOR_CHANGE
    assert pvac(sv(1, 2, 9), sv(1, 3, 0)) is ActivityLevel.MODERATELY_ACTIVE


def test_revision_only_change_is_sedentary():
    # packaging revisions are not version fields
    a = sv(1, 0, 8, raw="1.0.8-2")
    b = sv(1, 0, 8, raw="1.0.8-5build1")
    assert pvac(a, b) is ActivityLevel.SEDENTARY


def test_epoch_mismatch_excluded():
    out = pvac(sv(1, 2, 3, epoch=1), sv(1, 2, 3, epoch=2))
    assert out == Excluded(ExclusionReason.EPOCH_MISMATCH)
    assert out.label == "Excluded(epoch-mismatch)"


def test_epoch_mismatch_checked_before_fields():
    out = pvac(sv(1, 2, 3, epoch=0), sv(9, 9, 9, epoch=3))
    assert isinstance(out, Excluded)


def test_unknown_input_is_contract_violation():
    with pytest.raises(ValueError):
        pvac(unknown(), sv(1, 2, 3))
    with pytest.raises(ValueError):
        pvac(sv(1, 2, 3), unknown())


def test_symmetry_and_self_exhaustive():
    small = range(0, 4)
    epochs = range(0, 3)
    tuples = [
        sv(M, m, p, epoch=e)
        for M, m, p, e in itertools.product(small, small, small, epochs)
    ]
    for a in tuples:
        assert pvac(a, a) is ActivityLevel.SEDENTARY
    for a, b in itertools.combinations(tuples, 2):
        assert pvac(a, b) == pvac(b, a)


def test_classes_may_differ_between_releases():
    a = sv(1, 5, 51, klass=VersionClass.DIST_NATIVE, raw="1.5.51ubuntu2")
    b = sv(1, 5, 79, klass=VersionClass.DIST_NATIVE, raw="1.5.79ubuntu1")
    assert pvac(a, b) is ActivityLevel.LIGHTLY_ACTIVE


# ---------------------------------------------------------------------------
# report over a common set
# ---------------------------------------------------------------------------

def test_report_counts_and_exclusions():
    va = {
        "a": sv(1, 0, 0),
        "b": sv(1, 0, 0),
        "c": unknown(),
        "d": sv(1, 0, 0, epoch=1),
    }
    vb = {
        "a": sv(2, 0, 0),
        "b": sv(1, 0, 0),
        "c": sv(1, 0, 0),
        "d": sv(1, 0, 0, epoch=2),
    }
    diags = []
    report = activity_report({"a", "b", "c", "d", "e"}, va, vb, ("x", "y"), diags)
    assert report.per_package["a"] is ActivityLevel.MAJOR_CHANGE
    assert report.per_package["b"] is ActivityLevel.SEDENTARY
    assert report.per_package["c"] == Excluded(ExclusionReason.UNKNOWN_CLASS)
    assert report.per_package["d"] == Excluded(ExclusionReason.EPOCH_MISMATCH)
    assert report.per_package["e"] == Excluded(ExclusionReason.MISSING_IN_RELEASE)
    assert report.evaluable == 2
    assert diags and "e" in diags[0]


def test_report_summary_shape():
    report = activity_report({"a"}, {"a": sv(1, 0, 0)}, {"a": sv(1, 1, 0)}, ("x", "y"))
    summary = report.summary()
    assert summary["release_pair"] == ["x", "y"]
    assert summary["evaluable"] == 1
    assert summary["counts"]["ModeratelyActive"] == 1
    assert summary["excluded"]["epoch-mismatch"] == 0


def test_report_evaluable_arithmetic():
    # evaluable + excluded always partitions the common set
    va = {"a": sv(1, 0, 0), "b": unknown()}
    vb = {"a": sv(1, 0, 0), "b": sv(1, 0, 0)}
    report = activity_report({"a", "b"}, va, vb)
    assert report.evaluable + sum(report.excluded_counts.values()) == 2

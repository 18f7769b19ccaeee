"""Version classification cascade, manual rules and the census."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from debfresh.classifier import (
    SEMANTIC_RE,
    SEMI_SEMANTIC_RE,
    ManualRule,
    UnknownVersionError,
    VersionClass,
    basic_signature,
    census,
    classify,
    date_like_warning,
    load_manual_rules,
)


def clf(raw, rules=(), package=""):
    return classify(raw, list(rules), package=package)


# ---------------------------------------------------------------------------
# tier-by-tier examples
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "raw,epoch,fields",
    [
        ("1.0.8-5build1", 0, (1, 0, 8)),
        ("0.7.9-2.2build3", 0, (0, 7, 9)),
        ("5.3.28+dfsg1-0.8ubuntu3", 0, (5, 3, 28)),
        ("3.0.4-2ubuntu2", 0, (3, 0, 4)),
        ("0.0.17", 0, (0, 0, 17)),
        ("12.1.0-2ubuntu1", 0, (12, 1, 0)),
    ],
)
def test_semantic(raw, epoch, fields):
    sem = clf(raw)
    assert sem.version_class is VersionClass.SEMANTIC
    assert (sem.epoch, sem.fields()) == (epoch, fields)


def test_ext_semantic():
    sem = clf("1:7.0.55-1ubuntu1")
    assert sem.version_class is VersionClass.EXT_SEMANTIC
    assert sem.epoch == 1
    assert sem.fields() == (7, 0, 55)


@pytest.mark.parametrize(
    "raw,epoch,fields",
    [
        ("1.02.175-2.1ubuntu4", 0, (1, 2, 175)),  # leading zero in minor
        ("2:1.02.77-6ubuntu2", 2, (1, 2, 77)),
        ("1:1.2.11.dfsg-2ubuntu9", 1, (1, 2, 11)),  # dotted-word suffix
        ("1.479", 0, (1, 479, 0)),  # missing patch defaults to 0
        ("3.4", 0, (3, 4, 0)),
        ("1.21pl2", 0, (1, 21, 2)),  # 'pl' patch separator
        ("2.8.95~2430-0ubuntu5", 0, (2, 8, 95)),  # tilde suffix
        ("1.2.3+dfsg~3-1", 0, (1, 2, 3)),  # plus suffix (tilde keeps it non-strict)
    ],
)
def test_semi_semantic(raw, epoch, fields):
    sem = clf(raw)
    assert sem.version_class is VersionClass.SEMI_SEMANTIC
    assert (sem.epoch, sem.fields()) == (epoch, fields)


@pytest.mark.parametrize(
    "raw,fields",
    [
        ("1.5.79ubuntu1", (1, 5, 79)),
        ("1.5.51ubuntu2", (1, 5, 51)),  # tag after patch, not a dotted suffix
        ("3.4ubuntu9", (3, 4, 0)),
    ],
)
def test_dist_native(raw, fields):
    sem = clf(raw)
    assert sem.version_class is VersionClass.DIST_NATIVE
    assert sem.fields() == fields


def test_dist_native_rejects_hyphens():
    assert clf("1.5.79ubuntu1-1").version_class is not VersionClass.DIST_NATIVE


def test_manual_map(rules):
    sem = clf("643", rules, package="less")
    assert sem.version_class is VersionClass.MANUAL_MAP
    assert sem.major == 643
    sem = clf("1.3.4.20200120-3", rules, package="mawk")
    assert sem.version_class is VersionClass.MANUAL_MAP
    assert sem.fields() == (1, 3, 4)


def test_unknown_sink():
    for raw in ("0+git20140101", "2gab12f", "beta"):
        sem = clf(raw)
        assert sem.version_class is VersionClass.UNKNOWN


def test_unknown_field_access_guarded():
    sem = clf("0+git20140101")
    with pytest.raises(UnknownVersionError):
        sem.major
    with pytest.raises(UnknownVersionError):
        sem.fields()


def test_cascade_precedence():
    # a plain semantic string also matches the relaxed tiers but must
    # classify as Semantic; an epoch form must stop at ExtSemantic
    assert clf("1.2.3").version_class is VersionClass.SEMANTIC
    assert clf("1:1.2.3").version_class is VersionClass.EXT_SEMANTIC


def test_semantic_strings_match_relaxed_tier_too():
    # the relaxed grammar is a strict superset of the strict one
    for raw in ("1.2.3", "1.2.3-4ubuntu5", "0.0.17", "1.0.0-rc.1+build.5"):
        assert SEMANTIC_RE.match(raw)
        assert SEMI_SEMANTIC_RE.match(raw)


@settings(max_examples=300)
@given(
    st.from_regex(
        r"(0|[1-9][0-9]?)\.(0|[1-9][0-9]?)\.(0|[1-9][0-9]?)(-[1-9][0-9a-z.-]{0,6})?",
        fullmatch=True,
    )
)
def test_relaxed_superset_property(raw):
    if SEMANTIC_RE.match(raw):
        assert SEMI_SEMANTIC_RE.match(raw)


def test_determinism_and_partition(rules):
    samples = ["1.2.3", "1:1.2.3", "1.02.3-1", "1.5.79ubuntu1", "643", "0+gitabc"]
    for raw in samples:
        a = clf(raw, rules, package="less")
        b = clf(raw, rules, package="less")
        assert a.version_class is b.version_class
        assert isinstance(a.version_class, VersionClass)  # exactly one class


# ---------------------------------------------------------------------------
# manual rules
# ---------------------------------------------------------------------------

def test_manual_rule_requires_major_group():
    with pytest.raises(ValueError):
        ManualRule(".*", r"\d+", 1)


def test_manual_rule_full_match_only():
    rule = ManualRule("less", r"(?P<major>\d+)", 1)
    assert rule.match("less", "643")
    assert not rule.match("less", "643-2x")
    assert not rule.match("lesser", "643")


def test_load_manual_rules(tmp_path):
    p = tmp_path / "rules.tsv"
    p.write_text("# comment\nfoo\t(?P<major>\\d+)\t20\nbar\tv(?P<major>\\d+)\t10\n")
    rules = load_manual_rules(p)
    assert [r.priority for r in rules] == [10, 20]


def test_load_manual_rules_bad_line(tmp_path):
    p = tmp_path / "rules.tsv"
    p.write_text("only-two-fields\t(?P<major>1)\n")
    with pytest.raises(ValueError):
        load_manual_rules(p)


# ---------------------------------------------------------------------------
# signatures and census
# ---------------------------------------------------------------------------

@pytest.mark.parametrize(
    "raw,sig",
    [
        ("1.1.1-1ubuntu1", "N.N.N-NAN"),
        ("2:1.02.77-6ubuntu2", "N:N.N.N-NAN"),
        ("5.3.28+dfsg1-0.8ubuntu3", "N.N.N+AN-N.NAN"),
        ("458-2", "N-N"),
    ],
)
def test_basic_signature(raw, sig):
    assert basic_signature(raw) == sig


def test_signature_abstracts_runs():
    # maximal runs collapse: re-signing a signature turns every letter
    # run (including N itself) into A
    assert basic_signature("1.2.3") == "N.N.N"
    assert basic_signature("N.N.N") == "A.A.A"
    assert basic_signature("1:2.0~rc1") == "N:N.N~AN"


def test_census_on_small_snapshot(rules, snapshots):
    counts, signatures, per_package = census(snapshots["22.04"], rules)
    assert sum(counts.values()) == len(snapshots["22.04"].records)
    assert sum(signatures.values()) == len(snapshots["22.04"].records)
    assert set(per_package) == set(snapshots["22.04"].records)
    # the census covers meta packages too
    assert "ubuntu-minimal" in per_package


def test_date_like_warning():
    assert date_like_warning("2023.04.01")
    assert date_like_warning("2023.4.1-1")
    assert not date_like_warning("1.2.3")
    assert not date_like_warning("20.04.1")

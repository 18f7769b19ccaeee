#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus under data/.

The corpus is synthetic but calibrated: the class census, the
cross-release activity counts, and the freshness aggregates it produces
are the golden values asserted in tests/test_acceptance.py. The script
verifies every golden number by running the real pipeline before writing
anything, so a drifted generator fails loudly instead of producing a
corpus that silently disagrees with the test suite.

Run from the repository root:  python3 scripts/gen_fixtures.py
"""

from __future__ import annotations

import datetime as dt
import gzip
import io
import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from debfresh import activity as act
from debfresh import classifier as cls
from debfresh import freshness as fresh
from debfresh import repo_ingest as ingest

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"
FIXTURES = DATA / "fixtures"

RNG = random.Random(20220421)

RULES = cls.load_manual_rules(DATA / "manual_rules.tsv")

SNAPSHOT_DATES = {
    "14.04": dt.date(2014, 4, 17),
    "20.04": dt.date(2020, 4, 23),
    "22.04": dt.date(2022, 4, 21),
}
R20 = SNAPSHOT_DATES["20.04"]
R22 = SNAPSHOT_DATES["22.04"]

# ---------------------------------------------------------------------------
# Golden targets reproduced by the corpus.
# ---------------------------------------------------------------------------
CENSUS_22 = {
    "Semantic": 2967,
    "ExtSemantic": 809,
    "SemiSemantic": 1743,
    "DistNative": 90,
    "ManualMap": 466,
    "Unknown": 15,
}
TOTAL_22 = 6090
TOTAL_14 = 8566
COMMON_TOTAL = 3357
EVALUABLE = 3266  # 91 common packages are Unknown on one side
ACTIVITY_TOTALS = {
    "MajorChange": 1300,
    "ModeratelyActive": 1298,
    "LightlyActive": 374,
    "Sedentary": 294,
}
DAY_TOTALS = {"20.04": 68362, "22.04": 44496}
# Weighted version-delta targets in tenths (contributions are exact
# multiples of 0.1, so the aggregate is calibrated to the nearest
# representable value).
DELTA_TENTHS = {"20.04": 539, "22.04": 159}

UNKNOWN_IN_14 = 81  # common packages only classifiable on the 22.04 side
UNKNOWN_IN_22 = 10  # common packages only classifiable on the 14.04 side


class Pkg:
    __slots__ = ("name", "versions", "depends", "provides", "source", "homepage")

    def __init__(self, name, versions, depends=None, provides=None, source=None, homepage=None):
        self.name = name
        self.versions = versions  # release_id -> raw version
        self.depends = depends or {}  # release_id -> list of depends strings
        self.provides = provides or []
        self.source = source
        self.homepage = homepage


# ---------------------------------------------------------------------------
# Version string templates. Each returns a string whose class under the
# cascade is the template's namesake; generation asserts this.
# ---------------------------------------------------------------------------

def sem(f, style=None):
    M, m, p = f
    style = style or RNG.choice(["plain", "ubuntu", "ubuntu", "build"])
    if style == "plain":
        return f"{M}.{m}.{p}"
    if style == "ubuntu":
        return f"{M}.{m}.{p}-{RNG.randint(1, 9)}ubuntu{RNG.randint(1, 9)}"
    return f"{M}.{m}.{p}-{RNG.randint(1, 9)}build{RNG.randint(1, 4)}"


def ext(f, epoch):
    M, m, p = f
    return f"{epoch}:{M}.{m}.{p}-{RNG.randint(1, 9)}ubuntu{RNG.randint(1, 9)}"


def semi(f, style=None):
    M, m, p = f
    style = style or RNG.choice(["lz", "lz", "dfsg"])
    if style == "lz":
        return f"{M}.0{m}.{p}-{RNG.randint(1, 9)}"
    return f"{M}.{m}.{p}.dfsg-{RNG.randint(1, 9)}ubuntu{RNG.randint(1, 9)}"


def dn(f):
    M, m, p = f
    return f"{M}.{m}.{p}ubuntu{RNG.randint(1, 9)}"


def mm():
    return str(RNG.randint(40, 9999))


def unk():
    if RNG.random() < 0.5:
        d = dt.date(2013, 1, 1) + dt.timedelta(days=RNG.randint(0, 3000))
        return f"0+git{d.strftime('%Y%m%d')}"
    return f"{RNG.randint(1, 9)}g{''.join(RNG.choice('0123456789abcdef') for _ in range(6))}f"


def make_version(klass, fields, epoch=0, style=None):
    if klass == "Semantic":
        raw = sem(fields, style)
    elif klass == "ExtSemantic":
        raw = ext(fields, epoch)
    elif klass == "SemiSemantic":
        raw = semi(fields, style)
    elif klass == "DistNative":
        raw = dn(fields)
    elif klass == "ManualMap":
        raw = mm()
    else:
        raw = unk()
    return raw


def check_class(name, raw, expected):
    got = cls.classify(raw, RULES, package=name)
    assert got.version_class.value == expected, (name, raw, expected, got)
    return got


def fields_for(klass):
    if klass == "SemiSemantic":
        # leading-zero minor template needs a single-digit minor
        return (RNG.randint(1, 8), RNG.randint(1, 9), RNG.randint(0, 20))
    return (RNG.randint(1, 8), RNG.randint(0, 15), RNG.randint(0, 20))


def shift_fields(fields, level):
    """14.04-side fields for a given activity level."""
    M, m, p = fields
    if level == "MajorChange":
        return (M + RNG.randint(1, 3), m, p) if M == 0 else (M - 1, m, p)
    if level == "ModeratelyActive":
        return (M, m + RNG.randint(1, 4), p)
    if level == "LightlyActive":
        return (M, m, p + RNG.randint(1, 5))
    return (M, m, p)


# ---------------------------------------------------------------------------
# Synthetic name pool.
# ---------------------------------------------------------------------------
_SYLLABLES = (
    "ba be bi bo bu ca ce co cu da de di do du fa fe fi fo ga ge gi go gu "
    "ha he hi ho ka ke ki ko la le li lo lu ma me mi mo mu na ne ni no nu "
    "pa pe pi po ra re ri ro ru sa se si so su ta te ti to tu va ve vi vo "
    "wa we wi za ze zi zo"
).split()
_PREFIX = ["lib", "lib", "lib", "", "", "python3-", "fonts-", ""]
_SUFFIX = ["", "", "", "0", "1", "2", "-dev", "-bin", "-common", "-utils"]
_used_names: set[str] = set()


def fresh_name() -> str:
    while True:
        stem = "".join(RNG.choice(_SYLLABLES) for _ in range(RNG.randint(2, 4)))
        name = RNG.choice(_PREFIX) + stem + RNG.choice(_SUFFIX)
        if name not in _used_names:
            _used_names.add(name)
            return name


# ---------------------------------------------------------------------------
# The ubuntu-minimal dependency closure (99 packages in 22.04).
# Named members carry hand-picked versions; fillers are generated.
# Tuples: (name, v14, v20, v22, fields22, upstream(M,m,p), date, level)
# level is the expected cross-release activity vs 14.04 (None: not common).
# ---------------------------------------------------------------------------
NINE = [
    ("debconf", "1.5.51ubuntu2", "1.5.73", "1.5.79ubuntu1",
     (1, 5, 82), "2023-06-10", "LightlyActive"),
    ("libbz2-1.0", "1.0.6-5", "1.0.8-2", "1.0.8-5build1",
     (1, 0, 8), "2019-07-13", "LightlyActive"),
    ("libcap-ng0", "0.7.3-1ubuntu2", "0.7.9-2.1build1", "0.7.9-2.2build3",
     (0, 8, 4), "12/20/23", "LightlyActive"),
    ("libdb5.3", "5.3.28-3ubuntu3", "5.3.28+dfsg1-0.6ubuntu2", "5.3.28+dfsg1-0.8ubuntu3",
     (5, 3, 28), "2013-09-09", "Sedentary"),
    ("libdevmapper1.02.1", "2:1.02.77-6ubuntu2", "2:1.02.167-1ubuntu1", "2:1.02.175-2.1ubuntu4",
     (1, 2, 185), "2023-08-02", "LightlyActive"),
    ("libmnl0", "1.0.3-3ubuntu1", "1.0.4-2", "1.0.4-3build2",
     (1, 0, 5), "2022-05-10", "LightlyActive"),
    ("mawk", "1.3.3-17ubuntu2", "1.3.4.20200120-2", "1.3.4.20200120-3",
     (1, 3, 4), "2023-10-10", "LightlyActive"),
    ("sensible-utils", "0.0.9", "0.0.12+nmu1", "0.0.17",
     (0, 0, 24), "2023-04-01", "LightlyActive"),
    ("zlib1g", "1:1.2.8.dfsg-1ubuntu1", "1:1.2.11.dfsg-2ubuntu1", "1:1.2.11.dfsg-2ubuntu9",
     (1, 3, 1), "2024-01-22", "LightlyActive"),
]

EXTRAS = [
    ("perl-base", "5.18.2-2ubuntu1", "5.30.0-9ubuntu1", "5.34.0-3ubuntu1",
     (5, 38, 2), "11/29/23", "ModeratelyActive"),
    ("e2fsprogs", "1.42.9-3ubuntu1", "1.45.5-2ubuntu1", "1.46.5-2ubuntu1",
     (1, 47, 0), "2/7/23", "ModeratelyActive"),
    ("logsave", "1.42.9-3ubuntu1", "1.45.5-2ubuntu1", "1.46.5-2ubuntu1",
     (1, 47, 0), "2/7/23", "ModeratelyActive"),
    ("libgcc-s1", None, "10.3.0-1ubuntu1", "12.1.0-2ubuntu1",
     (13, 2, 0), "7/27/23", None),
    ("libstdc++6", "4.8.2-19ubuntu1", "10.3.0-1ubuntu1", "12.1.0-2ubuntu1",
     (13, 2, 0), "7/27/23", "MajorChange"),
    ("less", "458-2", "551-1ubuntu0.1", "643",
     (643, 0, 0), "8/12/23", "MajorChange"),
    ("libapparmor1", "2.8.95~2430-0ubuntu5", "2.13.3-7ubuntu5", "3.0.4-2ubuntu2",
     (3, 0, 13), "2/2/24", "MajorChange"),
    ("libgcrypt20", "1.5.3-2ubuntu4", "1.8.5-5ubuntu1", "1.9.4-3ubuntu3",
     (1, 10, 3), "11/14/23", "ModeratelyActive"),
    ("liblz4-1", None, "1.9.2-2ubuntu1", "1.9.3-2build2",
     (1, 9, 4), "8/15/22", None),
    ("libzstd1", None, "1.4.4+dfsg-3ubuntu1", "1.4.8+dfsg-3build1",
     (1, 5, 5), "4/4/23", None),
]

# Table-style upstream dataset class labels for the named members.
UPSTREAM_CLASS = {
    "perl-base": "Semantic", "e2fsprogs": "Semantic", "logsave": "Semantic",
    "libgcc-s1": "SemiSem", "libstdc++6": "SemiSem", "libcap-ng0": "Semantic",
    "less": "ManualMap", "libapparmor1": "Semantic", "libgcrypt20": "Semantic",
    "liblz4-1": "Semantic", "libzstd1": "Semantic",
}

CLOSURE_FILLER_NAMES = [
    "libc6", "libcrypt1", "libgmp10", "libudev1", "libpam0g", "libpam-modules",
    "libpam-runtime", "libselinux1", "libsemanage2", "libsepol2", "libacl1",
    "libattr1", "libaudit1", "libblkid1", "libmount1", "libsmartcols1",
    "libuuid1", "libtinfo6", "libncurses6", "libncursesw6", "libreadline8",
    "libssl3", "libexpat1", "libffi8", "libpcre3", "libpcre2-8-0",
    "libseccomp2", "libcap2", "libkeyutils1", "libkrb5-3", "libgssapi-krb5-2",
    "libk5crypto3", "libkrb5support0", "libcom-err2", "libss2", "libext2fs2",
    "libsystemd0", "libprocps8", "procps", "coreutils", "dash", "bash",
    "grep", "sed", "tar", "gzip", "bzip2", "xz-utils", "findutils",
    "diffutils", "util-linux", "mount", "hostname", "init-system-helpers",
    "sysvinit-utils", "base-files", "base-passwd", "passwd", "login",
    "adduser", "debianutils", "lsb-base", "ncurses-base", "ncurses-bin",
    "tzdata", "apt", "apt-utils", "gpgv", "ubuntu-keyring", "ca-certificates",
    "openssl", "libapt-pkg6.0", "dpkg", "libdd-shim1", "libtracker-span0",
    "libquorum-glue2", "liblattice-core1", "libfenwick3", "libpico-rt0",
    "libmargin-zero1",
]
assert len(CLOSURE_FILLER_NAMES) == 80
_used_names.update(CLOSURE_FILLER_NAMES)
_used_names.update(n for n, *_ in NINE)
_used_names.update(n for n, *_ in EXTRAS)
_used_names.update({"ubuntu-minimal", "awk", "debconf-2.0"})

# class / commonality layout for the 80 closure fillers
_filler_class = (["Semantic"] * 50 + ["ExtSemantic"] * 15
                 + ["SemiSemantic"] * 10 + ["DistNative"] * 5)
# (common?, level) per index; 60 common (30 Major / 30 Moderate), 20 not
_filler_common: list[str | None] = (
    ["MajorChange"] * 19 + ["ModeratelyActive"] * 19 + [None] * 12      # Semantic
    + ["MajorChange"] * 6 + ["ModeratelyActive"] * 5 + [None] * 4       # ExtSemantic
    + ["MajorChange"] * 3 + ["ModeratelyActive"] * 4 + [None] * 3      # SemiSemantic
    + ["MajorChange"] * 2 + ["ModeratelyActive"] * 2 + [None]          # DistNative
)
assert len(_filler_common) == 80
# calibration knobs: non-common Semantic fillers
KNOB_22 = CLOSURE_FILLER_NAMES[38]  # adjusts the 22.04 delta sum
KNOB_20 = CLOSURE_FILLER_NAMES[39]  # adjusts the 20.04 delta sum
assert _filler_common[38] is None and _filler_common[39] is None


def build_closure_members():
    """Returns (members, upstream_rows). members: dict name -> dict with
    versions, fields per release, upstream tuple, date, level."""
    members = {}
    upstream_rows = []

    for name, v14, v20, v22, up, date, level in NINE + EXTRAS:
        f22 = cls.classify(v22, RULES, package=name)
        members[name] = {
            "v14": v14, "v20": v20, "v22": v22,
            "level": level, "upstream": up, "date": date,
        }
        upstream_rows.append((name, UPSTREAM_CLASS.get(name, f22.version_class.value), up, date))

    for idx, name in enumerate(CLOSURE_FILLER_NAMES):
        klass = _filler_class[idx]
        level = _filler_common[idx]
        epoch = RNG.randint(1, 2)
        if name in (KNOB_22, KNOB_20):
            f22 = (3, 5, 300)
            up = (3, 5, 300)
        else:
            f22 = fields_for(klass)
            up = (f22[0], f22[1] + RNG.choice([0, 0, 1]), f22[2] + RNG.randint(0, 3))
        f20 = (f22[0], max(0, f22[1] - RNG.choice([0, 1, 2])), max(0, f22[2] - RNG.randint(0, 4)))
        style = RNG.choice(["ubuntu", "build"]) if klass == "Semantic" else (
            "lz" if klass == "SemiSemantic" else None)
        v22 = make_version(klass, f22, epoch, style)
        v20 = make_version(klass, f20, epoch, style)
        v14 = None
        if level is not None:
            f14 = shift_fields(f22, level)
            v14 = make_version(klass, f14, epoch, style)
        members[name] = {
            "v14": v14, "v20": v20, "v22": v22,
            "level": level, "upstream": up, "date": None,  # date assigned later
            "fields22": f22, "fields20": f20, "klass": klass, "epoch": epoch,
        }
        upstream_rows.append((name, klass, up, None))
    return members, upstream_rows


# ---------------------------------------------------------------------------
# Calibration helpers
# ---------------------------------------------------------------------------

def tenths(up, pkg):
    return 7 * (up[0] - pkg[0]) + 2 * (up[1] - pkg[1]) + 1 * (up[2] - pkg[2])


def parse_fields(name, raw):
    s = cls.classify(raw, RULES, package=name)
    assert s.version_class is not cls.VersionClass.UNKNOWN, (name, raw)
    return (s.major, s.minor, s.patch)


def calibrate_deltas(members):
    """Adjust knob packages' packaged patch fields so the weighted delta
    sums land exactly on DELTA_TENTHS."""
    closure22 = set(members)
    closure20 = closure22 - {"less"}

    for knob, rel_key, target_key, pool in (
        (KNOB_22, "v22", "22.04", closure22),
        (KNOB_20, "v20", "20.04", closure20),
    ):
        current = 0
        for name in pool:
            m = members[name]
            current += tenths(m["upstream"], parse_fields(name, m[rel_key]))
        need = DELTA_TENTHS[target_key] - current
        m = members[knob]
        f = parse_fields(knob, m[rel_key])
        new_patch = f[2] - need  # lowering packaged patch raises the delta
        assert new_patch >= 0, (knob, need, f)
        m[rel_key] = f"{f[0]}.{f[1]}.{new_patch}-1ubuntu1"
        if rel_key == "v22":
            m["fields22"] = (f[0], f[1], new_patch)
        check_class(knob, m[rel_key], "Semantic")


def calibrate_dates(members, upstream_rows):
    """Assign upstream dates to filler members and tune them so the
    absolute-day sums hit DAY_TOTALS for both snapshots."""
    fixed = [m["date"] for m in members.values() if m["date"]]

    filler_names = [name for name in CLOSURE_FILLER_NAMES]
    # initial draw: first 40 between the snapshots, rest after 22.04
    dates = {}
    for i, name in enumerate(filler_names):
        if i < 40:
            dates[name] = R20 + dt.timedelta(days=RNG.randint(30, 698))
        else:
            dates[name] = R22 + dt.timedelta(days=RNG.randint(30, 700))

    def parse_fixed(text):
        return fresh._parse_date(text)

    def sums():
        a = b = 0
        for name, m in members.items():
            d = dates.get(name) or parse_fixed(m["date"])
            da = abs((d - R20).days)
            db = abs((d - R22).days)
            if name != "less":
                a += da
            b += db
        return a, b

    # First set the difference A - B using in-window dates (each day of
    # shift moves the difference by 2), then set B with post-22.04 dates
    # (each day of shift moves A and B together).
    lo_in, hi_in = R20 + dt.timedelta(days=1), R22 - dt.timedelta(days=1)
    lo_af, hi_af = R22 + dt.timedelta(days=1), dt.date(2025, 12, 31)

    a, b = sums()
    want_diff = DAY_TOTALS["20.04"] - DAY_TOTALS["22.04"]
    err = want_diff - (a - b)
    # shift in-window dates later to raise the difference
    for name in filler_names[:40]:
        if err == 0:
            break
        d = dates[name]
        step = err // 2
        nd = min(hi_in, max(lo_in, d + dt.timedelta(days=step)))
        err -= 2 * (nd - d).days
        dates[name] = nd
    if err % 2:  # parity fix: move one after-date by... only even steps exist
        # moving an in-window date by one day changes the difference by 2,
        # so odd residues are impossible given integer targets; flag loudly.
        raise AssertionError(f"odd difference residue {err}")
    assert err == 0, err

    a, b = sums()
    err = DAY_TOTALS["22.04"] - b
    for name in filler_names[40:]:
        if err == 0:
            break
        d = dates[name]
        nd = min(hi_af, max(lo_af, d + dt.timedelta(days=err)))
        err -= (nd - d).days
        dates[name] = nd
    assert err == 0, err
    a, b = sums()
    assert a == DAY_TOTALS["20.04"] and b == DAY_TOTALS["22.04"], (a, b)

    for name in filler_names:
        members[name]["date"] = dates[name].isoformat()
    rows = []
    for name, klass, up, date in upstream_rows:
        rows.append((name, klass, up, date or members[name]["date"]))
    return rows


# ---------------------------------------------------------------------------
# Record assembly
# ---------------------------------------------------------------------------

def build_all():
    members, upstream_rows = build_closure_members()
    calibrate_deltas(members)
    upstream_rows = calibrate_dates(members, upstream_rows)

    quota = dict(CENSUS_22)

    def consume(klass):
        quota[klass] -= 1
        assert quota[klass] >= 0, f"quota exhausted for {klass}"

    packages: list[Pkg] = []

    # -- ubuntu-minimal ----------------------------------------------------
    closure_names = sorted(members)
    direct = [n for n in closure_names if n not in
              ("mawk", "logsave", "libgcc-s1", "libk5crypto3", "libkrb5support0", "debconf")]
    chains = {
        "e2fsprogs": ["logsave"],
        "libstdc++6": ["libgcc-s1"],
        "libkrb5-3": ["libk5crypto3", "libkrb5support0 (>= 1.19)"],
    }
    minimal_deps = {
        "22.04": direct + ["awk", "debconf (>= 1.5) | debconf-2.0"],
        "20.04": [n for n in direct if n != "less"] + ["awk", "debconf (>= 1.5) | debconf-2.0"],
        "14.04": ["libc6", "awk", "debconf | debconf-2.0"],
    }
    packages.append(Pkg(
        "ubuntu-minimal",
        {"14.04": "1.325", "20.04": "1.450", "22.04": "1.479"},
        depends=minimal_deps,
        source="ubuntu-meta",
    ))
    check_class("ubuntu-minimal", "1.479", "SemiSemantic")
    consume("SemiSemantic")

    # -- closure members ---------------------------------------------------
    for name in closure_names:
        m = members[name]
        versions = {"20.04": m["v20"], "22.04": m["v22"]}
        if m["v14"] is not None:
            versions["14.04"] = m["v14"]
        got = cls.classify(m["v22"], RULES, package=name)
        if "klass" in m:
            assert got.version_class.value == m["klass"], (name, m["v22"], got)
        consume(got.version_class.value)
        provides = []
        if name == "mawk":
            provides = ["awk"]
        if name == "debconf":
            provides = ["debconf-2.0"]
        deps = {}
        if name in chains:
            deps = {"22.04": chains[name], "20.04": chains[name]}
        packages.append(Pkg(name, versions, depends=deps, provides=provides,
                            homepage=f"https://example.org/{name}"))

    # -- common fillers ----------------------------------------------------
    # class pool for the 22.04 side of classifiable commons
    common_classes = (["Semantic"] * 1800 + ["ExtSemantic"] * 500
                      + ["SemiSemantic"] * 950 + ["DistNative"] * 21)
    levels = []
    closure_counts = {"MajorChange": 0, "ModeratelyActive": 0,
                      "LightlyActive": 0, "Sedentary": 0}
    for m in members.values():
        if m["level"]:
            closure_counts[m["level"]] += 1
    for level, total in ACTIVITY_TOTALS.items():
        levels.extend([level] * (total - closure_counts[level]))
    assert len(common_classes) == len(levels) + UNKNOWN_IN_14
    RNG.shuffle(common_classes)
    RNG.shuffle(levels)

    for i, klass in enumerate(common_classes):
        name = fresh_name()
        epoch = RNG.randint(1, 2) if klass == "ExtSemantic" else 0
        f22 = fields_for(klass)
        style = None
        if klass == "Semantic":
            style = RNG.choice(["ubuntu", "ubuntu", "ubuntu", "build"])
        elif klass == "SemiSemantic":
            style = RNG.choice(["lz", "lz", "dfsg"])
        v22 = make_version(klass, f22, epoch, style)
        check_class(name, v22, klass)
        consume(klass)
        if i < UNKNOWN_IN_14:
            v14 = unk()
            check_class(name, v14, "Unknown")
        else:
            level = levels[i - UNKNOWN_IN_14]
            f14 = shift_fields(f22, level)
            v14 = make_version(klass, f14, epoch, style)
            if level == "Sedentary" and v14 == v22:
                v14 = make_version(klass, f14, epoch, style) + "~really"
            got14 = cls.classify(v14, RULES, package=name)
            assert got14.version_class is not cls.VersionClass.UNKNOWN
            assert (got14.major, got14.minor, got14.patch) == f14, (name, v14, f14)
        packages.append(Pkg(name, {"14.04": v14, "22.04": v22}))

    for _ in range(UNKNOWN_IN_22):
        name = fresh_name()
        v22 = unk()
        check_class(name, v22, "Unknown")
        consume("Unknown")
        f14 = fields_for("Semantic")
        packages.append(Pkg(name, {"14.04": sem(f14, "ubuntu"), "22.04": v22}))

    # -- unique 22.04 fillers ----------------------------------------------
    unique_classes = []
    for klass, n in quota.items():
        unique_classes.extend([klass] * n)
    RNG.shuffle(unique_classes)
    for klass in unique_classes:
        name = fresh_name()
        epoch = RNG.randint(1, 3) if klass == "ExtSemantic" else 0
        v22 = make_version(klass, fields_for(klass), epoch)
        check_class(name, v22, klass)
        packages.append(Pkg(name, {"22.04": v22}))

    # -- unique 14.04 fillers ----------------------------------------------
    count_14 = sum(1 for p in packages if "14.04" in p.versions)
    for _ in range(TOTAL_14 - count_14):
        name = fresh_name()
        klass = RNG.choices(
            ["Semantic", "ExtSemantic", "SemiSemantic", "DistNative", "ManualMap", "Unknown"],
            weights=[40, 10, 25, 2, 8, 2])[0]
        epoch = RNG.randint(1, 2) if klass == "ExtSemantic" else 0
        v14 = make_version(klass, fields_for(klass), epoch)
        packages.append(Pkg(name, {"14.04": v14}))

    # -- extra 20.04-only fillers ------------------------------------------
    for _ in range(60):
        name = fresh_name()
        v20 = make_version("Semantic", fields_for("Semantic"), 0)
        packages.append(Pkg(name, {"20.04": v20}))

    # sprinkle extra dependencies over non-closure records for parser realism
    names_by_release = {rid: [p.name for p in packages if rid in p.versions]
                        for rid in SNAPSHOT_DATES}
    closure_set = set(closure_names) | {"ubuntu-minimal"}
    for p in packages:
        if p.name in closure_set or RNG.random() > 0.12:
            continue
        for rid in p.versions:
            target = RNG.choice(names_by_release[rid])
            if target == p.name:
                continue
            dep = target
            if RNG.random() < 0.4:
                dep += f" (>= {RNG.randint(0, 3)}.{RNG.randint(0, 9)})"
            p.depends.setdefault(rid, []).append(dep)

    return packages, members, upstream_rows


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

def stanza(p: Pkg, rid: str) -> str:
    lines = [f"Package: {p.name}", f"Architecture: amd64", f"Version: {p.versions[rid]}"]
    deps = p.depends.get(rid)
    if deps:
        lines.append("Depends: " + ", ".join(deps))
    if p.provides:
        lines.append("Provides: " + ", ".join(p.provides))
    if p.source:
        lines.append(f"Source: {p.source}")
    if p.homepage:
        lines.append(f"Homepage: {p.homepage}")
    lines.append(f"Description: synthetic corpus entry for {p.name}")
    if sum(map(ord, p.name)) % 5 == 0:
        lines.append(" extended description line for stanza-folding coverage")
    return "\n".join(lines)


def write_release(packages, rid: str) -> bytes:
    chunks = [stanza(p, rid) for p in sorted(packages, key=lambda p: p.name)
              if rid in p.versions]
    text = "\n\n".join(chunks) + "\n"
    buf = io.BytesIO()
    with gzip.GzipFile(fileobj=buf, mode="wb", mtime=0) as gz:
        gz.write(text.encode())
    return buf.getvalue()


def write_upstream_csv(upstream_rows) -> str:
    lines = ["package,class,major,minor,patch,upstream_date"]
    for name, klass, (M, m, p), date in sorted(upstream_rows):
        lines.append(f"{name},{klass},{M},{m},{p},{date}")
    return "\n".join(lines) + "\n"


CONF = """\
# Bundled analysis configuration: local fixture corpus, offline-friendly.
component=main
architecture=amd64
seed=ubuntu-minimal
meta_packages=ubuntu-minimal,ubuntu-standard
rules=manual_rules.tsv
upstream=upstream_releases.csv
release.14.04.codename=trusty
release.14.04.mirror=http://old-releases.ubuntu.com/ubuntu
release.14.04.file=fixtures/packages-14.04-main-amd64.gz
release.14.04.snapshot_date=2014-04-17
release.20.04.codename=focal
release.20.04.mirror=http://archive.ubuntu.com/ubuntu
release.20.04.file=fixtures/packages-20.04-main-amd64.gz
release.20.04.snapshot_date=2020-04-23
release.22.04.codename=jammy
release.22.04.mirror=http://archive.ubuntu.com/ubuntu
release.22.04.file=fixtures/packages-22.04-main-amd64.gz
release.22.04.snapshot_date=2022-04-21
"""


# ---------------------------------------------------------------------------
# Verification with the real pipeline
# ---------------------------------------------------------------------------

def verify(raw_indices, upstream_csv, members):
    meta = {"ubuntu-minimal", "ubuntu-standard"}
    snaps = {}
    for rid, data in raw_indices.items():
        text = ingest.decompress_index(data)
        records = ingest.parse_stanzas(text)
        snaps[rid] = ingest.build_snapshot(records, rid, meta)

    assert len(snaps["22.04"].records) == TOTAL_22, len(snaps["22.04"].records)
    assert len(snaps["14.04"].records) == TOTAL_14, len(snaps["14.04"].records)

    counts22, _, v22 = cls.census(snaps["22.04"], RULES)
    got = {k.value: n for k, n in counts22.items()}
    assert got == CENSUS_22, got

    common = ingest.common_real_packages(snaps["14.04"], snaps["22.04"])
    assert len(common) == COMMON_TOTAL, len(common)

    _, _, v14 = cls.census(snaps["14.04"], RULES)
    report = act.activity_report(common, v14, v22, ("14.04", "22.04"))
    assert report.evaluable == EVALUABLE, report.evaluable
    got_act = {lvl.value: n for lvl, n in report.counts.items()}
    assert got_act == ACTIVITY_TOTALS, got_act

    closure = ingest.dependency_closure(snaps["22.04"], "ubuntu-minimal")
    assert closure == set(members), sorted(closure ^ set(members))
    assert "awk" in snaps["22.04"].virtual_names

    seed_report = act.activity_report(common & closure, v14, v22, ("14.04", "22.04"))
    seed_counts = {lvl.value: n for lvl, n in seed_report.counts.items()}
    assert seed_counts["LightlyActive"] == 8 and seed_counts["Sedentary"] == 1, seed_counts
    light_or_sed = sorted(
        n for n, o in seed_report.per_package.items()
        if isinstance(o, act.ActivityLevel)
        and o in (act.ActivityLevel.LIGHTLY_ACTIVE, act.ActivityLevel.SEDENTARY))
    assert light_or_sed == sorted(n for n, *_ in NINE), light_or_sed

    import tempfile
    with tempfile.NamedTemporaryFile("w", suffix=".csv", delete=False) as fh:
        fh.write(upstream_csv)
        path = fh.name
    upstream = fresh.load_upstream_dataset(path)

    for rid in ("20.04", "22.04"):
        closure_r = ingest.dependency_closure(snaps[rid], "ubuntu-minimal")
        _, _, vr = cls.census(snaps[rid], RULES)
        rep = fresh.aggregate_freshness(closure_r, vr, upstream, rid, SNAPSHOT_DATES[rid])
        assert rep.libyears_days == DAY_TOTALS[rid], (rid, rep.libyears_days)
        exact = sum(
            (Fraction(7, 10) * (upstream[n].major - vr[n].major)
             + Fraction(2, 10) * (upstream[n].minor - vr[n].minor)
             + Fraction(1, 10) * (upstream[n].patch - vr[n].patch))
            for n in closure_r)
        assert exact == Fraction(DELTA_TENTHS[rid], 10), (rid, exact)
        assert abs(rep.libyears_version_delta - DELTA_TENTHS[rid] / 10) < 1e-9
        if rid == "20.04":
            # published aggregate reproduced within the pinned tolerance
            assert abs(rep.libyears_version_delta - 53.89) <= 0.01, rep.libyears_version_delta
        print(f"  {rid}: version-delta={rep.libyears_version_delta:.4f} "
              f"days={rep.libyears_days} coverage={rep.coverage:.2f}")
    print("verification passed")


def main():
    packages, members, upstream_rows = build_all()
    raw = {rid: write_release(packages, rid) for rid in SNAPSHOT_DATES}
    upstream_csv = write_upstream_csv(upstream_rows)
    verify(raw, upstream_csv, members)

    FIXTURES.mkdir(parents=True, exist_ok=True)
    for rid, data in raw.items():
        (FIXTURES / f"packages-{rid}-main-amd64.gz").write_bytes(data)
    (DATA / "upstream_releases.csv").write_text(upstream_csv)
    (DATA / "analysis.conf").write_text(CONF)
    print("wrote", FIXTURES)


if __name__ == "__main__":
    main()

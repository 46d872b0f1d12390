"""Acceptance suite: one test and one printed PASS/FAIL line per criterion.

Each test runs the library's criterion function and then re-derives the key
numbers with an independent oracle from ``oracles.py`` (determinants instead
of the singular-locus code, definitions instead of the fast paths).  Run it
directly for just the nine lines:

    python3 tests/test_acceptance.py
"""
import random
import sys
from itertools import combinations
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arrangio.fields import QQ  # noqa: E402
from arrangio.generators import boroczky, example_nine, hesse_dual, hesse_points, random_supersolvable  # noqa: E402
from arrangio.projective import Point, incident, join  # noqa: E402
from arrangio.slopes import PointConfig, slopes_count  # noqa: E402
from arrangio.ssconfig import Inconclusive, bm_template, realize_or_refute, replay, search_classify  # noqa: E402
from arrangio import verify  # noqa: E402

from oracles import (  # noqa: E402
    all_valid_by_brute_force,
    canonical,
    concurrency_classes_by_det,
    modular_by_join,
    multiplicity_counts,
    nbc_by_definition,
)


@pytest.fixture
def report(capsys):
    def emit(result):
        with capsys.disabled():
            print("\n" + result.line())
            for f in result.failures[:6]:
                print(f"       {f}")
        return result
    return emit


def test_criterion_1_boroczky(report):
    r = report(verify.criterion_boroczky())
    for m in range(3, 9):
        A = boroczky(m)
        counts = multiplicity_counts(A)
        assert counts.get(2) == m
        assert sum(counts.values()) == comb(m + 1, 2) + 1
        assert Point((0, 0, 1), A.spec) in modular_by_join(A)
    assert r.passed, r.failures


def test_criterion_2_example_nine(report):
    r = report(verify.criterion_example_nine())
    A = example_nine()
    assert multiplicity_counts(A) == {2: 6, 3: 4, 4: 3}
    assert sum(multiplicity_counts(A).values()) == 13
    assert Point((1, 1, 0), QQ) in modular_by_join(A)
    assert r.values["dirac_motzkin"] == [6, "9/2"]
    assert r.passed, r.failures


def test_criterion_3_hesse(report):
    r = report(verify.criterion_hesse())
    A = hesse_dual()
    assert multiplicity_counts(A) == {3: 12}
    assert modular_by_join(A) == []
    # any two inflection points are collinear with a third
    pts = hesse_points()
    for p, q in combinations(pts, 2):
        line = join(p, q)
        assert sum(incident(x, line) for x in pts) == 3
    assert r.passed, r.failures


def test_criterion_4_identities(report):
    r = report(verify.criterion_identities())
    assert r.values["arrangements"] >= 1000
    rng = random.Random(99)
    for _ in range(100):
        A = random_supersolvable(rng)
        classes = concurrency_classes_by_det(A)
        assert sum(comb(len(c), 2) for c in classes) == comb(A.n, 2)
    assert r.passed, r.failures


def test_criterion_5_slopes(report):
    r = report(verify.criterion_slopes())
    sq = PointConfig(((0, 0), (1, 0), (0, 1), (1, 1)))
    # slopes 0, infinity, 1, -1
    assert slopes_count(sq)[0] == 4
    assert r.passed, r.failures


def test_criterion_6_nbc(report):
    r = report(verify.criterion_nbc())
    for m in range(3, 9):
        A = boroczky(m)
        full = nbc_by_definition(A, list(range(2 * m)))
        listed = verify.listed_nbc_pairs(m)
        # the listed pairs are genuine NBC pairs, but the definition yields m^2 + m - 1 of them
        assert listed <= full
        assert len(full) == m * m + m - 1
        assert r.values[str(m)]["anchored_equals_list"]
        assert r.values[str(m)]["equivalent"] and r.values[str(m)]["witness_valid"]
    assert r.passed, r.failures


def test_criterion_7_classification(report):
    r = report(verify.criterion_classification())
    brute = {canonical(5, labels) for labels in all_valid_by_brute_force(5, True)}
    assert len(brute) == len(r.values["5"]["classes"]) == 4
    assert r.values["6"]["classes"] == 35
    assert r.passed, r.failures


def test_criterion_8_certificates(report):
    r = report(verify.criterion_certificates())
    for m in range(3, 11):
        cert = realize_or_refute(bm_template(m), QQ)
        assert cert.coefficient == m - 1 and replay(cert, bm_template(m))
    assert r.passed, r.failures


def test_criterion_9_small_m(report):
    r = report(verify.criterion_small_m_unrealizable())
    open_classes = [c for c in search_classify(5).classes if not c.is_bm and not c.contains_bk]
    assert len(open_classes) == 1
    assert isinstance(realize_or_refute(open_classes[0].representative, QQ), Inconclusive)
    assert r.passed, r.failures


if __name__ == "__main__":
    results = verify.run_criteria()
    for res in results:
        print(res.line())
    sys.exit(0 if all(res.passed for res in results) else 1)

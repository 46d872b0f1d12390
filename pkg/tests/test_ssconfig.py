import random
from itertools import combinations, permutations

import pytest

from arrangio.errors import DependentForms, InvalidConfig, ParameterOutOfRange
from arrangio.fields import QQ, PrimeField
from arrangio.generators import fano
from arrangio.projective import Point
from arrangio.ssconfig import (
    Inconclusive,
    Realization,
    RefutationCertificate,
    SSConfig,
    bm_template,
    claim_sequence_check,
    concurrency_classes,
    config_validate,
    product_in_meet_ideals,
    contains_bk,
    enumerate_labelings,
    induced_arrangement,
    realize_or_refute,
    replay,
    search_classify,
    ssconfig_from_arrangement,
    verify_realization,
)

from oracles import all_valid_by_brute_force, canonical, closure_by_definition, contains_bk_by_brute_force, pairs


# --- templates and validation ---------------------------------------------------

def test_bm_small_templates():
    assert bm_template(3).k == {(1, 2): 3, (1, 3): 2, (2, 3): 1}
    b4 = bm_template(4)
    assert b4.label(2, 3) == b4.label(2, 4) == b4.label(3, 4) == 1
    for m in range(3, 11):
        assert config_validate(bm_template(m), require_surjective=True).valid
    with pytest.raises(ParameterOutOfRange):
        bm_template(2)


def test_invalid_example():
    cfg = SSConfig(3, {(1, 2): 3, (1, 3): 2, (2, 3): 3})
    res = config_validate(cfg)
    assert not res.valid
    kinds = {v["kind"] for v in res.violations}
    assert "closure" in kinds and "bad_label" in kinds


def test_other_violations():
    res = config_validate(SSConfig(4, {(1, 2): 3, (2, 1): 4}), require_surjective=True)
    kinds = {v["kind"] for v in res.violations}
    assert {"conflicting_labels", "missing_label", "unused_label"} <= kinds
    res = config_validate(SSConfig(3, {(1, 2): 3, (1, 3): 2, (2, 3): 1, (3, 7): 1}))
    assert [v["kind"] for v in res.violations] == ["pair_out_of_range"]


def test_all_distinct_triangle_is_valid():
    for labels in permutations([1, 2, 3]):
        cfg = SSConfig.from_labels(3, labels)
        ok = all(t not in p for p, t in cfg.k.items())
        assert config_validate(cfg).valid == ok


@pytest.mark.parametrize("m", [4, 5])
def test_validate_matches_definition_on_random_labelings(m):
    rng = random.Random(m)
    for _ in range(500):
        k = {p: rng.choice([t for t in range(1, m + 1) if t not in p]) for p in pairs(m)}
        assert config_validate(SSConfig(m, k)).valid == closure_by_definition(m, k)


def test_concurrency_classes_of_b4():
    assert sorted(concurrency_classes(bm_template(4))) == [(1, (2, 3, 4)), (2, (1, 4)), (3, (1, 2)), (4, (1, 3))]


# --- enumeration and classification ----------------------------------------------

@pytest.mark.parametrize("m,surjective", [(3, False), (4, False), (4, True), (5, True)])
def test_enumeration_matches_brute_force(m, surjective):
    fast = sorted(enumerate_labelings(m, surjective))
    assert fast == sorted(all_valid_by_brute_force(m, surjective))


def test_class_counts():
    assert len(search_classify(3, True).classes) == 1
    c4 = search_classify(4, True)
    assert (c4.labelings, len(c4.classes)) == (8, 1) and c4.classes[0].is_bm
    c5 = search_classify(5, True)
    assert (c5.labelings, len(c5.classes)) == (111, 4)
    assert sum(c.orbit_size for c in c5.classes) == 111
    brute = {canonical(5, labels) for labels in all_valid_by_brute_force(5, True)}
    assert {c.representative.key for c in c5.classes} == brute


def test_m5_classes_and_the_exceptional_one():
    c5 = search_classify(5, True)
    plain = [c for c in c5.classes if not c.is_bm and not c.contains_bk]
    assert len(plain) == 1
    exc = plain[0]
    assert exc.orbit_size == 6
    cfg = exc.representative
    # every triangle carries exactly one label from inside it
    for tri in combinations(range(1, 6), 3):
        inside = sum(1 for a, b in combinations(tri, 2) if cfg.label(a, b) in tri)
        assert inside == 1
    assert isinstance(realize_or_refute(cfg, QQ), Inconclusive)


def test_exceptional_class_has_no_complex_solution():
    sp = pytest.importorskip("sympy")
    cfg = [c for c in search_classify(5, True).classes if not c.is_bm and not c.contains_bk][0].representative
    a = sp.symbols("a3:6")
    b = sp.symbols("b3:6")
    s = sp.Symbol("s")
    v = {1: (1, 0), 2: (0, 1), 3: (a[0], b[0]), 4: (a[1], b[1]), 5: (a[2], b[2])}
    D = lambda u, w: u[0] * w[1] - u[1] * w[0]
    eqs = [sp.expand(D(v[t], (v[i][0] - v[j][0], v[i][1] - v[j][1]))) for (i, j), t in cfg.k.items()]
    nonzero = sp.Mul(*[D(v[i], v[j]) for i, j in combinations(range(1, 6), 2)])
    G = sp.groebner(eqs + [sp.expand(s * nonzero - 1)], *a, *b, s, order="grevlex")
    assert list(G.exprs) == [1]


def test_surjective_mode_changes_nothing_up_to_five():
    for m in (3, 4, 5):
        a = {c.representative.key for c in search_classify(m, False).classes}
        b = {c.representative.key for c in search_classify(m, True).classes}
        assert a == b


def test_classification_is_relabeling_invariant():
    rng = random.Random(0)
    c5 = search_classify(5, True)
    keys = {c.representative.key for c in c5.classes}
    for c in c5.classes:
        perm = list(range(1, 6))
        rng.shuffle(perm)
        moved = c.representative.relabel([0] + perm)
        assert canonical(5, moved.key) in keys


def test_large_m_needs_budget():
    with pytest.raises(ParameterOutOfRange):
        search_classify(7)
    probe = search_classify(7, True, probe_budget=2000)
    assert not probe.exhaustive


# --- containment -----------------------------------------------------------------

def test_containment_examples():
    c = contains_bk(bm_template(5), 5)
    assert c.found and c.subset == (1, 2, 3, 4, 5)
    assert not contains_bk(bm_template(4), 3)
    # closure leaves no room for B(3) inside a complete m = 4 labelling
    assert not any(contains_bk_by_brute_force(SSConfig.from_labels(4, l), 3) for l in all_valid_by_brute_force(4, False))
    # B(3) on {1,2,3}, extended to m = 5
    cfg = SSConfig(5, {(1, 2): 3, (1, 3): 2, (2, 3): 1, (1, 4): 2, (1, 5): 2, (2, 4): 5,
                       (2, 5): 4, (3, 4): 2, (3, 5): 2, (4, 5): 2})
    assert config_validate(cfg).valid
    c = contains_bk(cfg, 3)
    assert c.found and c.subset == (1, 2, 3)
    assert cfg.restrict(c.subset) == bm_template(3)
    assert contains_bk_by_brute_force(cfg, 3)
    with pytest.raises(ParameterOutOfRange):
        contains_bk(cfg, 6)


def test_recognizer_matches_brute_force():
    for m in (4, 5):
        for labels in enumerate_labelings(m, True):
            cfg = SSConfig.from_labels(m, labels)
            for k in range(3, m + 1):
                assert bool(contains_bk(cfg, k)) == contains_bk_by_brute_force(cfg, k)


def test_fano_reads_as_b3():
    A = fano()
    P = A.singular_locus[0].point
    split = A.split_by_modular(P)
    cfg, fiber, primed = ssconfig_from_arrangement(A, P, split.avoiding[0])
    assert cfg.m == 3 and contains_bk(cfg, 3)


# --- realize or refute ------------------------------------------------------------

@pytest.mark.parametrize("m", range(3, 11))
def test_bm_certificate_over_q(m):
    cert = realize_or_refute(bm_template(m), QQ)
    assert isinstance(cert, RefutationCertificate)
    assert cert.coefficient == m - 1
    assert cert.identity == f"{m - 1}*(a1*b2 - a2*b1) = 0"
    assert replay(cert, bm_template(m))


def test_replay_rejects_tampering():
    cfg = bm_template(5)
    cert = realize_or_refute(cfg, QQ)
    step = next(s for s in cert.trace if s["step"] == "determine")
    step["value"] = ["7", "7"]
    assert not replay(cert, cfg)


@pytest.mark.parametrize("m,p", [(3, 2), (4, 3), (5, 2), (7, 3), (6, 5)])
def test_bm_over_prime_fields(m, p):
    res = realize_or_refute(bm_template(m), PrimeField(p))
    # every case has p | m - 1; F_p^2 only holds p + 1 directions
    if m <= p + 1:
        assert isinstance(res, Realization)
        assert all(res.verified.values())
        assert product_in_meet_ideals([res.coordinates[i] for i in sorted(res.coordinates)], PrimeField(p))
    else:
        assert isinstance(res, RefutationCertificate) and res.kind == "distinctness"
        assert replay(res, bm_template(m))


def test_invalid_config_is_refused():
    with pytest.raises(InvalidConfig):
        realize_or_refute(SSConfig(3, {(1, 2): 3, (1, 3): 2, (2, 3): 3}))


def realizations_over_small_primes():
    found = []
    for m in (3, 4, 5):
        for c in search_classify(m, True).classes:
            for p in (2, 3, 5, 7):
                res = realize_or_refute(c.representative, PrimeField(p))
                if isinstance(res, Realization):
                    found.append((c.representative, res))
    return found


def test_realizations_read_back_through_the_point_model():
    found = realizations_over_small_primes()
    assert len(found) >= 2
    for cfg, res in found:
        A = induced_arrangement(res.coordinates, res.spec)
        back, fiber, primed = ssconfig_from_arrangement(A, Point((0, 0, 1), res.spec), A.n - 1)
        assert back == cfg
        assert config_validate(back).valid
        assert verify_realization(cfg, res.coordinates, res.spec) == res.verified


def test_claim_sequence():
    rows = claim_sequence_check(5)
    assert [r.value for r in rows] == [1, 2, 3, 4] and all(r.ok for r in rows)
    rows = claim_sequence_check(3)
    assert rows[0].value == 1
    for m in range(3, 10):
        assert all(r.ok for r in claim_sequence_check(m))


def test_claim_sequence_under_normalization_m4():
    res = realize_or_refute(bm_template(4), QQ)
    values = {s["index"]: s["value"] for s in res.trace if s["step"] == "determine"}
    # a_{4-i} b_2 - a_2 b_{4-i} = a_{4-i} when v_2 = (0, 1)
    assert values[4][0] == "1" and values[3][0] == "2"


def test_product_in_meet_ideals():
    assert not product_in_meet_ideals([(1, 0), (0, 1)], QQ)
    f2 = PrimeField(2)
    assert product_in_meet_ideals([(1, 0), (0, 1), (1, 1)], f2)
    with pytest.raises(DependentForms):
        product_in_meet_ideals([(1, 0), (2, 0)], QQ)


def test_m6_every_class_is_refuted_over_q():
    c6 = search_classify(6)
    assert (c6.labelings, len(c6.classes)) == (22584, 35)
    for c in c6.classes:
        cert = realize_or_refute(c.representative, QQ)
        assert isinstance(cert, RefutationCertificate)
        assert replay(cert, c.representative)

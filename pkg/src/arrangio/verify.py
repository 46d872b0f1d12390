"""The full battery of quantitative checks, one :class:`CriterionResult` per item.

Each ``criterion_*`` function is self-contained and returns exact values next
to its verdict, so a failing item shows exactly what was computed.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .analysis import (
    simple_plus_max_check,
    dirac_motzkin_check,
    h_sing_count,
    line_profiles,
    sing_bound_check,
    simple_point_partners,
    supersolvability_exclusion,
)
from .arrangement import Arrangement
from .errors import AllCollinear
from .fields import QQ, PrimeField
from .generators import boroczky, example_nine, fano, hesse_dual, near_pencil, random_supersolvable
from .nbc import OrderedArrangement, anchored_nbc, equiv_2m_verdict, quadratic_nbc
from .projective import Point
from .slopes import PointConfig, connecting_lines, slope_theorem_check
from .ssconfig import (
    Realization,
    RefutationCertificate,
    bm_template,
    contains_bk,
    realize_or_refute,
    replay,
    search_classify,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    values: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] criterion {self.number}: {self.name}"

    def to_dict(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "passed": self.passed,
            "values": self.values,
            "failures": self.failures,
        }



def listed_nbc_pairs(m: int) -> set:
    """(L'_0, L'_i) for 1 <= i < m and (L'_{2j mod m}, L_j), as index pairs earlier-first."""
    return {(0, i) for i in range(1, m)} | {((2 * j) % m, m + j) for j in range(m)}


# --- 1 ---------------------------------------------------------------------------

def criterion_boroczky(ms=range(3, 11)) -> CriterionResult:
    rows, failures = {}, []
    for m in ms:
        A = boroczky(m)
        P = Point((0, 0, 1), A.spec)
        partners = simple_point_partners(A, P) if A.is_modular(P) else {}
        u = sorted(p.u for p in line_profiles(A, P) if p.through_modular)
        expected_u = [1] * m if m % 2 else [0] * (m // 2) + [2] * (m // 2)
        h_sing = h_sing_count(A, P)
        row = {
            "n": A.n,
            "modular_origin": A.is_modular(P),
            "m_origin": A.multiplicity(P),
            "m_max": A.max_multiplicity,
            "sing2": A.simple_count,
            "sing": A.sing_count,
            "h_sing": h_sing,
            "partner_map": {j - m: v for j, v in partners.items()},
            "u_through_origin": u,
        }
        checks = {
            "n = 2m": A.n == 2 * m,
            "origin modular": row["modular_origin"] and row["m_origin"] == m == row["m_max"],
            "|Sing2| = m": row["sing2"] == m,
            "|Sing| = C(m+1,2)+1": row["sing"] == comb(m + 1, 2) + 1,
            "A_h generic": h_sing == comb(m, 2),
            "simple partner j -> 2j mod m": all(partners.get(m + j) == [(2 * j) % m] for j in range(m)),
            "u parity pattern": u == expected_u,
        }
        failures += [f"m={m}: {k}" for k, ok in checks.items() if not ok]
        rows[str(m)] = row
    return CriterionResult(1, "Boroczky family invariants, m = 3..10", not failures, rows, failures)


# --- 2 ---------------------------------------------------------------------------

def criterion_example_nine(A: Arrangement | None = None) -> CriterionResult:
    A = A if A is not None else example_nine()
    failures = []
    values = {"n": A.n, "sing": A.sing_count, "sing2": A.simple_count, "m_max": A.max_multiplicity}
    Q = Point((1, 1, 0), A.spec)
    if A.n != 9:
        failures.append(f"n = {A.n}, expected 9")
    if A.max_multiplicity != 4:
        failures.append(f"m(A) = {A.max_multiplicity}, expected 4")
    if A.sing_count != 13:
        failures.append(f"|Sing| = {A.sing_count}, expected 13")
    if A.simple_count != 6:
        failures.append(f"|Sing2| = {A.simple_count}, expected 6")
    if not A.pairs_identity_holds():
        failures.append("pairs identity fails")
    if A.rank == 3 and A.is_modular(Q) and A.multiplicity(Q) == A.max_multiplicity >= 3:
        dm, co, sb = dirac_motzkin_check(A), simple_plus_max_check(A), sing_bound_check(A)
        values.update({
            "dirac_motzkin": [dm.lhs, str(dm.rhs)],
            "simple_plus_max": [co.lhs, str(co.rhs)],
            "sing_bound": [sb.lhs, str(sb.rhs)],
            "h_sing": sb.detail["h_sing"],
        })
        if (dm.lhs, dm.rhs) != (6, Fraction(9, 2)) or not dm.holds:
            failures.append("Dirac-Motzkin instance is not 6 >= 9/2")
        if (co.lhs, co.rhs) != (10, 9) or not co.holds:
            failures.append("simple-plus-max instance is not 10 >= 9")
        if (sb.lhs, sb.rhs) != (6, 4) or sb.equality or sb.detail["h_generic"] or sb.detail["h_sing"] != 6:
            failures.append("singularity bound instance is not 6 > 4 with |Sing(A_h)| = 6")
    else:
        failures.append("[1, 1, 0] is not a modular point of maximal multiplicity")
    return CriterionResult(2, "nine-line arrangement", not failures, values, failures)


# --- 3 ---------------------------------------------------------------------------

def criterion_hesse() -> CriterionResult:
    A = hesse_dual()
    ex = supersolvability_exclusion(A)
    values = {
        "t_k": {str(k): v for k, v in A.t_k.items()},
        "supersolvable": A.is_supersolvable(),
        "sing": A.sing_count,
        "ceiling_if_supersolvable": ex.detail["ceiling"],
    }
    failures = []
    if A.t_k != {3: 12}:
        failures.append(f"t_k = {A.t_k}, expected twelve triple points")
    if A.is_supersolvable():
        failures.append("reported supersolvable")
    if Fraction(ex.detail["ceiling"]) != 10 or not ex.holds:
        failures.append(f"exclusion ceiling {ex.detail['ceiling']}, expected 10 < 12")
    return CriterionResult(3, "Hesse dual is not supersolvable", not failures, values, failures)


# --- 4 ---------------------------------------------------------------------------

def criterion_identities(instances: int = 1000, seed: int = 20240101) -> CriterionResult:
    rng = random.Random(seed)
    fixtures = [example_nine(), hesse_dual(), fano(), near_pencil(5), near_pencil(7)]
    fixtures += [boroczky(m) for m in range(3, 8)]
    failures = []
    checked = supersolvable = 0
    for k in range(len(fixtures) + instances):
        A = fixtures[k] if k < len(fixtures) else random_supersolvable(rng)
        checked += 1
        if not A.pairs_identity_holds():
            failures.append(f"pairs identity: {A!r} #{k}")
        if not all(li.ok for li in A.line_identity_check()):
            failures.append(f"line identity: {A!r} #{k}")
        if A.rank == 3 and A.is_supersolvable():
            supersolvable += 1
            top = A.max_multiplicity
            if not all(A.is_modular(sp.point) for sp in A.singular_locus if sp.multiplicity == top):
                failures.append(f"max-multiplicity point not modular: {A!r} #{k}")
    values = {"arrangements": checked, "supersolvable": supersolvable, "seed": seed}
    return CriterionResult(4, "incidence identities and modularity of max points", not failures, values, failures[:20])


# --- 5 ---------------------------------------------------------------------------

def random_point_config(rng: random.Random, n: int) -> PointConfig:
    while True:
        pts = set()
        while len(pts) < n:
            pts.add((Fraction(rng.randint(-6, 6), rng.randint(1, 3)), Fraction(rng.randint(-6, 6), rng.randint(1, 3))))
        cfg = PointConfig(tuple(sorted(pts)))
        try:
            connecting_lines(cfg)
            return cfg
        except AllCollinear:
            continue


def criterion_slopes(instances: int = 200, seed: int = 7) -> CriterionResult:
    rng = random.Random(seed)
    failures = []
    square = slope_theorem_check(PointConfig(((0, 0), (1, 0), (0, 1), (1, 1))))
    if (square.w, square.apd.n) != (4, 8):
        failures.append(f"unit square: w = {square.w}, |A_PD| = {square.apd.n}")
    for k in range(instances):
        cfg = random_point_config(rng, rng.randint(3, 8))
        rep = slope_theorem_check(cfg)
        bad = [name for name in ("slope_bound", "apd_supersolvable", "m_pmod_equals_m_apd", "biconditional_agrees")
               if not rep.checks[name]]
        if bad:
            failures.append(f"config {k} ({cfg.points}): {bad}")
    values = {"unit_square": {"w": square.w, "apd_size": square.apd.n}, "instances": instances, "seed": seed}
    return CriterionResult(5, "slope problem and the dual arrangement", not failures, values, failures)


# --- 6 ---------------------------------------------------------------------------

def criterion_nbc(ms=range(3, 9), seed: int = 3) -> CriterionResult:
    rng = random.Random(seed)
    failures, rows = [], {}
    for m in ms:
        A = boroczky(m)
        oa = OrderedArrangement(A, tuple(range(2 * m)))
        full = quadratic_nbc(oa)
        anchored = anchored_nbc(oa, Point((0, 0, 1), A.spec))
        expected = listed_nbc_pairs(m)
        lines = list(A.lines)
        perm = list(range(2 * m))
        rng.shuffle(perm)
        B = Arrangement([lines[i] for i in perm], A.spec)
        verdict = equiv_2m_verdict(A, B)
        witness_ok = _witness_valid(A, B, verdict.witness)
        rows[str(m)] = {
            "nbc_size": len(full),
            "listed_size": len(expected),
            "anchored_equals_list": set(anchored.pairs) == expected,
            "equivalent": verdict.equivalent,
            "witness_valid": witness_ok,
        }
        if set(full.pairs) != expected:
            failures.append(f"m={m}: quadratic NBC has {len(full)} pairs, listed {len(expected)}")
        if not (verdict.equivalent and witness_ok):
            failures.append(f"m={m}: equivalence verdict or witness failed")
    return CriterionResult(6, "quadratic NBC list and equivalence verdict", not failures, rows, failures)


def _witness_valid(A: Arrangement, B: Arrangement, sigma: dict) -> bool:
    """sigma carries every singular point of A onto one of B."""
    if sigma is None or sorted(sigma.values()) != list(range(B.n)):
        return False
    target = {sp.incident for sp in B.singular_locus}
    return all(frozenset(sigma[i] for i in sp.incident) in target for sp in A.singular_locus) and len(target) == len(A.singular_locus)


# --- 7 ---------------------------------------------------------------------------

def criterion_classification(probe_m6: bool = True) -> CriterionResult:
    failures, values = [], {}
    for m in (3, 4, 5):
        t0 = time.perf_counter()
        cls = search_classify(m, require_surjective=True)
        elapsed = time.perf_counter() - t0
        values[str(m)] = {
            "labelings": cls.labelings,
            "classes": [{"is_bm": c.is_bm, "contains_bk": c.contains_bk, "orbit": c.orbit_size} for c in cls.classes],
        }
        if m == 3 and not (len(cls.classes) == 1 and cls.classes[0].is_bm):
            failures.append("m=3: not exactly one class equal to B(3)")
        for c in cls.classes:
            if not (c.is_bm or c.contains_bk):
                failures.append(f"m={m}: class {c.representative} is neither B({m}) nor contains a smaller B(k)")
        if m == 5 and elapsed >= 10:
            failures.append(f"m=5 search took {elapsed:.1f} s")
    if probe_m6:
        t0 = time.perf_counter()
        cls = search_classify(6, require_surjective=True)
        elapsed = time.perf_counter() - t0
        values["6"] = {"labelings": cls.labelings, "classes": len(cls.classes),
                       "neither_bm_nor_containing": sum(1 for c in cls.classes if not (c.is_bm or c.contains_bk))}
        if elapsed >= 600:
            failures.append(f"m=6 probe took {elapsed:.0f} s")
    return CriterionResult(7, "classification of labelled configurations", not failures, values, failures)


# --- 8 ---------------------------------------------------------------------------

def criterion_certificates() -> CriterionResult:
    failures, values = [], {}
    for m in range(3, 11):
        cfg = bm_template(m)
        r = realize_or_refute(cfg, QQ)
        ok = isinstance(r, RefutationCertificate) and r.coefficient == m - 1 and replay(r, cfg)
        values[f"B({m})/Q"] = r.identity if isinstance(r, RefutationCertificate) else type(r).__name__
        if not ok:
            failures.append(f"B({m}) over Q: no replayable certificate with coefficient {m - 1}")
    for m, p in ((3, 2), (4, 3), (5, 2)):
        r = realize_or_refute(bm_template(m), PrimeField(p))
        key = f"B({m})/F{p}"
        if isinstance(r, Realization):
            values[key] = r.verified
            if not all(r.verified.values()):
                failures.append(f"{key}: realization failed verification {r.verified}")
        else:
            values[key] = r.to_dict() if isinstance(r, RefutationCertificate) else type(r).__name__
            failures.append(f"{key}: expected a realization, got {type(r).__name__}"
                            + (f" ({r.kind} {r.failing})" if isinstance(r, RefutationCertificate) else ""))
    return CriterionResult(8, "certificates and finite-field realizations", not failures, values, failures)


# --- 9 ---------------------------------------------------------------------------

def criterion_small_m_unrealizable() -> CriterionResult:
    """Every closure-valid configuration with m <= 5 is refuted over Q, directly or through a B(k) inside it."""
    failures, values = [], {}
    refuted_bk = {k: isinstance(realize_or_refute(bm_template(k), QQ), RefutationCertificate) for k in (3, 4, 5)}
    for m in (3, 4, 5):
        cls = search_classify(m, require_surjective=False)
        tally = {"direct": 0, "via_subconfiguration": 0, "open": 0}
        for c in cls.classes:
            r = realize_or_refute(c.representative, QQ)
            if isinstance(r, RefutationCertificate) and replay(r, c.representative):
                tally["direct"] += 1
            elif any(refuted_bk[k] and contains_bk(c.representative, k) for k in range(3, m)):
                tally["via_subconfiguration"] += 1
            else:
                tally["open"] += 1
                failures.append(f"m={m}: {c.representative} -> {type(r).__name__}")
        values[str(m)] = tally
    return CriterionResult(9, "no labelled configuration with m <= 5 is realizable in characteristic 0",
                           not failures, values, failures)


CRITERIA = {
    "boroczky": criterion_boroczky,
    "example9": criterion_example_nine,
    "hesse": criterion_hesse,
    "identities": criterion_identities,
    "slopes": criterion_slopes,
    "nbc": criterion_nbc,
    "classification": criterion_classification,
    "certificates": criterion_certificates,
    "small-m": criterion_small_m_unrealizable,
}


def run_criteria(only: str | None = None, example9: Arrangement | None = None) -> list:
    """Run every criterion whose key contains ``only`` (all when None)."""
    results = []
    for key, fn in CRITERIA.items():
        if only and only not in key:
            continue
        results.append(fn(example9) if key == "example9" else fn())
    return results

"""Simple-point bounds for supersolvable arrangements, checked exactly.

Every check returns a :class:`TheoremCheck` whose ``lhs`` and ``rhs`` are exact
(int / Fraction).  ``hypothesis_met`` records whether the arrangement satisfies
the hypotheses under which the inequality is a theorem (realness for the
Dirac-Motzkin type statements, characteristic zero for the singularity
bound); a check whose hypothesis is not met is still evaluated, but a failure
there is not a theorem violation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .arrangement import Arrangement
from .errors import HypothesisNotMet, MultiplicityTooSmall, NotFullRank, NotModular, NotSupersolvable
from .projective import Point


@dataclass
class TheoremCheck:
    name: str
    hypothesis_met: bool
    lhs: int
    rhs: Fraction
    detail: dict = field(default_factory=dict)
    kind: str = "theorem"  # "diagnostic" checks never count as failures

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def failed(self) -> bool:
        """A genuine violation: hypotheses met and the inequality false."""
        return self.kind == "theorem" and self.hypothesis_met and not self.holds

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "hypothesis_met": self.hypothesis_met,
            "lhs": self.lhs,
            "rhs": _num_text(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "kind": self.kind,
            **({"detail": self.detail} if self.detail else {}),
        }


@dataclass
class TheoremReport:
    arrangement: str
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not any(c.failed for c in self.checks)

    def to_dict(self) -> dict:
        return {"arrangement": self.arrangement, "ok": self.ok, "checks": [c.to_dict() for c in self.checks]}


def _num_text(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _require_supersolvable(A: Arrangement) -> Point:
    if A.rank != 3:
        raise NotFullRank(f"rank {A.rank}; these checks need full rank 3")
    witness = A.supersolvable_witness()
    if witness is None:
        raise NotSupersolvable(f"{A!r} has no modular point")
    return witness


def dirac_motzkin_check(A: Arrangement) -> TheoremCheck:
    """|Sing_2(A)| >= n/2 for a real supersolvable arrangement."""
    _require_supersolvable(A)
    return TheoremCheck("dirac_motzkin", A.is_real(), A.simple_count, Fraction(A.n, 2))


def simple_plus_max_check(A: Arrangement) -> TheoremCheck:
    """|Sing_2(A)| + m(A) >= n for a real supersolvable arrangement."""
    _require_supersolvable(A)
    return TheoremCheck("simple_plus_max", A.is_real(), A.simple_count + A.max_multiplicity, Fraction(A.n))


def h_part(A: Arrangement, P: Point | None = None) -> Arrangement | None:
    """Lines avoiding the modular point P (default: the max-multiplicity witness)."""
    P = P if P is not None else _require_supersolvable(A)
    split = A.split_by_modular(P)
    return split.h_part(A) if split.avoiding else None


def h_sing_count(A: Arrangement, P: Point | None = None) -> int:
    h = h_part(A, P)
    return 0 if h is None else h.sing_count


def sing_bound_check(A: Arrangement) -> TheoremCheck:
    """|Sing_2| >= 2|Sing| - m(n - m) - 2, with equality iff the h-part is generic.

    When the h-part is generic the closed form |Sing_2| = (n - m)(2m - n + 1)
    is also evaluated and reported in ``detail``.
    """
    P = _require_supersolvable(A)
    n, m = A.n, A.max_multiplicity
    if m < 3:
        raise MultiplicityTooSmall(f"m(A) = {m}; the bound needs m >= 3")
    h_sing = h_sing_count(A, P)
    generic = h_sing == comb(n - m, 2)
    lhs = A.simple_count
    rhs = Fraction(2 * A.sing_count - m * (n - m) - 2)
    detail = {
        "h_sing": h_sing,
        "h_generic": generic,
        "singularity_formula": lhs == A.sing_count - h_sing - 1,
        "equality_iff_generic": (lhs == rhs) == generic,
    }
    if generic:
        detail["closed_form"] = (n - m) * (2 * m - n + 1)
        detail["closed_form_holds"] = lhs == detail["closed_form"]
    return TheoremCheck("sing_bound", A.spec.characteristic == 0, lhs, rhs, detail)


def sing_ceiling_if_supersolvable(A: Arrangement) -> Fraction:
    """Largest |Sing| compatible with the singularity bound, were A supersolvable.

    Rearranges |Sing_2| >= 2|Sing| - m(n - m) - 2 into an upper bound on |Sing|.
    """
    n, m = A.n, A.max_multiplicity
    return Fraction(A.simple_count + m * (n - m) + 2, 2)


def supersolvability_exclusion(A: Arrangement) -> TheoremCheck:
    """Evidence that A is not supersolvable: |Sing| exceeds the bound's ceiling.

    ``holds`` here means the exclusion argument goes through
    (the bound is violated, so A cannot be supersolvable).
    """
    ceiling = sing_ceiling_if_supersolvable(A)
    return TheoremCheck(
        "supersolvability_exclusion",
        A.max_multiplicity >= 3 and A.spec.characteristic == 0,
        A.sing_count,
        ceiling + 1,
        {"ceiling": _num_text(ceiling), "supersolvable": A.rank == 3 and A.is_supersolvable()},
        kind="diagnostic",
    )


@dataclass(frozen=True)
class LineProfile:
    line: int
    through_modular: bool
    u: int  # simple points
    v: int  # triple points
    higher: dict  # multiplicity >= 4 -> count, excluding the modular point
    identity_ok: bool


def line_profiles(A: Arrangement, P: Point) -> list:
    """Per-line counts of simple, triple and higher points other than P."""
    if not A.is_modular(P):
        raise NotModular(f"{P} is not modular")
    mP = A.multiplicity(P)
    out = []
    for i in range(A.n):
        u = v = 0
        higher: dict = {}
        through = False
        total = 0
        for sp in A.points_on(i):
            if sp.point == P:
                through = True
                total += mP - 1
                continue
            k = sp.multiplicity
            total += k - 1
            if k == 2:
                u += 1
            elif k == 3:
                v += 1
            else:
                higher[k] = higher.get(k, 0) + 1
        out.append(LineProfile(i, through, u, v, higher, total == A.n - 1))
    return out


def simple_point_partners(A: Arrangement, P: Point) -> dict:
    """For each line avoiding P, the pencil lines through its simple points.

    Returns ``{line index: [pencil line indices]}``; in the equality case of the
    Dirac-Motzkin bound each list has exactly one entry.
    """
    split = A.split_by_modular(P)
    pencil = set(split.through)
    partners = {}
    for i in split.avoiding:
        partners[i] = sorted(
            j for sp in A.points_on(i) if sp.multiplicity == 2 for j in sp.incident if j in pencil
        )
    return partners


@dataclass
class NonmodularLineReport:
    status: str  # "pass", "fail" or "hypothesis_not_met"
    witness: Point
    checked: list
    violating: list

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": self.witness.to_text(),
            "checked": self.checked,
            "violating": self.violating,
        }


def nonmodular_line_check(A: Arrangement) -> NonmodularLineReport:
    """Every line avoiding a max-multiplicity modular point carries a simple point.

    Only a theorem for real arrangements; over other fields the outcome is
    reported as ``hypothesis_not_met`` rather than as a failure.
    """
    P = _require_supersolvable(A)
    split = A.split_by_modular(P)
    violating = [i for i in split.avoiding if not any(sp.multiplicity == 2 for sp in A.points_on(i))]
    if not A.is_real():
        status = "hypothesis_not_met"
    else:
        status = "fail" if violating else "pass"
    return NonmodularLineReport(status, P, list(split.avoiding), violating)


@dataclass
class TwoModularReport:
    pairs: list  # (Q1, m1, Q2, m2, sum_ok, cover_ok)

    @property
    def ok(self) -> bool:
        return all(p[4] and p[5] for p in self.pairs)

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "pairs": [
                {"q1": a.to_text(), "m1": ma, "q2": b.to_text(), "m2": mb, "sum_ok": s, "cover_ok": c}
                for a, ma, b, mb, s, c in self.pairs
            ],
        }


def two_modular_check(A: Arrangement) -> TwoModularReport:
    """For modular points of distinct multiplicities m1 > m2: m1 + m2 = n + 1 and
    every line passes through one of them."""
    _require_supersolvable(A)
    mods = [(p, A.multiplicity(p)) for p in A.modular_points()]
    pairs = []
    for a in range(len(mods)):
        for b in range(a + 1, len(mods)):
            (p, mp), (q, mq) = mods[a], mods[b]
            if mp == mq:
                continue
            if mp < mq:
                (p, mp), (q, mq) = (q, mq), (p, mp)
            cover = A.singular_point(p).incident | A.singular_point(q).incident
            pairs.append((p, mp, q, mq, mp + mq == A.n + 1, len(cover) == A.n))
    if not pairs:
        raise HypothesisNotMet("needs two modular points of distinct multiplicities")
    return TwoModularReport(pairs)


def check_all(A: Arrangement) -> TheoremReport:
    """Every applicable check, skipping those whose preconditions A does not meet."""
    report = TheoremReport(A.name or repr(A))
    if A.rank != 3 or not A.is_supersolvable():
        report.checks.append(supersolvability_exclusion(A))
        return report
    report.checks.append(dirac_motzkin_check(A))
    report.checks.append(simple_plus_max_check(A))
    if A.max_multiplicity >= 3:
        report.checks.append(sing_bound_check(A))
    nm = nonmodular_line_check(A)
    report.checks.append(
        TheoremCheck(
            "nonmodular_lines_have_simple_points",
            nm.status != "hypothesis_not_met",
            len(nm.checked) - len(nm.violating),
            Fraction(len(nm.checked)),
            {"violating": nm.violating},
        )
    )
    return report

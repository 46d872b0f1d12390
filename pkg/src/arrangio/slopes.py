"""Slopes of a planar point set and the dual supersolvable arrangement A_PD.

Affine points (x, y) are homogenized to [x, y, 1].  The direction of the line
through two of them is its meet with the line at infinity V(z), a point
[a, b, 0]; dualizing the points and the directions gives an arrangement in
which [0, 0, 1] (the dual of V(z)) is modular with multiplicity w.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement
from .errors import AllCollinear, TooFewPoints
from .fields import QQ
from .projective import Line, Point, dual, join, meet

LINE_AT_INFINITY = Line((0, 0, 1), QQ)
P_MOD = Point((0, 0, 1), QQ)


@dataclass(frozen=True)
class PointConfig:
    points: tuple  # distinct (Fraction, Fraction) pairs

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points)

    def projective(self) -> list:
        return [Point((x, y, 1), QQ) for x, y in self.points]


def _check(cfg: PointConfig):
    if cfg.n < 3:
        raise TooFewPoints("the slope problem needs at least three points")
    pts = cfg.projective()
    first = join(pts[0], pts[1])
    if all(sum(a * b for a, b in zip(first.coords, p.coords)).is_zero() for p in pts[2:]):
        raise AllCollinear("all points lie on one line")
    return pts


def connecting_lines(cfg: PointConfig) -> list:
    """Distinct lines spanned by pairs of points, in pair order."""
    pts = _check(cfg)
    return list(dict.fromkeys(join(pts[i], pts[j]) for i in range(len(pts)) for j in range(i + 1, len(pts))))


def slopes_count(cfg: PointConfig):
    """Number of distinct slopes and the corresponding points at infinity."""
    directions = list(dict.fromkeys(meet(l, LINE_AT_INFINITY) for l in connecting_lines(cfg)))
    return len(directions), directions


def build_apd(cfg: PointConfig) -> Arrangement:
    """Duals of the homogenized points followed by duals of the w directions."""
    pts = _check(cfg)
    _, directions = slopes_count(cfg)
    return Arrangement([dual(p) for p in pts] + [dual(d) for d in directions], QQ, name="A_PD")


@dataclass
class SlopeReport:
    n: int
    w: int
    directions: list
    lines_determined: int
    apd: Arrangement
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "w": self.w,
            "directions": [d.to_text() for d in self.directions],
            "lines_determined": self.lines_determined,
            "apd_size": self.apd.n,
            "m_pmod": self.apd.multiplicity(P_MOD),
            "m_apd": self.apd.max_multiplicity,
            "checks": self.checks,
        }


def slope_theorem_check(cfg: PointConfig) -> SlopeReport:
    """Evaluate both sides of: w >= n - 1  iff  m(P_mod) >= (|A_PD| - 1) / 2."""
    w, directions = slopes_count(cfg)
    lines = connecting_lines(cfg)
    apd = build_apd(cfg)
    n = cfg.n
    m_pmod = apd.multiplicity(P_MOD)
    m_apd = apd.max_multiplicity
    slope_side = w >= n - 1
    arrangement_side = m_pmod >= Fraction(apd.n - 1, 2)
    checks = {
        "slope_bound": slope_side,
        "apd_size": apd.n == n + w,
        "apd_supersolvable": apd.is_supersolvable(),
        "p_mod_modular": apd.is_modular(P_MOD),
        "m_pmod_equals_w": m_pmod == w,
        "m_pmod_equals_m_apd": m_pmod == m_apd,
        "max_multiplicity_bound": m_apd >= Fraction(apd.n - 1, 2),
        "biconditional_agrees": slope_side == arrangement_side,
    }
    return SlopeReport(n, w, directions, len(lines), apd, checks)

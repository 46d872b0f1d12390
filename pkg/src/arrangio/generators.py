"""Named arrangements: Boroczky, the nine-line example, the Hesse dual, Fano,
near-pencils, dual point sets and random supersolvable pencils."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement
from .errors import ParameterOutOfRange, TooFewPoints
from .fields import QQ, Cyclotomic, PrimeField, cos_pi, sin_pi
from .projective import Line, Point, dual, join, meet


def boroczky(m: int) -> Arrangement:
    """The 2m-line Boroczky arrangement over Q(zeta_{4m}).

    Lines are ordered ``L'_0, ..., L'_{m-1}, L_0, ..., L_{m-1}`` where
    ``L'_k = V(sin(pi k/m) x - cos(pi k/m) y)`` passes through [0, 0, 1] and
    ``L_j = V(cos(2 pi j/m) x + sin(2 pi j/m) y + z)``.  So ``L'_k`` has index
    ``k`` and ``L_j`` has index ``m + j``.
    """
    if m < 3:
        raise ParameterOutOfRange("the Boroczky family starts at m = 3")
    spec = Cyclotomic(4 * m)
    pencil = [Line((sin_pi(k, m), -cos_pi(k, m), spec.zero()), spec) for k in range(m)]
    others = [Line((cos_pi(2 * j, m), sin_pi(2 * j, m), spec.one()), spec) for j in range(m)]
    return Arrangement(pencil + others, spec, name=f"boroczky({m})")


def boroczky_points(m: int) -> list:
    """The point set X_{2m} whose dual is ``boroczky(m)`` (same line order)."""
    if m < 3:
        raise ParameterOutOfRange("the Boroczky family starts at m = 3")
    spec = Cyclotomic(4 * m)
    at_infinity = [Point((-sin_pi(j, m), cos_pi(j, m), spec.zero()), spec) for j in range(m)]
    on_circle = [Point((cos_pi(2 * j, m), sin_pi(2 * j, m), spec.one()), spec) for j in range(m)]
    return at_infinity + on_circle


def example_nine() -> Arrangement:
    """xyz(x-y)(x-z)(y-z)(x+y-z)(x-y+z)(x-y-z) over Q."""
    coords = [
        (1, 0, 0), (0, 1, 0), (0, 0, 1),
        (1, -1, 0), (1, 0, -1), (0, 1, -1),
        (1, 1, -1), (1, -1, 1), (1, -1, -1),
    ]
    return Arrangement([Line(c, QQ) for c in coords], QQ, name="example_nine")


def hesse_points() -> list:
    """The nine inflection points of the Fermat cubic x^3 + y^3 + z^3 over Q(zeta_3)."""
    spec = Cyclotomic(3)
    w = spec.zeta()
    zero, one = spec.zero(), spec.one()
    pts = []
    for k in range(3):
        r = -(w ** k)
        pts += [Point((zero, one, r), spec), Point((r, zero, one), spec), Point((one, r, zero), spec)]
    return pts


def hesse_dual() -> Arrangement:
    """The nine lines dual to the Hesse configuration."""
    return dual_arrangement(hesse_points(), name="hesse_dual")


def fano() -> Arrangement:
    """All seven lines of the projective plane over F_2."""
    spec = PrimeField(2)
    coords = [(a, b, c) for a in (0, 1) for b in (0, 1) for c in (0, 1) if (a, b, c) != (0, 0, 0)]
    return Arrangement([Line(c, spec) for c in coords], spec, name="fano")


def near_pencil(n: int) -> Arrangement:
    """n - 1 lines V(s x - y), s = 0, 1, ..., through [0, 0, 1] plus V(x + y + z)."""
    if n < 4:
        raise ParameterOutOfRange("near-pencils need n >= 4")
    lines = [Line((s, -1, 0), QQ) for s in range(n - 1)]
    lines.append(Line((1, 1, 1), QQ))
    return Arrangement(lines, QQ, name=f"near_pencil({n})")


def dual_arrangement(points, name: str = "") -> Arrangement:
    """One line per distinct point."""
    distinct = list(dict.fromkeys(points))
    if len(distinct) < 2:
        raise TooFewPoints("dualizing needs at least two distinct points")
    return Arrangement([dual(p) for p in distinct], distinct[0].spec, name=name)


def random_supersolvable(rng: random.Random, max_lines: int = 12, max_transversals: int = 4) -> Arrangement:
    """A random rational supersolvable arrangement with modular point [0, 0, 1].

    Transversals ``V(ax + by + z)`` are drawn first; the pencil through the
    apex then contains every join of the apex with a transversal crossing,
    plus some extra random pencil lines.  The apex is modular by construction.
    """
    apex = Point((0, 0, 1), QQ)

    def small():
        return Fraction(rng.randint(-4, 4), rng.randint(1, 3))

    while True:
        t = rng.randint(1, max_transversals)
        trans = list(dict.fromkeys(Line((small(), small(), 1), QQ) for _ in range(t)))
        pencil = {}
        for i in range(len(trans)):
            for j in range(i + 1, len(trans)):
                pencil.setdefault(join(apex, meet(trans[i], trans[j])), None)
        while len(pencil) < 2:
            pencil.setdefault(Line((1, small(), 0), QQ), None)
        if len(pencil) + len(trans) > max_lines:
            continue
        room = max_lines - len(pencil) - len(trans)
        for _ in range(rng.randint(0, room)):
            pencil.setdefault(Line((small(), 1, 0) if rng.random() < 0.5 else (1, small(), 0), QQ), None)
        lines = list(pencil) + trans
        rng.shuffle(lines)
        return Arrangement(lines, QQ, name="random_supersolvable")


GENERATORS = {
    "boroczky": boroczky,
    "example9": example_nine,
    "hesse": hesse_dual,
    "fano": fano,
    "near-pencil": near_pencil,
}


@dataclass(frozen=True)
class GeneratorRecipe:
    name: str
    parameters: dict = field(default_factory=dict)

    def build(self) -> Arrangement:
        try:
            gen = GENERATORS[self.name]
        except KeyError:
            raise ParameterOutOfRange(f"unknown generator {self.name!r}") from None
        return gen(**self.parameters)

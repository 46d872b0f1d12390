"""Points and lines of the projective plane over an exact field.

Both are stored as canonical coordinate triples (first nonzero entry equal to
1), so ``==`` and ``hash`` are plain tuple comparisons.  A line ``[a, b, c]``
is the zero set ``V(ax + by + cz)``.  :func:`dual` is the only conversion
between the two types.
"""
from __future__ import annotations

from .errors import DuplicateLines, IdenticalLines, IdenticalPoints, SpecMismatch
from .fields import QQ, FieldElement, FieldSpec


class _Triple:
    __slots__ = ("spec", "coords")

    def __init__(self, coords, spec: FieldSpec | None = None):
        coords = tuple(coords)
        if len(coords) != 3:
            raise ValueError("projective triples need exactly three coordinates")
        if spec is None:
            spec = next((c.spec for c in coords if isinstance(c, FieldElement)), QQ)
        coords = tuple(spec(c) for c in coords)
        pivot = next((c for c in coords if not c.is_zero()), None)
        if pivot is None:
            raise ValueError("the zero vector is not a projective point")
        if pivot != 1:
            inv = pivot.inverse()
            coords = tuple(c * inv for c in coords)
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coords)

    def to_text(self):
        return [c.to_text() for c in self.coords]


class Point(_Triple):
    """A point ``[x : y : z]``."""

    __slots__ = ()

    def __repr__(self):
        return "[" + ", ".join(str(c) for c in self.coords) + "]"


class Line(_Triple):
    """A line ``V(ax + by + cz)``."""

    __slots__ = ()

    def __repr__(self):
        if self.spec.kind == "cyclotomic":
            return "V[" + ", ".join(f"({c})" for c in self.coords) + "]"
        parts = []
        for c, var in zip(self.coords, "xyz"):
            if c.is_zero():
                continue
            s = str(c)
            if s == "1":
                term = var
            elif s == "-1":
                term = "-" + var
            else:
                term = s + var
            parts.append(term)
        return "V(" + " + ".join(parts).replace("+ -", "- ") + ")"


def _same_spec(*triples):
    spec = triples[0].spec
    for t in triples[1:]:
        if t.spec != spec:
            raise SpecMismatch(f"cannot combine {spec} with {t.spec}")
    return spec


def cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def dot(u, v) -> FieldElement:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(r0, r1, r2) -> FieldElement:
    return dot(r0, cross(r1, r2))


def meet(l1: Line, l2: Line) -> Point:
    """The intersection point of two distinct lines."""
    spec = _same_spec(l1, l2)
    if l1 == l2:
        raise IdenticalLines(f"{l1} meets itself everywhere")
    return Point(cross(l1.coords, l2.coords), spec)


def join(p: Point, q: Point) -> Line:
    """The line through two distinct points."""
    spec = _same_spec(p, q)
    if p == q:
        raise IdenticalPoints(f"{p} does not determine a line")
    return Line(cross(p.coords, q.coords), spec)


def incident(p: Point, l: Line) -> bool:
    _same_spec(p, l)
    return dot(p.coords, l.coords).is_zero()


def concurrent(l1: Line, l2: Line, l3: Line) -> bool:
    """True iff three pairwise distinct lines pass through one point."""
    _same_spec(l1, l2, l3)
    if l1 == l2 or l1 == l3 or l2 == l3:
        raise DuplicateLines("concurrency is only defined for distinct lines")
    return det3(l1.coords, l2.coords, l3.coords).is_zero()


def dual(t):
    """Swap the roles of a point and a line with the same coordinates."""
    if isinstance(t, Point):
        return Line(t.coords, t.spec)
    if isinstance(t, Line):
        return Point(t.coords, t.spec)
    raise TypeError(f"expected Point or Line, got {type(t).__name__}")

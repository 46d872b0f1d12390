"""Line arrangements and their singular loci."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from math import comb

from .errors import EmptyArrangement, NotFullRank, NotModular, TooFewLines
from .fields import FieldSpec
from .projective import Line, Point, cross, dot, join


@dataclass(frozen=True)
class SingularPoint:
    point: Point
    incident: frozenset  # indices into Arrangement.lines

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


@dataclass(frozen=True)
class ModularSplit:
    """Partition of the lines into the pencil through a modular point and the rest."""

    modular_point: Point
    through: tuple  # line indices, input order
    avoiding: tuple

    def h_part(self, arrangement: Arrangement) -> Arrangement:
        return arrangement.subarrangement(self.avoiding)


@dataclass(frozen=True)
class LineIdentity:
    line: int
    total: int  # sum of (m_P - 1) over singular points on the line
    expected: int

    @property
    def ok(self) -> bool:
        return self.total == self.expected


@dataclass
class ArrangementStats:
    n: int
    rank: int
    m_max: int
    sing_total: int
    t_k: dict = field(default_factory=dict)
    modular_points: list = field(default_factory=list)
    supersolvable: bool = False

    @property
    def t2(self) -> int:
        return self.t_k.get(2, 0)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "rank": self.rank,
            "m_max": self.m_max,
            "sing_total": self.sing_total,
            "t_k": {str(k): v for k, v in sorted(self.t_k.items())},
            "modular_points": [p.to_text() for p in self.modular_points],
            "supersolvable": self.supersolvable,
        }


def matrix_rank(rows) -> int:
    """Rank of a list of FieldElement rows by exact Gaussian elimination."""
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        for r in range(len(rows)):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class Arrangement:
    """An ordered list of distinct lines over one field.

    Duplicate lines (as projective lines) are dropped, keeping the first
    occurrence; every index reported by this class refers to the resulting
    ``lines`` tuple.
    """

    def __init__(self, lines, spec: FieldSpec | None = None, name: str = ""):
        uniq: list[Line] = []
        seen = set()
        for l in lines:
            if not isinstance(l, Line):
                l = Line(l, spec)
            if spec is None:
                spec = l.spec
            elif l.spec != spec:
                l = Line(l.coords, spec)
            if l not in seen:
                seen.add(l)
                uniq.append(l)
        if not uniq:
            raise EmptyArrangement("an arrangement needs at least one line")
        self.spec = spec
        self.lines = tuple(uniq)
        self.name = name
        self.rank = matrix_rank([l.coords for l in self.lines])

    @property
    def n(self) -> int:
        return len(self.lines)

    def __len__(self):
        return len(self.lines)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Arrangement{label}: {self.n} lines over {self.spec}, rank {self.rank}>"

    def index(self, line: Line) -> int:
        return self._line_index[line]

    @cached_property
    def _line_index(self) -> dict:
        return {l: i for i, l in enumerate(self.lines)}

    def subarrangement(self, indices, name: str = "") -> Arrangement:
        return Arrangement([self.lines[i] for i in indices], self.spec, name=name)

    def is_real(self) -> bool:
        """True iff every line is defined over the reals in the standard embedding."""
        return all(l.is_real() for l in self.lines)

    # --- singular locus -------------------------------------------------------

    @cached_property
    def singular_locus(self) -> tuple:
        """All intersection points, in order of first appearance among line pairs."""
        if self.n < 2:
            raise TooFewLines("a singular locus needs at least two lines")
        groups: dict[Point, set] = {}
        coords = [l.coords for l in self.lines]
        for i in range(self.n):
            for j in range(i + 1, self.n):
                p = Point(cross(coords[i], coords[j]), self.spec)
                groups.setdefault(p, set()).update((i, j))
        locus = []
        for p, members in groups.items():
            on = frozenset(k for k in range(self.n) if dot(p.coords, coords[k]).is_zero())
            if on != members:
                raise AssertionError(f"incidence mismatch at {p}: {sorted(on)} vs {sorted(members)}")
            locus.append(SingularPoint(p, on))
        return tuple(locus)

    @cached_property
    def _point_lookup(self) -> dict:
        return {sp.point: sp for sp in self.singular_locus}

    def singular_point(self, p: Point) -> SingularPoint | None:
        return self._point_lookup.get(p)

    def multiplicity(self, p: Point) -> int:
        sp = self.singular_point(p)
        if sp is not None:
            return sp.multiplicity
        return sum(1 for l in self.lines if dot(p.coords, l.coords).is_zero())

    def points_on(self, line_index: int) -> list:
        return [sp for sp in self.singular_locus if line_index in sp.incident]

    @cached_property
    def t_k(self) -> dict:
        return dict(sorted(Counter(sp.multiplicity for sp in self.singular_locus).items()))

    @property
    def sing_count(self) -> int:
        """|Sing(A)|, taken to be 0 for a single line."""
        return len(self.singular_locus) if self.n >= 2 else 0

    @property
    def simple_count(self) -> int:
        return self.t_k.get(2, 0) if self.n >= 2 else 0

    @property
    def max_multiplicity(self) -> int:
        return max(self.t_k) if self.n >= 2 else 1

    def simple_points(self) -> list:
        return [sp for sp in self.singular_locus if sp.multiplicity == 2]

    def pairs_identity_holds(self) -> bool:
        """sum over P of C(m_P, 2) equals C(n, 2)."""
        return sum(comb(sp.multiplicity, 2) for sp in self.singular_locus) == comb(self.n, 2)

    def line_identity_check(self) -> list:
        """Per line, the sum of (m_P - 1) over its singular points; must equal n - 1."""
        totals = [0] * self.n
        for sp in self.singular_locus:
            for i in sp.incident:
                totals[i] += sp.multiplicity - 1
        return [LineIdentity(i, t, self.n - 1) for i, t in enumerate(totals)]

    # --- modularity -----------------------------------------------------------

    def _require_full_rank(self):
        if self.rank != 3:
            raise NotFullRank(f"rank {self.rank} arrangement; full rank 3 is required")

    def is_modular(self, p: Point) -> bool:
        """Every other singular point lies on a common line of A with ``p``."""
        self._require_full_rank()
        sp = self.singular_point(p)
        if sp is None:
            return False
        return all(q is sp or (q.incident & sp.incident) for q in self.singular_locus)

    @cached_property
    def _modular(self) -> tuple:
        self._require_full_rank()
        return tuple(sp for sp in self.singular_locus if self.is_modular(sp.point))

    def modular_points(self) -> list:
        return [sp.point for sp in self._modular]

    def is_supersolvable(self) -> bool:
        return bool(self._modular)

    def supersolvable_witness(self) -> Point | None:
        """A modular point of maximal multiplicity, or None if there is none."""
        if not self._modular:
            return None
        best = max(sp.multiplicity for sp in self._modular)
        return next(sp.point for sp in self._modular if sp.multiplicity == best)

    def split_by_modular(self, p: Point) -> ModularSplit:
        if not self.is_modular(p):
            raise NotModular(f"{p} is not a modular point of this arrangement")
        through = tuple(sorted(self.singular_point(p).incident))
        avoiding = tuple(i for i in range(self.n) if i not in set(through))
        return ModularSplit(p, through, avoiding)

    def modular_join_check(self, p: Point) -> bool:
        """Direct form of the modularity definition: join(p, q) is a line of A for every q."""
        return all(
            sp.point == p or join(p, sp.point) in self._line_index
            for sp in self.singular_locus
        )

    # --- summary --------------------------------------------------------------

    def stats(self) -> ArrangementStats:
        if self.n < 2:
            raise TooFewLines("stats need at least two lines")
        modular = self.modular_points() if self.rank == 3 else []
        return ArrangementStats(
            n=self.n,
            rank=self.rank,
            m_max=self.max_multiplicity,
            sing_total=len(self.singular_locus),
            t_k=dict(self.t_k),
            modular_points=modular,
            supersolvable=bool(modular),
        )


def build(lines, spec: FieldSpec | None = None, name: str = "") -> Arrangement:
    return Arrangement(lines, spec, name=name)

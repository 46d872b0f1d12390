"""Circuits, quadratic no-broken-circuit (NBC) sets, and combinatorial equivalence
of 2m-line supersolvable arrangements with m simple points."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .arrangement import Arrangement
from .errors import HypothesisNotMet, NotFullRank
from .projective import Point


def circuits3(A: Arrangement) -> set:
    """All concurrent triples of lines, as frozensets of line indices."""
    if A.rank != 3:
        raise NotFullRank("circuits are computed for rank 3 arrangements")
    out = set()
    for sp in A.singular_locus:
        if sp.multiplicity >= 3:
            out.update(frozenset(t) for t in combinations(sorted(sp.incident), 3))
    return out


@dataclass(frozen=True)
class OrderedArrangement:
    arrangement: Arrangement
    order: tuple  # line indices from smallest to largest

    def __post_init__(self):
        order = tuple(self.order)
        if sorted(order) != list(range(self.arrangement.n)):
            raise ValueError("order must be a permutation of the line indices")
        object.__setattr__(self, "order", order)

    @property
    def position(self) -> dict:
        return {line: pos for pos, line in enumerate(self.order)}


@dataclass(frozen=True)
class NbcPairSet:
    pairs: frozenset  # (i, j) with i before j in the order
    order: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        pos = {line: k for k, line in enumerate(self.order)}
        return iter(sorted(self.pairs, key=lambda p: (pos[p[0]], pos[p[1]])))

    def __contains__(self, pair):
        return tuple(pair) in self.pairs


def quadratic_nbc(oa: OrderedArrangement) -> NbcPairSet:
    """Pairs {i, j} such that no line earlier than both is concurrent with both.

    Equivalently, for every singular point the pairs formed by its earliest
    line and each other line through it.
    """
    A = oa.arrangement
    if A.rank != 3:
        raise NotFullRank("NBC sets are computed for rank 3 arrangements")
    pos = oa.position
    pairs = set()
    for sp in A.singular_locus:
        lines = sorted(sp.incident, key=pos.__getitem__)
        first = lines[0]
        pairs.update((first, other) for other in lines[1:])
    return NbcPairSet(frozenset(pairs), oa.order)


def modular_first_order(A: Arrangement, P: Point | None = None) -> OrderedArrangement:
    """Pencil through P first, then the remaining lines, each block by canonical coordinates."""
    P = P if P is not None else A.supersolvable_witness()
    split = A.split_by_modular(P)
    key = lambda i: A.lines[i].sort_key()
    return OrderedArrangement(A, tuple(sorted(split.through, key=key)) + tuple(sorted(split.avoiding, key=key)))


def anchored_nbc(oa: OrderedArrangement, P: Point) -> NbcPairSet:
    """The NBC pairs meeting at P or at a simple point.

    These are the pairs that distinguish the combinatorial type in the
    2m-line equality case; the remaining NBC pairs all sit at triple points.
    """
    A = oa.arrangement
    full = quadratic_nbc(oa)
    keep = set()
    for i, j in full.pairs:
        sp = A.singular_point(_meet_point(A, i, j))
        if sp.point == P or sp.multiplicity == 2:
            keep.add((i, j))
    return NbcPairSet(frozenset(keep), oa.order)


def _meet_point(A: Arrangement, i: int, j: int) -> Point:
    for sp in A.singular_locus:
        if i in sp.incident and j in sp.incident:
            return sp.point
    raise AssertionError("every pair of lines meets")


def second_betti(A: Arrangement) -> int:
    """sum over singular points of (m_P - 1): the size of any quadratic NBC set."""
    return sum(sp.multiplicity - 1 for sp in A.singular_locus)


# --- isomorphism of intersection lattices ----------------------------------------

def _incidence(A: Arrangement):
    n = A.n
    pid = [[-1] * n for _ in range(n)]
    mult = []
    for k, sp in enumerate(A.singular_locus):
        mult.append(sp.multiplicity)
        for i in sp.incident:
            for j in sp.incident:
                if i != j:
                    pid[i][j] = k
    sig = [tuple(sorted(mult[pid[i][j]] for j in range(n) if j != i)) for i in range(n)]
    return pid, mult, sig


def find_isomorphism(A: Arrangement, B: Arrangement) -> dict | None:
    """A bijection of lines carrying the singular points of A onto those of B.

    Backtracking over lines of A; two assigned lines of A must meet in a point
    whose image is the meet of their images, with equal multiplicity.
    """
    if A.n != B.n or A.t_k != B.t_k:
        return None
    n = A.n
    pa, ma, sa = _incidence(A)
    pb, mb, sb = _incidence(B)
    if sorted(sa) != sorted(sb):
        return None
    # lines on high-multiplicity points first: they constrain the rest fastest
    order = sorted(range(n), key=lambda i: (-max(ma[pa[i][j]] for j in range(n) if j != i), i))
    sigma: dict = {}
    used = set()
    pmap: dict = {}
    pinv: dict = {}

    def extend(depth):
        if depth == n:
            return True
        a = order[depth]
        # same index first, so identical inputs give the identity
        for b in [a] + [x for x in range(n) if x != a]:
            if b in used or sb[b] != sa[a]:
                continue
            added = []
            ok = True
            for a2, b2 in sigma.items():
                x, y = pa[a][a2], pb[b][b2]
                if ma[x] != mb[y]:
                    ok = False
                    break
                if x in pmap:
                    if pmap[x] != y:
                        ok = False
                        break
                elif y in pinv:
                    ok = False
                    break
                else:
                    pmap[x] = y
                    pinv[y] = x
                    added.append(x)
            if ok:
                sigma[a] = b
                used.add(b)
                if extend(depth + 1):
                    return True
                del sigma[a]
                used.discard(b)
            for x in added:
                del pinv[pmap.pop(x)]
        return False

    return dict(sorted(sigma.items())) if extend(0) else None


@dataclass
class EquivalenceVerdict:
    equivalent: bool
    witness: dict | None
    m: int
    pattern_a: dict = field(default_factory=dict)
    pattern_b: dict = field(default_factory=dict)
    level: str = "intersection-lattice"
    note: str = "full Orlik-Solomon algebra isomorphism beyond the quadratic NBC level is not computed"

    def to_dict(self) -> dict:
        return {
            "equivalent": self.equivalent,
            "m": self.m,
            "level": self.level,
            "witness": None if self.witness is None else {str(k): v for k, v in self.witness.items()},
            "pattern_a": self.pattern_a,
            "pattern_b": self.pattern_b,
            "note": self.note,
        }


def nbc_pattern(A: Arrangement) -> dict:
    """The quadratic NBC pattern under the modular-first order.

    ``fiber`` lists the pencil lines in order; ``fiber_pairs`` are the m - 1
    pairs anchored at the first of them; ``delta`` sends each remaining line to
    the pencil line through its simple point(s).
    """
    P = A.supersolvable_witness()
    oa = modular_first_order(A, P)
    m = A.multiplicity(P)
    fiber, rest = oa.order[:m], oa.order[m:]
    anchored = anchored_nbc(oa, P)
    fiber_set = set(fiber)
    delta = {}
    for i, j in anchored.pairs:
        if i in fiber_set and j not in fiber_set:
            delta.setdefault(j, []).append(i)
    return {
        "fiber": list(fiber),
        "rest": list(rest),
        "fiber_pairs": sorted(p for p in anchored.pairs if p[0] in fiber_set and p[1] in fiber_set),
        "delta": {str(j): sorted(delta.get(j, [])) for j in rest},
    }


def _check_2m_hypotheses(A: Arrangement, label: str) -> int:
    if A.rank != 3 or not A.is_supersolvable():
        raise HypothesisNotMet(f"{label}: not a full-rank supersolvable arrangement")
    m = A.max_multiplicity
    if m < 3 or A.n != 2 * m or A.simple_count != m:
        raise HypothesisNotMet(
            f"{label}: needs m >= 3, n = 2m, |Sing_2| = m (got m={m}, n={A.n}, |Sing_2|={A.simple_count})"
        )
    return m


def equiv_2m_verdict(A: Arrangement, B: Arrangement) -> EquivalenceVerdict:
    """Decide combinatorial equivalence of two arrangements in the 2m-line equality case.

    The verdict is an explicit line bijection preserving every singular point,
    which in particular matches the quadratic NBC patterns (fiber pairs go to
    fiber pairs, simple-point pairs to simple-point pairs).
    """
    ma = _check_2m_hypotheses(A, "first arrangement")
    mb = _check_2m_hypotheses(B, "second arrangement")
    pattern_a, pattern_b = nbc_pattern(A), nbc_pattern(B)
    if ma != mb:
        return EquivalenceVerdict(False, None, ma, pattern_a, pattern_b)
    witness = find_isomorphism(A, B)
    return EquivalenceVerdict(witness is not None, witness, ma, pattern_a, pattern_b)

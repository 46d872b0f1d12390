"""Brute-force reference computations used to cross-check the library.

These deliberately avoid the library's singular-locus code: points are found
by grouping lines with vanishing 3x3 determinants, and modularity is tested by
joining points and looking the line up.
"""
from itertools import combinations, permutations, product

from arrangio.projective import det3, join
from arrangio.ssconfig import bm_template


def concurrency_classes_by_det(A):
    """Maximal sets of >= 2 lines through a common point, via determinants only."""
    coords = [l.coords for l in A.lines]
    classes = []
    for i, j in combinations(range(A.n), 2):
        if any(i in c and j in c for c in classes):
            continue
        members = {i, j} | {k for k in range(A.n) if k not in (i, j) and det3(coords[i], coords[j], coords[k]).is_zero()}
        classes.append(frozenset(members))
    return classes


def multiplicity_counts(A):
    out = {}
    for c in concurrency_classes_by_det(A):
        out[len(c)] = out.get(len(c), 0) + 1
    return dict(sorted(out.items()))


def modular_by_join(A):
    """Points P of Sing(A) such that P joined with any other singular point is a line of A."""
    lines = set(A.lines)
    pts = [sp.point for sp in A.singular_locus]
    return [p for p in pts if all(q == p or join(p, q) in lines for q in pts)]


def circuits_by_det(A):
    c = [l.coords for l in A.lines]
    return {frozenset(t) for t in combinations(range(A.n), 3) if det3(*(c[i] for i in t)).is_zero()}


def nbc_by_definition(A, order):
    """Pairs containing no broken circuit, straight from the definition."""
    pos = {l: k for k, l in enumerate(order)}
    circ = circuits_by_det(A)
    broken = {c - {min(c, key=pos.__getitem__)} for c in circ}
    return {tuple(sorted(p, key=pos.__getitem__)) for p in combinations(range(A.n), 2) if frozenset(p) not in broken}


def pairs(m):
    return list(combinations(range(1, m + 1), 2))


def closure_by_definition(m, k):
    """k(i,j) = k(i,l) forces k(j,l) to the same value, for every ordering of every triple."""
    lab = lambda a, b: k[(min(a, b), max(a, b))]
    for i, j, l in permutations(range(1, m + 1), 3):
        if lab(i, j) == lab(i, l) and lab(j, l) != lab(i, j):
            return False
    return True


def all_valid_by_brute_force(m, surjective):
    ps = pairs(m)
    choices = [[t for t in range(1, m + 1) if t not in p] for p in ps]
    out = []
    for labels in product(*choices):
        k = dict(zip(ps, labels))
        if closure_by_definition(m, k) and (not surjective or set(labels) == set(range(1, m + 1))):
            out.append(labels)
    return out


def canonical(m, labels):
    ps = pairs(m)
    best = None
    for perm in permutations(range(1, m + 1)):
        s = (0,) + perm
        img = {}
        for (i, j), t in zip(ps, labels):
            img[tuple(sorted((s[i], s[j])))] = s[t]
        key = tuple(img[p] for p in ps)
        best = key if best is None or key < best else best
    return best


def contains_bk_by_brute_force(cfg, k):
    """Some injection of B(k)'s indices reproduces every B(k) label."""
    ref = bm_template(k)
    for image in permutations(range(1, cfg.m + 1), k):
        f = (0,) + image
        if all(cfg.label(f[i], f[j]) == f[t] for (i, j), t in ref.k.items()):
            return True
    return False

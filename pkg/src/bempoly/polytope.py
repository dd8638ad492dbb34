"""
Exact polytope kernel for small point sets.

Everything is decided over the rationals.  In dimension two and three the
points are scaled to an integer affine chart and facets are found by brute
force over hyperplanes spanned by input points; vertices are then the points
cut out by the facets through them.  Other dimensions, face tests and cone
tests use exact linear feasibility problems (:mod:`bempoly.lp`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from .lp import feasible_point
from .ranklin import rank, rref
from .weyl import Word

__all__ = [
    "PolytopeSummary", "affine_dim", "vertices", "is_face", "hull_summary",
    "cone_contains_line", "cone_contains", "cones_equal", "predicted_dim",
    "affine_chart", "to_off",
]


def _as_points(points) -> list[tuple]:
    pts = [tuple(Fraction(x) for x in v) for v in points]
    if pts and any(len(v) != len(pts[0]) for v in pts):
        raise ValueError("points have different lengths")
    return pts


def affine_dim(points) -> int:
    pts = _as_points(points)
    if not pts:
        raise ValueError("affine dimension of an empty point set")
    v0 = pts[0]
    return rank([[a - b for a, b in zip(v, v0)] for v in pts[1:]])


def affine_chart(points) -> tuple[list[int], list[tuple]]:
    """
    Coordinate indices on which projection is injective on the affine hull,
    and the projected points.  Projection along coordinates is affine, so
    faces and incidences carry over unchanged.
    """
    pts = _as_points(points)
    v0 = pts[0]
    diffs = [[a - b for a, b in zip(v, v0)] for v in pts[1:]]
    if not diffs:
        return [], [() for _ in pts]
    _, pivots = rref(diffs)
    return pivots, [tuple(v[c] for c in pivots) for v in pts]


def _in_hull(target, others) -> bool:
    """Is ``target`` a convex combination of ``others``?"""
    if not others:
        return False
    n = len(target)
    A = [[v[k] for v in others] for k in range(n)] + [[Fraction(1)] * len(others)]
    b = list(target) + [Fraction(1)]
    return feasible_point(A, b) is not None


def _vertices_lp(pts: list[tuple]) -> list[tuple]:
    return [v for k, v in enumerate(pts) if not _in_hull(v, pts[:k] + pts[k + 1:])]


def _integer_chart(pts: list[tuple]) -> list[tuple]:
    _, chart = affine_chart(pts)
    scale = lcm(*(x.denominator for v in chart for x in v)) if chart and chart[0] else 1
    return [tuple(int(x * scale) for x in v) for v in chart]


def _normal(base, others) -> tuple | None:
    """Primitive integer normal of the hyperplane through ``base`` and ``others`` (d = 2, 3)."""
    if len(base) == 2:
        (x, y), = [(a - b for a, b in zip(o, base)) for o in others]
        nrm = (-y, x)
    else:
        u, v = ([a - b for a, b in zip(o, base)] for o in others)
        nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    g = gcd(*nrm)
    if g == 0:
        return None
    nrm = tuple(c // g for c in nrm)
    # fix the sign so parallel hyperplanes share one key
    lead = next(c for c in nrm if c)
    return nrm if lead > 0 else tuple(-c for c in nrm)


def _point_facets(chart: list[tuple]) -> list[frozenset]:
    """Facets of a full-dimensional integer point set in R^2 or R^3, as point-index sets."""
    d = len(chart[0])
    found = set()
    seen = set()
    for combo in combinations(range(len(chart)), d):
        base = chart[combo[0]]
        nrm = _normal(base, [chart[k] for k in combo[1:]])
        if nrm is None:
            continue
        level = sum(c * x for c, x in zip(nrm, base))
        if (nrm, level) in seen:
            continue
        seen.add((nrm, level))
        on, pos, neg = [], False, False
        for k, v in enumerate(chart):
            x = sum(c * y for c, y in zip(nrm, v)) - level
            if x > 0:
                pos = True
            elif x < 0:
                neg = True
            else:
                on.append(k)
            if pos and neg:
                break
        else:
            found.add(frozenset(on))
    return sorted(found, key=sorted)


def _midpoints(chart: list[tuple]) -> set[int]:
    """Indices of points that are the midpoint of two others; none of them is a vertex."""
    where = {v: k for k, v in enumerate(chart)}
    inner = set()
    for a, b in combinations(chart, 2):
        s = tuple(x + y for x, y in zip(a, b))
        if all(x % 2 == 0 for x in s):
            k = where.get(tuple(x // 2 for x in s))
            if k is not None:
                inner.add(k)
    return inner


def _hull_2_3(pts: list[tuple]) -> tuple[list[int], list[frozenset]]:
    """Vertex indices and facets (as vertex-position sets) for hulls of dimension 2 or 3."""
    chart = _integer_chart(pts)
    # dropping points that cannot be vertices leaves the hull unchanged
    inner = _midpoints(chart)
    keep = [k for k in range(len(chart)) if k not in inner]
    facets = [frozenset(keep[i] for i in f) for f in _point_facets([chart[k] for k in keep])]
    vidx = []
    for k in keep:
        through = [f for f in facets if k in f]
        if through and frozenset.intersection(*through) == {k}:
            vidx.append(k)
    pos = {k: i for i, k in enumerate(vidx)}
    return vidx, [frozenset(pos[k] for k in f if k in pos) for f in facets]


def vertices(points) -> list[tuple]:
    """Extreme points, in first-occurrence order."""
    pts = list(dict.fromkeys(_as_points(points)))
    if len(pts) > 2 and affine_dim(pts) in (2, 3):
        vidx, _ = _hull_2_3(pts)
        return [pts[k] for k in vidx]
    return _vertices_lp(pts)


def is_face(points, subset) -> bool:
    """
    Does some linear functional attain its maximum over ``points`` exactly on
    ``subset``?  Solved as feasibility of ``c.(s - s0) = 0`` on the subset and
    ``c.(x - s0) <= -1`` off it, with ``c = c_plus - c_minus``.
    """
    pts = list(dict.fromkeys(_as_points(points)))
    sub = list(dict.fromkeys(_as_points(subset)))
    missing = [s for s in sub if s not in pts]
    if missing:
        raise ValueError(f"subset point {missing[0]} is not among the points")
    if not sub:
        return False
    outside = [x for x in pts if x not in sub]
    if not outside:
        return True
    n = len(pts[0])
    s0 = sub[0]
    rows, rhs = [], []
    for s in sub[1:]:
        d = [a - b for a, b in zip(s, s0)]
        rows.append(d + [-x for x in d] + [Fraction(0)] * len(outside))
        rhs.append(Fraction(0))
    for k, x in enumerate(outside):
        d = [a - b for a, b in zip(x, s0)]
        slack = [Fraction(int(k == m)) for m in range(len(outside))]
        rows.append(d + [-y for y in d] + slack)
        rhs.append(Fraction(-1))
    assert all(len(r) == 2 * n + len(outside) for r in rows)
    return feasible_point(rows, rhs) is not None


def cone_contains_line(generators) -> bool:
    """True iff the cone spanned by the generators contains a line."""
    gens = [g for g in _as_points(generators) if any(x != 0 for x in g)]
    if not gens:
        return False
    n = len(gens[0])
    # a nontrivial nonnegative combination summing to zero, normalised to weight one
    A = [[g[k] for g in gens] for k in range(n)] + [[Fraction(1)] * len(gens)]
    b = [Fraction(0)] * n + [Fraction(1)]
    return feasible_point(A, b) is not None


def cone_contains(generators, v) -> bool:
    gens = _as_points(generators)
    v = tuple(Fraction(x) for x in v)
    if all(x == 0 for x in v):
        return True
    if not gens:
        return False
    A = [[g[k] for g in gens] for k in range(len(v))]
    return feasible_point(A, list(v)) is not None


def cones_equal(gens_a, gens_b) -> bool:
    return (all(cone_contains(gens_b, g) for g in gens_a)
            and all(cone_contains(gens_a, g) for g in gens_b))


@dataclass
class PolytopeSummary:
    ambient_n: int
    affine_dim: int
    vertices: list
    input_point_count: int
    edges: list | None = None
    two_face_count: int | None = None
    facets: list | None = field(default=None, repr=False)  # vertex-index sets (dim 3 only)

    @property
    def fvector(self) -> tuple:
        return (self.affine_dim, len(self.vertices), None if self.edges is None else len(self.edges),
                self.two_face_count)


def hull_summary(points) -> PolytopeSummary:
    pts = _as_points(points)
    if not pts:
        raise ValueError("hull of an empty point set")
    distinct = list(dict.fromkeys(pts))
    d = affine_dim(distinct)
    if d in (2, 3):
        vidx, facets = _hull_2_3(distinct)
        verts = [distinct[k] for k in vidx]
    else:
        verts = _vertices_lp(distinct)
    summary = PolytopeSummary(ambient_n=len(pts[0]), affine_dim=d, vertices=verts,
                              input_point_count=len(pts))
    if d == 0:
        summary.edges, summary.two_face_count = [], 0
    elif d == 1:
        summary.edges, summary.two_face_count = [(0, 1)], 0
    elif d == 2:
        summary.edges = sorted(tuple(sorted(f)) for f in facets)
        summary.two_face_count = 1
    elif d == 3:
        edges = []
        for a, b in combinations(range(len(verts)), 2):
            if sum(1 for f in facets if a in f and b in f) >= 2:
                edges.append((a, b))
        summary.edges = edges
        summary.two_face_count = len(facets)
        summary.facets = [sorted(f) for f in facets]
    return summary


def predicted_dim(p: int, q: int, Q: Word | Sequence[int]) -> int:
    letters = Q.letters if isinstance(Q, Word) else tuple(Q)
    return p + q - 1 if p in letters else p + q - 2


def _facet_cycle(facet: list[int], edges: set) -> list[int]:
    cycle = [facet[0]]
    remaining = set(facet[1:])
    while remaining:
        nxt = next(v for v in sorted(remaining) if tuple(sorted((cycle[-1], v))) in edges)
        cycle.append(nxt)
        remaining.discard(nxt)
    return cycle


def to_off(summary: PolytopeSummary) -> str:
    """OFF text for a 3-dimensional summary, in affine chart coordinates."""
    if summary.affine_dim != 3:
        raise ValueError("OFF output needs a 3-dimensional polytope")
    _, chart = affine_chart(summary.vertices)
    edges = set(summary.edges)
    lines = ["OFF", f"{len(chart)} {len(summary.facets)} {len(summary.edges)}"]
    for v in chart:
        lines.append(" ".join(_fmt(x) for x in v))
    for f in summary.facets:
        cyc = _facet_cycle(f, edges)
        lines.append(" ".join(map(str, [len(cyc)] + cyc)))
    return "\n".join(lines) + "\n"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else repr(float(x))

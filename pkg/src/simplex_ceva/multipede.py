"""Multipedes, the induced-point order and Ceva cycle products.

A point q interior to a face T induces one point on every subface of T with
dim >= 1: go down one vertex at a time, projecting away from the dropped
vertex, so that ``P_i``, ``A_F_i`` and ``A_F`` are always colinear.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping, Sequence

from .errors import ClosureAmbiguous, DimensionMismatch, MissingEdgePoint
from .exact import BaryPoint, Face, require_interior, restrict_point


@dataclass(frozen=True, eq=False)
class Multipede:
    base: Face
    points: Mapping[Face, BaryPoint]

    def __contains__(self, p: BaryPoint) -> bool:
        return self.points.get(p.support) == p

    def __eq__(self, other):
        return (isinstance(other, Multipede) and self.base == other.base
                and dict(self.points) == dict(other.points))

    def __hash__(self):
        return hash(self.base)

    def faces(self):
        return sorted(self.points, key=lambda f: (len(f), f.indices))

    def is_closed(self) -> bool:
        """Check every stored point sits inside its face and every colinearity triple holds."""
        for F, p in self.points.items():
            if not p.is_interior_to(F):
                return False
            if F.dim < 2:
                continue
            for i in F:
                child = self.points.get(F.without(i))
                if child is None or not colinear_with_vertex(i, child, p):
                    return False
        return True


def colinear_with_vertex(i: int, a: BaryPoint, b: BaryPoint) -> bool:
    """Whether ``P_i``, ``a`` and ``b`` lie on one line.

    Off coordinate i, points of a line through P_i differ only by a scale.
    """
    others = [j for j in range(len(a.coords)) if j != i]
    ref = next((j for j in others if a.coords[j]), None)
    if ref is None:
        return True
    scale = b.coords[ref] / a.coords[ref]
    return all(b.coords[j] == scale * a.coords[j] for j in others)


@functools.lru_cache(maxsize=8192)
def induce_multipede(T: Face, q: BaryPoint) -> Multipede:
    """The unique multipede of T induced by the interior point q."""
    require_interior(q, T)
    points = {T: q}
    level = [T]
    while level and level[0].dim >= 2:
        nxt = {}
        for F in level:
            p = points[F]
            for i in F:
                G = F.without(i)
                g = restrict_point(p, G)
                prev = nxt.get(G)
                if prev is not None and prev != g:
                    raise AssertionError(f"projection tower broke at face {G}")
                nxt[G] = g
        points.update(nxt)
        level = sorted(nxt)
    return Multipede(T, MappingProxyType(points))


def precedes(p: BaryPoint, q: BaryPoint, T: Face | None = None) -> bool:
    """The relation p ⪯ q: p is a point of the multipede induced by q.

    A vertex ``P_i`` precedes every q whose supporting face contains it.
    """
    Fq, Fp = q.support, p.support
    if T is not None and not (Fq.issubset(T) and Fp.issubset(T)):
        raise ValueError(f"points must lie in the closed face {T}")
    if Fp.dim == 0:
        return Fp.indices[0] in Fq
    if Fq.dim == 0 or not Fp.issubset(Fq):
        return False
    return p in induce_multipede(Fq, q)


def _edge_key(e) -> tuple[int, int]:
    if isinstance(e, Face):
        e = e.indices
    i, j = sorted(e)
    return i, j


def cycle_ratio_product(T: Face, cycle: Sequence[int], edge_points: Mapping) -> Fraction:
    """Product of the directed ratios ``P_iQ / QP_j`` around a closed vertex cycle.

    ``cycle`` lists i_0, ..., i_{m-1}; the leg i_{m-1} -> i_0 closes it.  For
    ``Q = a P_i + b P_j`` the leg ratio is b / a.
    """
    pts = {_edge_key(e): q for e, q in edge_points.items()}
    if len(cycle) < 2:
        raise ValueError("a cycle needs at least two vertices")
    prod = Fraction(1)
    for i, j in zip(cycle, list(cycle[1:]) + [cycle[0]]):
        if i == j:
            raise ValueError("consecutive cycle vertices must differ")
        if i not in T or j not in T:
            raise ValueError(f"leg {i}->{j} leaves face {T}")
        q = pts.get(_edge_key((i, j)))
        if q is None:
            raise MissingEdgePoint(f"no point on edge {{{min(i, j)},{max(i, j)}}}")
        a, b = q.coords[i], q.coords[j]
        if a <= 0 or b <= 0 or a + b != 1:
            raise ValueError(f"point on edge {{{i},{j}}} is not interior to it")
        prod *= b / a
    return prod


def closure_points(fam) -> dict[Face, set[BaryPoint]]:
    """The set W: every point of every multipede induced by a foot, grouped by face."""
    W: dict[Face, set[BaryPoint]] = {}
    for c in fam.members:
        for F, p in induce_multipede(c.foot_face, c.foot).points.items():
            W.setdefault(F, set()).add(p)
    return W


def feet_closure_cardinality(fam, T: Face, closure: dict | None = None) -> int:
    """Number of distinct closure points strictly inside T."""
    if fam.uniform_k is not None:
        l = fam.ambient_n + 1 - fam.uniform_k
        if not 1 <= T.dim <= l - 1:
            raise DimensionMismatch(f"face {T} must have 1 <= dim <= {l - 1}")
    W = closure_points(fam) if closure is None else closure
    return len(W.get(T, ()))


def unique_closure_point(closure: dict, F: Face) -> BaryPoint:
    pts = closure.get(F, set())
    if len(pts) != 1:
        raise ClosureAmbiguous(F, sorted(pts, key=lambda p: p.coords))
    return next(iter(pts))


def lemma_disagreements(fam, L: Face) -> list[tuple[Face, BaryPoint, BaryPoint]]:
    """Faces inside L where points induced by two different feet of the L-subfamily differ."""
    from .cevians import restrict_to_face  # cevians imports this module

    feet = [ic.foot for ic in (p[1] for p in restrict_to_face(fam, L))]
    mps = [induce_multipede(q.support, q) for q in feet]
    bad = []
    for a in range(len(mps)):
        for b in range(a + 1, len(mps)):
            A, B = mps[a].points, mps[b].points
            for F in A.keys() & B.keys():
                if A[F] != B[F]:
                    bad.append((F, A[F], B[F]))
    return bad

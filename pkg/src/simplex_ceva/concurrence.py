"""Decision procedures: common intersection of a cevian family, the per-face
criterion, their equivalence, and the mixed tetrahedral family."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .cevians import CevianFamily, Cevian, l_faces, restrict_to_face, cevian_contains
from .errors import DimensionMismatch, PrecedenceViolation, TheoremViolation
from .exact import (BaryPoint, Face, LinearSystem, feasible_nonnegative,
                    format_rational, solve_affine)
from .multipede import cycle_ratio_product, precedes


@dataclass
class ConcurrenceReport:
    intersects: bool
    witness: BaryPoint | None = None
    failing_faces: list[Face] = field(default_factory=list)
    ratio_failures: list[tuple[Face, tuple[int, ...], Fraction]] = field(default_factory=list)
    boundary_only: bool = False

    def to_json(self) -> dict:
        return {
            "intersects": self.intersects,
            "witness": None if self.witness is None else self.witness.to_strings(),
            "failing_faces": [list(f.indices) for f in self.failing_faces],
            "ratio_failures": [
                {"face": list(f.indices), "cycle": list(cyc), "product": format_rational(p)}
                for f, cyc, p in self.ratio_failures
            ],
            "boundary_only": self.boundary_only,
        }


def membership_system(fam: CevianFamily) -> LinearSystem:
    """Equalities ``x_v = foot_v * sum_{w in U'} x_w`` for every member, plus ``sum x = 1``."""
    n = fam.ambient_n
    system = LinearSystem(n + 1)
    for c in fam.members:
        support = c.foot_face.indices
        # the row of the last foot vertex is the negated sum of the others
        for v in support[:-1]:
            row = [Fraction(0)] * (n + 1)
            for w in support:
                row[w] = -c.foot.coords[v]
            row[v] += 1
            system.add_eq(row, 0)
    system.add_eq([1] * (n + 1), 1)
    return system


def solve_membership(fam: CevianFamily) -> tuple[BaryPoint | None, bool]:
    """Return (interior common point or None, whether only boundary common points exist)."""
    space = solve_affine(membership_system(fam))
    x = feasible_nonnegative(space, strict=True)
    if x is not None:
        return BaryPoint(x), False
    return None, feasible_nonnegative(space, strict=False) is not None


def intersect_family(fam: CevianFamily, strict: bool = True) -> BaryPoint | None:
    """A common point of all members, or None.

    With ``strict`` (the default) only points interior to the simplex count.
    """
    space = solve_affine(membership_system(fam))
    x = feasible_nonnegative(space, strict=strict)
    return None if x is None else BaryPoint(x)


def _local_family(fam: CevianFamily, L: Face) -> CevianFamily:
    members = tuple(ic.as_cevian() for _, ic in restrict_to_face(fam, L))
    return CevianFamily(L.dim, members, 1)


def check_condition_2(fam: CevianFamily) -> list[Face]:
    """l-faces whose induced 1-cevians have no common point."""
    _require_uniform(fam)
    return [L for L in l_faces(fam.ambient_n, fam.uniform_k)
            if intersect_family(_local_family(fam, L), strict=False) is None]


def _order_candidate(L: Face, feet: Mapping[int, BaryPoint]) -> BaryPoint:
    # Any X with every Q_[t] ⪯ X has x_i : x_a equal to Q_[t]_i : Q_[t]_a for
    # each t outside {a, i}, so reading one such t per i pins X down.
    a = L.indices[0]
    weights = {a: Fraction(1)}
    for i in L.indices[1:]:
        t = next(t for t in L.indices if t not in (a, i))
        weights[i] = feet[t].coords[i] / feet[t].coords[a]
    total = sum(weights.values())
    return L.lift([weights[i] / total for i in L.indices])


def check_condition_2_via_order(fam: CevianFamily) -> list[Face]:
    """Same answer as :func:`check_condition_2`, decided through the ⪯ relation."""
    _require_uniform(fam)
    failing = []
    for L in l_faces(fam.ambient_n, fam.uniform_k):
        feet = {ic.vertex_index: ic.foot for _, ic in restrict_to_face(fam, L)}
        X = _order_candidate(L, feet)
        if not all(precedes(q, X, L) for q in feet.values()):
            failing.append(L)
    return failing


def triangle_ratio_failures(fam: CevianFamily) -> list[tuple[Face, tuple[int, ...], Fraction]]:
    """Classical Ceva products on every triangular l-face whose product is not 1."""
    _require_uniform(fam)
    if fam.ambient_n + 1 - fam.uniform_k != 2:
        return []
    out = []
    for L in l_faces(fam.ambient_n, fam.uniform_k):
        edge_points = {ic.foot.support.indices: ic.foot for _, ic in restrict_to_face(fam, L)}
        prod = cycle_ratio_product(L, L.indices, edge_points)
        if prod != 1:
            out.append((L, L.indices, prod))
    return out


def verify_equivalence(fam: CevianFamily) -> ConcurrenceReport:
    """Decide both conditions independently and raise TheoremViolation if they disagree."""
    _require_uniform(fam)
    witness, boundary_only = solve_membership(fam)
    failing = check_condition_2(fam)
    report = ConcurrenceReport(
        intersects=witness is not None,
        witness=witness,
        failing_faces=failing,
        ratio_failures=triangle_ratio_failures(fam),
        boundary_only=boundary_only,
    )
    if report.intersects == bool(failing):
        raise TheoremViolation(fam, report.intersects, failing)
    return report


def _require_uniform(fam: CevianFamily):
    if fam.uniform_k is None:
        raise DimensionMismatch("operation needs a uniform family")


# --- the mixed family in a tetrahedron --------------------------------------

PROPOSITION_APEXES = ((2, 3), (1, 3), (1, 2), (0,))


def proposition_family(q01: BaryPoint, q02: BaryPoint, q03: BaryPoint, q123: BaryPoint) -> CevianFamily:
    """Three 2-cevians with feet on edges 01, 02, 03 plus the 1-cevian from P_0 to q123."""
    members = tuple(Cevian(Face(apex, 3), q) for apex, q in zip(PROPOSITION_APEXES, (q01, q02, q03, q123)))
    return CevianFamily(3, members)


def proposition_edge_points(q123: BaryPoint) -> dict[tuple[int, int], BaryPoint]:
    """The edge points on 12, 13, 23 induced by q123."""
    from .multipede import induce_multipede
    mp = induce_multipede(Face((1, 2, 3), 3), q123)
    return {e: mp.points[Face(e, 3)] for e in ((1, 2), (1, 3), (2, 3))}


def check_proposition_tetrahedron(fam: CevianFamily, extra_edge_points: Mapping) -> tuple[bool, bool]:
    """(family intersects, every triple-ratio product over triangles i<j<k equals 1)."""
    if fam.ambient_n != 3 or len(fam) != 4:
        raise DimensionMismatch("expected the four-member mixed family of a tetrahedron")
    try:
        feet = {apex: fam.by_apex(apex).foot for apex in PROPOSITION_APEXES}
    except KeyError as e:
        raise DimensionMismatch(f"missing member with apex {e}") from None
    q123 = feet[(0,)]
    edges = {(0, 1): feet[(2, 3)], (0, 2): feet[(1, 3)], (0, 3): feet[(1, 2)]}
    for e in ((1, 2), (1, 3), (2, 3)):
        q = extra_edge_points.get(e)
        if q is None:
            q = extra_edge_points.get(Face(e, 3))
        if q is None or not q.is_interior_to(Face(e, 3)) or not precedes(q, q123):
            raise PrecedenceViolation(f"edge point on {e} is missing or does not precede {q123}")
        edges[e] = q
    cond1 = intersect_family(fam) is not None
    full = Face.full(3)
    cond2 = all(cycle_ratio_product(full, tri, edges) == 1
                for tri in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)))
    return cond1, cond2


def family_contains(fam: CevianFamily, x: BaryPoint) -> bool:
    return all(cevian_contains(c, x) for c in fam.members)

"""k-cevians of an n-simplex, cevian families, restriction to l-faces.

A k-cevian is the simplex spanned by the k apex vertices ``P_u`` (u in U)
and one foot ``Q`` strictly inside the complementary face U'.  Feet are kept
in ambient coordinates, so membership never needs a frame change.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Mapping

from .errors import BadSupport, DimensionMismatch, MissingFoot
from .exact import BaryPoint, Face, restrict_point
from .multipede import closure_points, unique_closure_point


@dataclass(frozen=True)
class Cevian:
    apex: Face
    foot: BaryPoint

    def __post_init__(self):
        if self.foot.n != self.apex.ambient_n:
            raise BadSupport("foot and apex live in different ambient simplices")
        if self.foot.support != self.apex.complement():
            raise BadSupport(
                f"foot {self.foot} is not interior to the face complementary to apex {self.apex}")

    @property
    def k(self) -> int:
        return len(self.apex)

    @property
    def foot_face(self) -> Face:
        return self.foot.support

    @property
    def ambient_n(self) -> int:
        return self.apex.ambient_n


@dataclass(frozen=True)
class InducedCevian:
    """The segment from ``P_t`` to the foot ``Q_[t]`` inside an l-face L."""

    face: Face
    vertex_index: int
    foot: BaryPoint

    def __post_init__(self):
        if self.foot.support != self.face.without(self.vertex_index):
            raise BadSupport("induced foot must be interior to the facet opposite its vertex")

    def as_cevian(self) -> Cevian:
        """The same segment as a 1-cevian of L, in L's own frame."""
        local = Face(tuple(range(len(self.face))), self.face.dim)
        t = self.face.indices.index(self.vertex_index)
        foot = local.lift(self.face.local(self.foot))
        return Cevian(Face((t,), self.face.dim), foot)


@dataclass(frozen=True)
class CevianFamily:
    ambient_n: int
    members: tuple[Cevian, ...]
    uniform_k: int | None = None
    _by_apex: dict = field(default=None, init=False, repr=False, compare=False, hash=False)
    _by_foot_face: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        by_apex = {}
        for c in self.members:
            if c.ambient_n != self.ambient_n:
                raise DimensionMismatch(f"cevian with apex {c.apex} is not in an {self.ambient_n}-simplex")
            if c.apex in by_apex:
                raise ValueError(f"duplicate apex {c.apex}")
            by_apex[c.apex] = c
        object.__setattr__(self, "_by_apex", by_apex)
        by_foot_face = {}
        for c in self.members:
            by_foot_face.setdefault(c.foot_face, []).append(c)
        object.__setattr__(self, "_by_foot_face", by_foot_face)
        k = self.uniform_k
        if k is not None:
            if any(c.k != k for c in self.members):
                raise DimensionMismatch(f"family marked uniform k={k} has other cevian dimensions")
            expected = comb(self.ambient_n + 1, k)
            if len(self.members) != expected:
                raise MissingFoot(f"uniform family needs {expected} cevians, got {len(self.members)}")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def by_apex(self, apex) -> Cevian:
        if not isinstance(apex, Face):
            apex = Face.of(apex, self.ambient_n)
        return self._by_apex[apex]

    def with_foot_in(self, face: Face) -> list[Cevian]:
        return self._by_foot_face.get(face, [])

    def with_member(self, old: Cevian, new: Cevian) -> "CevianFamily":
        members = tuple(new if c == old else c for c in self.members)
        return CevianFamily(self.ambient_n, members, self.uniform_k)

    def permuted(self, order) -> "CevianFamily":
        return CevianFamily(self.ambient_n, tuple(self.members[i] for i in order), self.uniform_k)


def _apex_key(U, n: int) -> Face:
    return U if isinstance(U, Face) else Face.of(U, n)


def build_family(n: int, k: int, feet: Mapping) -> CevianFamily:
    """Assemble the uniform family of C(n+1, k) k-cevians from a foot per apex set.

    ``feet`` maps each k-subset U (tuple or :class:`Face`) to its foot.
    """
    if not 1 <= k < n:
        raise DimensionMismatch(f"need 1 <= k < n, got n={n}, k={k}")
    given = {_apex_key(U, n): q for U, q in feet.items()}
    members = []
    for U in itertools.combinations(range(n + 1), k):
        apex = Face(U, n)
        if apex not in given:
            raise MissingFoot(f"no foot for apex set {apex}")
        members.append(Cevian(apex, given.pop(apex)))
    if given:
        raise DimensionMismatch(f"unexpected apex sets: {sorted(str(f) for f in given)}")
    return CevianFamily(n, tuple(members), k)


def feet_from_point(x: BaryPoint, k: int) -> dict[Face, BaryPoint]:
    """Feet of the k-cevian family through the interior point ``x``.

    Each foot is ``x`` projected onto the face complementary to its apex.
    """
    n = x.n
    if any(c <= 0 for c in x.coords):
        raise BadSupport(f"{x} is not interior to the simplex")
    feet = {}
    for U in itertools.combinations(range(n + 1), k):
        apex = Face(U, n)
        feet[apex] = restrict_point(x, apex.complement())
    return feet


def cevian_contains(c: Cevian, x: BaryPoint) -> bool:
    """Exact membership of ``x`` in the cevian simplex.

    ``x`` lies in conv({Q} + {P_u}) iff its coordinates on the foot face are
    proportional to the foot's; the apex coordinates are then the nonnegative
    remainder.
    """
    m = x.mass(c.foot_face)
    return all(x.coords[v] == m * c.foot.coords[v] for v in c.foot_face)


def cevian_coefficients(c: Cevian, x: BaryPoint) -> tuple[Fraction, dict[int, Fraction]] | None:
    """Weights (foot weight, apex weights) expressing ``x`` as a point of ``c``, or None."""
    if not cevian_contains(c, x):
        return None
    return x.mass(c.foot_face), {u: x.coords[u] for u in c.apex}


def l_faces(n: int, k: int):
    """All l-faces of the n-simplex with k + l = n + 1."""
    l = n + 1 - k
    return list(Face.full(n).subfaces(min_dim=l, max_dim=l))


def restrict_to_face(fam: CevianFamily, L: Face) -> list[tuple[Cevian, InducedCevian]]:
    """The l+1 cevians whose feet lie in facets of L, each with its induced segment.

    For t in L the unique member with foot in the facet L_t has apex set
    ``{t}`` plus the vertices outside L.
    """
    k = fam.uniform_k
    if k is None:
        raise DimensionMismatch("restrict_to_face needs a uniform family")
    if k + L.dim != fam.ambient_n + 1:
        raise DimensionMismatch(
            f"face {L} has dim {L.dim}; expected l = n + 1 - k = {fam.ambient_n + 1 - k}")
    pairs = []
    for t in L:
        facet = L.without(t)
        matches = fam.with_foot_in(facet)
        if len(matches) != 1:
            raise BadSupport(f"facet {facet} of {L} holds {len(matches)} feet, expected exactly 1")
        c = matches[0]
        pairs.append((c, InducedCevian(L, t, c.foot)))
    return pairs


def induced_cevians(fam: CevianFamily, L: Face) -> list[InducedCevian]:
    return [ic for _, ic in restrict_to_face(fam, L)]


def lift_feet(fam: CevianFamily) -> CevianFamily:
    """Build the k-cevian family from a (k-1)-cevian family satisfying condition (2).

    The new feet are the multipede-closure points of the old feet lying inside
    each face with n + 1 - k vertices.  Raises ClosureAmbiguous when some such
    face holds anything but exactly one closure point.
    """
    if fam.uniform_k is None:
        raise DimensionMismatch("lift_feet needs a uniform family")
    n, k = fam.ambient_n, fam.uniform_k + 1
    if k >= n:
        raise DimensionMismatch(f"cannot lift {fam.uniform_k}-cevians in an {n}-simplex")
    l = n + 1 - k
    closure = closure_points(fam)
    feet = {}
    for F in Face.full(n).subfaces(min_dim=l - 1, max_dim=l - 1):
        feet[F.complement()] = unique_closure_point(closure, F)
    return build_family(n, k, feet)

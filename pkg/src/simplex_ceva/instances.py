"""Seeded random instances and the JSON instance format.

Random points have denominators bounded by ``denominator_bound`` (default
64).  Every generator takes an explicit :class:`random.Random`, so an instance
is fully reproducible from its seed.
"""
from __future__ import annotations

import json
import random
from fractions import Fraction
from typing import Any

from .cevians import Cevian, CevianFamily, build_family, feet_from_point
from .concurrence import proposition_edge_points, proposition_family
from .errors import CevaError, ParseError
from .exact import BaryPoint, Face, parse_rational, restrict_point

SCHEMA_VERSION = 1
DEFAULT_DENOMINATOR = 64


def seeded_rng(*parts) -> random.Random:
    """A generator keyed on a tuple of seed parts (stable across runs and platforms)."""
    return random.Random(":".join(str(p) for p in parts))


def random_interior_point(rng: random.Random, face: Face, denominator_bound: int = DEFAULT_DENOMINATOR) -> BaryPoint:
    """A point strictly inside ``face`` whose coordinates are multiples of 1/D.

    D is ``denominator_bound`` raised, if needed, to the number of vertices.
    """
    m = len(face)
    D = max(denominator_bound, m)
    cuts = sorted(rng.sample(range(1, D), m - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [D])]
    return face.lift([Fraction(p, D) for p in parts])


def concurrent_family(rng, n: int, k: int, denominator_bound: int = DEFAULT_DENOMINATOR):
    x = random_interior_point(rng, Face.full(n), denominator_bound)
    return build_family(n, k, feet_from_point(x, k)), x


def shift_within_face(rng, q: BaryPoint, denominator_bound: int = DEFAULT_DENOMINATOR) -> BaryPoint:
    """Move mass between two vertices of q's face without leaving its interior."""
    support = q.support.indices
    i, j = rng.sample(support, 2)
    frac = Fraction(rng.randrange(1, denominator_bound), denominator_bound)
    eps = q.coords[i] * frac
    coords = list(q.coords)
    coords[i] -= eps
    coords[j] += eps
    return BaryPoint(tuple(coords))


def perturb_family(rng, fam: CevianFamily, denominator_bound: int = DEFAULT_DENOMINATOR) -> CevianFamily:
    c = fam.members[rng.randrange(len(fam))]
    moved = Cevian(c.apex, shift_within_face(rng, c.foot, denominator_bound))
    return fam.with_member(c, moved)


def random_family(rng, n: int, k: int, denominator_bound: int = DEFAULT_DENOMINATOR) -> CevianFamily:
    """Every foot drawn independently; generically not concurrent."""
    feet = {}
    for apex in Face.full(n).subfaces(min_dim=k - 1, max_dim=k - 1):
        feet[apex] = random_interior_point(rng, apex.complement(), denominator_bound)
    return build_family(n, k, feet)


def proposition_instance(rng, perturbed: bool = False, denominator_bound: int = DEFAULT_DENOMINATOR):
    """Mixed tetrahedral family and its three extra edge points.

    Concurrent instances come from one interior point; perturbed ones move the
    foot on edge 01.
    """
    x = random_interior_point(rng, Face.full(3), denominator_bound)
    q = {e: restrict_point(x, Face(e, 3)) for e in ((0, 1), (0, 2), (0, 3), (1, 2, 3))}
    if perturbed:
        q[(0, 1)] = shift_within_face(rng, q[(0, 1)], denominator_bound)
    fam = proposition_family(q[(0, 1)], q[(0, 2)], q[(0, 3)], q[(1, 2, 3)])
    return fam, proposition_edge_points(q[(1, 2, 3)]), x


# --- JSON ----------------------------------------------------------------

def point_from_json(raw) -> BaryPoint:
    if not isinstance(raw, list):
        raise ParseError("a point must be a list of rational strings")
    try:
        return BaryPoint(tuple(parse_rational(s) for s in raw))
    except ParseError:
        raise
    except (ValueError, TypeError) as e:
        raise ParseError(str(e)) from None


def cevian_to_json(c: Cevian) -> dict:
    return {"apex": list(c.apex.indices), "foot": c.foot.to_strings()}


def cevian_from_json(raw, n: int) -> Cevian:
    if not isinstance(raw, dict) or "apex" not in raw or "foot" not in raw:
        raise ParseError("a cevian needs 'apex' and 'foot'")
    foot = point_from_json(raw["foot"])
    try:
        apex = Face(tuple(raw["apex"]), n)
        return Cevian(apex, foot)
    except CevaError:
        raise
    except (ValueError, TypeError) as e:
        raise ParseError(str(e)) from None


def _canonical_members(fam: CevianFamily):
    return sorted(fam.members, key=lambda c: (len(c.apex), c.apex.indices))


def family_to_json(fam: CevianFamily) -> dict:
    if fam.uniform_k is not None:
        k: Any = fam.uniform_k
    else:
        k = [c.k for c in _canonical_members(fam)]
    return {"n": fam.ambient_n, "k": k, "cevians": [cevian_to_json(c) for c in _canonical_members(fam)]}


def family_from_json(raw) -> CevianFamily:
    if not isinstance(raw, dict):
        raise ParseError("a family must be a JSON object")
    n = raw.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"bad dimension n={n!r}")
    cevs = raw.get("cevians")
    if not isinstance(cevs, list):
        raise ParseError("'cevians' must be a list")
    members = tuple(cevian_from_json(c, n) for c in cevs)
    k = raw.get("k")
    if isinstance(k, list):
        if sorted(k) != sorted(c.k for c in members):
            raise ParseError("per-cevian k list does not match the apex sizes")
        k = None
    elif k is not None and (not isinstance(k, int) or isinstance(k, bool)):
        raise ParseError(f"bad k={k!r}")
    try:
        return CevianFamily(n, members, k)
    except CevaError:
        raise
    except ValueError as e:
        raise ParseError(str(e)) from None


def instance_to_json(fam: CevianFamily, provenance: dict | None = None) -> dict:
    doc = {"schema_version": SCHEMA_VERSION, **family_to_json(fam)}
    if provenance is not None:
        doc["provenance"] = provenance
    return doc


def instance_from_json(doc) -> tuple[CevianFamily, dict | None]:
    if not isinstance(doc, dict):
        raise ParseError("an instance must be a JSON object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {doc.get('schema_version')!r}")
    return family_from_json(doc), doc.get("provenance")


def dumps(doc) -> str:
    """Canonical text form: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads_instance(text: str) -> tuple[CevianFamily, dict | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from None
    return instance_from_json(doc)

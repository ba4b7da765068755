"""Exact kernel: rational scalars, faces, barycentric points and linear feasibility.

Every quantity is a :class:`fractions.Fraction`; nothing in this module ever
touches a float.  Points are always stored in ambient coordinates, one entry per
vertex of the fixed simplex ``P_0 ... P_n``.
"""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import NotInterior, ParseError, ZeroMass

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text) -> Fraction:
    """Parse the textual form ``"p/q"`` or ``"p"`` into a Fraction.

    Ints and Fractions pass through unchanged.  Decimal and float literals are
    refused: they have no bit-exact meaning in the interchange format.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a rational string, got {text!r}")
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Face:
    """A subsimplicial face, named by its strictly increasing vertex indices."""

    indices: tuple[int, ...]
    ambient_n: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        if not idx:
            raise ValueError("a face needs at least one vertex")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError(f"face indices must be strictly increasing: {idx}")
        if idx[0] < 0 or idx[-1] > self.ambient_n:
            raise ValueError(f"face {idx} out of range for n={self.ambient_n}")

    @classmethod
    def of(cls, indices: Iterable[int], ambient_n: int) -> "Face":
        return cls(tuple(sorted(indices)), ambient_n)

    @classmethod
    def full(cls, n: int) -> "Face":
        return cls(tuple(range(n + 1)), n)

    @property
    def dim(self) -> int:
        return len(self.indices) - 1

    def __len__(self):
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    def issubset(self, other: "Face") -> bool:
        return set(self.indices) <= set(other.indices)

    def complement(self) -> "Face":
        rest = [i for i in range(self.ambient_n + 1) if i not in self.indices]
        if not rest:
            raise ValueError("the full simplex has an empty complement")
        return Face(tuple(rest), self.ambient_n)

    def without(self, i: int) -> "Face":
        """The facet of this face opposite to vertex ``i``."""
        if i not in self.indices:
            raise ValueError(f"vertex {i} not in face {self.indices}")
        return Face(tuple(j for j in self.indices if j != i), self.ambient_n)

    def subfaces(self, min_dim: int = 0, max_dim: int | None = None) -> Iterator["Face"]:
        """All faces of this face with ``min_dim <= dim <= max_dim``, by size then lexicographically."""
        top = self.dim if max_dim is None else min(max_dim, self.dim)
        for size in range(min_dim + 1, top + 2):
            for combo in itertools.combinations(self.indices, size):
                yield Face(combo, self.ambient_n)

    def local(self, p: "BaryPoint") -> tuple[Fraction, ...]:
        """Coordinates of ``p`` on this face's own vertices (p must be supported inside it)."""
        if not p.support.issubset(self):
            raise ValueError(f"point not supported in face {self.indices}")
        return tuple(p.coords[i] for i in self.indices)

    def lift(self, local_coords: Sequence) -> "BaryPoint":
        """Inverse of :meth:`local`: embed face-frame coordinates into the ambient frame."""
        if len(local_coords) != len(self.indices):
            raise ValueError("wrong number of local coordinates")
        coords = [Fraction(0)] * (self.ambient_n + 1)
        for i, c in zip(self.indices, local_coords):
            coords[i] = Fraction(c)
        return BaryPoint(tuple(coords))

    def centroid(self) -> "BaryPoint":
        w = Fraction(1, len(self.indices))
        return self.lift([w] * len(self.indices))

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


@dataclass(frozen=True)
class BaryPoint:
    """Barycentric coordinates of a point of the closed simplex.

    Coordinates sum to exactly one and are never negative; both are enforced
    at construction.
    """

    coords: tuple[Fraction, ...]
    _support: Face = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        coords = tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) < 1:
            raise ValueError("empty coordinate vector")
        if any(c < 0 for c in coords):
            raise ValueError(f"negative barycentric coordinate in {self}")
        if sum(coords) != 1:
            raise ValueError(f"coordinates sum to {sum(coords)}, not 1")
        support = Face(tuple(i for i, c in enumerate(coords) if c), len(coords) - 1)
        object.__setattr__(self, "_support", support)

    @classmethod
    def of(cls, *values) -> "BaryPoint":
        return cls(tuple(parse_rational(v) if isinstance(v, str) else Fraction(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "BaryPoint":
        parts = [s for s in text.replace(" ", "").split(",") if s]
        try:
            return cls(tuple(parse_rational(s) for s in parts))
        except ParseError:
            raise
        except ValueError as e:
            raise ParseError(str(e)) from None

    @classmethod
    def vertex(cls, i: int, n: int) -> "BaryPoint":
        return cls(tuple(Fraction(int(j == i)) for j in range(n + 1)))

    @property
    def n(self) -> int:
        return len(self.coords) - 1

    @property
    def support(self) -> Face:
        return self._support

    def is_interior_to(self, face: Face) -> bool:
        return self.support.indices == face.indices

    def mass(self, face: Face) -> Fraction:
        return sum((self.coords[i] for i in face), Fraction(0))

    def to_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coords]

    def __str__(self):
        return "(" + ", ".join(self.to_strings()) + ")"


def restrict_point(p: BaryPoint, f: Face) -> BaryPoint:
    """Project ``p`` away from the vertices outside ``f`` and renormalize.

    The result stays in ambient coordinates, with zeros off ``f``.  It is the
    point where the ray from the complementary face through ``p`` meets ``f``.
    """
    m = p.mass(f)
    if m == 0:
        raise ZeroMass(f"point {p} has no mass on face {f}")
    coords = [Fraction(0)] * len(p.coords)
    for i in f:
        coords[i] = p.coords[i] / m
    return BaryPoint(tuple(coords))


def require_interior(p: BaryPoint, f: Face) -> None:
    if not p.is_interior_to(f):
        raise NotInterior(f"point {p} is not interior to face {f}")


# --- linear systems -------------------------------------------------------

@dataclass(frozen=True)
class Constraint:
    """``coeffs . x == rhs`` (kind ``"eq"``) or ``coeffs . x >= rhs`` (kind ``"ge"``)."""

    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    kind: str = "eq"

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * b for a, b in zip(self.coeffs, x)), Fraction(0))
        return lhs == self.rhs if self.kind == "eq" else lhs >= self.rhs


@dataclass
class LinearSystem:
    n_unknowns: int
    rows: list[Constraint] = field(default_factory=list)

    def add_eq(self, coeffs, rhs=0):
        self._add(coeffs, rhs, "eq")

    def add_ge(self, coeffs, rhs=0):
        self._add(coeffs, rhs, "ge")

    def _add(self, coeffs, rhs, kind):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != self.n_unknowns:
            raise ValueError(f"expected {self.n_unknowns} coefficients, got {len(coeffs)}")
        self.rows.append(Constraint(coeffs, Fraction(rhs), kind))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return all(r.satisfied_by(x) for r in self.rows)


@dataclass(frozen=True)
class SolutionSpace:
    """Affine solution set ``particular + span(basis)`` of an equality system."""

    particular: tuple[Fraction, ...]
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, params: Sequence[Fraction]) -> tuple[Fraction, ...]:
        x = list(self.particular)
        for t, v in zip(params, self.basis):
            if t:
                for i, vi in enumerate(v):
                    x[i] += t * vi
        return tuple(x)


def solve_affine(system: LinearSystem) -> SolutionSpace | None:
    """Solve the equality rows exactly by reduction to reduced row echelon form.

    Returns ``None`` when the system is inconsistent.  Because the reduced
    echelon form is unique, the particular solution (free variables set to
    zero) and the nullspace basis do not depend on the order of the rows.
    """
    if any(r.kind != "eq" for r in system.rows):
        raise ValueError("solve_affine only accepts equality rows")
    n = system.n_unknowns
    # Integer rows scaled by their gcd; each pivot row has a positive entry at
    # its pivot column and zeros at every other pivot column.
    pivots: dict[int, list[int]] = {}
    for con in system.rows:
        row = _integer_row(list(con.coeffs) + [con.rhs])
        for col, prow in pivots.items():
            if row[col]:
                row = _eliminate(row, prow, col)
        lead = next((j for j in range(n) if row[j]), None)
        if lead is None:
            if row[n]:
                return None
            continue
        if row[lead] < 0:
            row = [-v for v in row]
        for col, prow in list(pivots.items()):
            if prow[lead]:
                pivots[col] = _eliminate(prow, row, lead)
        pivots[lead] = row

    particular = [Fraction(0)] * n
    for col, prow in pivots.items():
        particular[col] = Fraction(prow[n], prow[col])
    basis = []
    for free in range(n):
        if free in pivots:
            continue
        v = [Fraction(0)] * n
        v[free] = Fraction(1)
        for col, prow in pivots.items():
            v[col] = Fraction(-prow[free], prow[col])
        basis.append(tuple(v))
    return SolutionSpace(tuple(particular), tuple(basis))


def _integer_row(values: list[Fraction]) -> list[int]:
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return _primitive([v.numerator * (den // v.denominator) for v in values])


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = math.gcd(g, v)
    return row if g in (0, 1) else [v // g for v in row]


def _eliminate(row: list[int], prow: list[int], col: int) -> list[int]:
    """Clear ``row[col]`` using ``prow`` (whose entry there is positive)."""
    a, b = prow[col], row[col]
    return _primitive([a * x - b * y for x, y in zip(row, prow)])


# --- Fourier-Motzkin -------------------------------------------------------

# An inequality over the free parameters: coeffs . t + const  (> 0 if strict else >= 0).
_Ineq = tuple[tuple[Fraction, ...], Fraction, bool]


def _normalize(rows: Iterable[_Ineq]) -> list[_Ineq] | None:
    """Drop trivial rows, scale the rest canonically and merge duplicates.

    Returns None if a constant row is violated.
    """
    merged: dict[tuple, bool] = {}
    for coeffs, const, strict in rows:
        lead = next((c for c in coeffs if c), None)
        if lead is None:
            if const < 0 or (strict and const == 0):
                return None
            continue
        s = abs(lead)
        key = (tuple(c / s for c in coeffs), const / s)
        merged[key] = merged.get(key, False) or strict
    return [(c, k, s) for (c, k), s in merged.items()]


def _bounds(rows: list[_Ineq], j: int, values: dict[int, Fraction]):
    """Tightest lower and upper bound on parameter j once later parameters are fixed."""
    lo = hi = None  # (value, strict)
    for coeffs, const, strict in rows:
        a = coeffs[j]
        rest = const + sum((coeffs[i] * v for i, v in values.items()), Fraction(0))
        if a == 0:
            continue
        b = -rest / a
        if a > 0:
            if lo is None or b > lo[0] or (b == lo[0] and strict):
                lo = (b, strict)
        else:
            if hi is None or b < hi[0] or (b == hi[0] and strict):
                hi = (b, strict)
    return lo, hi


def _pick(lo, hi) -> Fraction:
    # Smallest admissible value when the lower bound is attained; otherwise a
    # deterministic interior choice.
    if lo is not None and not lo[1]:
        return lo[0]
    if lo is not None and hi is not None:
        return (lo[0] + hi[0]) / 2
    if lo is not None:
        return lo[0] + 1
    if hi is not None:
        if hi[0] > 0 or (hi[0] == 0 and not hi[1]):
            return Fraction(0)
        return hi[0] - 1
    return Fraction(0)


def feasible_nonnegative(space: SolutionSpace | None, strict: bool = False) -> tuple[Fraction, ...] | None:
    """Find a point of ``space`` with every coordinate >= 0 (> 0 if ``strict``).

    Decided exactly by Fourier-Motzkin elimination over the nullspace
    parameters, followed by back-substitution.  Returns the coordinate vector
    or None when no such point exists.
    """
    if space is None:
        return None
    d = space.dim
    n = len(space.particular)
    rows: list[_Ineq] = [
        (tuple(space.basis[j][i] for j in range(d)), space.particular[i], strict)
        for i in range(n)
    ]
    stages = []
    current = _normalize(rows)
    if current is None:
        return None
    for j in range(d):
        stages.append(current)
        pos, neg, keep = [], [], []
        for r in current:
            (pos if r[0][j] > 0 else neg if r[0][j] < 0 else keep).append(r)
        combined = list(keep)
        for cp, kp, sp in pos:
            for cn, kn, sn in neg:
                a, b = -cn[j], cp[j]
                coeffs = tuple(a * x + b * y for x, y in zip(cp, cn))
                combined.append((coeffs, a * kp + b * kn, sp or sn))
        current = _normalize(combined)
        if current is None:
            return None

    values: dict[int, Fraction] = {}
    for j in reversed(range(d)):
        lo, hi = _bounds(stages[j], j, values)
        values[j] = _pick(lo, hi)
    x = space.point([values[j] for j in range(d)])
    if any(c < 0 for c in x) or (strict and any(c == 0 for c in x)):
        raise AssertionError("Fourier-Motzkin back-substitution produced an infeasible point")
    return x

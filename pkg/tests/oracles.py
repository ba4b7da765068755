"""Independent oracles built on sympy and brute-force enumeration.

None of these call into simplex_ceva's solver; they only read plain
coordinates off its objects.
"""
import itertools
import random
from fractions import Fraction

import sympy as sp


def to_sympy(x):
    return sp.Rational(x.numerator, x.denominator)


def from_sympy(v):
    v = sp.Rational(v)
    return Fraction(int(v.p), int(v.q))


def random_vertices(n, seed=0, spread=9):
    """n+1 affinely independent integer points of R^n."""
    rng = random.Random(seed)
    while True:
        P = [sp.Matrix([rng.randint(-spread, spread) for _ in range(n)]) for _ in range(n + 1)]
        M = sp.Matrix.hstack(*[P[i] - P[0] for i in range(1, n + 1)])
        if M.det() != 0:
            return P


def cartesian(coords, P):
    return sum((to_sympy(c) * P[i] for i, c in enumerate(coords)), sp.zeros(P[0].rows, 1))


def barycentric(X, P):
    n = len(P) - 1
    M = sp.Matrix.vstack(sp.Matrix.hstack(*P), sp.ones(1, n + 1))
    rhs = sp.Matrix.vstack(X, sp.Matrix([1]))
    return [from_sympy(v) for v in M.solve(rhs)]


def convex_combination(point_coords, generators):
    """Weights w >= 0 summing to 1 with sum w_g g = point, or None (brute-force solve)."""
    m = len(generators)
    w = sp.symbols(f"w0:{m}")
    eqs = [sum(w[g] * to_sympy(generators[g][i]) for g in range(m)) - to_sympy(point_coords[i])
           for i in range(len(point_coords))]
    eqs.append(sum(w) - 1)
    sol = sp.linsolve(eqs, w)
    if not sol:
        return None
    (tup,) = sol
    if any(sp.sympify(e).free_symbols for e in tup):
        raise AssertionError("generators must be affinely independent")
    vals = [sp.Rational(e) for e in tup]
    return vals if all(v >= 0 for v in vals) else None


def line_intersection(P, family):
    """Common point of the segments/lines P_t -> Q_t (1-cevians) in Cartesian space.

    Returns barycentric coordinates of the unique common point of the lines,
    or None if the lines share no point.
    """
    n = len(P) - 1
    X = sp.symbols(f"X0:{n}")
    s = sp.symbols(f"s0:{len(family.members)}")
    eqs = []
    for c, st in zip(family.members, s):
        (t,) = c.apex.indices
        Q = cartesian(c.foot.coords, P)
        line = P[t] + st * (Q - P[t])
        eqs += [X[i] - line[i] for i in range(n)]
    sol = sp.linsolve(eqs, list(X) + list(s))
    if not sol:
        return None
    (tup,) = sol
    if any(sp.sympify(e).free_symbols for e in tup[:n]):
        raise AssertionError("line family does not pin down a point")
    return barycentric(sp.Matrix(tup[:n]), P)


def hyperplane_intersection(P, family):
    """Common point of the hyperplanes spanned by (n-1)-cevians, in Cartesian space."""
    n = len(P) - 1
    X = sp.Matrix(sp.symbols(f"X0:{n}"))
    eqs = []
    for c in family.members:
        pts = [P[u] for u in c.apex.indices] + [cartesian(c.foot.coords, P)]
        A = sp.Matrix.hstack(*[sp.Matrix.vstack(p, sp.Matrix([1])) for p in pts]).T
        (normal,) = A.nullspace()
        eqs.append((normal[:n, 0].T * X)[0] + normal[n])
    sol = sp.linsolve(eqs, list(X))
    if not sol:
        return None
    (tup,) = sol
    if any(sp.sympify(e).free_symbols for e in tup):
        raise AssertionError("hyperplanes do not pin down a point")
    return barycentric(sp.Matrix(tup), P)


def basic_solutions(A, b):
    """All basic solutions of A x = b, x free sign (rows are lists of Fractions)."""
    n = len(A[0])
    M = sp.Matrix([[to_sympy(v) for v in row] for row in A])
    rhs = sp.Matrix([to_sympy(v) for v in b])
    r = M.rank()
    aug = M.row_join(rhs)
    if aug.rank() != r:
        return []
    out = []
    for cols in itertools.combinations(range(n), r):
        sub = M[:, list(cols)]
        if sub.rank() != r:
            continue
        sol = sp.linsolve((sub, rhs))
        for tup in sol:
            x = [Fraction(0)] * n
            for c, v in zip(cols, tup):
                x[c] = from_sympy(v)
            out.append(tuple(x))
    return out


def nonnegative_oracle(A, b, strict):
    """Feasibility of {A x = b, x >= 0 (or > 0)} for a bounded polytope, by vertex enumeration.

    Strict feasibility holds iff the centroid of the vertices is positive:
    that centroid lies in the relative interior.
    """
    verts = [x for x in basic_solutions(A, b) if all(v >= 0 for v in x)]
    if not verts:
        return False
    if not strict:
        return True
    n = len(verts[0])
    centroid = [sum(v[i] for v in verts) / len(verts) for i in range(n)]
    return all(c > 0 for c in centroid)

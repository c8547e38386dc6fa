"""Exact rational polyhedra: Fourier-Motzkin projection, feasibility,
lattice-point enumeration and vertex/dimension computations.

An inequality is a pair (coeffs, rhs) of ints meaning  coeffs . x >= rhs.
All arithmetic is exact; systems stay integral throughout (FM combines
with positive integer multipliers).
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .intlinalg import rational_rank, solve_rational

Inequality = tuple[tuple[int, ...], int]


class UnboundedPolytopeError(ValueError):
    pass


def _normalize(coeffs, rhs) -> Inequality:
    g = 0
    for c in coeffs:
        g = gcd(g, abs(c))
    if g > 1 and rhs % g == 0:
        return tuple(c // g for c in coeffs), rhs // g
    return tuple(coeffs), rhs


def fm_eliminate(ineqs: list[Inequality], var: int) -> list[Inequality]:
    """Project the system onto the hyperplane coordinates, dropping `var`.

    The variable's coefficient slot is kept (as 0) so indices stay stable.
    """
    lower = [q for q in ineqs if q[0][var] > 0]
    upper = [q for q in ineqs if q[0][var] < 0]
    rest = [q for q in ineqs if q[0][var] == 0]
    out = list(rest)
    seen = {q for q in rest}
    for (ac, ar) in lower:
        p = ac[var]
        for (bc, br) in upper:
            q = -bc[var]
            coeffs = tuple(q * a + p * b for a, b in zip(ac, bc))
            rhs = q * ar + p * br
            ineq = _normalize(coeffs, rhs)
            if all(c == 0 for c in ineq[0]):
                if ineq[1] > 0:  # 0 >= positive: contradiction, keep it
                    if ineq not in seen:
                        seen.add(ineq)
                        out.append(ineq)
                continue
            if ineq not in seen:
                seen.add(ineq)
                out.append(ineq)
    return out


def feasible(ineqs: list[Inequality], nvars: int) -> bool:
    """Rational feasibility via full FM elimination."""
    system = [_normalize(c, r) for c, r in ineqs]
    for var in range(nvars - 1, -1, -1):
        trivial = [q for q in system if all(c == 0 for c in q[0])]
        if any(r > 0 for _, r in trivial):
            return False
        system = fm_eliminate(system, var)
    return all(r <= 0 for _, r in system)


def _ceil_div(a: int, b: int) -> int:
    assert b > 0
    return -((-a) // b)


def _floor_div(a: int, b: int) -> int:
    assert b > 0
    return a // b


def lattice_points(ineqs: list[Inequality], nvars: int) -> list[tuple[int, ...]]:
    """All integer points of the polytope {x : A x >= c}, in lexicographic order.

    Raises UnboundedPolytopeError when the solution set is nonempty and
    unbounded (detected exactly on the recession cone A x >= 0).
    """
    system = [_normalize(c, r) for c, r in ineqs]
    if not feasible(system, nvars):
        return []
    # recession cone check: any nonzero direction with A d >= 0?
    hom = [(c, 0) for c, _ in system]
    for i in range(nvars):
        for sign in (1, -1):
            e = tuple(0 if j != i else sign for j in range(nvars))
            if feasible(hom + [(e, 1)], nvars):
                raise UnboundedPolytopeError("polytope unbounded")
    # projections: levels[k] constrains variables 0..k-1
    levels = [system]
    for var in range(nvars - 1, 0, -1):
        levels.append(fm_eliminate(levels[-1], var))
    levels.reverse()  # levels[k] involves vars 0..k

    points: list[tuple[int, ...]] = []
    prefix = [0] * nvars

    def descend(k: int):
        lo, hi = None, None
        for coeffs, rhs in levels[k]:
            a = coeffs[k]
            if a == 0:
                continue
            t = rhs - sum(coeffs[j] * prefix[j] for j in range(k))
            if a > 0:
                bound = _ceil_div(t, a)
                lo = bound if lo is None else max(lo, bound)
            else:
                bound = _floor_div(-t, -a)
                hi = bound if hi is None else min(hi, bound)
        assert lo is not None and hi is not None  # boundedness was verified
        for value in range(lo, hi + 1):
            prefix[k] = value
            if k == nvars - 1:
                points.append(tuple(prefix))
            else:
                descend(k + 1)

    descend(0)
    return points


def vertices(ineqs: list[Inequality], nvars: int) -> list[tuple[Fraction, ...]]:
    """All vertices of the polyhedron, by exact basis enumeration."""
    system = [_normalize(c, r) for c, r in ineqs]
    found: set[tuple[Fraction, ...]] = set()
    for subset in combinations(range(len(system)), nvars):
        rows = [list(system[i][0]) for i in subset]
        if rational_rank(rows) < nvars:
            continue
        rhs = [system[i][1] for i in subset]
        sol = solve_rational(rows, rhs)
        if sol is None:
            continue
        if all(sum(Fraction(c) * x for c, x in zip(coeffs, sol)) >= r
               for coeffs, r in system):
            found.add(sol)
    return sorted(found)


def polytope_dim(ineqs: list[Inequality], nvars: int) -> int:
    """Dimension of the (bounded) solution set; -1 when empty."""
    if not feasible(ineqs, nvars):
        return -1
    verts = vertices(ineqs, nvars)
    if not verts:
        raise UnboundedPolytopeError("no vertices: polyhedron is unbounded or degenerate")
    v0 = verts[0]
    if len(verts) == 1:
        return 0
    rows = [[x - y for x, y in zip(v, v0)] for v in verts[1:]]
    return rational_rank(rows)

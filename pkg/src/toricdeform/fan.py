"""Fans of strongly convex rational polyhedral cones, with exact validation,
cone multiplicity and star subdivision.

Cones are identified by their sorted ray-index sets. Rays must be primitive;
non-primitive input rays are rejected rather than silently divided.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .intlinalg import elementary_divisors, is_primitive, rational_rank, solve_rational
from .polyhedra import feasible


@dataclass(frozen=True)
class Cone:
    ray_indices: tuple[int, ...]
    dim: int

    def __post_init__(self):
        object.__setattr__(self, "ray_indices", tuple(sorted(self.ray_indices)))


@dataclass(frozen=True)
class Fan:
    rank: int
    rays: tuple[tuple[int, ...], ...]
    cones: tuple[Cone, ...]

    def cone_generators(self, cone: Cone) -> list[tuple[int, ...]]:
        return [self.rays[i] for i in cone.ray_indices]

    def maximal_cones(self) -> list[Cone]:
        ray_sets = [set(c.ray_indices) for c in self.cones]
        out = []
        for i, c in enumerate(self.cones):
            s = ray_sets[i]
            if not any(s < ray_sets[j] for j in range(len(self.cones)) if j != i):
                if c.ray_indices:
                    out.append(c)
        return out

    def cones_of_dim(self, k: int) -> list[Cone]:
        return [c for c in self.cones if c.dim == k]

    def has_cone(self, ray_indices) -> bool:
        key = tuple(sorted(ray_indices))
        return any(c.ray_indices == key for c in self.cones)


def _rank_of_rays(rays) -> int:
    if not rays:
        return 0
    return rational_rank([list(r) for r in rays])


def is_simplicial_cone(fan_rays, ray_indices) -> bool:
    gens = [fan_rays[i] for i in ray_indices]
    return _rank_of_rays(gens) == len(gens)


def _spans_face(rays, subset, full) -> bool:
    """Does `subset` span a face of cone(`full`)?

    Criterion: some functional w vanishes on the subset's generators and is
    >= 1 on the remaining generators.
    """
    d = len(rays[0]) if rays else 0
    system = []
    for i in full:
        if i in subset:
            system.append((tuple(rays[i]), 0))
            system.append((tuple(-x for x in rays[i]), 0))
        else:
            system.append((tuple(rays[i]), 1))
    return feasible(system, d)


def cone_faces(rays, ray_indices) -> list[tuple[int, ...]]:
    """All faces of the cone, as sorted ray-index tuples (including itself
    and the zero cone when the cone is strongly convex)."""
    idx = tuple(sorted(ray_indices))
    if is_simplicial_cone(rays, idx):
        out = []
        for k in range(len(idx) + 1):
            out.extend(tuple(sub) for sub in combinations(idx, k))
        return out
    full = set(idx)
    return [tuple(sorted(sub))
            for k in range(len(idx) + 1)
            for sub in combinations(idx, k)
            if _spans_face(rays, set(sub), full)]


def is_strongly_convex(rays, ray_indices) -> bool:
    """No nonzero v has both v and -v in the cone: equivalently the zero
    vector is not a nontrivial nonnegative combination of the generators."""
    gens = [rays[i] for i in ray_indices]
    if not gens:
        return True
    if _rank_of_rays(gens) == len(gens):
        return True
    d = len(gens[0])
    k = len(gens)
    # variables c_1..c_k: sum c_i g_i = 0, c >= 0, sum c_i >= 1
    system = []
    for j in range(d):
        coeffs = tuple(g[j] for g in gens)
        system.append((coeffs, 0))
        system.append((tuple(-x for x in coeffs), 0))
    for i in range(k):
        system.append((tuple(1 if t == i else 0 for t in range(k)), 0))
    system.append(((1,) * k, 1))
    return not feasible(system, k)


def cone_contains(rays, ray_indices, v) -> bool:
    """Exact membership of vector v in cone(rays[i] for i in ray_indices)."""
    gens = [rays[i] for i in ray_indices]
    if not gens:
        return all(x == 0 for x in v)
    d = len(v)
    if _rank_of_rays(gens) == len(gens):
        cols = [[g[j] for g in gens] for j in range(d)]
        sol = solve_rational(cols, list(v))
        return sol is not None and all(c >= 0 for c in sol)
    k = len(gens)
    # encode equality sum c_i g_i[j] = v[j] via two inequalities, c >= 0
    system = []
    for j in range(d):
        coeffs = tuple(g[j] for g in gens)
        neg = tuple(-x for x in coeffs)
        system.append((coeffs, v[j]))
        system.append((neg, -v[j]))
    for i in range(k):
        system.append((tuple(1 if t == i else 0 for t in range(k)), 0))
    return feasible(system, k)


def cone_coefficients(rays, ray_indices, v) -> tuple[Fraction, ...] | None:
    """Coefficients of v in the (simplicial) cone's generators, or None when
    v is outside their span."""
    gens = [rays[i] for i in ray_indices]
    d = len(v)
    cols = [[g[j] for g in gens] for j in range(d)]
    return solve_rational(cols, list(v))


def make_fan(rank: int, rays, maximal_cones) -> Fan:
    """Build a fan from ray generators and maximal cones, closing under faces.

    Rays must be primitive and cones strongly convex; violations raise.
    """
    rays = tuple(tuple(r) for r in rays)
    for r in rays:
        if len(r) != rank:
            raise ValueError(f"ray {r} does not have length {rank}")
        if not any(r):
            raise ValueError("zero vector is not a valid ray")
        if not is_primitive(r):
            raise ValueError(f"ray {r} is not primitive")
    if len(set(rays)) != len(rays):
        raise ValueError("duplicate rays")
    seen: dict[tuple[int, ...], int] = {}
    for mc in maximal_cones:
        idx = tuple(sorted(mc))
        if any(i < 0 or i >= len(rays) for i in idx):
            raise ValueError(f"cone {idx} references a missing ray")
        if not is_strongly_convex(rays, idx):
            raise ValueError(f"cone {idx} is not strongly convex")
        for face in cone_faces(rays, idx):
            if face not in seen:
                seen[face] = _rank_of_rays([rays[i] for i in face])
    cones = tuple(Cone(face, dim) for face, dim in
                  sorted(seen.items(), key=lambda kv: (kv[1], kv[0])))
    return Fan(rank, rays, cones)


def cone_multiplicity(fan: Fan, cone: Cone) -> int:
    """Index of the subgroup generated by the cone's ray generators inside
    the saturated sublattice of their span (product of elementary divisors)."""
    gens = fan.cone_generators(cone)
    if not gens:
        return 1
    if _rank_of_rays(gens) != len(gens):
        raise ValueError("multiplicity undefined for non-simplicial cone")
    result = 1
    for divisor in elementary_divisors([list(g) for g in gens]):
        result *= divisor
    return result


@dataclass(frozen=True)
class FanDiagnostics:
    is_fan: bool
    is_complete: bool
    is_simplicial: bool
    violations: tuple[str, ...]


def validate_fan(fan: Fan) -> FanDiagnostics:
    """Structured fan diagnostics: face closure, pairwise intersections,
    primitivity, completeness (facet pairing) and simpliciality."""
    violations: list[str] = []
    d = fan.rank
    for r in fan.rays:
        if not is_primitive(r):
            violations.append(f"ray {r} is not primitive")
    if fan.rays and _rank_of_rays(fan.rays) < d:
        violations.append("rays do not span the ambient space")
    listed = {c.ray_indices for c in fan.cones}
    for c in fan.cones:
        gens = fan.cone_generators(c)
        if _rank_of_rays(gens) != c.dim:
            violations.append(f"cone {c.ray_indices} has wrong recorded dim")
        if not is_strongly_convex(fan.rays, c.ray_indices):
            violations.append(f"cone {c.ray_indices} is not strongly convex")
        for face in cone_faces(fan.rays, c.ray_indices):
            if face not in listed:
                violations.append(f"face {face} of cone {c.ray_indices} is missing")
    # pairwise intersections are common faces: separating functional with
    # prescribed zero set exactly on the common rays
    cone_list = [c for c in fan.cones if c.ray_indices]
    for a, b in combinations(cone_list, 2):
        sa, sb = set(a.ray_indices), set(b.ray_indices)
        if sa <= sb or sb <= sa:
            continue
        common = sa & sb
        system = []
        for i in common:
            system.append((tuple(fan.rays[i]), 0))
            system.append((tuple(-x for x in fan.rays[i]), 0))
        for i in sa - common:
            system.append((tuple(fan.rays[i]), 1))
        for i in sb - common:
            system.append((tuple(-x for x in fan.rays[i]), 1))
        if not feasible(system, d):
            violations.append(
                f"cones {a.ray_indices} and {b.ray_indices} do not meet in a common face")
    is_fan = not violations

    maximal = fan.maximal_cones()
    is_simplicial = all(is_simplicial_cone(fan.rays, c.ray_indices) for c in maximal)

    is_complete = bool(maximal) and all(c.dim == d for c in maximal)
    if is_complete and is_fan:
        facet_count: dict[tuple[int, ...], int] = {}
        for c in maximal:
            for face in cone_faces(fan.rays, c.ray_indices):
                if _rank_of_rays([fan.rays[i] for i in face]) == d - 1:
                    facet_count[face] = facet_count.get(face, 0) + 1
        if not all(v == 2 for v in facet_count.values()):
            is_complete = False
    elif not is_fan:
        is_complete = False
    return FanDiagnostics(is_fan, is_complete, is_simplicial, tuple(violations))


def star_subdivision(fan: Fan, new_ray) -> Fan:
    """Star subdivision of the fan at a primitive ray inside its support.

    Cones containing the ray are replaced by their star subdivision; the fan
    is returned unchanged when the ray is already one of its rays.
    """
    new_ray = tuple(new_ray)
    if not is_primitive(new_ray):
        raise ValueError(f"ray {new_ray} is not primitive")
    if new_ray in fan.rays:
        return fan
    maximal = fan.maximal_cones()
    containing = [c for c in maximal if cone_contains(fan.rays, c.ray_indices, new_ray)]
    if not containing:
        raise ValueError(f"ray {new_ray} lies outside the fan support")
    for c in containing:
        if not is_simplicial_cone(fan.rays, c.ray_indices):
            raise ValueError("star subdivision inside a non-simplicial cone is not supported")
    rays = fan.rays + (new_ray,)
    new_index = len(fan.rays)
    new_maximal: list[tuple[int, ...]] = []
    for c in maximal:
        if c not in containing:
            new_maximal.append(c.ray_indices)
            continue
        coeffs = cone_coefficients(fan.rays, c.ray_indices, new_ray)
        assert coeffs is not None
        for i, coeff in zip(c.ray_indices, coeffs):
            if coeff > 0:
                replaced = tuple(sorted(set(c.ray_indices) - {i} | {new_index}))
                new_maximal.append(replaced)
    return make_fan(fan.rank, rays, new_maximal)

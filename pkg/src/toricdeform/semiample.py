"""Analysis of a big-and-nef torus-invariant divisor: its polytope, the
coarsened fan on whose cones the support function is linear, and the ordered
data of 2-cones with interior rays.

Sign convention: the linearity witness of a maximal cone satisfies
<m_sigma, e_i> = -b_i on the cone's rays and lies in the divisor polytope
(it is the support-function vertex there).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key

from .fan import Cone, Fan, cone_multiplicity
from .intlinalg import cross2, rational_rank, saturated_plane_coordinates, solve_rational
from .polyhedra import polytope_dim
from .ring import DegreeClass, degree_of, divisor_polytope, pairing

TorusDivisor = tuple[int, ...]


def polytope_of_divisor(fan: Fan, b) -> list:
    """Inequality system { <m, e_i> >= -b_i } of the divisor polytope."""
    if len(b) != len(fan.rays):
        raise ValueError("divisor must have one coefficient per ray")
    return divisor_polytope(fan, b)


@dataclass(frozen=True)
class NefBigReport:
    nef: bool
    big: bool
    # per maximal cone (by ray-index set): exact rational witness, or None
    witnesses: tuple[tuple[tuple[int, ...], tuple[Fraction, ...] | None], ...]

    def witness_table(self) -> dict:
        return dict(self.witnesses)


def _maximal_witness(fan: Fan, cone: Cone, b):
    rows = [list(fan.rays[i]) for i in cone.ray_indices]
    rhs = [-b[i] for i in cone.ray_indices]
    return solve_rational(rows, rhs)


def nef_big_classify(fan: Fan, b) -> NefBigReport:
    """Nef iff every maximal cone has a linearity witness inside the divisor
    polytope; big iff the polytope is full-dimensional."""
    if len(b) != len(fan.rays):
        raise ValueError("divisor must have one coefficient per ray")
    maximal = fan.maximal_cones()
    if not maximal or any(c.dim != fan.rank for c in maximal):
        raise ValueError("fan must be complete (full-dimensional maximal cones)")
    nef = True
    table = []
    for cone in sorted(maximal, key=lambda c: c.ray_indices):
        m = _maximal_witness(fan, cone, b)
        if m is None:
            nef = False
            table.append((cone.ray_indices, None))
            continue
        inside = all(sum(Fraction(x) * y for x, y in zip(m, ray)) >= -bi
                     for ray, bi in zip(fan.rays, b))
        if not inside:
            nef = False
            table.append((cone.ray_indices, None))
        else:
            table.append((cone.ray_indices, m))
    big = polytope_dim(polytope_of_divisor(fan, b), fan.rank) == fan.rank
    return NefBigReport(nef, big, tuple(table))


@dataclass(frozen=True)
class SigmaXData:
    """The coarsened fan, with every cone's full set of contained rays of the
    original fan and the witness of each maximal cone."""

    fan: Fan                      # the original fan
    fan_x: Fan                    # coarsened fan, rays indexed on its own list
    ray_map: tuple[int, ...]      # fan_x ray index -> fan ray index
    members: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    # members: (fan_x cone ray_indices, all contained fan ray indices)
    witnesses: tuple[tuple[tuple[int, ...], tuple[Fraction, ...]], ...]
    # witnesses: (fan_x maximal cone ray_indices, witness)

    def members_of(self, cone_x: Cone) -> tuple[int, ...]:
        for key, val in self.members:
            if key == cone_x.ray_indices:
                return val
        raise KeyError(cone_x)

    def two_cones(self) -> list[Cone]:
        return sorted(self.fan_x.cones_of_dim(2), key=lambda c: c.ray_indices)

    def interior_pairs(self) -> list[tuple[Cone, int]]:
        """All (2-cone, interior fan-ray index) pairs, deterministically ordered."""
        out = []
        for cone_x in self.two_cones():
            boundary = {self.ray_map[i] for i in cone_x.ray_indices}
            for l in self.members_of(cone_x):
                if l not in boundary:
                    out.append((cone_x, l))
        return out


def compute_sigma_x(fan: Fan, b) -> SigmaXData:
    """Merge maximal cones sharing a support-function witness into the
    coarsened fan; faces are cut out by the active witness differences."""
    report = nef_big_classify(fan, b)
    if not report.nef:
        raise ValueError("divisor is not nef: coarsened fan undefined")
    if not report.big:
        raise ValueError("divisor is not big: polytope is lower-dimensional")
    witness_of = {idx: m for idx, m in report.witnesses}
    values = sorted(set(witness_of.values()))
    d = fan.rank

    def wdot(m, v) -> Fraction:
        return sum(Fraction(x) * y for x, y in zip(m, v))

    faces: dict[tuple[int, ...], int] = {(): 0}
    for cone in fan.cones:
        if not cone.ray_indices:
            continue
        container = next(idx for idx in witness_of
                         if set(cone.ray_indices) <= set(idx))
        m = witness_of[container]
        vstar = tuple(sum(fan.rays[i][j] for i in cone.ray_indices) for j in range(d))
        deltas = [tuple(Fraction(a) - Fraction(c) for a, c in zip(mp, m))
                  for mp in values if mp != m]
        active = [delta for delta in deltas if wdot(delta, vstar) == 0]
        member_rays = tuple(
            e for e in range(len(fan.rays))
            if all(wdot(delta, fan.rays[e]) >= 0 for delta in deltas)
            and all(wdot(delta, fan.rays[e]) == 0 for delta in active))
        dim = d - (rational_rank(active) if active else 0)
        prev = faces.get(member_rays)
        if prev is None:
            faces[member_rays] = dim
        else:
            assert prev == dim
    ray_faces = sorted(s[0] for s, k in faces.items() if k == 1)
    ray_map = tuple(ray_faces)
    to_x = {e: i for i, e in enumerate(ray_map)}
    cones_x = []
    members = []
    for member_rays, dim in sorted(faces.items(), key=lambda kv: (kv[1], kv[0])):
        idx_x = tuple(sorted(to_x[e] for e in member_rays if e in to_x))
        cones_x.append(Cone(idx_x, dim))
        members.append((idx_x, member_rays))
    fan_x = Fan(d, tuple(fan.rays[e] for e in ray_map), tuple(cones_x))
    witness_pairs = []
    seen = set()
    for member_rays, dim in faces.items():
        if dim != d:
            continue
        idx_x = tuple(sorted(to_x[e] for e in member_rays if e in to_x))
        if idx_x in seen:
            continue
        seen.add(idx_x)
        # any constituent maximal cone carries the shared witness
        container = next(idx for idx in witness_of if set(idx) <= set(member_rays))
        witness_pairs.append((idx_x, witness_of[container]))
    return SigmaXData(fan, fan_x, ray_map, tuple(members), tuple(sorted(witness_pairs)))


@dataclass(frozen=True)
class TwoConeData:
    """Ordered picture of a 2-cone of the coarsened fan: boundary rays first
    and last, interior rays angularly ordered in between, with the lattice
    multiplicities of the consecutive-ray subcones."""

    ordered_rays: tuple[int, ...]     # fan ray indices l_0, ..., l_{n+1}
    subcone_mults: tuple[int, ...]    # mult(sigma_1), ..., mult(sigma_{n+1})
    sigma_mult: int
    beta1: DegreeClass
    n_interior: int

    @property
    def interior_rays(self) -> tuple[int, ...]:
        return self.ordered_rays[1:-1]

    @property
    def boundary(self) -> tuple[int, int]:
        return (self.ordered_rays[0], self.ordered_rays[-1])

    def position_of(self, l: int) -> int:
        return self.ordered_rays.index(l)


def two_cone_analysis(fan: Fan, sigma_x: SigmaXData, cone_x: Cone,
                      l0: int | None = None) -> TwoConeData:
    """Angularly ordered rays, subcone multiplicities and the boundary-divisor
    degree class of a 2-cone of the coarsened fan.

    l0 selects the boundary ray listed first; default is the one with the
    smaller ray index.
    """
    if cone_x.dim != 2:
        raise ValueError("two-cone analysis requires a 2-dimensional cone")
    b0, b1 = (sigma_x.ray_map[i] for i in cone_x.ray_indices)
    members = sigma_x.members_of(cone_x)
    g0, g1 = fan.rays[b0], fan.rays[b1]
    coord = saturated_plane_coordinates(g0, g1)
    coords = {e: coord(fan.rays[e]) for e in members}
    assert all(c is not None for c in coords.values())
    order = sorted(members, key=cmp_to_key(
        lambda a, b: -1 if cross2(coords[a], coords[b]) > 0 else 1))
    assert order[0] == b0 and order[-1] == b1
    if l0 is None:
        l0 = min(b0, b1)
    if l0 not in (b0, b1):
        raise ValueError(f"orientation ray {l0} is not a boundary ray of the 2-cone")
    if order[0] != l0:
        order.reverse()
    mults = tuple(
        cone_multiplicity(fan, Cone((order[j], order[j + 1]), 2))
        for j in range(len(order) - 1))
    sigma_mult = cone_multiplicity(fan, Cone((b0, b1), 2))
    indicator = tuple(1 if i in set(members) else 0 for i in range(len(fan.rays)))
    beta1 = degree_of(fan, indicator)
    return TwoConeData(tuple(order), mults, sigma_mult, beta1, len(order) - 2)

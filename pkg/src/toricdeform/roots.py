"""Chart covers of the two-set covering attached to an interior ray, the
lattice points indexing one-parameter regluings ("roots"), the gluing
transition maps, and the pole/regularity dichotomy.

The stored lattice point u is the exponent datum appearing in all formulas;
the classical root of the open toric subvariety is -u.
"""

from dataclasses import dataclass

from .fan import Fan
from .polyhedra import UnboundedPolytopeError, lattice_points
from .ring import Polynomial, Scalar, pairing
from .semiample import TwoConeData


@dataclass(frozen=True)
class ChartCover:
    """Nonvanishing conditions (sets of ray indices) of the two charts and
    their intersection, for the interior ray l of a 2-cone."""

    l: int
    chart0_nonzero: tuple[int, ...]
    chart1_nonzero: tuple[int, ...]
    intersection_nonzero: tuple[int, ...]

    def nonzero_for(self, k: int) -> tuple[int, ...]:
        return self.chart0_nonzero if k == 0 else self.chart1_nonzero


def chart_cover(fan: Fan | None, two_cone: TwoConeData, l: int) -> ChartCover:
    """Chart 0 requires the rays after l (in the 2-cone order) nonzero,
    chart 1 those before l; the intersection requires all but l.

    The fan argument is only consulted for index validation.
    """
    if fan is not None and not 0 <= l < len(fan.rays):
        raise ValueError(f"ray index {l} out of range")
    if l not in two_cone.interior_rays:
        raise ValueError(f"ray {l} is not interior to the 2-cone")
    j = two_cone.position_of(l)
    order = two_cone.ordered_rays
    chart0 = tuple(order[k] for k in range(j + 1, len(order)))
    chart1 = tuple(order[k] for k in range(j))
    both = tuple(sorted(set(chart0) | set(chart1)))
    return ChartCover(l, tuple(sorted(chart0)), tuple(sorted(chart1)), both)


@dataclass(frozen=True)
class Root:
    """A lattice point u with <u, e_l> = -1, >= -1 on the 2-cone's rays and
    >= 0 elsewhere; carries its Laurent monomial and the degree-beta1 monomial
    B = prod_{rays in sigma} x_i * prod x_i^<u,e_i>."""

    u: tuple[int, ...]
    l: int
    two_cone: TwoConeData
    monomial: tuple[int, ...]      # exponents <u, e_i>
    b_monomial: tuple[int, ...]    # exponents of B

    def __post_init__(self):
        sigma = set(self.two_cone.ordered_rays)
        assert self.monomial[self.l] == -1
        assert all(self.monomial[i] >= -1 for i in sigma)
        assert all(self.monomial[i] >= 0 for i in range(len(self.monomial)) if i not in sigma)
        assert self.b_monomial[self.l] == 0
        assert all(x >= 0 for x in self.b_monomial)


def enumerate_roots(fan: Fan, two_cone: TwoConeData, l: int) -> list[Root]:
    """All roots for (sigma, l), lexicographically ordered by u."""
    if l not in two_cone.interior_rays:
        raise ValueError(f"ray {l} is not interior to the 2-cone")
    sigma = set(two_cone.ordered_rays)
    system = []
    for i, ray in enumerate(fan.rays):
        if i == l:
            system.append((tuple(ray), -1))
            system.append((tuple(-x for x in ray), 1))
        elif i in sigma:
            system.append((tuple(ray), -1))
        else:
            system.append((tuple(ray), 0))
    try:
        points = lattice_points(system, fan.rank)
    except UnboundedPolytopeError as exc:
        raise ValueError("root constraints are unbounded: fan is not complete") from exc
    out = []
    for u in points:
        mono = tuple(pairing(u, ray) for ray in fan.rays)
        b_mono = tuple((1 if i in sigma else 0) + m for i, m in enumerate(mono))
        out.append(Root(u, l, two_cone, mono, b_mono))
    return out


@dataclass(frozen=True)
class TransitionMap:
    """Substitution x_l -> x_l + coeff * lambda * (x_l * prod x^u), fixing all
    other variables. x_l * prod x^u is free of x_l, so the map is polynomial."""

    l: int
    coeff: int                      # +1, -1 for the chart maps; -2 composite
    factor: tuple[int, ...]         # exponents of x_l * prod x^u

    def substitution_polynomial(self, nvars: int, eps: bool = False) -> Polynomial:
        param = Scalar.eps_unit() if eps else Scalar.lam()
        x_l = Polynomial.variable(nvars, self.l)
        shift = Polynomial.monomial(self.factor, Scalar.from_int(self.coeff) * param)
        return x_l + shift


def gluing_map(root: Root, k: int) -> TransitionMap:
    """The chart-k regluing substitution, with sign (-1)^k."""
    if k not in (0, 1):
        raise ValueError("chart index must be 0 or 1")
    factor = tuple(m + (1 if i == root.l else 0) for i, m in enumerate(root.monomial))
    return TransitionMap(root.l, 1 if k == 0 else -1, factor)


def composite_transition(root: Root) -> TransitionMap:
    """Chart-0-to-chart-1 transition: x_l -> x_l - 2 lambda x_l prod x^u,
    exact since the two chart substitutions differ only in sign."""
    factor = tuple(m + (1 if i == root.l else 0) for i, m in enumerate(root.monomial))
    return TransitionMap(root.l, -2, factor)


def regularity_locus(fan: Fan, two_cone: TwoConeData, l: int, u) -> str:
    """On which charts the monomial x_l prod x^<u,e_i> is pole-free:
    "both", "chart0", "chart1", or "neither".

    "neither" means poles on both sides of l, i.e. a genuine regluing.
    """
    cover = chart_cover(fan, two_cone, l)
    exps = [pairing(u, ray) + (1 if i == l else 0) for i, ray in enumerate(fan.rays)]
    sigma = set(two_cone.ordered_rays)
    off = [exps[i] for i in range(len(fan.rays)) if i not in sigma]
    if any(x < 0 for x in off):
        raise ValueError("u violates the non-negativity conditions off the 2-cone")
    chart0_ok = all(exps[i] >= 0 for i in range(len(fan.rays))
                    if i not in cover.chart0_nonzero)
    chart1_ok = all(exps[i] >= 0 for i in range(len(fan.rays))
                    if i not in cover.chart1_nonzero)
    if chart0_ok and chart1_ok:
        return "both"
    if chart0_ok:
        return "chart0"
    if chart1_ok:
        return "chart1"
    return "neither"

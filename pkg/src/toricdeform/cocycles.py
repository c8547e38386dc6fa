"""Cech-cocycle representatives of infinitesimal deformations, the lattice
identity behind the interior-ray vector fields, the matching factor, and the
dimension decomposition of the deformation space into polynomial and
non-polynomial parts.

Vector fields carry rational-function coefficients stored as exact
(numerator, denominator) pairs; equality is decided by cross-multiplied
polynomial identities (denominators are eps-free, hence non-zero-divisors).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .families import compute_cm
from .fan import Cone, Fan, cone_multiplicity, validate_fan
from .intlinalg import rational_rank
from .ring import (
    Gaussian,
    Polynomial,
    Scalar,
    degree_of,
    monomials_of_degree,
    partial_derivative,
    polynomial_degree,
)
from .roots import Root
from .semiample import SigmaXData, TwoConeData, compute_sigma_x, two_cone_analysis


class RationalFunction:
    """num/den with den a nonzero eps-free polynomial."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial | None = None):
        if den is None:
            den = Polynomial.one(num.nvars)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_eps_free():
            raise ValueError("denominators must be eps-free")
        self.num = num
        self.den = den

    @staticmethod
    def zero(nvars: int) -> "RationalFunction":
        return RationalFunction(Polynomial.zero(nvars))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den,
                                self.den * other.den)

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Polynomial) -> "RationalFunction":
        return RationalFunction(self.num * p, self.den)

    def __eq__(self, other):
        return (self.num * other.den) == (other.num * self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"


class VectorField:
    """Formal sum of rational functions times coordinate derivations."""

    __slots__ = ("components", "nvars")

    def __init__(self, components: dict, nvars: int):
        self.components = {i: r for i, r in components.items() if not r.is_zero()}
        self.nvars = nvars

    @staticmethod
    def zero(nvars: int) -> "VectorField":
        return VectorField({}, nvars)

    def is_zero(self) -> bool:
        return all(r.is_zero() for r in self.components.values())

    def __add__(self, other):
        out = dict(self.components)
        for i, r in other.components.items():
            out[i] = out[i] + r if i in out else r
        return VectorField(out, self.nvars)

    def __neg__(self):
        return VectorField({i: -r for i, r in self.components.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p: Polynomial) -> "VectorField":
        return VectorField({i: r.scale(p) for i, r in self.components.items()}, self.nvars)

    def __eq__(self, other):
        keys = set(self.components) | set(other.components)
        z = RationalFunction.zero(self.nvars)
        return all(self.components.get(i, z) == other.components.get(i, z) for i in keys)

    def __repr__(self):
        return f"VectorField({self.components!r})"


@dataclass
class CechCocycle:
    """Chart-pair-indexed vector fields; entries are computed independently
    for both orders of every pair, so antisymmetry is a checked property
    rather than a storage convention."""

    charts: tuple
    entries: dict
    nvars: int
    flags: frozenset = field(default_factory=frozenset)

    def entry(self, a, b) -> VectorField:
        if a == b:
            return VectorField.zero(self.nvars)
        return self.entries[(a, b)]

    def is_antisymmetric(self) -> bool:
        return all(self.entry(a, b) == -self.entry(b, a)
                   for a, b in combinations(self.charts, 2))

    def satisfies_cocycle_condition(self) -> bool:
        for a, b, c in combinations(self.charts, 3):
            if self.entry(a, b) + self.entry(b, c) != self.entry(a, c):
                return False
        return True


def _nonzero_partial_charts(f: Polynomial) -> list[int]:
    return [i for i in range(f.nvars) if not partial_derivative(f, i).is_zero()]


def _wedge_contract(f: Polynomial, fi: dict, a: int, b: int) -> VectorField:
    """<d_a wedge d_b, df> = (d_a f) d_b - (d_b f) d_a as a polynomial field."""
    n = f.nvars
    return VectorField({b: RationalFunction(fi[a]), a: RationalFunction(-fi[b])}, n)


def gamma_A(fan: Fan, f: Polynomial, a_poly: Polynomial) -> CechCocycle:
    """The polynomial-deformation cocycle of a degree-matching numerator:
    sqrt(-1) A <d_{i0} wedge d_{i1}, df> / (f_{i0} f_{i1}) over the charts
    where the partials of f do not vanish."""
    n = f.nvars
    if not a_poly.is_zero() and polynomial_degree(fan, a_poly) != polynomial_degree(fan, f):
        raise ValueError("numerator is not homogeneous of the hypersurface degree")
    fi = {i: partial_derivative(f, i) for i in range(n)}
    charts = tuple(_nonzero_partial_charts(f))
    pref = a_poly.scale(Scalar.sqrt_minus_one())
    entries = {}
    for i0 in charts:
        for i1 in charts:
            if i0 == i1:
                continue
            wedge = _wedge_contract(f, fi, i0, i1)
            den = fi[i0] * fi[i1]
            entries[(i0, i1)] = VectorField(
                {v: RationalFunction(r.num * pref, den) for v, r in wedge.components.items()},
                n)
    return CechCocycle(charts, entries, n)


def _interior_fields(fan: Fan, two_cone: TwoConeData, l: int) -> dict:
    """The distinguished subcone fields: nonzero only on the two subcones
    adjacent to l, with signs +,- and the inverse subcone multiplicities."""
    j = two_cone.position_of(l)
    order = two_cone.ordered_rays
    mults = two_cone.subcone_mults
    return {
        j: (Fraction(1, mults[j - 1]), order[j - 1]),
        j + 1: (Fraction(-1, mults[j]), order[j + 1]),
    }


def _is_coboundary_flagged(B: Polynomial, l: int) -> bool:
    return bool(B.terms) and B.min_exponent(l) >= 1


def gamma_l_B(fan: Fan, f: Polynomial, two_cone: TwoConeData, l: int,
              B: Polynomial) -> CechCocycle:
    """The non-polynomial cocycle of a degree-beta1 numerator over the
    double-indexed charts (partial-nonvanishing x subcone); flagged as a
    coboundary when x_l divides B."""
    n = f.nvars
    if not B.is_zero() and polynomial_degree(fan, B) != two_cone.beta1:
        raise ValueError("numerator does not have the boundary-divisor degree")
    fi = {i: partial_derivative(f, i) for i in range(n)}
    i_charts = _nonzero_partial_charts(f)
    j_charts = range(1, two_cone.n_interior + 2)
    charts = tuple((i, j) for i in i_charts for j in j_charts)
    fields = _interior_fields(fan, two_cone, l)
    sigma = set(two_cone.ordered_rays)
    pref = B * Polynomial.monomial(
        tuple(-1 if i in sigma else 0 for i in range(n)))

    def t_field(i: int, j: int) -> VectorField:
        if j not in fields:
            return VectorField.zero(n)
        c, a = fields[j]
        x_a = Polynomial.monomial(tuple(1 if v == a else 0 for v in range(n)),
                                  Scalar.from_fraction(c))
        # c x_a (f_i d_a - f_a d_i) / f_i
        return VectorField({
            a: RationalFunction(x_a * fi[i], fi[i]),
            i: RationalFunction(-(x_a * fi[a]), fi[i]),
        }, n)

    entries = {}
    for c0 in charts:
        for c1 in charts:
            if c0 == c1:
                continue
            diff = t_field(*c1) - t_field(*c0)
            entries[(c0, c1)] = diff.scale(pref)
    flags = frozenset({"coboundary"} if _is_coboundary_flagged(B, l) else set())
    return CechCocycle(charts, entries, n, flags)


def lift_nonpolynomial(fan: Fan, two_cone: TwoConeData, l: int,
                       B: Polynomial) -> CechCocycle:
    """The hypersurface-independent lift over the subcone charts:
    (B / prod_sigma x)(d^l_{j1} - d^l_{j0})."""
    n = len(fan.rays)
    if not B.is_zero() and polynomial_degree(fan, B) != two_cone.beta1:
        raise ValueError("numerator does not have the boundary-divisor degree")
    fields = _interior_fields(fan, two_cone, l)
    sigma = set(two_cone.ordered_rays)
    pref = B * Polynomial.monomial(
        tuple(-1 if i in sigma else 0 for i in range(n)))

    def d_field(j: int) -> VectorField:
        if j not in fields:
            return VectorField.zero(n)
        c, a = fields[j]
        x_a = Polynomial.monomial(tuple(1 if v == a else 0 for v in range(n)),
                                  Scalar.from_fraction(c))
        return VectorField({a: RationalFunction(x_a)}, n)

    charts = tuple(range(1, two_cone.n_interior + 2))
    entries = {}
    for j0 in charts:
        for j1 in charts:
            if j0 != j1:
                entries[(j0, j1)] = (d_field(j1) - d_field(j0)).scale(pref)
    return CechCocycle(charts, entries, n)


def kodaira_cocycle(root: Root) -> CechCocycle:
    """The two-chart ambient cocycle of the regluing family:
    2 (prod x^u) x_l d_l on the ordered pair (chart 0, chart 1)."""
    n = len(root.monomial)
    factor = tuple(m + (1 if i == root.l else 0) for i, m in enumerate(root.monomial))
    vf = VectorField({root.l: RationalFunction(
        Polynomial.monomial(factor, Scalar.from_int(2)))}, n)
    return CechCocycle((0, 1), {(0, 1): vf, (1, 0): -vf}, n)


def identity7_check(fan: Fan, two_cone: TwoConeData, j: int) -> bool:
    """The consecutive-ray lattice identity:
    e_{l_{j-1}}/mult(sigma_j) + e_{l_{j+1}}/mult(sigma_{j+1})
      = (mult(sigma_j + sigma_{j+1}) / (mult(sigma_j) mult(sigma_{j+1}))) e_{l_j}."""
    if not 1 <= j <= two_cone.n_interior:
        raise ValueError("index must point at an interior ray")
    order = two_cone.ordered_rays
    m_j = two_cone.subcone_mults[j - 1]
    m_j1 = two_cone.subcone_mults[j]
    m_join = cone_multiplicity(fan, Cone((order[j - 1], order[j + 1]), 2))
    lhs = tuple(Fraction(a, m_j) + Fraction(b, m_j1)
                for a, b in zip(fan.rays[order[j - 1]], fan.rays[order[j + 1]]))
    factor = Fraction(m_join, m_j * m_j1)
    rhs = tuple(factor * x for x in fan.rays[order[j]])
    return lhs == rhs


def matching_factor(fan: Fan, two_cone: TwoConeData, j: int) -> Fraction:
    """-2 mult(sigma_j) mult(sigma_{j+1}) / mult(sigma_j + sigma_{j+1})."""
    if not 1 <= j <= two_cone.n_interior:
        raise ValueError("index must point at an interior ray")
    order = two_cone.ordered_rays
    m_j = two_cone.subcone_mults[j - 1]
    m_j1 = two_cone.subcone_mults[j]
    m_join = cone_multiplicity(fan, Cone((order[j - 1], order[j + 1]), 2))
    return Fraction(-2 * m_j * m_j1, m_join)


def theta_cocycle(fan: Fan, f: Polynomial, root: Root,
                  l0: int | None = None) -> CechCocycle:
    """The infinitesimal-deformation cocycle of the regluing family over the
    doubled charts (i, k):

    (prod x^u) [ ((-1)^{k0} - (-1)^{k1}) x_l d_l
      - sum_m a_m (x_l d_l x^{a}) ( ((-1)^{k0}+c_m) d_{i0}/f_{i0}
                                  - ((-1)^{k1}+c_m) d_{i1}/f_{i1} ) ].
    """
    n = f.nvars
    cm = compute_cm(fan, f, root, l0).as_dict()
    l = root.l
    pi = Polynomial.monomial(root.monomial)
    factor = tuple(m + (1 if i == l else 0) for i, m in enumerate(root.monomial))
    fi = {i: partial_derivative(f, i) for i in range(n)}
    # g_k = sum_m a_m ((-1)^k + c_m) (x_l d_l x^a), an ordinary polynomial
    g = {}
    for k in (0, 1):
        acc = Polynomial.zero(n)
        sign = 1 if k == 0 else -1
        for exps, coeff in f.terms.items():
            w = (sign + cm[exps]) * exps[l]
            if w:
                acc = acc + Polynomial.monomial(exps, coeff * Scalar.from_int(w))
        g[k] = acc
    charts = tuple(sorted((i, k) for i in _nonzero_partial_charts(f) for k in (0, 1)))
    entries = {}
    for (i0, k0) in charts:
        for (i1, k1) in charts:
            if (i0, k0) == (i1, k1):
                continue
            sign_diff = (1 if k0 == 0 else -1) - (1 if k1 == 0 else -1)
            vf = VectorField({l: RationalFunction(
                Polynomial.monomial(factor, Scalar.from_int(sign_diff)))}, n)
            vf = vf + VectorField(
                {i0: RationalFunction(-(pi * g[k0]), fi[i0])}, n)
            vf = vf + VectorField(
                {i1: RationalFunction(pi * g[k1], fi[i1])}, n)
            entries[((i0, k0), (i1, k1))] = vf
    return CechCocycle(charts, entries, n)


def _sparse_rank(columns: list[dict]) -> int:
    """Rank over Q(i) of a matrix given by sparse columns {row: Gaussian}."""
    pivots: dict[int, dict] = {}
    rank = 0
    for raw in columns:
        col = {r: v for r, v in raw.items() if v}
        while col:
            hit = next((r for r in col if r in pivots), None)
            if hit is None:
                break
            fac = col.pop(hit)
            for r, v in pivots[hit].items():
                if r == hit:
                    continue
                nv = col.get(r, _GZERO) - fac * v
                if nv:
                    col[r] = nv
                else:
                    col.pop(r, None)
        if col:
            prow = min(col)
            inv = col[prow].inverse()
            pivots[prow] = {r: inv * v for r, v in col.items()}
            rank += 1
    return rank


_GZERO = Gaussian(0)


def _plain_gaussian(c: Scalar) -> Gaussian:
    if c.eps or len(c.base) > 1:
        raise ValueError("dimension computations need plain (lambda/eps-free) coefficients")
    return c.base[0] if c.base else _GZERO


def dim_R1(fan: Fan, f: Polynomial, b) -> int:
    """Dimension of the degree-beta piece of S / (<x_1 f_1, ..., x_n f_n> : x_1...x_n),
    where beta is the class of the divisor coefficients b.

    Computed by exact ranks: dim = rank([Mult | G]) - rank(G) with Mult the
    multiplication by x_1...x_n on the degree-beta monomials and G the
    columns h * x_i f_i over degree-beta0 cofactor monomials h.
    """
    n = f.nvars
    if polynomial_degree(fan, f) != degree_of(fan, tuple(b)):
        raise ValueError("f is not homogeneous of the class of b")
    mons_beta = monomials_of_degree(fan, tuple(b))
    if not mons_beta:
        raise ValueError("class is not effective")
    beta0 = (1,) * n
    target = monomials_of_degree(fan, tuple(x + 1 for x in b))
    row_of = {m: i for i, m in enumerate(target)}
    cof = monomials_of_degree(fan, beta0)
    gens = []
    for i in range(n):
        xi_fi = Polynomial.variable(n, i) * partial_derivative(f, i)
        if not xi_fi.is_zero():
            gens.append(xi_fi)
    g_cols = []
    for h in cof:
        for gen in gens:
            col = {}
            for exps, coeff in gen.terms.items():
                m = tuple(a + c for a, c in zip(exps, h))
                col[row_of[m]] = _plain_gaussian(coeff)
            g_cols.append(col)
    mult_cols = [{row_of[tuple(x + 1 for x in m)]: Gaussian(1)} for m in mons_beta]
    rank_g = _sparse_rank(g_cols)
    rank_full = _sparse_rank(mult_cols + g_cols)
    return rank_full - rank_g


@dataclass(frozen=True)
class H1Decomposition:
    polynomial_dim: int
    # one summand per (2-cone boundary rays, interior ray l): its dimension
    summands: tuple[tuple[tuple[int, int], int, int], ...]
    total: int


def h1_decomposition(fan: Fan, f: Polynomial) -> H1Decomposition:
    """Polynomial part from the quotient-ring dimension; one non-polynomial
    summand per interior ray of a 2-cone of the coarsened fan, of dimension
    the number of degree-beta1 monomials not divisible by x_l."""
    n = f.nvars
    beta0 = (1,) * n
    if polynomial_degree(fan, f) != degree_of(fan, beta0):
        raise ValueError("decomposition requires anticanonical degree")
    diag = validate_fan(fan)
    if not (diag.is_fan and diag.is_complete and diag.is_simplicial):
        raise ValueError("decomposition requires a complete simplicial fan")
    sx = compute_sigma_x(fan, beta0)
    poly_dim = dim_R1(fan, f, beta0)
    summands = []
    mons_cache: dict = {}
    for cone_x, l in sx.interior_pairs():
        tc = two_cone_analysis(fan, sx, cone_x)
        sigma = set(tc.ordered_rays)
        key = tuple(sorted(sigma))
        if key not in mons_cache:
            indicator = tuple(1 if i in sigma else 0 for i in range(n))
            mons_cache[key] = monomials_of_degree(fan, indicator)
        count = sum(1 for m in mons_cache[key] if m[l] == 0)
        summands.append((tc.boundary, l, count))
    total = poly_dim + sum(c for _, _, c in summands)
    return H1Decomposition(poly_dim, tuple(summands), total)

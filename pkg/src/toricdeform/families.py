"""The deformation families of a hypersurface attached to a root: the
per-monomial sign table steering which chart absorbs each deformation factor,
the family on the chart intersection and its two chart-local forms, symbolic
pole verification, and the first-order family over the nilpotent parameter.

All families are stored fully expanded: pole checks and the substitution
coherence identity need canonical comparisons.
"""

from dataclasses import dataclass

from .fan import Fan
from .ring import (
    InhomogeneousError,
    Polynomial,
    Scalar,
    polynomial_degree,
)
from .roots import ChartCover, Root, chart_cover, gluing_map
from .semiample import TwoConeData


def oriented_two_cone(tc: TwoConeData, l0: int) -> TwoConeData:
    """The same 2-cone data read from the chosen boundary ray."""
    if l0 == tc.ordered_rays[0]:
        return tc
    if l0 != tc.ordered_rays[-1]:
        raise ValueError(f"orientation ray {l0} is not a boundary ray")
    return TwoConeData(tuple(reversed(tc.ordered_rays)),
                       tuple(reversed(tc.subcone_mults)),
                       tc.sigma_mult, tc.beta1, tc.n_interior)


@dataclass(frozen=True)
class CmTable:
    """Sign in {-1, 0, +1} per monomial of f, keyed by exponent vector."""

    l0: int
    entries: tuple[tuple[tuple[int, ...], int], ...]

    def as_dict(self) -> dict:
        return dict(self.entries)


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def compute_cm(fan: Fan, f: Polynomial, root: Root, l0: int | None = None) -> CmTable:
    """c_m = sign of a_{l0} + <u, e_{l0}> * a_l over the monomials x^a of f."""
    polynomial_degree(fan, f)  # raises InhomogeneousError when not homogeneous
    tc = root.two_cone
    if l0 is None:
        l0 = tc.ordered_rays[0]
    if l0 not in (tc.ordered_rays[0], tc.ordered_rays[-1]):
        raise ValueError(f"orientation ray {l0} is not a boundary ray")
    u_at_l0 = root.monomial[l0]
    entries = tuple(sorted(
        (exps, _sign(exps[l0] + u_at_l0 * exps[root.l])) for exps in f.terms))
    return CmTable(l0, entries)


@dataclass(frozen=True)
class HypersurfaceFamily:
    root: Root
    l0: int
    two_cone: TwoConeData           # oriented so that ordered_rays[0] == l0
    f: Polynomial
    f_lambda: Polynomial
    f_chart: tuple[Polynomial, Polynomial]   # f^0_lambda, f^1_lambda
    cm: CmTable

    def cover(self) -> ChartCover:
        return chart_cover(None, self.two_cone, self.root.l)


def _factor_power(nvars: int, pi_exps, coeff: int, power: int,
                  eps: bool = False) -> Polynomial:
    """(1 + coeff * param * prod x^pi)^power, expanded (param is lambda or,
    for the first-order case, the exact eps-linearization)."""
    if coeff == 0 or power == 0:
        return Polynomial.one(nvars)
    param = Scalar.eps_unit() if eps else Scalar.lam()
    if eps:
        # (1 + c eps Pi)^E = 1 + E c eps Pi since eps^2 = 0
        return (Polynomial.one(nvars)
                + Polynomial.monomial(pi_exps, Scalar.from_int(coeff * power) * param))
    base = Polynomial.one(nvars) + Polynomial.monomial(pi_exps, Scalar.from_int(coeff) * param)
    return base ** power


def build_family(fan: Fan, f: Polynomial, root: Root,
                 l0: int | None = None, _cm: CmTable | None = None) -> HypersurfaceFamily:
    """Expand the deformation family and both chart-local forms.

    Every exponent a_l is a non-negative integer, so all factor powers are
    finite binomials; nothing is truncated.
    """
    cm = compute_cm(fan, f, root, l0) if _cm is None else _cm
    l0 = cm.l0
    tc = oriented_two_cone(root.two_cone, l0)
    n = f.nvars
    pi = root.monomial
    l = root.l
    cm_of = cm.as_dict()
    f_lambda = Polynomial.zero(n)
    f0 = Polynomial.zero(n)
    f1 = Polynomial.zero(n)
    for exps, coeff in f.terms.items():
        mono = Polynomial.monomial(exps, coeff)
        e_l = exps[l]
        c = cm_of[exps]
        f_lambda = f_lambda + mono * _factor_power(n, pi, c, e_l)
        f0 = f0 + mono * _factor_power(n, pi, 1 + c, e_l)
        f1 = f1 + mono * _factor_power(n, pi, -1 + c, e_l)
    return HypersurfaceFamily(root, l0, tc, f, f_lambda, (f0, f1), cm)


@dataclass(frozen=True)
class PoleReport:
    passed: bool
    # per chart: (chart index, passed, offending (exponent vector, variable) pairs)
    charts: tuple[tuple[int, bool, tuple[tuple[tuple[int, ...], int], ...]], ...]


def verify_no_poles(family: HypersurfaceFamily) -> PoleReport:
    """Each chart form may only carry negative exponents in the variables
    whose nonvanishing defines that chart."""
    cover = family.cover()
    charts = []
    for k in (0, 1):
        allowed = set(cover.nonzero_for(k))
        offending = []
        for exps in sorted(family.f_chart[k].terms):
            for i, e in enumerate(exps):
                if e < 0 and i not in allowed:
                    offending.append((exps, i))
        charts.append((k, not offending, tuple(offending)))
    return PoleReport(all(ok for _, ok, _ in charts), tuple(charts))


def substitution_coherent(family: HypersurfaceFamily) -> bool:
    """The chart forms equal the intersection family composed with the
    regluing substitutions, as exact Laurent polynomials."""
    from .ring import substitute_variable
    n = family.f.nvars
    for k in (0, 1):
        sub = gluing_map(family.root, k).substitution_polynomial(n)
        if substitute_variable(family.f_lambda, family.root.l, sub) != family.f_chart[k]:
            return False
    return True


@dataclass(frozen=True)
class FirstOrderFamily:
    root: Root
    l0: int
    f: Polynomial
    f_eps: Polynomial
    f_chart: tuple[Polynomial, Polynomial]   # f^0_eps, f^1_eps


def first_order_family(fan: Fan, f: Polynomial, root: Root,
                       l0: int | None = None) -> FirstOrderFamily:
    """The eps-linear family: factors (1 + eps ((-1)^k + c_m) a_l prod x^u)
    per monomial, exactly the lambda-family truncated at eps^2 = 0."""
    cm = compute_cm(fan, f, root, l0)
    n = f.nvars
    pi = root.monomial
    l = root.l
    cm_of = cm.as_dict()
    f_eps = Polynomial.zero(n)
    f0 = Polynomial.zero(n)
    f1 = Polynomial.zero(n)
    for exps, coeff in f.terms.items():
        mono = Polynomial.monomial(exps, coeff)
        e_l = exps[l]
        c = cm_of[exps]
        f_eps = f_eps + mono * _factor_power(n, pi, c, e_l, eps=True)
        f0 = f0 + mono * _factor_power(n, pi, 1 + c, e_l, eps=True)
        f1 = f1 + mono * _factor_power(n, pi, -1 + c, e_l, eps=True)
    return FirstOrderFamily(root, cm.l0, f, f_eps, (f0, f1))

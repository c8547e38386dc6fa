"""The homogeneous coordinate ring layer: exact coefficient arithmetic over
the Gaussian rationals adjoined a deformation parameter (lambda, printed "t")
and a nilpotent eps with eps^2 = 0, Laurent polynomials over it, Chow-degree
classes of monomials, and monomial enumeration in a fixed degree.

Coefficients form one unified ring  Q(i)[lambda] + Q(i)[lambda]*eps,
so no conversions between deformation stages are ever needed.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .intlinalg import hermite_reduce
from .polyhedra import lattice_points


class SubstitutionError(ValueError):
    """Raised when a substitution would need a genuine power-series inverse."""


class InhomogeneousError(ValueError):
    pass


class Gaussian:
    """Exact Gaussian rational a + b*sqrt(-1)."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __add__(self, other):
        return Gaussian(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return Gaussian(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __mul__(self, other):
        return Gaussian(self.re * other.re - self.im * other.im,
                        self.re * other.im + self.im * other.re)

    def inverse(self) -> "Gaussian":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return Gaussian(self.re / n, -self.im / n)

    def __eq__(self, other):
        return isinstance(other, Gaussian) and self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"


_G0 = Gaussian(0)
_G1 = Gaussian(1)


def _poly_trim(t: tuple) -> tuple:
    i = len(t)
    while i > 0 and not t[i - 1]:
        i -= 1
    return t[:i]


def _poly_add(a: tuple, b: tuple) -> tuple:
    n = max(len(a), len(b))
    return _poly_trim(tuple(
        (a[i] if i < len(a) else _G0) + (b[i] if i < len(b) else _G0)
        for i in range(n)))


def _poly_neg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _poly_mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    out = [_G0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return _poly_trim(tuple(out))


class Scalar:
    """Coefficient a(lambda) + b(lambda)*eps with eps^2 = 0, over Q(i).

    Stored as two lambda-polynomials (tuples of Gaussian, index = power).
    """

    __slots__ = ("base", "eps")

    def __init__(self, base=(), eps=()):
        self.base = _poly_trim(tuple(base))
        self.eps = _poly_trim(tuple(eps))

    @staticmethod
    def from_int(n: int) -> "Scalar":
        return Scalar((Gaussian(n),))

    @staticmethod
    def from_fraction(q) -> "Scalar":
        return Scalar((Gaussian(Fraction(q)),))

    @staticmethod
    def from_gaussian(g: Gaussian) -> "Scalar":
        return Scalar((g,))

    @staticmethod
    def zero() -> "Scalar":
        return Scalar()

    @staticmethod
    def one() -> "Scalar":
        return Scalar((_G1,))

    @staticmethod
    def sqrt_minus_one() -> "Scalar":
        return Scalar((Gaussian(0, 1),))

    @staticmethod
    def lam(power: int = 1) -> "Scalar":
        return Scalar((_G0,) * power + (_G1,))

    @staticmethod
    def eps_unit() -> "Scalar":
        return Scalar((), (_G1,))

    def __add__(self, other):
        return Scalar(_poly_add(self.base, other.base), _poly_add(self.eps, other.eps))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Scalar(_poly_neg(self.base), _poly_neg(self.eps))

    def __mul__(self, other):
        return Scalar(
            _poly_mul(self.base, other.base),
            _poly_add(_poly_mul(self.base, other.eps), _poly_mul(self.eps, other.base)))

    def __eq__(self, other):
        return (isinstance(other, Scalar) and self.base == other.base
                and self.eps == other.eps)

    def __hash__(self):
        return hash((self.base, self.eps))

    def __bool__(self):
        return bool(self.base) or bool(self.eps)

    def is_zero(self) -> bool:
        return not self

    def is_eps_free(self) -> bool:
        return not self.eps

    def is_unit(self) -> bool:
        """Invertible in the coefficient ring: lambda-free nonzero base part."""
        return len(self.base) == 1 and bool(self.base[0])

    def is_nilpotent(self) -> bool:
        return not self.base

    def inverse(self) -> "Scalar":
        if not self.is_unit():
            raise ZeroDivisionError("scalar is not a unit")
        a_inv = self.base[0].inverse()
        minus_sq = -(a_inv * a_inv)
        return Scalar((a_inv,), tuple(minus_sq * g for g in self.eps))

    def at_lambda_zero(self) -> "Scalar":
        return Scalar(self.base[:1], self.eps[:1])

    def drop_eps(self) -> "Scalar":
        return Scalar(self.base, ())

    def eps_part(self) -> "Scalar":
        """The lambda-polynomial multiplying eps, as a plain Scalar."""
        return Scalar(self.eps, ())

    def lambda_to_eps(self) -> "Scalar":
        """Substitute lambda -> eps and truncate at eps^2 = 0."""
        a0 = self.base[:1]
        a1 = self.base[1:2]
        b0 = self.eps[:1]
        return Scalar(a0, _poly_add(a1, b0))

    def negate_lambda(self) -> "Scalar":
        """Substitute lambda -> -lambda."""
        return Scalar(tuple(g if i % 2 == 0 else -g for i, g in enumerate(self.base)),
                      tuple(g if i % 2 == 0 else -g for i, g in enumerate(self.eps)))

    def __repr__(self):
        return f"Scalar(base={self.base!r}, eps={self.eps!r})"


ExponentVector = tuple[int, ...]


class Polynomial:
    """Laurent polynomial: finite map from exponent vectors to Scalars.

    Immutable by convention; zero coefficients are never stored.
    """

    __slots__ = ("terms", "nvars")

    def __init__(self, terms: dict, nvars: int):
        self.terms = {e: c for e, c in terms.items() if c}
        self.nvars = nvars

    @staticmethod
    def zero(nvars: int) -> "Polynomial":
        return Polynomial({}, nvars)

    @staticmethod
    def one(nvars: int) -> "Polynomial":
        return Polynomial({(0,) * nvars: Scalar.one()}, nvars)

    @staticmethod
    def constant(nvars: int, c: Scalar) -> "Polynomial":
        return Polynomial({(0,) * nvars: c}, nvars)

    @staticmethod
    def monomial(exps, c: Scalar = None) -> "Polynomial":
        exps = tuple(exps)
        return Polynomial({exps: Scalar.one() if c is None else c}, len(exps))

    @staticmethod
    def variable(nvars: int, i: int) -> "Polynomial":
        return Polynomial.monomial(tuple(1 if j == i else 0 for j in range(nvars)))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.nvars == other.nvars
                and self.terms == other.terms)

    def __add__(self, other):
        assert self.nvars == other.nvars
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return Polynomial(out, self.nvars)

    def __neg__(self):
        return Polynomial({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        assert self.nvars == other.nvars
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return Polynomial(out, self.nvars)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        return Polynomial({e: c * v for e, v in self.terms.items()}, self.nvars)

    def sorted_terms(self, reverse: bool = True):
        return sorted(self.terms.items(), key=lambda kv: kv[0], reverse=reverse)

    def map_coefficients(self, fn) -> "Polynomial":
        return Polynomial({e: fn(c) for e, c in self.terms.items()}, self.nvars)

    def at_lambda_zero(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.at_lambda_zero())

    def drop_eps(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.drop_eps())

    def eps_part(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.eps_part())

    def lambda_to_eps(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.lambda_to_eps())

    def negate_lambda(self) -> "Polynomial":
        return self.map_coefficients(lambda c: c.negate_lambda())

    def is_eps_free(self) -> bool:
        return all(c.is_eps_free() for c in self.terms.values())

    def min_exponent(self, i: int) -> int:
        if not self.terms:
            return 0
        return min(e[i] for e in self.terms)

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    """Formal Laurent derivative with respect to the i-th variable."""
    out: dict = {}
    for e, c in p.terms.items():
        if e[i] == 0:
            continue
        new = tuple(x - 1 if j == i else x for j, x in enumerate(e))
        coeff = Scalar.from_int(e[i]) * c
        s = out.get(new)
        out[new] = coeff if s is None else s + coeff
    return Polynomial(out, p.nvars)


def _closed_form_inverse(r: Polynomial) -> Polynomial:
    """Inverse of r when r = unit monomial + nilpotent part (or one term).

    (u + n)^-1 = u^-1 - u^-1 n u^-1 exactly, because n^2 = 0.
    """
    unit_terms = [(e, c) for e, c in r.terms.items() if not c.is_nilpotent()]
    if len(unit_terms) != 1:
        raise SubstitutionError("substitution not closed-form")
    e_u, c_u = unit_terms[0]
    if not Scalar(c_u.base).is_unit():
        raise SubstitutionError("substitution not closed-form")
    u_inv = Polynomial.monomial(tuple(-x for x in e_u), c_u.inverse())
    nil = Polynomial({e: c for e, c in r.terms.items() if c.is_nilpotent()}, r.nvars)
    if nil.is_zero():
        return u_inv
    return u_inv - u_inv * nil * u_inv


def substitute_variable(p: Polynomial, l: int, r: Polynomial) -> Polynomial:
    """Substitute the l-th variable by r, exactly.

    Non-negative powers of the variable expand by plain composition; negative
    powers need r to be a unit monomial plus a nilpotent part, otherwise a
    SubstitutionError is raised.
    """
    assert p.nvars == r.nvars
    out = Polynomial.zero(p.nvars)
    powers = {0: Polynomial.one(p.nvars)}
    inv = None

    def power(k: int) -> Polynomial:
        nonlocal inv
        if k in powers:
            return powers[k]
        if k > 0:
            powers[k] = power(k - 1) * r
        else:
            if inv is None:
                inv = _closed_form_inverse(r)
            powers[k] = power(k + 1) * inv
        return powers[k]

    for e, c in p.terms.items():
        rest = Polynomial.monomial(tuple(0 if j == l else x for j, x in enumerate(e)), c)
        out = out + rest * power(e[l])
    return out


@dataclass(frozen=True)
class DegreeClass:
    """Canonical (Hermite-reduced) coset representative of an exponent vector
    modulo the lattice of pairing vectors { (<m,e_1>,...,<m,e_n>) : m in M }."""

    rep: tuple[int, ...]


@lru_cache(maxsize=None)
def _pairing_lattice_rows(fan) -> tuple[tuple[int, ...], ...]:
    # row j of the basis: (e_1[j], ..., e_n[j])
    return tuple(tuple(ray[j] for ray in fan.rays) for j in range(fan.rank))


def pairing(m, ray) -> int:
    return sum(a * b for a, b in zip(m, ray))


def pairing_vector(fan, m) -> tuple[int, ...]:
    return tuple(pairing(m, ray) for ray in fan.rays)


def degree_of(fan, exps) -> DegreeClass:
    """Chow degree of a (Laurent) monomial, as a canonical coset representative."""
    return DegreeClass(hermite_reduce(tuple(exps), _pairing_lattice_rows(fan)))


def polynomial_degree(fan, p: Polynomial) -> DegreeClass:
    """Common degree of all terms; raises InhomogeneousError otherwise."""
    if p.is_zero():
        raise InhomogeneousError("zero polynomial has no well-defined degree")
    degrees = {degree_of(fan, e) for e in p.terms}
    if len(degrees) != 1:
        raise InhomogeneousError("polynomial is not homogeneous")
    return degrees.pop()


def anticanonical_coefficients(fan) -> tuple[int, ...]:
    return (1,) * len(fan.rays)


def divisor_polytope(fan, b) -> list:
    """Inequality system of the divisor polytope: <m, e_i> >= -b_i."""
    return [(tuple(ray), -bi) for ray, bi in zip(fan.rays, b)]


def monomials_of_degree(fan, b) -> list[ExponentVector]:
    """All non-negative exponent vectors of the class of sum b_i D_i,
    via m -> (b_i + <m, e_i>); empty when the class has no effective
    representative. Lexicographically sorted."""
    if len(b) != len(fan.rays):
        raise ValueError("divisor coefficient vector has wrong length")
    pts = lattice_points(divisor_polytope(fan, b), fan.rank)
    exps = [tuple(bi + pairing(m, ray) for bi, ray in zip(b, fan.rays)) for m in pts]
    return sorted(exps)

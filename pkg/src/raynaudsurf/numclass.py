"""Exact intersection theory on the ruled surface P = P(E) and the cover X.

Numerical classes on P live in the span of the canonical section E and a
fiber f, with pairing E.E = dD, E.f = 1, f.f = 0.  On the degree-ell cyclic
cover X only the span of the section Etilde and of pullbacks from the base
curve is ever needed: Etilde.Etilde = dD/ell, Etilde meets a pulled-back
degree-d class in d, and two pullbacks are disjoint.  All coefficients are
exact rationals; by construction every denominator divides ell.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .params import SurfaceParams

__all__ = [
    "ClassP",
    "ClassX",
    "E_P",
    "FIBER_P",
    "ETILDE",
    "FIBER_X",
    "frac_str",
    "intersect_P",
    "intersect_X",
    "canonical_P",
    "canonical_X",
    "branch_curve_class",
    "pullback_psi",
    "selfint_Etilde",
    "is_ample_P",
    "is_ample_KX",
    "li_class",
    "kodaira_vanishing_KX",
    "fiber_genus",
    "cusp_exponents",
    "polarization_class",
]

RatLike = int | Fraction


def frac_str(x: RatLike) -> str:
    """Canonical "num/den" form, gcd-reduced, positive denominator."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


@dataclass(frozen=True)
class ClassP:
    """a*E + b*f up to numerical equivalence on the ruled surface."""

    cE: Fraction
    cf: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cE", Fraction(self.cE))
        object.__setattr__(self, "cf", Fraction(self.cf))

    def __add__(self, other: "ClassP") -> "ClassP":
        return ClassP(self.cE + other.cE, self.cf + other.cf)

    def __sub__(self, other: "ClassP") -> "ClassP":
        return ClassP(self.cE - other.cE, self.cf - other.cf)

    def __neg__(self) -> "ClassP":
        return ClassP(-self.cE, -self.cf)

    def __rmul__(self, k: RatLike) -> "ClassP":
        return ClassP(k * self.cE, k * self.cf)

    def to_json(self) -> dict:
        return {"cE": frac_str(self.cE), "cf": frac_str(self.cf)}


@dataclass(frozen=True)
class ClassX:
    """a*Etilde + (pullback of a degree-d class from the base curve)."""

    cEt: Fraction
    d: Fraction

    def __post_init__(self):
        object.__setattr__(self, "cEt", Fraction(self.cEt))
        object.__setattr__(self, "d", Fraction(self.d))

    def __add__(self, other: "ClassX") -> "ClassX":
        return ClassX(self.cEt + other.cEt, self.d + other.d)

    def __sub__(self, other: "ClassX") -> "ClassX":
        return ClassX(self.cEt - other.cEt, self.d - other.d)

    def __neg__(self) -> "ClassX":
        return ClassX(-self.cEt, -self.d)

    def __rmul__(self, k: RatLike) -> "ClassX":
        return ClassX(k * self.cEt, k * self.d)

    def to_json(self) -> dict:
        return {"cEt": frac_str(self.cEt), "d": frac_str(self.d)}


E_P = ClassP(1, 0)
FIBER_P = ClassP(0, 1)
ETILDE = ClassX(1, 0)
FIBER_X = ClassX(0, 1)


def intersect_P(params: SurfaceParams, a: ClassP, b: ClassP) -> Fraction:
    """Bilinear symmetric pairing with E.E = dD, E.f = 1, f.f = 0."""
    return a.cE * b.cE * params.dD + a.cE * b.cf + a.cf * b.cE


def intersect_X(params: SurfaceParams, a: ClassX, b: ClassX) -> Fraction:
    """Pairing on the cover: Etilde^2 = dD/ell, section meets fiber degree."""
    return a.cEt * b.cEt * Fraction(params.dD, params.ell) + a.cEt * b.d + a.d * b.cEt


def canonical_P(params: SurfaceParams) -> ClassP:
    """K_P = -2E + (2g-2+dD) f."""
    return ClassP(-2, 2 * params.g - 2 + params.dD)


def branch_curve_class(params: SurfaceParams) -> ClassP:
    """The purely inseparable branch component, numerically p*E - p*dD*f."""
    return ClassP(params.p, -params.p * params.dD)


def pullback_psi(params: SurfaceParams, a: ClassP) -> ClassX:
    """Pull back through the degree-ell cover: E lifts to ell*Etilde."""
    return ClassX(params.ell * a.cE, a.cf)


def selfint_Etilde(params: SurfaceParams) -> Fraction:
    """Etilde^2 = dD/ell > 0."""
    return Fraction(params.dD, params.ell)


def canonical_X(params: SurfaceParams) -> ClassX:
    """K_X = (p*ell-p-ell-1) Etilde + pullback of degree 2g-2 - (p*ell-p-ell)*dD/ell."""
    w = params.p * params.ell - params.p - params.ell
    return ClassX(w - 1, 2 * params.g - 2 - Fraction(w * params.dD, params.ell))


def is_ample_P(params: SurfaceParams, a: ClassP) -> bool:
    """Positivity against self, the section, and a fiber.

    On these ruled surfaces every irreducible curve meets {E, f} positively,
    so the three strict inequalities decide ampleness (Nakai-Moishezon).
    """
    return (
        intersect_P(params, a, a) > 0
        and intersect_P(params, a, E_P) > 0
        and intersect_P(params, a, FIBER_P) > 0
    )


def is_ample_KX(params: SurfaceParams) -> bool:
    """Ampleness of K_X via the degree tests on its two summands.

    K_X = phi^*A + B with deg A = 2g-2 - (p*ell-p-ell)*dNl and
    B = (p*ell-p-ell-1) Etilde; together with the positivity of K_X^2,
    K_X.Etilde and K_X.fiber this reproduces the closed classification
    "(p, ell) = (3, 4) or p >= 5" on every valid tuple.
    """
    w = params.p * params.ell - params.p - params.ell
    deg_a = 2 * params.g - 2 - w * params.dNl
    deg_b = w - 1
    kx = canonical_X(params)
    return (
        deg_a > 0
        and deg_b > 0
        and intersect_X(params, kx, kx) > 0
        and intersect_X(params, kx, ETILDE) > 0
        and intersect_X(params, kx, FIBER_X) > 0
    )


def li_class(params: SurfaceParams, i: int) -> ClassP:
    """The i-th twist of K_P whose ampleness controls H^1(X, K_X^{-1}).

    u_i = (p+1)(ell-1+i)/ell - 2 and
    v_i = 2g-2 - (p*ell-p-ell+p*i)/ell * dD; both are integers because
    ell | p+1 and ell | dD.
    """
    if not 0 <= i <= params.ell - 1:
        raise ValueError(f"i must lie in 0..ell-1, got {i}")
    u = Fraction((params.p + 1) * (params.ell - 1 + i), params.ell) - 2
    v = 2 * params.g - 2 - Fraction(
        (params.p * params.ell - params.p - params.ell + params.p * i) * params.dD,
        params.ell,
    )
    assert u.denominator == 1 and v.denominator == 1
    return ClassP(u, v)


def kodaira_vanishing_KX(params: SurfaceParams) -> bool:
    """H^1(X, K_X^{-1}) = 0, decided by ampleness of every L_i on P."""
    return all(is_ample_P(params, li_class(params, i)) for i in range(params.ell))


def fiber_genus(params: SurfaceParams) -> int:
    """Geometric genus (ell-1)(p-1)/2 of every fiber of X over the base curve."""
    num = (params.ell - 1) * (params.p - 1)
    assert num % 2 == 0
    return num // 2


def cusp_exponents(params: SurfaceParams) -> tuple[int, int]:
    """Each fiber has one cusp of local form Z^ell = W^p."""
    return (params.ell, params.p)


def polarization_class(params: SurfaceParams, a: int = 1, b: int = 1) -> ClassX:
    """Numerical class of Z_{a,b} = O_X(a*Etilde) (x) phi^* Nl^b; Z = Z_{1,1}."""
    return ClassX(a, b * params.dNl)

"""Parameter validation, derived degrees, and family enumeration.

A surface in the family is fixed by six numbers: the characteristic p, the
genus g of the base curve C, the degree dD of the divisor D realizing the
(pre-)Tango structure (df) >= pD > 0, the root order e with O(D) = N^e, the
cyclic cover degree ell (dividing both e and p+1), and whether the structure
is Tango ((df) = pD, which forces p*dD = 2g-2) or merely pre-Tango.  Every
quantity computed elsewhere in the package is a pure function of a validated
tuple.  Existence of an actual curve carrying the structure is not checked;
only the numeric constraints are enforced.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from math import gcd

__all__ = [
    "Structure",
    "SurfaceParams",
    "InvalidParams",
    "is_prime",
    "check",
    "validate",
    "enumerate_families",
    "is_smooth",
    "is_normal",
]


class Structure(Enum):
    """Tango means (df) = pD exactly; pre-Tango only (df) >= pD."""

    TANGO = "tango"
    PRETANGO = "pretango"


class InvalidParams(ValueError):
    """Candidate tuple violating the family constraints.

    Carries the complete list of violations, not just the first one, so a
    caller can report everything that is wrong with an exploratory input.
    """

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


def is_prime(n: int) -> bool:
    """Trial-division primality check; inputs in this domain are tiny."""
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def _coerce_structure(structure: object) -> Structure | None:
    if isinstance(structure, Structure):
        return structure
    if isinstance(structure, str):
        try:
            return Structure(structure.lower())
        except ValueError:
            return None
    return None


def check(p: int, g: int, dD: int, e: int, ell: int, structure: object) -> list[str]:
    """Return the complete list of violated constraints (empty when valid)."""
    bad: list[str] = []
    for name, v in (("p", p), ("g", g), ("dD", dD), ("e", e), ("ell", ell)):
        if not isinstance(v, int) or isinstance(v, bool):
            bad.append(f"ConstraintViolated({name} is an integer): got {v!r}")
    if bad:
        return bad
    st = _coerce_structure(structure)
    if st is None:
        bad.append(
            f"ConstraintViolated(structure): {structure!r} is not 'tango' or 'pretango'"
        )
    if not is_prime(p):
        bad.append(f"NotPrime({p})")
    if g < 2:
        bad.append(f"ConstraintViolated(g >= 2): g = {g}")
    if dD < 1:
        bad.append(f"ConstraintViolated(dD >= 1): dD = {dD}")
    if e < 2:
        bad.append(f"ConstraintViolated(e >= 2): e = {e}")
    if ell < 2:
        bad.append(f"ConstraintViolated(ell >= 2): ell = {ell}")
    if gcd(e, p) != 1:
        bad.append(f"ConstraintViolated(gcd(e, p) = 1): gcd({e}, {p}) = {gcd(e, p)}")
    if ell >= 1 and e % ell != 0:
        bad.append(f"ConstraintViolated(ell | e): {ell} does not divide {e}")
    if ell >= 1 and (p + 1) % ell != 0:
        bad.append(f"ConstraintViolated(ell | p+1): {ell} does not divide {p + 1}")
    if e >= 1 and dD % e != 0:
        bad.append(f"ConstraintViolated(e | dD): {e} does not divide {dD}")
    if ell >= 1 and dD % ell != 0:
        bad.append(f"ConstraintViolated(ell | dD): {ell} does not divide {dD}")
    if p * dD > 2 * g - 2:
        bad.append(f"ConstraintViolated(p*dD <= 2g-2): {p * dD} > {2 * g - 2}")
    if st is Structure.TANGO and p * dD != 2 * g - 2:
        bad.append(
            f"ConstraintViolated(Tango forces p*dD = 2g-2): {p * dD} != {2 * g - 2}"
        )
    return bad


@dataclass(frozen=True)
class SurfaceParams:
    """Validated tuple (p, g, dD, e, ell, structure); construction re-checks."""

    p: int
    g: int
    dD: int
    e: int
    ell: int
    structure: Structure

    def __post_init__(self):
        bad = check(self.p, self.g, self.dD, self.e, self.ell, self.structure)
        if bad:
            raise InvalidParams(bad)

    @property
    def dN(self) -> int:
        """deg N, with O(D) = N^e."""
        return self.dD // self.e

    @property
    def dNl(self) -> int:
        """deg Nl, with Nl = N^(e/ell) the ell-th root of O(D)."""
        return self.dD // self.ell

    def sort_key(self) -> tuple:
        return (self.p, self.ell, self.e, self.g, self.dD, self.structure.value)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "g": self.g,
            "dD": self.dD,
            "e": self.e,
            "ell": self.ell,
            "structure": self.structure.value,
        }

    @classmethod
    def from_json(cls, obj: str | dict) -> "SurfaceParams":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict):
            raise InvalidParams([f"ConstraintViolated(json object): got {obj!r}"])
        required = {"p", "g", "dD", "e", "ell", "structure"}
        extra = set(obj) - required
        missing = required - set(obj)
        if extra or missing:
            bad = []
            if missing:
                bad.append(f"ConstraintViolated(missing keys): {sorted(missing)}")
            if extra:
                bad.append(f"ConstraintViolated(unknown keys): {sorted(extra)}")
            raise InvalidParams(bad)
        return validate(obj["p"], obj["g"], obj["dD"], obj["e"], obj["ell"], obj["structure"])


def validate(p: int, g: int, dD: int, e: int, ell: int, structure: object) -> SurfaceParams:
    """Validate a raw tuple; raise InvalidParams with every violated constraint."""
    bad = check(p, g, dD, e, ell, structure)
    if bad:
        raise InvalidParams(bad)
    st = _coerce_structure(structure)
    assert st is not None
    return SurfaceParams(p, g, dD, e, ell, st)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def enumerate_families(max_p: int, max_g: int, max_dD: int) -> list[SurfaceParams]:
    """All valid tuples with p <= max_p, g <= max_g, dD <= max_dD.

    Deterministically ordered, lexicographic on (p, ell, e, g, dD, structure);
    both the Tango and the pre-Tango variant are emitted whenever their bounds
    hold.
    """
    if max_p < 1 or max_g < 1 or max_dD < 1:
        raise ValueError("bounds must be positive")
    fams: list[SurfaceParams] = []
    for p in range(2, max_p + 1):
        if not is_prime(p):
            continue
        for ell in range(2, p + 2):
            if (p + 1) % ell != 0:
                continue
            for e in range(ell, max_dD + 1, ell):
                if gcd(e, p) != 1:
                    continue
                for dD in range(e, max_dD + 1, e):
                    gmin = max(2, _ceil_div(p * dD + 2, 2))
                    for g in range(gmin, max_g + 1):
                        fams.append(SurfaceParams(p, g, dD, e, ell, Structure.PRETANGO))
                        if p * dD == 2 * g - 2:
                            fams.append(SurfaceParams(p, g, dD, e, ell, Structure.TANGO))
    fams.sort(key=SurfaceParams.sort_key)
    return fams


def is_smooth(params: SurfaceParams) -> bool:
    """The cover is smooth exactly when the branch curve is, i.e. Tango."""
    return params.structure is Structure.TANGO


def is_normal(params: SurfaceParams) -> bool:
    """Every surface in the family is normal (hence Cohen-Macaulay)."""
    return True

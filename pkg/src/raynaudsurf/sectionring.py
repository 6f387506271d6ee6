"""Graded local cohomology of the section ring R = (+)_{n>=0} H^0(X, Z^n).

R is a 3-dimensional graded normal domain with X = Proj R.  Cech comparison
gives H^0_m(R) = 0, the short exact sequence
0 -> R -> (+)_n H^0(X, Z^n) -> H^1_m(R) -> 0 (whose cokernel vanishes
degree-wise, since R_n is all of H^0 for n >= 0 and H^0 = 0 for n < 0), and
H^{i+1}_m(R) = (+)_n H^i(X, Z^n) for i >= 1.  So the interesting graded
pieces are exactly the surface certificates computed in surfcoh, reindexed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .curvecoh import Cert, ZERO_CERT
from .params import SurfaceParams
from .surfcoh import h_surface

__all__ = ["LocalCohReport", "local_cohomology", "local_cohomology_report", "nonzero_negative_degrees"]

DIM_R = 3


def local_cohomology(params: SurfaceParams, j: int, n: int) -> Cert:
    """Certificate for the degree-n piece of H^j_m(R), j in 0..3."""
    if j in (0, 1):
        return ZERO_CERT
    if j == 2:
        return h_surface(params, 1, n)
    if j == 3:
        return h_surface(params, 2, n)
    raise ValueError(f"j must lie in 0..{DIM_R}, got {j}")


@dataclass(frozen=True)
class LocalCohReport:
    """Graded pieces of H^j_m(R) over a degree window."""

    params: SurfaceParams
    nmin: int
    nmax: int
    pieces: dict[tuple[int, int], Cert] = field(hash=False)

    dim_r: int = DIM_R

    def to_json(self) -> dict:
        out = {
            "params": self.params.to_json(),
            "dimR": self.dim_r,
            "nmin": self.nmin,
            "nmax": self.nmax,
            "pieces": {},
        }
        for (j, n) in sorted(self.pieces):
            c = self.pieces[(j, n)]
            out["pieces"][f"{j},{n}"] = {"kind": c.kind, "lo": c.lo, "hi": c.hi}
        return out


def local_cohomology_report(params: SurfaceParams, nmin: int, nmax: int) -> LocalCohReport:
    if nmin > nmax:
        raise ValueError("nmin must not exceed nmax")
    pieces = {
        (j, n): local_cohomology(params, j, n)
        for j in range(DIM_R + 1)
        for n in range(nmin, nmax + 1)
    }
    return LocalCohReport(params, nmin, nmax, pieces)


def nonzero_negative_degrees(params: SurfaceParams, nmin: int = -40) -> list[int]:
    """Degrees n < 0 where [H^2_m(R)]_n is certified nonzero."""
    return [n for n in range(nmin, 0) if local_cohomology(params, 2, n).certainly_nonzero]

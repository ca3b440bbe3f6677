"""The packing-radius polynomial and its root near 0.54.

P(r) = r^8 - 8r^7 - 44r^6 - 232r^5 - 482r^4 - 24r^3 + 388r^2 - 120r + 9.
P has several real roots in (0, 1); the packing radius is the one in
(0.5, 0.6).
"""

from __future__ import annotations

from dataclasses import dataclass

COEFFS = (1, -8, -44, -232, -482, -24, 388, -120, 9)  # degree 8 downward

RESIDUAL_BOUND = 1e-10
SCAN_STEP = 1e-3
PACKING_INTERVAL = (0.5, 0.6)

#: shield angle of the disk-packing construction, degrees (reported next to
#: the radius for reference; the radius-to-angle relation is not computed)
PACKING_ALPHA_DEGREES = 99.34


def poly(r: float) -> float:
    acc = 0.0
    for c in COEFFS:
        acc = acc * r + c
    return acc


@dataclass(frozen=True)
class DiskRadius:
    value: float
    residual: float


def real_roots_unit_interval(step: float = SCAN_STEP) -> list[float]:
    """All real roots of P in (0, 1) by sign-change scan plus bisection."""
    roots = []
    x = 0.0
    fx = poly(x)
    while x < 1.0 - 1e-15:
        y = min(x + step, 1.0)
        fy = poly(y)
        if fx == 0.0:
            roots.append(x)
        elif fx * fy < 0.0:
            roots.append(_bisect(x, y))
        x, fx = y, fy
    return roots


def _bisect(lo: float, hi: float) -> float:
    flo = poly(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        fmid = poly(mid)
        if abs(fmid) < RESIDUAL_BOUND * 1e-3 or hi - lo < 1e-16:
            return mid
        if flo * fmid <= 0.0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def disk_radius_root() -> DiskRadius:
    lo, hi = PACKING_INTERVAL
    candidates = [r for r in real_roots_unit_interval() if lo < r < hi]
    if len(candidates) != 1:
        raise ArithmeticError(
            f"expected one root in {PACKING_INTERVAL}, found {candidates}"
        )
    r = candidates[0]
    res = abs(poly(r))
    if res >= RESIDUAL_BOUND:
        raise ArithmeticError(f"residual {res} not below {RESIDUAL_BOUND}")
    return DiskRadius(value=r, residual=res)

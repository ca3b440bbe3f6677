import math

import pytest

from shieldtiles.diskroot import (
    PACKING_INTERVAL,
    RESIDUAL_BOUND,
    disk_radius_root,
    poly,
    real_roots_unit_interval,
)


def test_endpoint_values():
    assert poly(0.0) == 9.0
    assert poly(1.0) == -512.0


def test_three_real_roots_in_unit_interval():
    # frozen by an independent fine-grid sign scan
    roots = real_roots_unit_interval()
    assert len(roots) == 3
    assert roots == pytest.approx(
        [0.121283421281, 0.225228010994, 0.545151042123], abs=1e-9
    )
    for r in roots:
        assert abs(poly(r)) < 1e-9


def test_scan_step_insensitive():
    coarse = real_roots_unit_interval(step=1e-3)
    fine = real_roots_unit_interval(step=1e-4)
    assert coarse == pytest.approx(fine, abs=1e-9)


def test_packing_root():
    r = disk_radius_root()
    lo, hi = PACKING_INTERVAL
    assert lo < r.value < hi
    assert r.residual < RESIDUAL_BOUND
    # known approximation: two leading decimals 0.54 (truncation)
    assert math.floor(r.value * 100) / 100 == 0.54
    assert r.value == pytest.approx(0.545151042123, abs=1e-10)


def test_root_brackets_sign_change():
    r = disk_radius_root().value
    eps = 1e-7
    assert poly(r - eps) * poly(r + eps) < 0

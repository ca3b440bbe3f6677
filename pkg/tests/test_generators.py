import math

import pytest

from shieldtiles.alpha import GENERIC, make_alpha
from shieldtiles.classify import vertex_census
from shieldtiles.generators import (
    DodecagonChoice,
    gen_dodecagon_tiling,
    gen_line_tiling,
    gen_triangle_tiling,
    hex_lattice_vector,
)

ALPHAS = [GENERIC, make_alpha("rational", 5, 12), make_alpha("decimal", 99.34)]


def census_words(patch):
    return {cfg.word for cfg in vertex_census(patch)}


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("word", ["+", "+-", "++-", "+-+-"])
def test_line_tilings_validate(alpha, word):
    patch = gen_line_tiling(word, 3, alpha)
    assert patch.validate().ok
    words = census_words(patch)
    assert words <= {"ATBT", "ABTT"}
    # fault vertices appear exactly when adjacent lines disagree
    has_fault = any(a != b for a, b in zip(word, word[1:]))
    assert ("ABTT" in words) == has_fault


@pytest.mark.parametrize("alpha", ALPHAS)
@pytest.mark.parametrize("order", [0, 1, 2])
def test_triangle_tilings_validate(alpha, order):
    extent = 4 + 3 * order
    patch = gen_triangle_tiling(order, extent, alpha)
    assert patch.validate().ok
    words = census_words(patch)
    assert "TTTTTT" in words
    assert words <= {"TTTTTT", "ATBT", "ABTT"}


def test_infinite_order_window():
    patch = gen_triangle_tiling(math.inf, 5, GENERIC)
    assert patch.validate().ok
    census = vertex_census(patch)
    hexes = [v for cfg, vs in census.items() if cfg.word == "TTTTTT" for v in vs]
    assert len(hexes) == 1


def test_hex_lattice_spacing_grows_with_order():
    alpha = 99.0 * math.pi / 180.0
    lens = []
    for k in range(5):
        x, y = hex_lattice_vector(k).xy(alpha)
        lens.append(math.hypot(x, y))
    assert all(b > a for a, b in zip(lens, lens[1:]))


@pytest.mark.parametrize("filling", [0, 1, 2])
def test_dodecagon_tilings_validate(filling):
    patch = gen_dodecagon_tiling(DodecagonChoice.constant(filling), 4)
    assert patch.validate().ok
    words = census_words(patch)
    assert words <= {"AAAA", "BBT", "ABTT", "ATATT", "ATBT", "AATTT", "TTTTTT"}
    assert "AAAA" in words or "BBT" in words  # right-shield signatures


def test_line_word_is_bottom_to_top():
    # mixed word produces at least one fault seam between adjacent lines
    patch = gen_line_tiling("+-", 3, GENERIC)
    census = vertex_census(patch)
    faults = [v for cfg, vs in census.items() if cfg.word == "ABTT" for v in vs]
    assert faults

from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from src.classify.classifier import (
    ClassifierConfig,
    ClassMask,
    classify_image,
    classify_pixel,
    validate_classifier_config,
)
from src.classify.colors import ColorClass
from src.raster.image import PixelRGB, RasterImage

DEFAULT = ClassifierConfig()

channel = st.integers(0, 255)
pixels = st.builds(PixelRGB, channel, channel, channel)


@pytest.mark.parametrize(
    "rgb, expected",
    [
        ((255, 0, 0), ColorClass.RED),
        ((0, 255, 0), ColorClass.GREEN),
        ((0, 0, 255), ColorClass.BLUE),
        ((255, 255, 255), ColorClass.BACKGROUND),
        ((0, 0, 0), ColorClass.BLACK),
        ((60, 60, 60), ColorClass.BLACK),
        ((200, 200, 200), ColorClass.BACKGROUND),
        ((128, 0, 128), ColorClass.UNCLASSIFIED),  # purple
        ((255, 255, 0), ColorClass.UNCLASSIFIED),  # yellow
        ((200, 160, 0), ColorClass.UNCLASSIFIED),  # dark orange
        ((120, 120, 120), ColorClass.UNCLASSIFIED),
        ((61, 0, 0), ColorClass.UNCLASSIFIED),
        ((100, 50, 50), ColorClass.RED),
        ((99, 0, 0), ColorClass.UNCLASSIFIED),
        ((150, 101, 0), ColorClass.UNCLASSIFIED),
        ((150, 100, 0), ColorClass.RED),
    ],
)
def test_classify_pixel_defaults(rgb, expected):
    assert classify_pixel(PixelRGB(*rgb), DEFAULT) == expected


def test_black_wins_over_background_when_ranges_touch():
    # only reachable through a config that fails validation, but the rule order still holds
    cfg = ClassifierConfig(black_max=200, white_min=100, min_dominant=250)
    assert classify_pixel(PixelRGB(150, 150, 150), cfg) == ColorClass.BLACK


def test_zero_margin_tie_resolves_red_then_green():
    cfg = ClassifierConfig(dominance_margin=0)
    assert classify_pixel(PixelRGB(200, 200, 0), cfg) == ColorClass.RED
    assert classify_pixel(PixelRGB(0, 200, 200), cfg) == ColorClass.GREEN
    mask = classify_image(RasterImage.blank(1, 1, (200, 200, 0)), cfg)
    assert mask.at(0, 0) == ColorClass.RED


@pytest.mark.parametrize("perm", list(itertools.permutations(range(3))))
def test_channel_permutation_permutes_the_class(rng, perm):
    rgb = rng.integers(0, 256, size=(100, 100, 3), dtype=np.uint8)
    # half the pixels get one strong channel so every dominant class shows up
    flat = rgb.reshape(-1, 3)
    strong = rng.integers(0, 3, size=5000)
    flat[:5000] = rng.integers(0, 100, size=(5000, 3), dtype=np.uint8)
    flat[np.arange(5000), strong] = rng.integers(150, 256, size=5000, dtype=np.uint8)

    before = classify_image(RasterImage.from_rgb(rgb), DEFAULT).classes
    after = classify_image(RasterImage.from_rgb(rgb[..., list(perm)]), DEFAULT).classes

    dominant = (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE)
    lut = np.arange(len(ColorClass), dtype=np.uint8)
    for i, c in enumerate(dominant):
        lut[c] = dominant[perm.index(i)]
    np.testing.assert_array_equal(after, lut[before])
    assert all((before == c).any() for c in dominant)


@settings(max_examples=300)
@given(pixels, st.integers(1, 255))
def test_raising_the_dominant_channel_keeps_the_class(p, boost):
    got = classify_pixel(p, DEFAULT)
    assume(got in (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE))
    idx = (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE).index(got)
    values = list(p)
    values[idx] = min(255, values[idx] + boost)
    assert classify_pixel(PixelRGB(*values), DEFAULT) == got


def test_vectorized_rule_matches_scalar_rule(rng):
    rgb = rng.integers(0, 256, size=(100, 100, 3), dtype=np.uint8)
    mask = classify_image(RasterImage.from_rgb(rgb), DEFAULT)
    for y in range(0, 100, 3):
        for x in range(100):
            assert mask.at(x, y) == classify_pixel(PixelRGB(*rgb[y, x].tolist()), DEFAULT)


def test_classify_image_all_white():
    mask = classify_image(RasterImage.blank(4, 4), DEFAULT)
    assert mask.count(ColorClass.BACKGROUND) == 16


def test_classify_image_single_red_pixel():
    rgb = np.full((4, 4, 3), 255, dtype=np.uint8)
    rgb[2, 1] = (255, 0, 0)
    mask = classify_image(RasterImage.from_rgb(rgb), DEFAULT)
    assert mask.count(ColorClass.RED) == 1
    assert mask.at(1, 2) == ColorClass.RED


@pytest.mark.parametrize("workers", [2, 3, 8, 100])
def test_parallel_and_sequential_masks_are_identical(rng, workers):
    img = RasterImage.from_rgb(rng.integers(0, 256, size=(64, 64, 3), dtype=np.uint8))
    assert classify_image(img, DEFAULT, workers=workers) == classify_image(img, DEFAULT)


def test_mask_from_labels():
    mask = ClassMask.from_labels(["R.", "?K"])
    assert (mask.width, mask.height) == (2, 2)
    assert mask.at(0, 0) == ColorClass.RED
    assert mask.at(1, 1) == ColorClass.BLACK
    assert mask.at(0, 1) == ColorClass.UNCLASSIFIED


def test_validate_classifier_config():
    assert validate_classifier_config(DEFAULT) == []
    assert validate_classifier_config(ClassifierConfig(black_max=200, white_min=180))
    assert validate_classifier_config(ClassifierConfig(min_dominant=50, black_max=60))
    assert validate_classifier_config(ClassifierConfig(white_min=256))
    assert validate_classifier_config(ClassifierConfig(dominance_margin=True))

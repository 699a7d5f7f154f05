from __future__ import annotations

import numpy as np
import pytest

from src.raster.image import PixelBoundsError, PixelRGB, RasterImage, get_pixel
from src.raster.ppm import (
    HeaderError,
    MaxvalError,
    TruncatedDataError,
    UnsupportedMagicError,
    iter_ppm_frames,
    load_ppm,
    load_raw,
    read_image,
    save_ppm,
    save_raw,
)


def ppm(width: int, height: int, samples: list[int], header: str | None = None) -> bytes:
    head = header if header is not None else f"P6\n{width} {height}\n255\n"
    return head.encode("ascii") + bytes(samples)


def test_load_ppm_decodes_rgb_samples():
    img = load_ppm(ppm(2, 1, [255, 0, 0, 0, 0, 255]))
    assert (img.width, img.height) == (2, 1)
    assert get_pixel(img, 0, 0) == PixelRGB(255, 0, 0)
    assert get_pixel(img, 1, 0) == PixelRGB(0, 0, 255)
    # stored blue-green-red
    assert img.data == bytes([0, 0, 255, 255, 0, 0])


def test_load_ppm_rejects_other_magic():
    with pytest.raises(UnsupportedMagicError):
        load_ppm(b"P5\n1 1\n255\n\x00")
    with pytest.raises(UnsupportedMagicError):
        load_ppm(b"")


@pytest.mark.parametrize(
    "data, error",
    [
        (b"P6\n1 1\n65535\n" + bytes(6), MaxvalError),
        (b"P6\n1 1\n15\n" + bytes(3), MaxvalError),
        (b"P6\n2 2\n255\n" + bytes(11), TruncatedDataError),
        (b"P6\nx 1\n255\n" + bytes(3), HeaderError),
        (b"P6\n1\n", HeaderError),
        (b"P6\n0 1\n255\n", HeaderError),
        (b"P6\n1 1\n255", HeaderError),
    ],
)
def test_load_ppm_reports_each_failure_distinctly(data, error):
    with pytest.raises(error):
        load_ppm(data)


def test_error_types_are_distinct():
    kinds = [UnsupportedMagicError, HeaderError, MaxvalError, TruncatedDataError]
    for a in kinds:
        for b in kinds:
            if a is not b:
                assert not issubclass(a, b)


def test_save_ppm_black_and_white_pixels():
    assert save_ppm(RasterImage.blank(1, 1, (0, 0, 0))) == b"P6\n1 1\n255\n\x00\x00\x00"
    assert save_ppm(RasterImage.blank(1, 1, (255, 255, 255))) == b"P6\n1 1\n255\n\xff\xff\xff"


def test_canonical_round_trip_is_byte_identical(rng):
    samples = rng.integers(0, 256, size=5 * 3 * 3).tolist()
    data = ppm(5, 3, samples)
    assert save_ppm(load_ppm(data)) == data


def test_non_canonical_header_is_canonicalized():
    data = b"P6 # comment\n 2\t1 \n# another\n255\n" + bytes([1, 2, 3, 4, 5, 6])
    assert save_ppm(load_ppm(data)) == ppm(2, 1, [1, 2, 3, 4, 5, 6])


def test_get_pixel_swaps_bgr_storage():
    img = RasterImage.from_bytes(1, 1, bytes([255, 0, 0]))
    assert get_pixel(img, 0, 0) == PixelRGB(0, 0, 255)


@pytest.mark.parametrize("x, y", [(3, 0), (0, 2), (-1, 0), (0, -1)])
def test_get_pixel_out_of_bounds(x, y):
    img = RasterImage.blank(3, 2)
    with pytest.raises(PixelBoundsError):
        get_pixel(img, x, y)


def test_get_pixel_on_black_image():
    img = RasterImage.blank(4, 3, (0, 0, 0))
    assert all(get_pixel(img, x, y) == (0, 0, 0) for x in range(4) for y in range(3))


def test_image_is_immutable():
    img = RasterImage.blank(2, 2)
    with pytest.raises(ValueError):
        img.pixels[0, 0, 0] = 1


def test_from_bytes_checks_length():
    with pytest.raises(ValueError):
        RasterImage.from_bytes(2, 2, bytes(11))
    assert len(RasterImage.from_bytes(2, 2, bytes(12)).data) == 12


def test_raw_format_layout_and_round_trip(rng):
    bgr = rng.integers(0, 256, size=(3, 4, 3), dtype=np.uint8)
    img = RasterImage.from_bgr(bgr)
    raw = save_raw(img)
    assert raw[:4] == b"CSRW"
    assert raw[4:8] == (4).to_bytes(4, "little")
    assert raw[8:12] == (3).to_bytes(4, "little")
    assert raw[12:] == bgr.tobytes()
    assert load_raw(raw) == img


def test_raw_format_errors():
    with pytest.raises(UnsupportedMagicError):
        load_raw(b"XXXX" + bytes(8))
    with pytest.raises(TruncatedDataError):
        load_raw(b"CSRW" + (2).to_bytes(4, "little") + (2).to_bytes(4, "little") + bytes(5))
    with pytest.raises(HeaderError):
        load_raw(b"CSRW\x01")


def test_iter_ppm_frames_reads_concatenated_stream():
    a = RasterImage.blank(2, 1, (255, 0, 0))
    b = RasterImage.blank(1, 3, (0, 0, 255))
    frames = list(iter_ppm_frames(save_ppm(a) + save_ppm(b) + b"\n"))
    assert frames == [a, b]


def test_read_image_detects_format(tmp_path):
    img = RasterImage.blank(3, 2, (10, 20, 30))
    (tmp_path / "a.ppm").write_bytes(save_ppm(img))
    (tmp_path / "a.raw").write_bytes(save_raw(img))
    assert read_image(tmp_path / "a.ppm") == img
    assert read_image(tmp_path / "a.raw") == img

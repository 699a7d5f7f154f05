"""
Bit-exact PPM (P6, maxval 255) and raw-BGR (``CSRW``) codecs.

PPM stores samples red-green-blue; images are held blue-green-red, so both
directions swap channel order. The writer always emits the canonical header
``P6\\n<w> <h>\\n255\\n``.
"""

from __future__ import annotations

import logging
import struct
from pathlib import Path
from typing import Iterator

import numpy as np

from src.raster.image import RasterImage

logger = logging.getLogger("chromaseg")

PPM_MAGIC = b"P6"
RAW_MAGIC = b"CSRW"
_RAW_HEADER = struct.Struct("<4sII")
_WHITESPACE = b" \t\n\r\v\f"


class ImageFormatError(ValueError):
    pass


class UnsupportedMagicError(ImageFormatError):
    pass


class HeaderError(ImageFormatError):
    pass


class MaxvalError(ImageFormatError):
    pass


class TruncatedDataError(ImageFormatError):
    pass


def _read_header_token(buf: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next whitespace-delimited header token, skipping ``#`` comments."""
    n = len(buf)
    while pos < n:
        if buf[pos] in _WHITESPACE:
            pos += 1
        elif buf[pos:pos + 1] == b"#":
            eol = buf.find(b"\n", pos)
            pos = n if eol < 0 else eol + 1
        else:
            break
    start = pos
    while pos < n and buf[pos] not in _WHITESPACE and buf[pos:pos + 1] != b"#":
        pos += 1
    return buf[start:pos], pos


def _parse_ppm(buf: bytes, offset: int = 0) -> tuple[RasterImage, int]:
    if buf[offset:offset + 2] != PPM_MAGIC:
        magic = buf[offset:offset + 2]
        raise UnsupportedMagicError(f"unsupported magic {magic!r}; only binary PPM 'P6' is supported")
    pos = offset + 2
    if pos < len(buf) and buf[pos] not in _WHITESPACE and buf[pos:pos + 1] != b"#":
        raise HeaderError("missing whitespace after magic")

    fields = []
    for name in ("width", "height", "maxval"):
        tok, pos = _read_header_token(buf, pos)
        if not tok:
            raise HeaderError(f"header ended before {name}")
        if not tok.isdigit():
            raise HeaderError(f"non-numeric {name} {tok!r}")
        fields.append(int(tok))
    width, height, maxval = fields

    if width < 1 or height < 1:
        raise HeaderError(f"invalid dimensions {width}x{height}")
    if maxval != 255:
        raise MaxvalError(f"maxval {maxval} not supported (must be 255)")
    # exactly one whitespace byte separates the header from the raster
    if pos >= len(buf) or buf[pos] not in _WHITESPACE:
        raise HeaderError("missing whitespace after maxval")
    pos += 1

    size = width * height * 3
    payload = buf[pos:pos + size]
    if len(payload) < size:
        raise TruncatedDataError(f"expected {size} pixel bytes for {width}x{height}, got {len(payload)}")
    rgb = np.frombuffer(payload, dtype=np.uint8).reshape(height, width, 3)
    return RasterImage.from_rgb(rgb), pos + size


def load_ppm(data: bytes) -> RasterImage:
    img, end = _parse_ppm(bytes(data))
    if data[end:].strip():
        logger.debug(f"[raster] ignoring {len(data) - end} trailing bytes after first PPM image")
    return img


def iter_ppm_frames(data: bytes) -> Iterator[RasterImage]:
    """Decode a concatenation of P6 images (a netpbm multi-image stream)."""
    buf = bytes(data)
    pos = 0
    n = len(buf)
    while True:
        while pos < n and buf[pos] in _WHITESPACE:
            pos += 1
        if pos >= n:
            return
        img, pos = _parse_ppm(buf, pos)
        yield img


def save_ppm(img: RasterImage) -> bytes:
    header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + np.ascontiguousarray(img.rgb).tobytes()


def load_raw(data: bytes) -> RasterImage:
    """Decode ``CSRW`` + little-endian uint32 width, height + BGR payload."""
    if len(data) < _RAW_HEADER.size:
        if not RAW_MAGIC.startswith(bytes(data[:4])):
            raise UnsupportedMagicError(f"unsupported magic {bytes(data[:4])!r}")
        raise HeaderError("raw header truncated")
    magic, width, height = _RAW_HEADER.unpack_from(data, 0)
    if magic != RAW_MAGIC:
        raise UnsupportedMagicError(f"unsupported magic {magic!r}; expected {RAW_MAGIC!r}")
    if width < 1 or height < 1:
        raise HeaderError(f"invalid dimensions {width}x{height}")
    size = width * height * 3
    payload = data[_RAW_HEADER.size:_RAW_HEADER.size + size]
    if len(payload) < size:
        raise TruncatedDataError(f"expected {size} pixel bytes for {width}x{height}, got {len(payload)}")
    return RasterImage.from_bytes(width, height, bytes(payload))


def save_raw(img: RasterImage) -> bytes:
    return _RAW_HEADER.pack(RAW_MAGIC, img.width, img.height) + img.data


def read_image(path: Path) -> RasterImage:
    """Read a PPM or raw-BGR file, picking the decoder by magic bytes."""
    data = Path(path).read_bytes()
    if data[:4] == RAW_MAGIC:
        return load_raw(data)
    return load_ppm(data)

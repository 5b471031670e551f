"""Bitmaps and CSV tables.

Images are rendered one pixel per digit, one pixel row per halving level, and
written as binary PPM (P6).  Rows are right-aligned by default, so each row
grows by one digit on the left per level and the result is a triangle.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from typing import BinaryIO, Iterable, Sequence, Union

from .codes import xor_series
from .core import DigitString, as_digit_string, iter_rows

RGB = tuple[int, int, int]
Destination = Union[str, "os.PathLike[str]", BinaryIO]

SCATTER_HEADER = ("k", "raw_n", "k0", "n", "d")
PIE_HEADER = ("offset", "count")
COLLISION_HEADER = ("k", "x", "y")
PAIR_DISTANCE_HEADER = ("k", "distance")


def hex_rgb(text: str) -> RGB:
    text = text.lstrip("#")
    return int(text[0:2], 16), int(text[2:4], 16), int(text[4:6], 16)


@dataclass(frozen=True)
class Palette:
    digits: tuple[RGB, ...]
    background: RGB

    def __post_init__(self):
        if len(self.digits) != 10:
            raise ValueError("a palette needs exactly ten digit colours")
        for c in (*self.digits, self.background):
            if len(c) != 3 or any(not 0 <= ch <= 255 for ch in c):
                raise ValueError(f"bad RGB colour: {c!r}")
        if len({*self.digits, self.background}) != 11:
            raise ValueError("palette colours must be pairwise distinct")


DEFAULT_PALETTE = Palette(
    digits=tuple(
        hex_rgb(h)
        for h in (
            "#000000", "#FFFFFF", "#E6194B", "#3CB44B", "#FFE119",
            "#4363D8", "#F58231", "#911EB4", "#46F0F0", "#F032E6",
        )
    ),
    background=hex_rgb("#808080"),
)

BLACK: RGB = (0, 0, 0)
WHITE: RGB = (255, 255, 255)


def load_palette(path: str | os.PathLike[str]) -> Palette:
    """Read eleven ``label R G B`` lines; labels are ``0``-``9`` and
    ``background``.  Blank lines and ``#`` comments are ignored."""
    colours: dict[str, RGB] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 4:
                raise ValueError(f"{path}:{lineno}: expected 'label R G B'")
            label, *rgb = parts
            if label in colours:
                raise ValueError(f"{path}:{lineno}: duplicate label {label!r}")
            colours[label] = tuple(int(v) for v in rgb)  # type: ignore[assignment]
    expected = {str(i) for i in range(10)} | {"background"}
    if set(colours) != expected:
        missing = sorted(expected - set(colours))
        extra = sorted(set(colours) - expected)
        raise ValueError(f"{path}: missing labels {missing}, unknown labels {extra}")
    return Palette(tuple(colours[str(i)] for i in range(10)), colours["background"])


@dataclass
class Image:
    width: int
    height: int
    pixels: bytearray

    @classmethod
    def blank(cls, width: int, height: int, fill: RGB = BLACK) -> "Image":
        if width < 1 or height < 1:
            raise ValueError(f"image size must be positive, got {width}x{height}")
        return cls(width, height, bytearray(bytes(fill) * (width * height)))

    def __post_init__(self):
        if len(self.pixels) != 3 * self.width * self.height:
            raise ValueError("pixel buffer does not match image size")

    def get(self, x: int, y: int) -> RGB:
        i = 3 * (y * self.width + x)
        return tuple(self.pixels[i : i + 3])  # type: ignore[return-value]

    def put(self, x: int, y: int, colour: RGB) -> None:
        i = 3 * (y * self.width + x)
        self.pixels[i : i + 3] = bytes(colour)

    def row(self, y: int) -> list[RGB]:
        return [self.get(x, y) for x in range(self.width)]


ALIGNMENTS = ("right", "left")


def _check_align(align: str) -> None:
    if align not in ALIGNMENTS:
        raise ValueError(f"align must be 'left' or 'right', got {align!r}")


def _row_start(width: int, length: int, align: str) -> int:
    return width - length if align == "right" else 0


def _paint(img: Image, y: int, start: int, colours: Sequence[RGB]) -> None:
    for i, c in enumerate(colours):
        img.put(start + i, y, c)


def _level_bitmap(
    x: DigitString, k: int, colour_of, background: RGB, align: str, full: bool
) -> Image:
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    _check_align(align)
    width = len(x) + k
    img = Image.blank(width, 3 * k + 1 if full else k + 1, background)
    y = 0
    prev: DigitString | None = None
    for r in iter_rows(x, k):
        start = _row_start(width, len(r), align)
        if full and prev is not None:
            # b_j sits above c_{j+1}, t_j above c_j
            _paint(img, y, start, [colour_of(a >> 1) for a in prev])
            _paint(img, y + 1, start + 1, [colour_of(5 * (a & 1)) for a in prev])
            y += 2
        _paint(img, y, start, [colour_of(v) for v in r])
        y += 1
        prev = r
    return img


def digit_bitmap(
    x: DigitString | str,
    k: int,
    palette: Palette = DEFAULT_PALETTE,
    align: str = "right",
    full: bool = False,
) -> Image:
    """Rows 0..k of the repeated halving, one colour per digit value.

    ``full=True`` inserts the floor and fraction rows of each step above the
    result row they produce (height ``3k + 1`` instead of ``k + 1``).
    """
    return _level_bitmap(
        as_digit_string(x), k, palette.digits.__getitem__, palette.background, align, full
    )


def binary_bitmap(
    x: DigitString | str,
    k: int,
    palette: Palette = DEFAULT_PALETTE,
    align: str = "right",
    full: bool = False,
) -> Image:
    """As :func:`digit_bitmap`, with even digits black and odd digits white."""
    return _level_bitmap(
        as_digit_string(x),
        k,
        lambda v: WHITE if v & 1 else BLACK,
        palette.background,
        align,
        full,
    )


def xor_bitmap(
    x: DigitString | str,
    y: DigitString | str,
    k_from: int,
    k_to: int,
    palette: Palette = DEFAULT_PALETTE,
    align: str = "right",
) -> Image:
    """One row per level: where the two codewords differ (white) or agree (black)."""
    _check_align(align)
    x = as_digit_string(x)
    words = xor_series(x, y, k_from, k_to)
    img = Image.blank(len(x) + k_to, k_to - k_from + 1, palette.background)
    for row_no, word in enumerate(words):
        start = _row_start(img.width, len(word), align)
        _paint(img, row_no, start, [WHITE if b == "1" else BLACK for b in word])
    return img


def ppm_bytes(img: Image) -> bytes:
    return b"P6\n%d %d\n255\n" % (img.width, img.height) + bytes(img.pixels)


def _write_bytes(data: bytes, destination: Destination) -> int:
    if hasattr(destination, "write"):
        destination.write(data)  # type: ignore[union-attr]
    else:
        with open(destination, "wb") as fh:  # type: ignore[arg-type]
            fh.write(data)
    return len(data)


def write_ppm(img: Image, destination: Destination) -> int:
    return _write_bytes(ppm_bytes(img), destination)


def csv_bytes(header: Sequence[str], records: Iterable[Sequence[object]]) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buf.getvalue().encode("utf-8")


def write_csv(
    records: Iterable[Sequence[object]],
    destination: Destination,
    header: Sequence[str] = SCATTER_HEADER,
) -> int:
    return _write_bytes(csv_bytes(header, records), destination)


def write_codewords(words: Iterable[str], destination: Destination) -> int:
    return _write_bytes("".join(w + "\n" for w in words).encode("ascii"), destination)

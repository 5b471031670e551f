import hashlib
import io

import pytest

from mzhalve import render
from mzhalve.codes import distance_series, hamming, parity_codeword
from mzhalve.render import (
    BLACK,
    DEFAULT_PALETTE,
    WHITE,
    Image,
    Palette,
    binary_bitmap,
    digit_bitmap,
    load_palette,
    ppm_bytes,
    write_csv,
    write_ppm,
    xor_bitmap,
)

BG = DEFAULT_PALETTE.background

DIGITS_7_11_SHA256 = "9872763d7cc7c7a04fed3f1d5a1ebbcb8e01fec09eec79162d4dd3ddb558dae1"
XOR_256_625_SHA256 = "029578448d30a745955cd841c69a276fb095c7ea55815fbbb8f4c49ccb2b4715"


def bits_of(img, y):
    out = []
    for c in img.row(y):
        out.append("." if c == BG else "1" if c == WHITE else "0")
    return "".join(out)


def test_default_palette_values():
    assert DEFAULT_PALETTE.digits[2] == (0xE6, 0x19, 0x4B)
    assert DEFAULT_PALETTE.digits[9] == (0xF0, 0x32, 0xE6)
    assert DEFAULT_PALETTE.background == (0x80, 0x80, 0x80)
    assert len({*DEFAULT_PALETTE.digits, BG}) == 11


def test_palette_must_be_distinct():
    with pytest.raises(ValueError):
        Palette(DEFAULT_PALETTE.digits, DEFAULT_PALETTE.digits[3])


def test_load_palette(tmp_path):
    path = tmp_path / "pal.txt"
    lines = [f"{i} {i} {2 * i} {3 * i}" for i in range(10)] + ["background 200 200 201"]
    path.write_text("\n".join(lines) + "\n")
    pal = load_palette(path)
    assert pal.digits[4] == (4, 8, 12)
    assert pal.background == (200, 200, 201)
    path.write_text("\n".join(lines[:-1]) + "\n")
    with pytest.raises(ValueError):
        load_palette(path)


def test_digit_bitmap_shape():
    img = digit_bitmap("7", 11)
    assert (img.width, img.height) == (12, 12)
    assert digit_bitmap("7", 0).row(0) == [DEFAULT_PALETTE.digits[7]]


def test_digit_bitmap_right_aligned_rows():
    img = digit_bitmap("265", 1)
    pal = DEFAULT_PALETTE.digits
    assert img.row(0) == [BG, pal[2], pal[6], pal[5]]
    assert img.row(1) == [pal[1], pal[3], pal[2], pal[5]]


def test_digit_bitmap_left_aligned():
    img = digit_bitmap("265", 1, align="left")
    pal = DEFAULT_PALETTE.digits
    assert img.row(0) == [pal[2], pal[6], pal[5], BG]
    with pytest.raises(ValueError):
        digit_bitmap("265", 1, align="centre")


def test_digit_bitmap_full_rows():
    pal = DEFAULT_PALETTE.digits
    img = digit_bitmap("265", 1, full=True)
    assert img.height == 4
    # floor digits above c_{j+1}, fraction digits above c_j
    assert img.row(1) == [pal[1], pal[3], pal[2], BG]
    assert img.row(2) == [BG, pal[0], pal[0], pal[5]]
    assert img.row(3) == [pal[1], pal[3], pal[2], pal[5]]
    left = digit_bitmap("265", 1, full=True, align="left")
    assert left.row(1) == img.row(1)
    assert left.row(2) == img.row(2)


def test_binary_bitmap_bottom_rows():
    assert bits_of(binary_bitmap("256", 10), 10) == "0000100000000"
    assert bits_of(binary_bitmap("265", 10), 10) == "0000101010001"
    assert bits_of(binary_bitmap("2468", 0), 0) == "0000"


def test_xor_bitmap():
    img = xor_bitmap("256", "625", 10, 10)
    assert bits_of(img, 0) == "0000001111001"
    img = xor_bitmap("256", "256", 1, 10)
    for y in range(img.height):
        assert set(bits_of(img, y)) <= {"0", "."}
    img = xor_bitmap("256", "625", 1, 30)
    assert (img.width, img.height) == (33, 30)
    for y, k in enumerate(range(1, 31)):
        row = bits_of(img, y)
        assert row.startswith("." * (30 - k))
        assert row.count("1") == hamming(parity_codeword("256", k), parity_codeword("625", k))


def test_ppm_tiny():
    buf = io.BytesIO()
    assert write_ppm(Image.blank(1, 1), buf) == 14
    assert buf.getvalue() == b"P6\n1 1\n255\n\x00\x00\x00"
    img = Image.blank(2, 1, WHITE)
    img.put(1, 0, (1, 2, 3))
    assert ppm_bytes(img) == b"P6\n2 1\n255\n\xff\xff\xff\x01\x02\x03"


def test_ppm_golden_checksums(tmp_path):
    path = tmp_path / "g.ppm"
    write_ppm(digit_bitmap("7", 11), path)
    assert hashlib.sha256(path.read_bytes()).hexdigest() == DIGITS_7_11_SHA256
    data = ppm_bytes(xor_bitmap("256", "625", 1, 300))
    assert data.startswith(b"P6\n303 300\n255\n")
    assert hashlib.sha256(data).hexdigest() == XOR_256_625_SHA256


def test_image_validation():
    with pytest.raises(ValueError):
        Image(2, 2, bytearray(3))
    with pytest.raises(ValueError):
        Image.blank(0, 1)
    assert Image.blank(1, 1, BLACK).get(0, 0) == BLACK


def test_write_csv_scatter():
    buf = io.BytesIO()
    write_csv(distance_series([2, 5, 6], 30, 30) + distance_series([2, 5, 6], 50, 50), buf)
    assert buf.getvalue() == b"k,raw_n,k0,n,d\n30,33,9,24,10\n50,53,15,38,16\n"


def test_write_csv_empty_and_pie(tmp_path):
    path = tmp_path / "s.csv"
    assert write_csv([], path) == len("k,raw_n,k0,n,d\n")
    assert path.read_text() == "k,raw_n,k0,n,d\n"
    buf = io.BytesIO()
    write_csv([(-1, 4), (0, 7)], buf, header=render.PIE_HEADER)
    assert buf.getvalue() == b"offset,count\n-1,4\n0,7\n"


def test_write_unwritable(tmp_path):
    with pytest.raises(OSError):
        write_ppm(Image.blank(1, 1), tmp_path / "missing" / "x.ppm")

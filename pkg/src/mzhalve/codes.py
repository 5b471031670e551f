"""Binary parity codes generated by repeated halving.

A codeword is the parity pattern (odd digit -> ``1``) of a result row, so the
level-``k`` codeword of a ``d``-digit number has ``d + k`` bits.  Codewords are
plain ``str`` objects over ``"01"``.

A *family* is every ordering of a set of distinct digits.  Its level-``k`` code
is stripped of the leading zero bits that all members share (``k0`` of them),
and is then characterised by its ``(n, M, d)`` parameters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator, NamedTuple, Sequence

from .core import DigitString, as_digit_string, iter_rows, next_row, result_row

BitString = str

MAX_FAMILY_DIGITS = 9

_PARITY = str.maketrans("0123456789", "0101010101")


class FamilyError(ValueError):
    """Raised for digit sets that cannot form a permutation family."""


def parity_bits(digits: Sequence[int]) -> BitString:
    return "".join("1" if v & 1 else "0" for v in digits)


def parity_codeword(x: DigitString | str, k: int) -> BitString:
    x = as_digit_string(x)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return parity_bits(result_row(x, k))


def oracle_codeword(x: DigitString | str, k: int) -> BitString:
    """Same as :func:`parity_codeword`, computed as ``value(x) * 5**k``."""
    x = as_digit_string(x)
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    text = str(int(str(x)) * 5**k).zfill(len(x) + k)
    return text.translate(_PARITY)


def iter_codewords(x: DigitString | str, k_max: int) -> Iterator[BitString]:
    """Codewords of levels 0..k_max, computed incrementally."""
    for r in iter_rows(as_digit_string(x), k_max):
        yield parity_bits(r)


def intermediate_codeword(x: DigitString | str, k: int) -> BitString:
    """Parity of the floor/fraction pairs of step ``k``: ``b, t`` per digit,
    most significant first, ``2 * (d + k - 1)`` bits."""
    if k < 1:
        raise ValueError(f"intermediate codewords need k >= 1, got {k}")
    prev = result_row(as_digit_string(x), k - 1)
    # parity(a // 2) is bit 1 of a; parity(5 * (a % 2)) is bit 0
    return "".join(("1" if a & 2 else "0") + ("1" if a & 1 else "0") for a in prev)


def level_for_length(length: int, t: int) -> int:
    """Halving level whose codewords for a ``t``-digit number have ``length`` bits."""
    if length < t:
        raise ValueError(f"length {length} is shorter than the {t} input digits")
    return length - t


def permutation_family(
    digit_set: Iterable[int], allow_large: bool = False
) -> list[DigitString]:
    """All orderings of ``digit_set`` in lexicographic order.

    Orderings starting with 0 are kept as full-length digit strings.
    """
    digits = sorted(digit_set)
    if not digits:
        raise FamilyError("empty digit set")
    if any(type(v) is not int or not 0 <= v <= 9 for v in digits):
        raise FamilyError(f"digits must be 0..9: {digits}")
    if len(set(digits)) != len(digits):
        raise FamilyError(f"digits must be pairwise distinct: {digits}")
    if len(digits) > MAX_FAMILY_DIGITS and not allow_large:
        raise FamilyError(
            f"{len(digits)} digits give {factorial(len(digits))} members; "
            "pass allow_large=True to proceed"
        )
    return [DigitString._trusted(p) for p in permutations(digits)]


def parse_digit_set(text: str) -> list[int]:
    """Parse ``"2,5,6"`` into ``[2, 5, 6]``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(len(p) != 1 or not "0" <= p <= "9" for p in parts):
        raise FamilyError(f"expected comma-separated digits, got {text!r}")
    return [int(p) for p in parts]


@dataclass(frozen=True)
class Code:
    words: tuple[BitString, ...]
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not self.words:
            raise ValueError("a code needs at least one word")
        n = len(self.words[0])
        if any(len(w) != n for w in self.words):
            raise ValueError("codewords must all have the same length")
        if self.labels and len(self.labels) != len(self.words):
            raise ValueError("one label per codeword")

    @property
    def n(self) -> int:
        return len(self.words[0])

    @property
    def M(self) -> int:
        return len(self.words)

    @property
    def has_duplicates(self) -> bool:
        return len(set(self.words)) != len(self.words)

    def duplicate_pairs(self) -> list[tuple[int, int]]:
        """Index pairs ``(i, j)``, ``i < j``, of identical words."""
        return [
            (i, j)
            for (i, a), (j, b) in combinations(enumerate(self.words), 2)
            if a == b
        ]


@dataclass(frozen=True)
class CodeParams:
    n: int
    M: int
    d: int
    k0: int = 0
    degenerate: bool = False
    has_duplicates: bool = False

    def __str__(self) -> str:
        text = f"n={self.n} M={self.M} d={self.d} k0={self.k0}"
        if self.degenerate:
            text += " degenerate"
        if self.has_duplicates:
            text += " duplicates"
        return text


class SeriesRecord(NamedTuple):
    k: int
    raw_n: int
    k0: int
    n: int
    d: int


class Collision(NamedTuple):
    k: int
    x: str
    y: str


@dataclass
class ScanReport:
    digit_set: tuple[int, ...]
    k_from: int
    k_to: int
    collisions: list[Collision] = field(default_factory=list)
    records: list[SeriesRecord] = field(default_factory=list)

    @property
    def collision_free(self) -> bool:
        return not self.collisions


def family_codes(
    digit_set: Iterable[int], k_from: int, k_to: int, allow_large: bool = False
) -> Iterator[tuple[int, Code]]:
    """``(k, code)`` for each level in ``k_from..k_to``; rows are advanced
    incrementally rather than recomputed per level."""
    if k_from < 0:
        raise ValueError(f"k_from must be >= 0, got {k_from}")
    members = permutation_family(digit_set, allow_large=allow_large)
    return codes_for_numbers(members, k_from, k_to)


def codes_for_numbers(
    numbers: Sequence[DigitString | str], k_from: int, k_to: int
) -> Iterator[tuple[int, Code]]:
    """Level codes for an arbitrary list of equal-length numbers."""
    members = [as_digit_string(x) for x in numbers]
    if not members:
        raise ValueError("no numbers given")
    if len({len(x) for x in members}) != 1:
        raise ValueError("all numbers must have the same digit count")
    if k_from < 0:
        raise ValueError(f"k_from must be >= 0, got {k_from}")
    labels = tuple(str(x) for x in members)
    rows: list[Sequence[int]] = [result_row(x, k_from) for x in members]
    for k in range(k_from, k_to + 1):
        if k > k_from:
            rows = [next_row(r) for r in rows]
        yield k, Code(tuple(parity_bits(r) for r in rows), labels)


def family_code(digit_set: Iterable[int], k: int, allow_large: bool = False) -> Code:
    return next(family_codes(digit_set, k, k, allow_large=allow_large))[1]


def leading_zeros(word: BitString) -> int:
    return len(word) - len(word.lstrip("0"))


def strip_common_leading_zeros(code: Code) -> tuple[Code, int]:
    k0 = min(leading_zeros(w) for w in code.words)
    return Code(tuple(w[k0:] for w in code.words), code.labels), k0


def hamming(a: BitString, b: BitString) -> int:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return sum(1 for p, q in zip(a, b) if p != q)


def weight(word: BitString) -> int:
    return word.count("1")


def xor_words(a: BitString, b: BitString) -> BitString:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")
    return "".join("0" if p == q else "1" for p, q in zip(a, b))


def minimum_distance(words: Sequence[BitString]) -> int:
    # words are packed into ints so large-k scans stay fast
    values = [int(w, 2) if w else 0 for w in words]
    return min((p ^ q).bit_count() for p, q in combinations(values, 2))


def code_params(code: Code, k0: int = 0) -> CodeParams:
    """``(n, M, d)`` of ``code``.

    A singleton code has no pairs; its ``d`` is reported as ``n`` and the
    result is flagged ``degenerate``.  Duplicate words force ``d = 0``.
    """
    if code.M == 1:
        return CodeParams(code.n, 1, code.n, k0, degenerate=True)
    dup = code.has_duplicates
    d = 0 if dup else minimum_distance(code.words)
    return CodeParams(code.n, code.M, d, k0, degenerate=code.n == 0, has_duplicates=dup)


def stripped_params(code: Code) -> CodeParams:
    stripped, k0 = strip_common_leading_zeros(code)
    return code_params(stripped, k0)


def _collisions(k: int, code: Code) -> list[Collision]:
    labels = code.labels or tuple(str(i) for i in range(code.M))
    return [Collision(k, labels[i], labels[j]) for i, j in code.duplicate_pairs()]


def _record(k: int, code: Code) -> SeriesRecord:
    p = stripped_params(code)
    return SeriesRecord(k, code.n, p.k0, p.n, p.d)


def conjecture_scan(
    digit_set: Iterable[int], k_from: int, k_to: int, allow_large: bool = False
) -> ScanReport:
    """Look for identical codewords inside one permutation family, level by level."""
    digit_set = tuple(digit_set)
    report = ScanReport(tuple(sorted(digit_set)), k_from, k_to)
    for k, code in family_codes(digit_set, k_from, k_to, allow_large=allow_large):
        report.collisions.extend(_collisions(k, code))
        report.records.append(_record(k, code))
    return report


def scan_numbers(numbers: Sequence[DigitString | str], k_from: int, k_to: int) -> ScanReport:
    """Collision scan over any set of equal-length numbers, e.g. several
    families at once."""
    report = ScanReport((), k_from, k_to)
    for k, code in codes_for_numbers(numbers, k_from, k_to):
        report.collisions.extend(_collisions(k, code))
        report.records.append(_record(k, code))
    return report


def distance_series(
    digit_set: Iterable[int], k_from: int, k_to: int, allow_large: bool = False
) -> list[SeriesRecord]:
    if k_from < 1:
        raise ValueError(f"k_from must be >= 1, got {k_from}")
    return [
        _record(k, code)
        for k, code in family_codes(digit_set, k_from, k_to, allow_large=allow_large)
    ]


def offset_histogram(series: Iterable[SeriesRecord]) -> list[tuple[int, int]]:
    """Count of levels per ``d - n // 2`` offset, sorted by offset."""
    counts = Counter(rec.d - rec.n // 2 for rec in series)
    return sorted(counts.items())


def xor_series(
    x: DigitString | str, y: DigitString | str, k_from: int, k_to: int
) -> list[BitString]:
    x, y = as_digit_string(x), as_digit_string(y)
    if len(x) != len(y):
        raise ValueError(f"digit counts differ: {len(x)} != {len(y)}")
    if k_from < 1:
        raise ValueError(f"k_from must be >= 1, got {k_from}")
    return [
        xor_words(code.words[0], code.words[1])
        for _, code in codes_for_numbers([x, y], k_from, k_to)
    ]

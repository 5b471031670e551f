"""Digit-wise halving.

Every digit ``a`` splits into a floor half ``b = a // 2`` and a fraction
marker ``t = 5 * (a % 2)``.  The quotient digits are then formed locally,
``c_j = b_{j-1} + t_j``, with ``c_n = b_{n-1}`` on the left and ``c_0 = t_0``
after the decimal point.  Since ``b <= 4`` and ``t`` is 0 or 5, no carries are
ever needed.

Read as an integer, the output row is ``5 * x`` (the quotient with the decimal
point dropped).  Repeating the step ``r`` times on a ``d``-digit string gives a
``(d + r)``-digit string worth ``5**r * x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence


class DigitParseError(ValueError):
    """Raised when text cannot be read as a string of decimal digits."""


class DigitString(tuple):
    """Immutable sequence of decimal digits, most significant first.

    Leading zeros are kept, so ``DigitString((0, 0, 7))`` has length 3.
    Compares equal to a plain tuple with the same digits.
    """

    __slots__ = ()

    def __new__(cls, digits: Iterable[int] = ()) -> "DigitString":
        self = super().__new__(cls, digits)
        if not self:
            raise ValueError("a digit string needs at least one digit")
        for v in self:
            if type(v) is not int or not 0 <= v <= 9:
                raise ValueError(f"not a decimal digit: {v!r}")
        return self

    @classmethod
    def _trusted(cls, digits: Iterable[int]) -> "DigitString":
        # skips validation; callers guarantee 0..9 ints
        return tuple.__new__(cls, digits)

    @property
    def value(self) -> int:
        return digit_string_value(self)

    def __str__(self) -> str:
        return "".join(map(str, self))

    def __repr__(self) -> str:
        return f"DigitString('{self}')"


class HalvingStep(NamedTuple):
    b: int
    t: int


@dataclass(frozen=True)
class HalvingTrace:
    """One application of the halving step.

    ``steps[i]`` belongs to ``input[i]``; ``result`` has one more digit than
    ``input``, the last one being the digit after the decimal point.
    """

    input: DigitString
    steps: tuple[HalvingStep, ...]
    result: DigitString


def parse_digit_string(text: str) -> DigitString:
    if not text:
        raise DigitParseError("empty digit string")
    # str.isdigit accepts superscripts and other scripts' digits
    if not all("0" <= ch <= "9" for ch in text):
        raise DigitParseError(f"not a decimal digit string: {text!r}")
    return DigitString._trusted(ord(ch) - 48 for ch in text)


def as_digit_string(x: "DigitString | str | Sequence[int]") -> DigitString:
    """Coerce text or an int sequence to a :class:`DigitString`."""
    if isinstance(x, DigitString):
        return x
    if isinstance(x, str):
        return parse_digit_string(x)
    return DigitString(x)


def halve_step(a: int) -> HalvingStep:
    return HalvingStep(a >> 1, 5 * (a & 1))


def next_row(row: Sequence[int]) -> list[int]:
    """Result digits of one halving of ``row``, without the trace."""
    return (
        [row[0] >> 1]
        + [5 * (left & 1) + (here >> 1) for left, here in zip(row, row[1:])]
        + [5 * (row[-1] & 1)]
    )


def halve(x: DigitString) -> HalvingTrace:
    steps = tuple(HalvingStep(a >> 1, 5 * (a & 1)) for a in x)
    result = [steps[0].b]
    for left, here in zip(steps, steps[1:]):
        result.append(here.b + left.t)
    result.append(steps[-1].t)
    return HalvingTrace(x, steps, DigitString._trusted(result))


def iter_rows(x: DigitString, k: int) -> Iterator[DigitString]:
    """Yield result rows 0..k (row 0 is ``x`` itself)."""
    row: Sequence[int] = x
    yield x
    for _ in range(k):
        row = next_row(row)
        yield DigitString._trusted(row)


def result_row(x: DigitString, r: int) -> DigitString:
    """Row ``r`` of the repeated halving of ``x``; ``d + r`` digits."""
    if r < 0:
        raise ValueError(f"row index must be >= 0, got {r}")
    row: Sequence[int] = x
    for _ in range(r):
        row = next_row(row)
    return DigitString._trusted(row)


def format_quotient(trace: HalvingTrace) -> str:
    digits = str(trace.result)
    return f"{digits[:-1]}.{digits[-1]}"


def digit_string_value(x: Sequence[int]) -> int:
    if not x:
        return 0
    return int("".join(map(str, x)))

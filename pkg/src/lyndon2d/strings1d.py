"""One-dimensional primitives: smallest periods, least rotations, row naming.

A periodic row is summarized by three values: the length of its smallest
period, the lexicographically least rotation of that period (a Lyndon word,
interned to a dense integer id), and the offset at which that rotation first
occurs in the row.  Everything downstream works on these summaries instead
of the characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, NotLyndon, NotPrimitive, NotSufficientlyPeriodic


def border_array(s: str) -> list[int]:
    """Failure function: border[i] is the longest proper border of s[:i+1]."""
    border = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = border[k - 1]
        if s[i] == s[k]:
            k += 1
        border[i] = k
    return border


def compute_period(s: str) -> int:
    """Length of the smallest period of s; len(s) when s is unbordered.

    The period p is the smallest positive value with s[j] == s[j + p] for
    every valid j; it need not divide len(s).
    """
    if not s:
        raise InvalidInput("empty string has no period")
    return len(s) - border_array(s)[-1]


def is_primitive(s: str) -> bool:
    """True iff s is not an integer power of a shorter string."""
    if not s:
        raise InvalidInput("empty string is not classified")
    p = compute_period(s)
    return p == len(s) or len(s) % p != 0


def _booth(s: str) -> int:
    # Booth's least-rotation scan over s+s with an incremental failure table.
    doubled = s + s
    fail = [-1] * len(doubled)
    k = 0
    for j in range(1, len(doubled)):
        c = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and c != doubled[k + i + 1]:
            if c < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if c != doubled[k + i + 1]:
            if c < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % len(s)


def least_rotation(s: str) -> tuple[int, str]:
    """Offset and value of the lexicographically least rotation of s.

    Requires s primitive, so the least rotation is unique and the returned
    word is a Lyndon word.  Runs in linear time.
    """
    if not s:
        raise InvalidInput("empty string has no rotations")
    if not is_primitive(s):
        raise NotPrimitive(f"{s!r} is a proper power")
    k = _booth(s)
    return k, s[k:] + s[:k]


def is_lyndon(s: str) -> bool:
    """True iff s is primitive and no rotation of it is strictly smaller."""
    if not s:
        raise InvalidInput("empty string is not classified")
    return is_primitive(s) and _booth(s) == 0


class NameRegistry:
    """Bidirectional interning of Lyndon words as dense integer ids.

    Build single-writer, then treat as immutable: ids are stable for the
    registry's lifetime and the frozen registry may be shared across
    threads.  Only Lyndon words may be interned.
    """

    def __init__(self) -> None:
        self._id_by_word: dict[str, int] = {}
        self._word_by_id: list[str] = []

    def __len__(self) -> int:
        return len(self._word_by_id)

    def __contains__(self, word: str) -> bool:
        return word in self._id_by_word

    def intern(self, word: str) -> int:
        """Return the id for a Lyndon word, allocating one on first sight."""
        existing = self._id_by_word.get(word)
        if existing is not None:
            return existing
        if not is_lyndon(word):
            raise NotLyndon(f"{word!r} is not a Lyndon word")
        new_id = len(self._word_by_id)
        self._id_by_word[word] = new_id
        self._word_by_id.append(word)
        return new_id

    def get(self, word: str) -> int | None:
        """Id of an already interned word, or None.  Never interns."""
        return self._id_by_word.get(word)

    def word(self, name_id: int) -> str:
        """The Lyndon word stored under a dense id."""
        return self._word_by_id[name_id]


@dataclass(frozen=True)
class RowSummary:
    """Per-row classification: period length, Lyndon offset, class id, width."""

    period: int
    lwpos: int
    name: int
    width: int

    def __post_init__(self) -> None:
        if self.period < 1 or not 0 <= self.lwpos < self.period:
            raise InvalidInput(f"offset {self.lwpos} outside [0, {self.period})")
        if 2 * self.period > self.width:
            raise InvalidInput(
                f"period {self.period} exceeds half of width {self.width}"
            )


def summarize_row(
    s: str,
    registry: NameRegistry,
    max_period_fraction: Fraction | int | float | str = Fraction(1, 2),
) -> RowSummary:
    """Classify a periodic string by the Lyndon conjugate of its period.

    ``max_period_fraction`` bounds the admissible period relative to len(s):
    1/2 is the widest supported contract, the matching applications pass
    1/4.  The returned ``lwpos`` is both the least-rotation offset of the
    period prefix and the first start of the Lyndon word in ``s``.
    """
    if not s:
        raise InvalidInput("cannot summarize an empty row")
    limit = Fraction(max_period_fraction)
    if not 0 < limit <= Fraction(1, 2):
        raise InvalidInput(f"max_period_fraction must be in (0, 1/2], got {limit}")
    period = compute_period(s)
    if period > limit * len(s):
        raise NotSufficientlyPeriodic(
            f"period {period} exceeds {limit} of width {len(s)}", period=period
        )
    lwpos, word = least_rotation(s[:period])
    return RowSummary(period=period, lwpos=lwpos, name=registry.intern(word), width=len(s))

"""Whole-matrix classification and constant-time horizontal overlap queries.

Two matrices land in the same class exactly when their horizontal
repetitions differ only by a whole-column rotation.  A classified matrix is
identified by its row class ids plus the canonical offset array, and carries
the shift z of the canonical conjugate; overlap and conjugacy queries then
reduce to a constant amount of big-integer arithmetic on z values.
"""

from __future__ import annotations

import hashlib
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidInput, InvalidQuery, NotSufficientlyPeriodic
from .lw2d import DEFAULT_CAP, SummaryColumn, alg1_2dlw, alg2_2dlw, naive_2dlw
from .strings1d import NameRegistry, summarize_row


@dataclass(frozen=True)
class MatrixClassKey:
    """Equivalence-class identity: row class ids plus canonical offsets."""

    names: tuple[int, ...]
    offsets: tuple[int, ...]

    @property
    def digest64(self) -> int:
        """Stable 64-bit digest for use as an external map key.

        Collisions are possible in principle; ``==`` on the full key stays
        the source of truth.
        """
        blob = repr((self.names, self.offsets)).encode()
        return int.from_bytes(hashlib.blake2b(blob, digest_size=8).digest(), "big")


@dataclass(frozen=True)
class ClassifiedMatrix:
    """Succinct matrix identity: class key plus the canonical shift z.

    ``fraction`` and ``registry`` record how the matrix was classified;
    queries refuse to compare matrices classified under different settings.
    """

    key: MatrixClassKey
    z: int
    lcm: int
    rows: int
    width: int
    fraction: Fraction
    registry: NameRegistry


def summarize_matrix(
    rows: Sequence[str],
    fraction: Fraction | int | float | str,
    registry: NameRegistry,
) -> SummaryColumn:
    """Summary column for a rectangular matrix; errors carry the offending row."""
    if not rows:
        raise InvalidInput("matrix has no rows")
    width = len(rows[0])
    if width == 0 or any(len(r) != width for r in rows):
        raise InvalidInput("rows must share one positive width")
    summaries = []
    for idx, row in enumerate(rows):
        try:
            summaries.append(summarize_row(row, registry, fraction))
        except NotSufficientlyPeriodic as exc:
            raise NotSufficientlyPeriodic(
                f"row {idx}: {exc}", period=exc.period, row=idx
            ) from None
    return SummaryColumn.from_rows(summaries)


def classify_matrix(
    rows: Sequence[str],
    fraction: Fraction | int | float | str,
    registry: NameRegistry | None = None,
    *,
    algorithm: str = "alg2",
    cap: int = DEFAULT_CAP,
) -> ClassifiedMatrix:
    """Classify a matrix into its horizontal conjugacy class.

    Matrices meant to be compared afterwards must be classified against the
    same registry and the same fraction.  ``fraction`` caps each row's
    period relative to the width: 1/2 is the widest contract, overlap
    queries need 1/4 or less.
    """
    reg = registry if registry is not None else NameRegistry()
    frac = Fraction(fraction)
    col = summarize_matrix(rows, frac, reg)
    if algorithm == "alg2":
        word = alg2_2dlw(col)
    elif algorithm == "alg1":
        word = alg1_2dlw(col)
    elif algorithm == "naive":
        word = naive_2dlw(col, cap=cap)
    else:
        raise InvalidInput(f"unknown algorithm {algorithm!r}")
    assert col.names is not None
    return ClassifiedMatrix(
        key=MatrixClassKey(col.names, word.offsets),
        z=word.z,
        lcm=word.lcm,
        rows=col.m,
        width=len(rows[0]),
        fraction=frac,
        registry=reg,
    )


def _check_comparable(a: ClassifiedMatrix, b: ClassifiedMatrix, *, require_width: bool) -> None:
    if a.rows != b.rows:
        raise InvalidQuery(f"row counts differ: {a.rows} vs {b.rows}")
    if require_width and a.width != b.width:
        raise InvalidQuery(f"widths differ: {a.width} vs {b.width}")
    if a.registry is not b.registry:
        raise InvalidQuery("matrices were classified against different registries")
    if a.fraction != b.fraction:
        raise InvalidQuery("matrices were classified with different period fractions")


def conjugacy_shift(a: ClassifiedMatrix, b: ClassifiedMatrix) -> int | None:
    """Column rotation of a's repetition that yields b's, or None.

    Returns the unique c in [0, lcm) such that rotating a's horizontal
    repetition left by c columns gives b's; None when the matrices are in
    different classes.
    """
    _check_comparable(a, b, require_width=False)
    if a.key != b.key:
        return None
    return (a.z - b.z) % a.lcm


def longest_suffix_prefix(a: ClassifiedMatrix, b: ClassifiedMatrix) -> int | None:
    """Widest suffix of a's columns equal to a prefix of b's, if at least half the width.

    Answered with a constant number of big-integer operations and no access
    to matrix characters.  Overlaps narrower than ceil(width/2) columns are
    out of contract and report None.  Any classification fraction works:
    an overlap of at least half the width always spans a full period of
    every row, which is what the class-and-shift argument needs.
    """
    _check_comparable(a, b, require_width=True)
    if a.key != b.key:
        return None
    shift = (a.z - b.z) % a.lcm
    if shift > a.width // 2:
        return None
    return a.width - shift

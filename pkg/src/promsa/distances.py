"""Jukes-Cantor evolutionary distances assembled into a distance matrix.

Distances are computed from Needleman-Wunsch alignments of each sequence
pair. Columns containing a gap are excluded from the site counts, and the
substitution fraction feeds the Jukes-Cantor correction. Fractions at or
beyond the model's 3/4 ceiling are clamped to a configurable maximum and
flagged as saturated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .pairwise import PairwiseAlignment, ScoringScheme, align_global
from .sequences import GAP, Sequence

DEFAULT_D_MAX = 10.0

SATURATION_P = 0.75


@dataclass(frozen=True)
class MatchStats:
    """Match/mismatch counts over the gap-free columns of a pair."""

    matches: int
    mismatches: int
    comparable_columns: int

    def __post_init__(self):
        if self.matches < 0 or self.mismatches < 0:
            raise ValueError("counts must be nonnegative")
        if self.matches + self.mismatches != self.comparable_columns:
            raise ValueError("matches + mismatches must equal comparable_columns")

    @property
    def mismatch_fraction(self) -> float:
        if self.comparable_columns == 0:
            raise ValueError("no comparable columns")
        return self.mismatches / self.comparable_columns


class JukesCantorResult(NamedTuple):
    value: float
    saturated: bool


def column_stats(alignment: PairwiseAlignment) -> MatchStats:
    """Count matches and mismatches over columns where neither row has a gap."""
    matches = 0
    mismatches = 0
    for x, y in zip(alignment.row_a.residues, alignment.row_b.residues):
        if x == GAP or y == GAP:
            continue
        if x == y:
            matches += 1
        else:
            mismatches += 1
    if matches + mismatches == 0:
        raise ValueError("alignment has no gap-free columns to compare")
    return MatchStats(matches, mismatches, matches + mismatches)


def jukes_cantor(stats: MatchStats, d_max: float = DEFAULT_D_MAX) -> JukesCantorResult:
    """Jukes-Cantor distance from pairwise site counts.

    With p the mismatch fraction over comparable columns, the distance is
    -(3/4) * ln(1 - (4/3) * p). For p >= 3/4 the formula is undefined, so
    the result is clamped to ``d_max`` and flagged saturated.
    """
    p = stats.mismatch_fraction
    if p >= SATURATION_P:
        return JukesCantorResult(d_max, True)
    return JukesCantorResult(-0.75 * math.log(1.0 - (4.0 / 3.0) * p), False)


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric nonnegative distances over named taxa, zero diagonal."""

    taxa: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        n = len(self.taxa)
        if len(set(self.taxa)) != n:
            raise ValueError("taxa ids must be distinct")
        if self.values.shape != (n, n):
            raise ValueError(f"expected a {n}x{n} matrix, got {self.values.shape}")
        if not np.all(np.isfinite(self.values)):
            raise ValueError("distances must be finite")
        if np.any(self.values < 0):
            raise ValueError("distances must be nonnegative")
        if np.any(np.diag(self.values) != 0):
            raise ValueError("diagonal must be zero")
        if not np.array_equal(self.values, self.values.T):
            raise ValueError("matrix must be symmetric")
        self.values.setflags(write=False)

    @property
    def size(self) -> int:
        return len(self.taxa)

    def between(self, taxon_a: str, taxon_b: str) -> float:
        i = self.taxa.index(taxon_a)
        j = self.taxa.index(taxon_b)
        return float(self.values[i, j])

    def to_csv(self) -> str:
        lines = ["taxon," + ",".join(self.taxa)]
        for name, row in zip(self.taxa, self.values):
            lines.append(name + "," + ",".join(f"{v:.6f}" for v in row))
        return "\n".join(lines) + "\n"


def pairwise_distance_matrix(
    seqs: list[Sequence] | tuple[Sequence, ...],
    s: ScoringScheme | None = None,
    d_max: float = DEFAULT_D_MAX,
) -> DistanceMatrix:
    """Jukes-Cantor distances for every unordered pair of input sequences.

    Each pair is aligned with ``align_global`` under the given scoring
    scheme before its sites are counted. Errors from the per-pair steps
    are re-raised with the offending pair named.
    """
    if len(seqs) < 2:
        raise ValueError("need at least two sequences")
    ids = [s_.id for s_ in seqs]
    if len(set(ids)) != len(ids):
        raise ValueError("sequence ids must be distinct")
    for seq in seqs:
        if not seq.is_gapless:
            raise ValueError(f"sequence {seq.id!r} contains gaps")

    s = s if s is not None else ScoringScheme()
    n = len(seqs)
    values = np.zeros((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            try:
                alignment = align_global(seqs[i], seqs[j], s)
                d = jukes_cantor(column_stats(alignment), d_max).value
            except ValueError as err:
                raise ValueError(f"pair ({ids[i]}, {ids[j]}): {err}") from err
            values[i, j] = values[j, i] = d
    return DistanceMatrix(tuple(ids), values)

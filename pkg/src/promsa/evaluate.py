"""Sum-of-pairs evaluation of a finished alignment.

Two complementary views: a distance-style total cost (lower is better)
and a score under the alignment's own match/mismatch/gap scheme (higher
is better). Both iterate row pairs in a fixed order so totals are
bit-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .pairwise import ScoringScheme, score_columns
from .sequences import GAP, Msa


@dataclass(frozen=True)
class CostScheme:
    """Per-column pair costs: match and gap-gap are free, mismatches and
    residue-against-gap columns pay the configured nonnegative amounts."""

    mismatch_cost: float = 1.0
    gap_letter_cost: float = 1.0

    def __post_init__(self):
        if self.mismatch_cost < 0 or self.gap_letter_cost < 0:
            raise ValueError("costs must be nonnegative")


def sp_total_cost(msa: Msa, costs: CostScheme | None = None) -> float:
    """Total cost summed over all unordered row pairs and all columns."""
    costs = costs if costs is not None else CostScheme()
    total = 0.0
    for row_a, row_b in combinations(msa.rows, 2):
        for x, y in zip(row_a.residues, row_b.residues):
            if x == y:
                if x != GAP:
                    continue
            elif x == GAP or y == GAP:
                total += costs.gap_letter_cost
            else:
                total += costs.mismatch_cost
    return total


def sp_score(msa: Msa, s: ScoringScheme | None = None) -> int:
    """Sum-of-pairs score under a match/mismatch/gap scheme.

    Gap-gap columns contribute zero, so for a two-row alignment produced
    by the global aligner this equals the pairwise alignment score.
    """
    s = s if s is not None else ScoringScheme()
    return sum(
        score_columns(row_a.residues, row_b.residues, s)
        for row_a, row_b in combinations(msa.rows, 2)
    )

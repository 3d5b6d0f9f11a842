"""Needleman-Wunsch global alignment under a linear match/mismatch/gap scheme.

All functions are pure; matrices are per-call values, so any number of
alignments may run concurrently.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .sequences import GAP, Msa, Sequence

# Traceback move codes, in alignment order: D consumes a residue from both
# inputs, U consumes from the first only, L from the second only.
DIAG, UP, LEFT = "D", "U", "L"


@dataclass(frozen=True)
class ScoringScheme:
    """Integer match/mismatch/gap scores. Defaults: 3 / 0 / -1."""

    match_score: int = 3
    mismatch_score: int = 0
    gap_penalty: int = -1

    def __post_init__(self):
        for name in ("match_score", "mismatch_score", "gap_penalty"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{name} must be an integer, got {value!r}")
        if self.match_score < self.mismatch_score:
            warnings.warn(
                "match_score is below mismatch_score; alignments will favor mismatches",
                stacklevel=2,
            )


@dataclass(frozen=True)
class DpMatrix:
    """The (m+1) x (n+1) global-alignment score grid."""

    cells: tuple[tuple[int, ...], ...]

    @property
    def corner(self) -> int:
        return self.cells[-1][-1]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.cells), len(self.cells[0]))


@dataclass(frozen=True)
class PairwiseAlignment:
    """Two equal-length gapped rows plus their alignment score."""

    row_a: Sequence
    row_b: Sequence
    score: int

    def __post_init__(self):
        if len(self.row_a) != len(self.row_b):
            raise ValueError("alignment rows differ in length")

    @property
    def width(self) -> int:
        return len(self.row_a)

    def to_msa(self) -> Msa:
        return Msa((self.row_a, self.row_b))


def _fill(a: str, b: str, s: ScoringScheme) -> list[list[int]]:
    match, mismatch, gap = s.match_score, s.mismatch_score, s.gap_penalty
    m, n = len(a), len(b)
    rows = [[0] * (n + 1) for _ in range(m + 1)]
    rows[0] = [j * gap for j in range(n + 1)]
    for i in range(1, m + 1):
        prev = rows[i - 1]
        cur = rows[i]
        cur[0] = i * gap
        ai = a[i - 1]
        for j in range(1, n + 1):
            diag = prev[j - 1] + (match if ai == b[j - 1] else mismatch)
            up = prev[j] + gap
            left = cur[j - 1] + gap
            best = diag
            if up > best:
                best = up
            if left > best:
                best = left
            cur[j] = best
    return rows


def build_dp_matrix(a: Sequence | str, b: Sequence | str, s: ScoringScheme) -> DpMatrix:
    """Fill the global-alignment score grid for two gapless sequences.

    Cell (i, j) holds the optimal score for aligning the first i residues
    of ``a`` with the first j residues of ``b``; the corner cell is the
    optimal global alignment score.
    """
    sa = _residues(a, "a")
    sb = _residues(b, "b")
    return DpMatrix(tuple(tuple(row) for row in _fill(sa, sb, s)))


def align_strings(a: str, b: str, s: ScoringScheme) -> tuple[int, str]:
    """Optimal global alignment of two symbol strings, as a move string.

    Symbols are compared for equality only, so gapped consensus strings may
    be aligned with the gap glyph acting as an ordinary fifth letter.
    Returns (score, moves) with moves over ``D``/``U``/``L`` in alignment
    order. Ties are broken at the earliest alignment column, preferring
    D, then U, then L, which makes the result deterministic.
    """
    gap = s.gap_penalty
    ra, rb = a[::-1], b[::-1]
    grid = _fill(ra, rb, s)
    score = grid[len(a)][len(b)]
    # Walking the reversed grid from its corner decides the first column of
    # the forward alignment first, so moves come out already in order.
    moves: list[str] = []
    i, j = len(a), len(b)
    while i > 0 or j > 0:
        cell = grid[i][j]
        if i > 0 and j > 0 and cell == grid[i - 1][j - 1] + (
            s.match_score if ra[i - 1] == rb[j - 1] else s.mismatch_score
        ):
            moves.append(DIAG)
            i -= 1
            j -= 1
        elif i > 0 and cell == grid[i - 1][j] + gap:
            moves.append(UP)
            i -= 1
        else:
            moves.append(LEFT)
            j -= 1
    return score, "".join(moves)


def expand_by_moves(residues: str, moves: str, consume: str) -> str:
    """Project a string onto alignment columns, inserting gaps elsewhere.

    ``consume`` names the moves that take the next residue; every other
    move contributes a gap symbol.
    """
    out: list[str] = []
    pos = 0
    for move in moves:
        if move in consume:
            out.append(residues[pos])
            pos += 1
        else:
            out.append(GAP)
    if pos != len(residues):
        raise ValueError("move string does not consume the whole sequence")
    return "".join(out)


def align_global(
    a: Sequence | str, b: Sequence | str, s: ScoringScheme | None = None
) -> PairwiseAlignment:
    """Globally align two gapless sequences.

    Either input may be an empty string (but not both). The score equals
    the corner cell of ``build_dp_matrix`` and is reproduced by rescoring
    the output columns.
    """
    s = s if s is not None else ScoringScheme()
    id_a, sa, desc_a = _parts(a, "a")
    id_b, sb, desc_b = _parts(b, "b")
    if not sa and not sb:
        raise ValueError("cannot align two empty sequences")
    score, moves = align_strings(sa, sb, s)
    row_a = Sequence(id_a, expand_by_moves(sa, moves, DIAG + UP), desc_a)
    row_b = Sequence(id_b, expand_by_moves(sb, moves, DIAG + LEFT), desc_b)
    return PairwiseAlignment(row_a, row_b, score)


def score_columns(a: str, b: str, s: ScoringScheme) -> int:
    """Column-wise score of two equal-length gapped rows.

    Gap-against-gap columns contribute zero; a residue against a gap costs
    the gap penalty.
    """
    if len(a) != len(b):
        raise ValueError("rows differ in length")
    total = 0
    for x, y in zip(a, b):
        if x == GAP and y == GAP:
            continue
        if x == GAP or y == GAP:
            total += s.gap_penalty
        elif x == y:
            total += s.match_score
        else:
            total += s.mismatch_score
    return total


def _parts(seq: Sequence | str, fallback_id: str) -> tuple[str, str, str]:
    if isinstance(seq, Sequence):
        if not seq.is_gapless:
            raise ValueError(f"sequence {seq.id!r} contains gaps")
        return seq.id, seq.residues, seq.description
    if GAP in seq or "-" in seq:
        raise ValueError("input string contains gaps")
    return fallback_id, seq, ""


def _residues(seq: Sequence | str, fallback_id: str) -> str:
    return _parts(seq, fallback_id)[1]

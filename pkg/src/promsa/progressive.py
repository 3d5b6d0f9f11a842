"""Progressive alignment pipeline: distances, guide tree, ordered merging.

The merge stage folds over the guide tree's own join log: a leaf-leaf
join runs the pairwise aligner, a group-leaf join aligns the newcomer to
the group's consensus, and a group-group join aligns the two consensus
sequences, propagating inserted gaps into the owning groups. Each stage
is timed with a monotonic clock and reported in whole milliseconds.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .distances import DEFAULT_D_MAX, DistanceMatrix, pairwise_distance_matrix
from .evaluate import CostScheme, sp_score, sp_total_cost
from .guide_tree import GuideTree, Merge, nj_build, upgma_build
from .pairwise import ScoringScheme, align_global
from .profiles import TieBreak, align_profile_to_profile, align_sequence_to_profile
from .sequences import Msa, Sequence

GUIDE_METHODS = ("upgma", "nj")


class PipelineError(RuntimeError):
    """Failure inside a named pipeline stage."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage} stage failed: {cause}")
        self.stage = stage
        self.cause = cause


@dataclass(frozen=True)
class PipelineConfig:
    guide_method: str = "upgma"
    scoring: ScoringScheme = field(default_factory=ScoringScheme)
    tie: TieBreak = field(default_factory=TieBreak)
    d_max: float = DEFAULT_D_MAX

    def __post_init__(self):
        if self.guide_method not in GUIDE_METHODS:
            raise ValueError(f"guide_method must be one of {GUIDE_METHODS}")


@dataclass(frozen=True)
class StageTimings:
    distance_ms: int
    tree_ms: int
    merge_ms: int
    total_ms: int


@dataclass(frozen=True)
class PipelineReport:
    distance_matrix: DistanceMatrix
    guide_tree: GuideTree
    msa: Msa
    total_cost: float
    sp_score: int
    timings: StageTimings


def merge_schedule(tree: GuideTree) -> tuple[Merge, ...]:
    """Joins in merge-log order; operand ids below the leaf count are
    input sequences, larger ids refer to previously built groups."""
    return tree.merge_log


def _ms(start_ns: int, end_ns: int) -> int:
    return (end_ns - start_ns) // 1_000_000


def progressive_align(
    seqs: list[Sequence] | tuple[Sequence, ...], cfg: PipelineConfig | None = None
) -> PipelineReport:
    """Run the full pipeline over gapless input sequences.

    The final alignment's rows are reordered to the input order. Errors
    are re-raised as PipelineError naming the failing stage.
    """
    cfg = cfg if cfg is not None else PipelineConfig()
    seqs = tuple(seqs)
    if len(seqs) < 2:
        raise ValueError("need at least two sequences")
    ids = [s.id for s in seqs]
    if len(set(ids)) != len(ids):
        raise ValueError("sequence ids must be distinct")
    for seq in seqs:
        if not seq.is_gapless:
            raise ValueError(f"sequence {seq.id!r} contains gaps")
    tie = cfg.tie.fresh()

    start_ns = time.monotonic_ns()
    try:
        matrix = pairwise_distance_matrix(seqs, cfg.scoring, cfg.d_max)
    except Exception as err:
        raise PipelineError("distance", err) from err
    distance_ns = time.monotonic_ns()

    try:
        build = upgma_build if cfg.guide_method == "upgma" else nj_build
        tree = build(matrix)
    except Exception as err:
        raise PipelineError("tree", err) from err
    tree_ns = time.monotonic_ns()

    try:
        groups: dict[int, Sequence | Msa] = dict(enumerate(seqs))
        for step in merge_schedule(tree):
            left = groups.pop(step.left)
            right = groups.pop(step.right)
            if isinstance(left, Sequence) and isinstance(right, Sequence):
                merged = align_global(left, right, cfg.scoring).to_msa()
            elif isinstance(left, Msa) and isinstance(right, Msa):
                merged = align_profile_to_profile(left, right, cfg.scoring, tie)
            elif isinstance(left, Msa):
                merged = align_sequence_to_profile(left, right, cfg.scoring, tie)
            else:
                merged = align_sequence_to_profile(right, left, cfg.scoring, tie)
            groups[step.new] = merged
        (alignment,) = groups.values()
        by_id = {row.id: row for row in alignment.rows}
        alignment = Msa(tuple(by_id[i] for i in ids))
    except Exception as err:
        raise PipelineError("merge", err) from err
    merge_ns = time.monotonic_ns()

    return PipelineReport(
        distance_matrix=matrix,
        guide_tree=tree,
        msa=alignment,
        total_cost=sp_total_cost(alignment, CostScheme()),
        sp_score=sp_score(alignment, cfg.scoring),
        timings=StageTimings(
            distance_ms=_ms(start_ns, distance_ns),
            tree_ms=_ms(distance_ns, tree_ns),
            merge_ms=_ms(tree_ns, merge_ns),
            total_ms=_ms(start_ns, merge_ns),
        ),
    )

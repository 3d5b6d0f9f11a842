"""Command-line interface: align, tree, gen, and bench subcommands.

Exit codes: 0 on success, 1 on data or algorithm errors, 2 on usage
errors. The environment variable MSA_SEED supplies a fallback when
--seed is not given.
"""

from __future__ import annotations

import argparse
import os
import sys

from .bench import BENCH_CSV_HEADER, BENCH_METHODS, records_to_csv, run_bench, summarize
from .datasets import CLASSES, generate_sequences
from .distances import pairwise_distance_matrix
from .guide_tree import nj_build, to_newick, upgma_build
from .pairwise import ScoringScheme
from .profiles import TieBreak
from .progressive import PipelineConfig, PipelineError, progressive_align
from .sequences import Msa, read_fasta_file, verify_msa_against_inputs, write_fasta


def _add_scoring_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--match", type=int, default=3, help="match score (default 3)")
    parser.add_argument("--mismatch", type=int, default=0, help="mismatch score (default 0)")
    parser.add_argument("--gap", type=int, default=-1, help="gap penalty (default -1)")


def _add_tie_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--tie",
        choices=("lex", "random"),
        default="lex",
        help="tie-break policy for consensus draws (default lex)",
    )


def _add_seed_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=int, default=None, help="64-bit seed (or MSA_SEED)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="promsa",
        description="Progressive multiple sequence alignment of DNA with "
        "UPGMA or neighbor-joining guide trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_align = sub.add_parser("align", help="align a FASTA file progressively")
    p_align.add_argument("--input", required=True, help="input FASTA of raw sequences")
    p_align.add_argument("--guide", choices=("upgma", "nj"), default="upgma")
    _add_scoring_flags(p_align)
    _add_tie_flags(p_align)
    _add_seed_flag(p_align)
    p_align.add_argument("--out", help="aligned FASTA output (default stdout)")
    p_align.add_argument("--tree-out", help="write the guide tree as Newick")
    p_align.add_argument("--stats", help="write a one-row stats CSV")
    p_align.add_argument(
        "--clamp-negative",
        action="store_true",
        help="clamp negative branch lengths to zero in Newick output",
    )
    p_align.add_argument(
        "--verify",
        action="store_true",
        help="re-check alignment invariants against the inputs after writing",
    )

    p_tree = sub.add_parser("tree", help="build a guide tree only")
    p_tree.add_argument("--input", required=True)
    p_tree.add_argument("--method", choices=("upgma", "nj"), required=True)
    p_tree.add_argument("--out", required=True, help="Newick output path")
    p_tree.add_argument("--distmat", help="also dump the distance matrix as CSV")
    p_tree.add_argument("--clamp-negative", action="store_true")
    _add_scoring_flags(p_tree)

    p_gen = sub.add_parser("gen", help="generate a random DNA dataset")
    p_gen.add_argument(
        "--class",
        dest="dataset_class",
        choices=sorted(CLASSES),
        help="preset dataset class",
    )
    p_gen.add_argument("--count", type=int, help="number of sequences (custom class)")
    p_gen.add_argument("--min-len", type=int, help="minimum length (custom class)")
    p_gen.add_argument("--max-len", type=int, help="maximum length (custom class)")
    _add_seed_flag(p_gen)
    p_gen.add_argument("--out", help="output FASTA (default stdout)")

    p_bench = sub.add_parser("bench", help="run the UPGMA vs NJ comparison harness")
    p_bench.add_argument(
        "--classes",
        default="small,medium",
        help="comma-separated classes: small, medium, large (default small,medium)",
    )
    p_bench.add_argument("--input", help="FASTA for the large class")
    p_bench.add_argument("--reps", type=int, default=1, help="repetitions per cell")
    _add_seed_flag(p_bench)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.add_argument(
        "--methods",
        default=",".join(BENCH_METHODS),
        help="comma-separated guide methods (default upgma,nj)",
    )
    _add_scoring_flags(p_bench)

    return parser


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is not None:
        return args.seed
    env = os.environ.get("MSA_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"MSA_SEED must be an integer, got {env!r}")
    return 0


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as handle:
            handle.write(text)


def _stats_csv(method: str, seqs, report, seed: int) -> str:
    mean_length = sum(len(s) for s in seqs) / len(seqs)
    t = report.timings
    row = (
        f"{method},{len(seqs)},{mean_length:.2f},{t.distance_ms},{t.tree_ms},"
        f"{t.merge_ms},{t.total_ms},{report.total_cost:.6f},{report.sp_score},{seed}"
    )
    return BENCH_CSV_HEADER + "\n" + row + "\n"


def _cmd_align(args) -> int:
    seed = _resolve_seed(args)
    if args.seed is not None and args.tie != "random":
        print("warning: --seed has no effect unless --tie random", file=sys.stderr)
    seqs = read_fasta_file(args.input)
    cfg = PipelineConfig(
        guide_method=args.guide,
        scoring=ScoringScheme(args.match, args.mismatch, args.gap),
        tie=TieBreak(args.tie, seed),
    )
    report = progressive_align(seqs, cfg)
    _write_text(args.out, write_fasta(report.msa.rows))
    if args.tree_out:
        _write_text(args.tree_out, to_newick(report.guide_tree, args.clamp_negative) + "\n")
    if args.stats:
        _write_text(args.stats, _stats_csv(args.guide, seqs, report, seed))
    if args.verify:
        verify_msa_against_inputs(report.msa, seqs)
        if args.out:
            written = read_fasta_file(args.out, allow_gaps=True)
            verify_msa_against_inputs(Msa(tuple(written)), seqs)
    return 0


def _cmd_tree(args) -> int:
    seqs = read_fasta_file(args.input)
    scoring = ScoringScheme(args.match, args.mismatch, args.gap)
    matrix = pairwise_distance_matrix(seqs, scoring)
    build = upgma_build if args.method == "upgma" else nj_build
    tree = build(matrix)
    _write_text(args.out, to_newick(tree, args.clamp_negative) + "\n")
    if args.distmat:
        _write_text(args.distmat, matrix.to_csv())
    return 0


def _cmd_gen(args) -> int:
    seed = _resolve_seed(args)
    if args.dataset_class:
        spec = CLASSES[args.dataset_class]
        count, min_len, max_len = spec.count, spec.min_len, spec.max_len
    else:
        if args.count is None or args.min_len is None or args.max_len is None:
            raise ValueError("provide --class or all of --count/--min-len/--max-len")
        count, min_len, max_len = args.count, args.min_len, args.max_len
    seqs = generate_sequences(count, min_len, max_len, seed)
    _write_text(args.out, write_fasta(seqs))
    return 0


def _cmd_bench(args) -> int:
    seed = _resolve_seed(args)
    classes = [c.strip() for c in args.classes.split(",") if c.strip()]
    methods = tuple(m.strip() for m in args.methods.split(",") if m.strip())
    large_seqs = read_fasta_file(args.input) if args.input else None
    if "large" in classes and large_seqs is None:
        raise ValueError("the large class needs --input <fasta>")
    records = run_bench(
        classes,
        reps=args.reps,
        seed=seed,
        methods=methods,
        scoring=ScoringScheme(args.match, args.mismatch, args.gap),
        large_seqs=large_seqs,
    )
    _write_text(args.out, records_to_csv(records))
    print(summarize(records))
    return 0


_COMMANDS = {
    "align": _cmd_align,
    "tree": _cmd_tree,
    "gen": _cmd_gen,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, PipelineError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

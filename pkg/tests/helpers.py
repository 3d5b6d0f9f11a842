"""Shared test oracles: exhaustive alignment enumeration, a minimal Newick
reader, and random tree/matrix generators. Everything here is independent
of the code paths under test."""

from __future__ import annotations

import numpy as np

from promsa import DistanceMatrix, Sequence

# The seven short test sequences used throughout (degapped).
SETUP1 = (
    "ACGTACT",
    "ACTACG",
    "ATGGATACTAACTCGG",
    "ATGGCTAGT",
    "ATGCTCCGGCAAAGG",
    "ATGCTGG",
    "ATCGACAGTGTC",
)


def setup1_sequences() -> list[Sequence]:
    return [Sequence(f"s{i + 1}", residues) for i, residues in enumerate(SETUP1)]


def brute_force_score(a: str, b: str, match: int, mismatch: int, gap: int) -> int:
    """Best global alignment score by plain recursive enumeration."""

    def rec(i: int, j: int) -> int:
        if i == len(a) and j == len(b):
            return 0
        best = None
        if i < len(a) and j < len(b):
            v = (match if a[i] == b[j] else mismatch) + rec(i + 1, j + 1)
            best = v
        if i < len(a):
            v = gap + rec(i + 1, j)
            best = v if best is None else max(best, v)
        if j < len(b):
            v = gap + rec(i, j + 1)
            best = v if best is None else max(best, v)
        return best

    return rec(0, 0)


def parse_newick(text: str):
    """Parse a Newick string into ((subtree, length), ...) nests; a leaf is
    its name string. Only the features the writer emits are supported."""
    text = text.strip()
    assert text.endswith(";")
    text = text[:-1]
    pos = 0

    def parse_subtree():
        nonlocal pos
        if text[pos] == "(":
            pos += 1
            children = [parse_child()]
            while text[pos] == ",":
                pos += 1
                children.append(parse_child())
            assert text[pos] == ")"
            pos += 1
            return tuple(children)
        start = pos
        while pos < len(text) and text[pos] not in ",():":
            pos += 1
        return text[start:pos]

    def parse_child():
        nonlocal pos
        node = parse_subtree()
        length = None
        if pos < len(text) and text[pos] == ":":
            pos += 1
            start = pos
            while pos < len(text) and text[pos] not in ",()":
                pos += 1
            length = float(text[start:pos])
        return (node, length)

    root = parse_subtree()
    assert pos == len(text)
    return root


def newick_leaf_sets(tree) -> set[frozenset]:
    """Leaf-name sets of every internal node of a parsed Newick tree."""
    out: set[frozenset] = set()

    def walk(node) -> frozenset:
        if isinstance(node, str):
            return frozenset((node,))
        leaves = frozenset()
        for child, _ in node:
            leaves |= walk(child)
        out.add(leaves)
        return leaves

    walk(tree)
    return out


def random_ultrametric(rng, n: int) -> DistanceMatrix:
    """Matrix of path lengths on a random clock tree: join random cluster
    pairs at strictly increasing heights; d(x, y) = twice the join height."""
    values = np.zeros((n, n))
    clusters = {i: [i] for i in range(n)}
    next_id = n
    height = 0.0
    while len(clusters) > 1:
        height += rng.uniform(0.1, 1.0)
        a, b = rng.sample(sorted(clusters), 2)
        for x in clusters[a]:
            for y in clusters[b]:
                values[x][y] = values[y][x] = 2.0 * height
        clusters[next_id] = clusters.pop(a) + clusters.pop(b)
        next_id += 1
    return DistanceMatrix(tuple(f"t{i}" for i in range(n)), values)


def random_additive(rng, n: int) -> DistanceMatrix:
    """Matrix of path lengths on a random edge-weighted binary tree."""
    # subtree: leaf index, or tuple of (subtree, edge_length) pairs
    items: list = list(range(n))
    while len(items) > 1:
        a = items.pop(rng.randrange(len(items)))
        b = items.pop(rng.randrange(len(items)))
        items.append(((a, rng.uniform(0.5, 2.0)), (b, rng.uniform(0.5, 2.0))))
    values = np.zeros((n, n))

    def walk(node) -> list[tuple[int, float]]:
        if isinstance(node, int):
            return [(node, 0.0)]
        groups = [[(leaf, depth + length) for leaf, depth in walk(child)]
                  for child, length in node]
        for g1 in range(len(groups)):
            for g2 in range(g1 + 1, len(groups)):
                for x, dx in groups[g1]:
                    for y, dy in groups[g2]:
                        values[x][y] = values[y][x] = dx + dy
        return [entry for group in groups for entry in group]

    walk(items[0])
    return DistanceMatrix(tuple(f"t{i}" for i in range(n)), values)


def random_dna(rng, lo: int, hi: int) -> str:
    return "".join(rng.choice("ACGT") for _ in range(rng.randint(lo, hi)))

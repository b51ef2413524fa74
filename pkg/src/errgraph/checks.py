"""Direct enumerations used as independent oracles for the counting formulas."""

from __future__ import annotations

from collections import defaultdict

from .perm import Permutation, apply_transposition, enumerate_sphere


def factorization_count(p: Permutation, length: int) -> int:
    """Ordered tuples of ``length`` transpositions whose product is p, by dynamic programming."""
    n = p.n
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    layer = {Permutation.identity(n): 1}
    for _ in range(length):
        nxt: dict = defaultdict(int)
        for q, c in layer.items():
            for i, j in pairs:
                nxt[apply_transposition(q, i, j)] += c
        layer = nxt
    return layer.get(p, 0)


def labeled_edges_direct(n: int, r: int) -> int:
    """z in S_{r-1} whose neighbour z*(1 2) lies in S_r."""
    return sum(1 for z in enumerate_sphere(n, r - 1) if apply_transposition(z, 1, 2).num_cycles() == n - r)


def total_edges_direct(n: int, r: int) -> int:
    """Edges between S_{r-1} and S_r, every transposition label."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return sum(
        1
        for z in enumerate_sphere(n, r - 1)
        for i, j in pairs
        if apply_transposition(z, i, j).num_cycles() == n - r
    )

"""Naive reference implementations for differential testing.

Everything here is deliberately brute force and kept independent of the
production algorithms: reduced words come from descent recursion instead of
braid-move closure, commutation classes from literal breadth-first closure
under adjacent orthogonal swaps instead of heap-order keying, and
contractibility from scanning every root sequence for a consecutive
occurrence.  Tests and the CLI --verify mode diff these against production.
"""

from __future__ import annotations

from collections import deque

from .coxeter import (
    CapExceededError,
    DEFAULT_SEQUENCE_CAP,
    Element,
    Root,
    Word,
    is_right_descent,
    pairing,
    times_generator,
)
from .rootseq import RootSequence, root_sequence

__all__ = [
    "oracle_reduced_words",
    "oracle_all_root_sequences",
    "oracle_classes_by_bfs",
    "oracle_contractible",
]


def oracle_reduced_words(w: Element, cap: int | None = None) -> list[Word]:
    """Every reduced word of w, by depth-first descent recursion."""
    limit = cap if cap is not None else DEFAULT_SEQUENCE_CAP
    g = w.graph
    out: list[Word] = []

    def descend(v: Element, tail: list[int]) -> None:
        if v.length == 0:
            out.append(tuple(reversed(tail)))
            if len(out) > limit:
                raise CapExceededError(f"more than {limit} reduced words", count=len(out))
            return
        for s in g.generators():
            if is_right_descent(v, s):
                tail.append(s)
                descend(times_generator(v, s), tail)
                tail.pop()

    descend(w, [])
    return out


def oracle_all_root_sequences(w: Element, cap: int | None = None) -> list[RootSequence]:
    return [root_sequence(w.graph, word) for word in oracle_reduced_words(w, cap)]


def oracle_classes_by_bfs(w: Element, cap: int | None = None) -> list[frozenset[tuple[Root, ...]]]:
    """Partition of the root sequences under adjacent orthogonal swaps."""
    g = w.graph
    pool = {tuple(r.roots) for r in oracle_all_root_sequences(w, cap)}
    blocks: list[frozenset[tuple[Root, ...]]] = []
    while pool:
        seed = min(pool)
        pool.discard(seed)
        block = {seed}
        queue = deque([seed])
        while queue:
            cur = queue.popleft()
            for k in range(len(cur) - 1):
                if pairing(g, cur[k], cur[k + 1]) == 0:
                    nxt = cur[:k] + (cur[k + 1], cur[k]) + cur[k + 2:]
                    if nxt in pool:
                        pool.discard(nxt)
                        block.add(nxt)
                        queue.append(nxt)
        blocks.append(frozenset(block))
    blocks.sort(key=min)
    return blocks


def oracle_contractible(w: Element, triple, cap: int | None = None) -> bool:
    """Scan every root sequence of w for a consecutive occurrence of the triple."""
    target = {triple.low, triple.mid, triple.high}
    for r in oracle_all_root_sequences(w, cap):
        roots = r.roots
        for k in range(len(roots) - 2):
            if set(roots[k:k + 3]) == target:
                return True
    return False

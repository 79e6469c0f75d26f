"""Root sequences of reduced words and the braid moves acting on them.

A reduced word (s_1, ..., s_n) linearizes the inversion set of its element:
entry i of the root sequence is the positive root turned negative by the
length-i suffix of the word.  Short braid moves swap adjacent orthogonal
entries; long braid moves swap entries two apart whose sum sits in between.
Two sequences are commutation equivalent exactly when their heap orders
(the transitive closure of left-to-right nonorthogonal precedence) agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .coxeter import (
    CoxeterGraph,
    Element,
    Root,
    Word,
    canonical_word,
    is_reduced,
    pairing,
    reflect,
    simple_root,
)

__all__ = [
    "RootSequence",
    "HeapOrder",
    "root_sequence",
    "inversion_set",
    "word_of_root_sequence",
    "heap_order",
    "short_moves",
    "long_moves",
    "apply_short_move",
    "apply_long_move",
    "commutation_equivalent",
]


@dataclass(frozen=True)
class RootSequence:
    """An ordered tuple of positive roots realizing one reduced word."""

    graph: CoxeterGraph
    roots: tuple[Root, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Root]:
        return iter(self.roots)

    def __getitem__(self, i: int) -> Root:
        return self.roots[i]


@dataclass(frozen=True)
class HeapOrder:
    """Partial order on the roots of one sequence, stored as its closure.

    ``relation`` holds ordered pairs (a, b) meaning a precedes b.  It is the
    transitive closure of {(r_i, r_j) : i < j, r_i not orthogonal to r_j},
    carried on the roots themselves so sequences of the same element compare
    directly.
    """

    size: int
    relation: frozenset[tuple[Root, Root]]


def root_sequence(g: CoxeterGraph, word: Word) -> RootSequence:
    """Root sequence of a reduced word; entry i comes from the i-long suffix."""
    if not is_reduced(g, word):
        raise ValueError("root sequences are defined only for reduced words")
    n = len(word)
    roots = []
    for i in range(1, n + 1):
        v = simple_root(g, word[n - i])
        for j in range(n - i + 1, n):
            v = reflect(g, word[j], v)
        roots.append(v)
    return RootSequence(g, tuple(roots))


def inversion_set(w: Element) -> frozenset[Root]:
    """Positive roots sent negative by w; its size equals the length of w."""
    return frozenset(root_sequence(w.graph, canonical_word(w)).roots)


def _simple_index(r: Root) -> int | None:
    idx = None
    for i, c in enumerate(r):
        if c == 0:
            continue
        if c != 1 or idx is not None:
            return None
        idx = i + 1
    return idx


def word_of_root_sequence(r: RootSequence) -> Word:
    """Invert root_sequence.

    Entry 1 names the last letter; reflecting the remaining entries by it
    peels the sequence down to the next-shorter word.  The reconstruction is
    verified by a full roundtrip so any invalid input is rejected.
    """
    g = r.graph
    seq = list(r.roots)
    rev: list[int] = []
    while seq:
        s = _simple_index(seq[0])
        if s is None or s > g.n:
            raise ValueError("not a valid root sequence: entry fails to un-twist to a simple root")
        rev.append(s)
        seq = [reflect(g, s, x) for x in seq[1:]]
    word = tuple(reversed(rev))
    try:
        back = root_sequence(g, word)
    except ValueError:
        raise ValueError("not a valid root sequence") from None
    if back.roots != r.roots:
        raise ValueError("not a valid root sequence")
    return word


def _closure_masks(g: CoxeterGraph, roots: tuple[Root, ...]) -> list[int]:
    """successors[i] = bitmask of positions reachable from i in the heap order."""
    n = len(roots)
    succ = [0] * n
    for i in range(n - 2, -1, -1):
        m = 0
        for j in range(i + 1, n):
            if pairing(g, roots[i], roots[j]) != 0:
                m |= (1 << j) | succ[j]
        succ[i] = m
    return succ


def heap_order(r: RootSequence) -> HeapOrder:
    roots = r.roots
    succ = _closure_masks(r.graph, roots)
    rel = set()
    for i, m in enumerate(succ):
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            rel.add((roots[i], roots[j]))
    return HeapOrder(len(roots), frozenset(rel))


def short_moves(r: RootSequence) -> list[int]:
    """0-based positions k where entries k and k+1 are orthogonal."""
    roots = r.roots
    return [k for k in range(len(roots) - 1) if pairing(r.graph, roots[k], roots[k + 1]) == 0]


def long_moves(r: RootSequence) -> list[int]:
    """0-based positions k where entry k+1 is the sum of entries k and k+2."""
    roots = r.roots
    return [
        k
        for k in range(len(roots) - 2)
        if tuple(x + y for x, y in zip(roots[k], roots[k + 2])) == roots[k + 1]
    ]


def apply_short_move(r: RootSequence, k: int) -> RootSequence:
    roots = r.roots
    if not (0 <= k < len(roots) - 1) or pairing(r.graph, roots[k], roots[k + 1]) != 0:
        raise ValueError(f"no short braid move at position {k}")
    return RootSequence(r.graph, roots[:k] + (roots[k + 1], roots[k]) + roots[k + 2:])


def apply_long_move(r: RootSequence, k: int) -> RootSequence:
    roots = r.roots
    ok = 0 <= k < len(roots) - 2 and tuple(x + y for x, y in zip(roots[k], roots[k + 2])) == roots[k + 1]
    if not ok:
        raise ValueError(f"no long braid move at position {k}")
    return RootSequence(r.graph, roots[:k] + (roots[k + 2], roots[k + 1], roots[k]) + roots[k + 3:])


def commutation_equivalent(r1: RootSequence, r2: RootSequence) -> bool:
    """Heap-order equality; comparing sequences of different elements errors."""
    if r1.graph != r2.graph or frozenset(r1.roots) != frozenset(r2.roots):
        raise ValueError("root sequences belong to different elements")
    return heap_order(r1) == heap_order(r2)

"""Shared test helpers: independent oracles and samplers.

Everything here is deliberately naive.  The helpers recompute facts the
library also computes, by a different route, so the two can be compared.
"""

from __future__ import annotations

import random
from itertools import product

from freebraid import (
    CoxeterGraph,
    Element,
    Word,
    element_of,
    identity_element,
    is_positive_root,
    parse_graph,
    reflect,
    simple_root,
    times_generator,
)

# Golden D4 element used throughout: its root sequence, braid-move slots,
# and its unique non-contractible triple are frozen in several test modules.
GOLDEN_D4_WORD: Word = (2, 1, 3, 4, 2, 4, 3, 1, 2)

GOLDEN_D4_ROOTS: tuple[tuple[int, ...], ...] = (
    (0, 1, 0, 0),
    (1, 1, 0, 0),
    (0, 1, 1, 0),
    (0, 1, 0, 1),
    (1, 2, 1, 1),
    (1, 1, 1, 0),
    (1, 1, 0, 1),
    (0, 1, 1, 1),
    (1, 1, 1, 1),
)


def golden_d4() -> tuple[CoxeterGraph, Element]:
    g = parse_graph("D4")
    return g, element_of(g, GOLDEN_D4_WORD)


def all_positive_roots(g: CoxeterGraph) -> frozenset[tuple[int, ...]]:
    """Positive roots by closure of the simples under simple reflections."""
    roots = {simple_root(g, s) for s in g.generators()}
    frontier = set(roots)
    while frontier:
        nxt = set()
        for r in frontier:
            for s in g.generators():
                img = reflect(g, s, r)
                if is_positive_root(img) and img not in roots:
                    roots.add(img)
                    nxt.add(img)
        frontier = nxt
    return frozenset(roots)


def brute_reduced_words(w: Element) -> set[Word]:
    """Every length-l(w) word over the generators whose product is w.

    Pure product scan; usable only for tiny length * rank.
    """
    g = w.graph
    found = set()
    for word in product(g.generators(), repeat=w.length):
        if element_of(g, word) == w:
            found.add(word)
    return found


def group_by_length(g: CoxeterGraph, max_length: int) -> dict[int, list[Element]]:
    """All elements of length <= max_length, grouped, via weak-order BFS."""
    seen = {identity_element(g)}
    frontier = list(seen)
    out: dict[int, list[Element]] = {0: list(seen)}
    for length in range(1, max_length + 1):
        nxt = []
        for w in frontier:
            for s in g.generators():
                ws = times_generator(w, s)
                if ws.length == length and ws not in seen:
                    seen.add(ws)
                    nxt.append(ws)
        if not nxt:
            break
        out[length] = nxt
        frontier = nxt
    return out


def random_elements(
    g: CoxeterGraph,
    count: int,
    max_length: int,
    seed: int,
) -> list[Element]:
    """Seeded random walk sample; lengths spread over [1, max_length]."""
    rng = random.Random(seed)
    picked = []
    for _ in range(count):
        w = identity_element(g)
        target = rng.randint(1, max_length)
        while w.length < target:
            s = rng.choice(list(g.generators()))
            ws = times_generator(w, s)
            if ws.length > w.length:
                w = ws
        picked.append(w)
    return picked


def all_permutations(n: int):
    from itertools import permutations

    return [tuple(p) for p in permutations(range(1, n + 1))]

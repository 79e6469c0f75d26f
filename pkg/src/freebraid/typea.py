"""Symmetric-group realization: one-line notation, patterns, triples.

Generator i of the path graph on n-1 nodes is the transposition (i, i+1),
and the simple root a_i is e_i - e_{i+1} in coordinates.  A positive root
e_i - e_j lies in the inversion set exactly when the one-line notation has
w(i) > w(j), so inversion triples are decreasing subsequences of length 3,
and the freely braided elements are exactly the permutations avoiding
3421, 4231, 4312 and 4321.

>>> parse_permutation("4231")
(4, 2, 3, 1)
>>> is_freely_braided_perm((4, 2, 3, 1))
False
>>> element_to_perm(parse_graph("A3"), perm_to_element((3, 1, 4, 2)))
(3, 1, 4, 2)
"""

from __future__ import annotations

from itertools import combinations, permutations

from .coxeter import (
    CapExceededError,
    CoxeterGraph,
    Element,
    ParseError,
    Root,
    canonical_word,
    element_of,
    is_standard_a_graph,
    parse_graph,
)
from .triples import InversionTriple

__all__ = [
    "Permutation",
    "FREELY_BRAIDED_OBSTRUCTIONS",
    "parse_permutation",
    "format_permutation",
    "perm_to_element",
    "element_to_perm",
    "inversion_triples_1line",
    "contains_pattern",
    "is_freely_braided_perm",
    "enumerate_freely_braided",
    "DEFAULT_MAX_ENUM_RANK",
]

Permutation = tuple[int, ...]

# A permutation is freely braided iff it avoids all four of these.
FREELY_BRAIDED_OBSTRUCTIONS: tuple[Permutation, ...] = (
    (3, 4, 2, 1),
    (4, 2, 3, 1),
    (4, 3, 1, 2),
    (4, 3, 2, 1),
)

DEFAULT_MAX_ENUM_RANK = 8


def _check_perm(p: Permutation) -> None:
    if sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p}")


def parse_permutation(text: str) -> Permutation:
    """One-line notation: plain digits up to rank 9, comma-separated beyond."""
    text = text.strip()
    if not text:
        raise ParseError("empty permutation")
    try:
        if "," in text:
            p = tuple(int(x) for x in text.split(","))
        else:
            p = tuple(int(ch) for ch in text)
    except ValueError:
        raise ParseError(f"bad permutation {text!r}") from None
    try:
        _check_perm(p)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return p


def format_permutation(p: Permutation) -> str:
    if len(p) <= 9:
        return "".join(str(v) for v in p)
    return ",".join(str(v) for v in p)


def perm_to_element(p: Permutation) -> Element:
    """Bubble-sort the one-line notation into a reduced word, then evaluate.

    Each swap of adjacent descending values is one right multiplication by a
    simple transposition, so the collected letters (reversed) form a reduced
    word: the swap count equals the inversion number.
    """
    _check_perm(p)
    graph = parse_graph(f"A{len(p) - 1}")
    q = list(p)
    letters: list[int] = []
    moved = True
    while moved:
        moved = False
        for i in range(len(q) - 1):
            if q[i] > q[i + 1]:
                q[i], q[i + 1] = q[i + 1], q[i]
                letters.append(i + 1)
                moved = True
    return element_of(graph, tuple(reversed(letters)))


def element_to_perm(g: CoxeterGraph, w: Element) -> Permutation:
    """Inverse of perm_to_element for the standard path graph on g.n nodes."""
    if not is_standard_a_graph(g):
        raise ValueError("graph is not the standard path 1-2-...-n")
    if w.graph != g:
        raise ValueError("element does not live on this graph")
    p = list(range(1, g.n + 2))
    for s in canonical_word(w):
        p[s - 1], p[s] = p[s], p[s - 1]
    return tuple(p)


def _eps_root(i: int, j: int, n: int) -> Root:
    """e_i - e_j (1 <= i < j <= n) over the simple roots of the path graph."""
    return tuple(1 if i <= t < j else 0 for t in range(1, n))


def inversion_triples_1line(p: Permutation) -> frozenset[InversionTriple]:
    """Triples straight from the one-line notation: i<j<k with w(i)>w(j)>w(k)."""
    _check_perm(p)
    n = len(p)
    out = set()
    for i, j, k in combinations(range(1, n + 1), 3):
        if p[i - 1] > p[j - 1] > p[k - 1]:
            a, b = _eps_root(i, j, n), _eps_root(j, k, n)
            lo, hi = (a, b) if a <= b else (b, a)
            out.add(InversionTriple(lo, _eps_root(i, k, n), hi))
    return frozenset(out)


def _standardize(vals: tuple[int, ...]) -> tuple[int, ...]:
    order = sorted(vals)
    return tuple(order.index(v) + 1 for v in vals)


def contains_pattern(p: Permutation, q: Permutation) -> bool:
    """Brute-force containment: some subsequence of p standardizes to q."""
    _check_perm(p)
    _check_perm(q)
    if len(q) > len(p):
        raise ValueError("pattern is longer than the permutation")
    return any(_standardize(sub) == q for sub in combinations(p, len(q)))


def is_freely_braided_perm(p: Permutation) -> bool:
    """Pattern criterion: avoid 3421, 4231, 4312 and 4321."""
    _check_perm(p)
    bad = set(FREELY_BRAIDED_OBSTRUCTIONS)
    for sub in combinations(p, 4):
        if _standardize(sub) in bad:
            return False
    return True


def enumerate_freely_braided(
    n: int, members: bool = False, limit: int = DEFAULT_MAX_ENUM_RANK
) -> tuple[int, tuple[Permutation, ...] | None]:
    """Count (and optionally list) freely braided permutations of rank n."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    if n > limit:
        raise CapExceededError(f"rank {n} exceeds the enumeration limit {limit}")
    found = [p for p in permutations(range(1, n + 1)) if is_freely_braided_perm(p)]
    return len(found), tuple(found) if members else None

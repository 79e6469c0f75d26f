"""Reduced-word enumeration, commutation classes, signatures, class graphs.

Reduced words of one element are generated by breadth-first closure under
word-level braid relations.  Classes are keyed by the orientations of the
nonorthogonal root pairs, which pin down the heap order of a sequence, so
no per-sequence transitive closure is needed during enumeration.  The class
signature records, per contractible triple, whether the heap order of the
two summands agrees with a fixed precedence on roots; flipping one long
braid move flips exactly one bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, TYPE_CHECKING

from .coxeter import (
    CapExceededError,
    DEFAULT_MAX_WORD_LENGTH,
    DEFAULT_SEQUENCE_CAP,
    Element,
    Root,
    Word,
    canonical_word,
    format_word,
    pairing,
)
from .rootseq import RootSequence, inversion_set, root_sequence

if TYPE_CHECKING:
    from .triples import InversionTriple

__all__ = [
    "Precedence",
    "LEX",
    "REVLEX",
    "PRECEDENCES",
    "CommutationClass",
    "FSignature",
    "CommutationGraph",
    "BoundCheck",
    "Bipartition",
    "enumerate_reduced_words",
    "enumerate_classes",
    "class_partition",
    "f_signature",
    "parity",
    "count_classes_and_check_bound",
    "commutation_graph",
    "is_bipartite",
    "to_dot",
]


@dataclass(frozen=True)
class Precedence:
    """Total order on roots given by an injective sort key on coefficients."""

    name: str
    key: Callable[[Root], object] = field(compare=False)

    def precedes(self, a: Root, b: Root) -> bool:
        return self.key(a) < self.key(b)


LEX = Precedence("lex", lambda r: r)
REVLEX = Precedence("revlex", lambda r: tuple(reversed(r)))
PRECEDENCES = {"lex": LEX, "revlex": REVLEX}


@dataclass(frozen=True)
class CommutationClass:
    """One commutation class: its lex-least word, that word's sequence, size."""

    canonical: RootSequence
    canonical_word: Word
    size: int


@dataclass(frozen=True)
class FSignature:
    """Bit per contractible triple, in sorted-triple order.

    A bit is 0 when the class heap order ranks the two summands the same way
    the precedence does, 1 when they disagree.
    """

    entries: tuple[tuple["InversionTriple", int], ...]

    def bits(self) -> dict["InversionTriple", int]:
        return dict(self.entries)

    def vector(self) -> tuple[int, ...]:
        return tuple(b for _, b in self.entries)

    def weight(self) -> int:
        return sum(b for _, b in self.entries)


@dataclass(frozen=True)
class CommutationGraph:
    """Classes as vertices; edges join classes one long braid move apart."""

    vertices: tuple[CommutationClass, ...]
    edges: frozenset[tuple[int, int]]


@dataclass(frozen=True)
class BoundCheck:
    classes: int
    contractible: int
    bound_holds: bool
    achieves_bound: bool


@dataclass(frozen=True)
class Bipartition:
    bipartite: bool
    coloring: tuple[int, ...] | None


class _Orbit:
    """All reduced words of one element plus class bookkeeping."""

    __slots__ = ("words", "classes", "edges")

    def __init__(
        self,
        words: list[Word],
        classes: list[tuple[Word, int, frozenset[tuple[Root, ...]]]],
        edges: frozenset[tuple[int, int]],
    ):
        self.words = words
        self.classes = classes  # (canonical word, size, member sequences) sorted
        self.edges = edges


def _orbit(w: Element, cap: int, max_length: int) -> _Orbit:
    g = w.graph
    if w.length > max_length:
        raise CapExceededError(
            f"element length {w.length} exceeds the word-length cap {max_length}", count=0
        )
    start = canonical_word(w)
    base = root_sequence(g, start).roots
    n = len(base)
    nonorth = [[pairing(g, a, b) != 0 for b in base] for a in base]

    # Sequences are carried as index tuples into `base`; each braid move on a
    # word swaps the two matching sequence positions (word position p, read
    # from the left, owns sequence entry n-p-1).
    visited: dict[Word, tuple[int, ...]] = {start: tuple(range(n))}
    queue: deque[Word] = deque([start])
    long_pairs: set[tuple[Word, Word]] = set()
    while queue:
        word = queue.popleft()
        seq = visited[word]
        for p in range(n - 1):
            s, t = word[p], word[p + 1]
            if s != t and not g.adjacent(s, t):
                nw = word[:p] + (t, s) + word[p + 2:]
                if nw not in visited:
                    a = n - p - 2
                    visited[nw] = seq[:a] + (seq[a + 1], seq[a]) + seq[a + 2:]
                    if len(visited) > cap:
                        raise CapExceededError(
                            f"more than {cap} root sequences", count=len(visited)
                        )
                    queue.append(nw)
        for p in range(n - 2):
            s, t = word[p], word[p + 1]
            if s != t and word[p + 2] == s and g.adjacent(s, t):
                nw = word[:p] + (t, s, t) + word[p + 3:]
                long_pairs.add((word, nw) if word <= nw else (nw, word))
                if nw not in visited:
                    a, b = n - p - 3, n - p - 1
                    lst = list(seq)
                    lst[a], lst[b] = lst[b], lst[a]
                    visited[nw] = tuple(lst)
                    if len(visited) > cap:
                        raise CapExceededError(
                            f"more than {cap} root sequences", count=len(visited)
                        )
                    queue.append(nw)

    def key_of(seq: tuple[int, ...]) -> int:
        k = 0
        for p in range(n):
            a = seq[p]
            row = nonorth[a]
            for q in range(p + 1, n):
                b = seq[q]
                if row[b]:
                    k |= 1 << (a * n + b)
        return k

    keys = {word: key_of(seq) for word, seq in visited.items()}
    words = sorted(visited)
    groups: dict[int, list] = {}
    for word in words:
        rec = groups.setdefault(keys[word], [word, 0, []])
        rec[1] += 1
        rec[2].append(word)
    ordered = sorted(groups.items(), key=lambda kv: kv[1][0])
    classes = []
    for _, (canon, size, members) in ordered:
        seqs = frozenset(tuple(base[i] for i in visited[m]) for m in members)
        classes.append((canon, size, seqs))
    index_of = {key: i for i, (key, _) in enumerate(ordered)}
    edges = set()
    for u, v in long_pairs:
        ku, kv = keys[u], keys[v]
        if ku != kv:
            i, j = index_of[ku], index_of[kv]
            edges.add((min(i, j), max(i, j)))
    return _Orbit(words, classes, frozenset(edges))


@lru_cache(maxsize=64)
def _orbit_cached(w: Element, cap: int, max_length: int) -> _Orbit:
    return _orbit(w, cap, max_length)


def _get_orbit(w: Element, cap: int | None = None, max_length: int | None = None) -> _Orbit:
    return _orbit_cached(
        w, cap if cap is not None else DEFAULT_SEQUENCE_CAP,
        max_length if max_length is not None else DEFAULT_MAX_WORD_LENGTH,
    )


def enumerate_reduced_words(
    w: Element, cap: int | None = None, max_length: int | None = None
) -> list[Word]:
    """All reduced words of w, lexicographically sorted."""
    return list(_get_orbit(w, cap, max_length).words)


def enumerate_classes(
    w: Element, cap: int | None = None, max_length: int | None = None
) -> list[CommutationClass]:
    """All commutation classes of w, sorted by canonical (lex-least) word."""
    g = w.graph
    return [
        CommutationClass(root_sequence(g, canon), canon, size)
        for canon, size, _ in _get_orbit(w, cap, max_length).classes
    ]


def class_partition(
    w: Element, cap: int | None = None, max_length: int | None = None
) -> list[frozenset[tuple[Root, ...]]]:
    """Member root sequences per class (as root tuples), in class order."""
    return [seqs for _, _, seqs in _get_orbit(w, cap, max_length).classes]


def f_signature(w: Element, c: CommutationClass, precedence: Precedence = LEX) -> FSignature:
    from .triples import contractible_triples  # deferred: triples builds on classes

    if c.canonical.graph != w.graph or frozenset(c.canonical.roots) != inversion_set(w):
        raise ValueError("class does not belong to this element")
    pos = {r: i for i, r in enumerate(c.canonical.roots)}
    entries = []
    for t in sorted(contractible_triples(w)):
        heap_low_first = pos[t.low] < pos[t.high]
        prec_low_first = precedence.precedes(t.low, t.high)
        entries.append((t, 0 if heap_low_first == prec_low_first else 1))
    return FSignature(tuple(entries))


def parity(w: Element, c: CommutationClass, precedence: Precedence = LEX) -> int:
    """+1 or -1 according to the weight of the class signature."""
    return -1 if f_signature(w, c, precedence).weight() % 2 else 1


def count_classes_and_check_bound(w: Element, cap: int | None = None) -> BoundCheck:
    from .triples import contractible_triples  # deferred: triples builds on classes

    k = len(_get_orbit(w, cap).classes)
    n = len(contractible_triples(w))
    bound = 2**n
    return BoundCheck(k, n, k <= bound, k == bound)


def commutation_graph(w: Element, cap: int | None = None) -> CommutationGraph:
    orbit = _get_orbit(w, cap)
    g = w.graph
    vertices = tuple(
        CommutationClass(root_sequence(g, canon), canon, size)
        for canon, size, _ in orbit.classes
    )
    return CommutationGraph(vertices, orbit.edges)


def is_bipartite(graph: CommutationGraph) -> Bipartition:
    n = len(graph.vertices)
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j in graph.edges:
        adj[i].append(j)
        adj[j].append(i)
    color: list[int | None] = [None] * n
    for start in range(n):
        if color[start] is not None:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if color[v] is None:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return Bipartition(False, None)
    return Bipartition(True, tuple(c for c in color))


_PARITY_FILL = {1: "#aec7e8", -1: "#ffbb78"}


def to_dot(
    graph: CommutationGraph,
    parities: tuple[int, ...] | None = None,
    element_label: str | None = None,
) -> str:
    """DOT text: one vertex per class labeled by its canonical word."""
    lines = ["graph commutation {"]
    if element_label is not None:
        lines.append(f"  // element: {element_label}")
    verdict = is_bipartite(graph)
    lines.append(f"  // bipartite: {'true' if verdict.bipartite else 'false'}")
    lines.append("  node [shape=box];")
    for i, c in enumerate(graph.vertices):
        label = format_word(c.canonical_word) or "e"
        attrs = f'label="{label}"'
        if parities is not None:
            attrs += f', style=filled, fillcolor="{_PARITY_FILL[parities[i]]}"'
        lines.append(f"  c{i} [{attrs}];")
    for i, j in sorted(graph.edges):
        lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

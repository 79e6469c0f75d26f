"""Simply laced Coxeter systems with exact integer root arithmetic.

Generators are numbered 1..n.  A root is an integer coefficient vector over
the simple roots, stored as a plain tuple.  All geometry goes through the
symmetrized Cartan matrix (twice the usual bilinear form), so every pairing
is an exact integer and two roots are orthogonal exactly when their pairing
is 0.  Group elements are n x n integer matrices acting on root coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache

__all__ = [
    "Word",
    "Root",
    "Matrix",
    "ParseError",
    "CapExceededError",
    "CoxeterGraph",
    "Element",
    "parse_graph",
    "parse_word",
    "format_word",
    "simple_root",
    "pairing",
    "is_positive_root",
    "is_negative_root",
    "root_str",
    "reflect",
    "act",
    "reflection_matrix",
    "mat_mul",
    "element_of",
    "identity_element",
    "times_generator",
    "is_right_descent",
    "canonical_word",
    "reduce_word",
    "is_reduced",
    "is_path_forest",
    "is_standard_a_graph",
    "DEFAULT_MAX_WORD_LENGTH",
    "DEFAULT_SEQUENCE_CAP",
]

Word = tuple[int, ...]
Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

# Guards for the enumeration entry points: a cap on how many root sequences
# may be collected, and a cap on the length of words we agree to enumerate.
DEFAULT_SEQUENCE_CAP = 10**6
DEFAULT_MAX_WORD_LENGTH = 64

_NAMED_GRAPH = re.compile(r"^([ADE])(\d+)$")
_EDGE_SPEC = re.compile(r"^(\d+)-(\d+)$")


class ParseError(ValueError):
    """Malformed graph spec, word, or permutation input."""


class CapExceededError(RuntimeError):
    """An enumeration outgrew its cap; ``count`` holds the partial tally."""

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


@dataclass(frozen=True)
class CoxeterGraph:
    """A simply laced Coxeter graph: m(s,t)=3 on edges, m(s,t)=2 off them.

    ``edges`` holds unordered generator pairs normalized to (min, max).
    The symmetrized Cartan matrix and adjacency lists are derived once at
    construction; they are excluded from equality and hashing.
    """

    n: int
    edges: frozenset[tuple[int, int]]
    cartan: Matrix = field(init=False, compare=False, repr=False)
    neighbors: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ParseError("generator count must be nonnegative")
        normalized = set()
        for s, t in self.edges:
            if s == t:
                raise ParseError(f"self-loop at generator {s}")
            if not (1 <= s <= self.n and 1 <= t <= self.n):
                raise ParseError(f"edge {s}-{t} out of range 1..{self.n}")
            normalized.add((min(s, t), max(s, t)))
        object.__setattr__(self, "edges", frozenset(normalized))
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for s, t in normalized:
            nbrs[s - 1].append(t)
            nbrs[t - 1].append(s)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(v)) for v in nbrs))
        rows = []
        for s in range(1, self.n + 1):
            row = [0] * self.n
            row[s - 1] = 2
            for t in self.neighbors[s - 1]:
                row[t - 1] = -1
            rows.append(tuple(row))
        object.__setattr__(self, "cartan", tuple(rows))

    def adjacent(self, s: int, t: int) -> bool:
        return (min(s, t), max(s, t)) in self.edges

    def m(self, s: int, t: int) -> int:
        """Coxeter exponent: 1 on the diagonal, 3 across an edge, else 2."""
        if s == t:
            return 1
        return 3 if self.adjacent(s, t) else 2

    def generators(self) -> range:
        return range(1, self.n + 1)


def parse_graph(spec: str) -> CoxeterGraph:
    """Build a graph from a name (A5, D4, E8) or an edge list ("1-2,2-3").

    Named families: A<k> is the path 1-2-...-k; D<k> (k >= 4) hangs leaves
    1, 3, 4 off hub 2 with the tail 4-5-...-k; E6/E7/E8 use the standard
    numbering with branch node 4.  Edge lists infer n from the largest index.
    """
    text = spec.strip()
    if not text:
        raise ParseError("empty graph spec")
    named = _NAMED_GRAPH.match(text)
    if named:
        family, k = named.group(1), int(named.group(2))
        if family == "A":
            return CoxeterGraph(k, frozenset((i, i + 1) for i in range(1, k)))
        if family == "D":
            if k < 4:
                raise ParseError(f"D{k} not supported; rank must be at least 4")
            edges = {(1, 2), (2, 3), (2, 4)}
            edges.update((i, i + 1) for i in range(4, k))
            return CoxeterGraph(k, frozenset(edges))
        if k not in (6, 7, 8):
            raise ParseError(f"E{k} not supported; rank must be 6, 7 or 8")
        edges = {(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)}
        if k >= 7:
            edges.add((6, 7))
        if k == 8:
            edges.add((7, 8))
        return CoxeterGraph(k, frozenset(edges))
    pairs = []
    for part in text.split(","):
        m = _EDGE_SPEC.match(part.strip())
        if not m:
            raise ParseError(f"bad edge {part.strip()!r}; expected like 1-2")
        s, t = int(m.group(1)), int(m.group(2))
        if s < 1 or t < 1:
            raise ParseError(f"node index out of range in edge {part.strip()!r}")
        pairs.append((s, t))
    n = max(max(s, t) for s, t in pairs)
    return CoxeterGraph(n, frozenset(pairs))


def parse_word(text: str) -> Word:
    """Parse whitespace- or comma-separated generator indices."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    try:
        letters = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"bad word {text!r}; expected integers") from None
    if any(s < 1 for s in letters):
        raise ParseError(f"bad word {text!r}; generator indices start at 1")
    return letters


def format_word(word: Word) -> str:
    return " ".join(str(s) for s in word)


def _check_letter(g: CoxeterGraph, s: int) -> None:
    if not (1 <= s <= g.n):
        raise ValueError(f"generator {s} out of range 1..{g.n}")


def simple_root(g: CoxeterGraph, s: int) -> Root:
    _check_letter(g, s)
    return tuple(1 if i == s - 1 else 0 for i in range(g.n))


def pairing(g: CoxeterGraph, a: Root, b: Root) -> int:
    """Symmetrized Cartan pairing; 0 exactly when a and b are orthogonal."""
    total = 2 * sum(x * y for x, y in zip(a, b))
    for s, t in g.edges:
        total -= a[s - 1] * b[t - 1] + a[t - 1] * b[s - 1]
    return total


def is_positive_root(r: Root) -> bool:
    return any(c > 0 for c in r) and all(c >= 0 for c in r)


def is_negative_root(r: Root) -> bool:
    return any(c < 0 for c in r) and all(c <= 0 for c in r)


def root_str(r: Root) -> str:
    """Render a root like ``a1+2a2+a3`` (or ``-a1-a2`` for negatives)."""
    parts: list[str] = []
    for i, c in enumerate(r):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}a{i + 1}")
    return "".join(parts) if parts else "0"


def reflect(g: CoxeterGraph, s: int, r: Root) -> Root:
    """Apply the simple reflection s to the root r (an involution)."""
    _check_letter(g, s)
    c = 2 * r[s - 1] - sum(r[t - 1] for t in g.neighbors[s - 1])
    out = list(r)
    out[s - 1] -= c
    return tuple(out)


def act(g: CoxeterGraph, word: Word, r: Root) -> Root:
    """Apply the product of the word's letters to r, rightmost letter first."""
    for s in word:
        _check_letter(g, s)
    for s in reversed(word):
        r = reflect(g, s, r)
    return r


@lru_cache(maxsize=None)
def _identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def reflection_matrix(g: CoxeterGraph, s: int) -> Matrix:
    """Matrix of the simple reflection s in simple-root coordinates."""
    _check_letter(g, s)
    rows = []
    for i in range(1, g.n + 1):
        if i != s:
            rows.append(tuple(1 if j == i else 0 for j in range(1, g.n + 1)))
        else:
            rows.append(tuple((1 if j == s else 0) - g.cartan[s - 1][j - 1] for j in range(1, g.n + 1)))
    return tuple(rows)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = tuple(zip(*b)) if b else ()
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


@dataclass(frozen=True)
class Element:
    """A group element: its matrix on root coordinates plus its length.

    The matrix alone determines the element; ``length`` is derived data and
    excluded from equality and hashing.
    """

    graph: CoxeterGraph
    matrix: Matrix
    length: int = field(compare=False)


def identity_element(g: CoxeterGraph) -> Element:
    return Element(g, _identity_matrix(g.n), 0)


def element_of(g: CoxeterGraph, word: Word) -> Element:
    """Evaluate a (not necessarily reduced) word to an Element."""
    m = _identity_matrix(g.n)
    for s in word:
        m = mat_mul(m, reflection_matrix(g, s))
    return Element(g, m, len(reduce_word(g, word)))


def is_right_descent(w: Element, s: int) -> bool:
    """True iff w sends the simple root of s to a negative root."""
    _check_letter(w.graph, s)
    return all(row[s - 1] <= 0 for row in w.matrix)


def times_generator(w: Element, s: int) -> Element:
    """Right-multiply by one generator, tracking length exactly."""
    delta = -1 if is_right_descent(w, s) else 1
    return Element(w.graph, mat_mul(w.matrix, reflection_matrix(w.graph, s)), w.length + delta)


def canonical_word(w: Element) -> Word:
    """The lexicographically least reduced word for w.

    Greedy: the valid first letters of reduced words are exactly the left
    descents, so taking the smallest one at each step minimizes the word.
    Left descents of w are right descents of its inverse, which is tracked
    as a matrix and shrunk one letter at a time.
    """
    g = w.graph
    ident = _identity_matrix(g.n)
    m = w.matrix
    rev: list[int] = []
    while m != ident:
        for s in g.generators():
            if all(row[s - 1] <= 0 for row in m):
                rev.append(s)
                m = mat_mul(m, reflection_matrix(g, s))
                break
        else:
            raise ValueError("matrix is not a Coxeter group element")
    m_inv = ident
    for s in rev:
        m_inv = mat_mul(m_inv, reflection_matrix(g, s))
    inv = Element(g, m_inv, len(rev))
    out: list[int] = []
    while inv.length:
        for s in g.generators():
            if is_right_descent(inv, s):
                out.append(s)
                inv = times_generator(inv, s)
                break
    return tuple(out)


def reduce_word(g: CoxeterGraph, word: Word) -> Word:
    """Reduced word for the same element, via the exchange condition.

    Letters are folded in left to right over a reduced prefix.  When the next
    letter is a descent the exchange condition names the letters eligible for
    deletion; the leftmost one goes (for a reduced prefix it is unique).
    """
    for s in word:
        _check_letter(g, s)
    prefix: list[int] = []
    for s in word:
        image = act(g, tuple(prefix), simple_root(g, s))
        if is_positive_root(image):
            prefix.append(s)
            continue
        u = simple_root(g, s)
        candidates = []
        for i in range(len(prefix) - 1, -1, -1):
            if u == simple_root(g, prefix[i]):
                candidates.append(i)
            u = reflect(g, prefix[i], u)
        del prefix[min(candidates)]
    return tuple(prefix)


def is_reduced(g: CoxeterGraph, word: Word) -> bool:
    return len(word) == len(reduce_word(g, word))


def is_path_forest(g: CoxeterGraph) -> bool:
    """True iff every connected component of the graph is a simple path."""
    if any(len(nbrs) > 2 for nbrs in g.neighbors):
        return False
    parent = list(range(g.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s, t in g.edges:
        rs, rt = find(s), find(t)
        if rs == rt:
            return False
        parent[rs] = rt
    return True


def is_standard_a_graph(g: CoxeterGraph) -> bool:
    """True iff the graph is the path 1-2-...-n with labels in path order."""
    return g.edges == frozenset((i, i + 1) for i in range(1, g.n))

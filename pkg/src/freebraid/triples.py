"""Inversion triples, contractibility, and the freely braided predicate.

An inversion triple of w is a subset {low, low+high, high} of its inversion
set.  The triple is contractible when some root sequence of w carries its
three roots consecutively; equivalently, in some class heap order the sum
covers one of its summands (or, dually, is covered by one).  An element is
freely braided when its contractible triples are pairwise disjoint, and then
every class has a representative in which short moves alone push each
contractible triple into a consecutive block.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .coxeter import Element, Root, is_path_forest, pairing
from .rootseq import RootSequence, _closure_masks, inversion_set
from .classes import enumerate_classes

__all__ = [
    "InversionTriple",
    "inversion_triples",
    "is_contractible",
    "contractible_triples",
    "is_freely_braided",
    "consecutive_normal_form",
]


class InversionTriple(NamedTuple):
    """Triple with low + high = mid; low/high ordered lexicographically."""

    low: Root
    mid: Root
    high: Root


def _vec_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def inversion_triples(w: Element) -> frozenset[InversionTriple]:
    phi = sorted(inversion_set(w))
    phi_set = set(phi)
    out = set()
    for i in range(len(phi)):
        for j in range(i + 1, len(phi)):
            mid = _vec_add(phi[i], phi[j])
            if mid in phi_set:
                out.add(InversionTriple(phi[i], mid, phi[j]))
    return frozenset(out)


def _validated(w: Element, t: InversionTriple) -> InversionTriple:
    low, high = (t.low, t.high) if t.low <= t.high else (t.high, t.low)
    if _vec_add(low, high) != t.mid:
        raise ValueError("not an inversion triple: outer roots do not sum to the middle one")
    if not {low, t.mid, high} <= inversion_set(w):
        raise ValueError("not an inversion triple of this element")
    return InversionTriple(low, t.mid, high)


def _covers(succ: list[int], lo: int, hi: int) -> bool:
    """True iff position hi covers position lo in the closed order."""
    if not (succ[lo] >> hi) & 1:
        return False
    m = succ[lo]
    while m:
        z = (m & -m).bit_length() - 1
        m &= m - 1
        if z != hi and (succ[z] >> hi) & 1:
            return False
    return True


def _cover_hit(w: Element, t: InversionTriple, method: str) -> bool:
    g = w.graph
    for c in enumerate_classes(w):
        roots = c.canonical.roots
        pos = {r: i for i, r in enumerate(roots)}
        succ = _closure_masks(g, roots)
        pl, pm, ph = pos[t.low], pos[t.mid], pos[t.high]
        if method == "cover-above":
            if _covers(succ, pl, pm) or _covers(succ, ph, pm):
                return True
        else:
            if _covers(succ, pm, pl) or _covers(succ, pm, ph):
                return True
    return False


def is_contractible(w: Element, t: InversionTriple, method: str = "auto") -> bool:
    """Does some root sequence of w carry the triple consecutively?

    ``auto`` answers True outright when every graph component is a path
    (there every inversion triple is contractible) and otherwise searches
    the class heap orders for the sum covering a summand.  ``cover-above``
    forces that search; ``cover-below`` runs the dual search (a summand
    covering the sum).  The three agree; tests hold them to it.
    """
    t = _validated(w, t)
    if method == "auto":
        if is_path_forest(w.graph):
            return True
        method = "cover-above"
    if method not in ("cover-above", "cover-below"):
        raise ValueError(f"unknown method {method!r}")
    return _cover_hit(w, t, method)


def contractible_triples(w: Element, method: str = "auto") -> frozenset[InversionTriple]:
    # Cached: signature computation asks once per class of the same element.
    return _contractible_cached(w, method)


@lru_cache(maxsize=256)
def _contractible_cached(w: Element, method: str) -> frozenset[InversionTriple]:
    triples = inversion_triples(w)
    if not triples:
        return frozenset()
    if method == "auto" and is_path_forest(w.graph):
        return triples
    if method == "auto":
        method = "cover-above"
    g = w.graph
    prepared = []
    for c in enumerate_classes(w):
        roots = c.canonical.roots
        prepared.append(({r: i for i, r in enumerate(roots)}, _closure_masks(g, roots)))
    out = set()
    for t in triples:
        for pos, succ in prepared:
            pl, pm, ph = pos[t.low], pos[t.mid], pos[t.high]
            if method == "cover-above":
                hit = _covers(succ, pl, pm) or _covers(succ, ph, pm)
            else:
                hit = _covers(succ, pm, pl) or _covers(succ, pm, ph)
            if hit:
                out.add(t)
                break
    return frozenset(out)


def is_freely_braided(w: Element) -> bool:
    """True iff the contractible triples of w are pairwise disjoint."""
    seen: set[Root] = set()
    for t in contractible_triples(w):
        if seen & {t.low, t.mid, t.high}:
            return False
        seen.update((t.low, t.mid, t.high))
    return True


def _migrate_right(g, seq: list[Root], i: int, target: int) -> None:
    while i < target:
        if pairing(g, seq[i], seq[i + 1]) != 0:
            raise RuntimeError("blocked short move while normalizing")
        seq[i], seq[i + 1] = seq[i + 1], seq[i]
        i += 1


def _migrate_left(g, seq: list[Root], i: int, target: int) -> None:
    while i > target:
        if pairing(g, seq[i - 1], seq[i]) != 0:
            raise RuntimeError("blocked short move while normalizing")
        seq[i - 1], seq[i] = seq[i], seq[i - 1]
        i -= 1


def consecutive_normal_form(w: Element, start: RootSequence) -> RootSequence:
    """Short moves only, until every contractible triple sits consecutively.

    Triples are processed left to right by the position of their middle root
    in the starting sequence; within one triple the nearer outer root
    migrates first.  Everything strictly between an outer root and the middle
    root is orthogonal to that outer root, so the migrations are legal short
    moves, and because the triples of a freely braided element are disjoint,
    finished blocks survive later migrations.
    """
    if not is_freely_braided(w):
        raise ValueError("element is not freely braided")
    if start.graph != w.graph or frozenset(start.roots) != inversion_set(w):
        raise ValueError("root sequence does not belong to this element")
    g = w.graph
    triples = sorted(contractible_triples(w), key=lambda t: start.roots.index(t.mid))
    seq = list(start.roots)
    for t in triples:
        pos = {r: i for i, r in enumerate(seq)}
        pm = pos[t.mid]
        pl, ph = sorted((pos[t.low], pos[t.high]))
        if not pl < pm < ph:
            raise RuntimeError("sum root not between its summands")
        if pm - pl <= ph - pm:
            _migrate_right(g, seq, pl, pm - 1)
            _migrate_left(g, seq, ph, pm + 1)
        else:
            _migrate_left(g, seq, ph, pm + 1)
            _migrate_right(g, seq, pl, pm - 1)
    for t in triples:
        where = sorted(seq.index(r) for r in (t.low, t.mid, t.high))
        if where[2] - where[0] != 2:
            raise RuntimeError("normalization failed to make a triple consecutive")
    return RootSequence(g, tuple(seq))

"""Command line interface.

Subcommands: reduce (word calculus), analyze (triples, classes, signatures,
bound), graph (commutation graph as JSON or DOT), enumerate (type-A tables).
Output is JSON with sorted keys by default; --format text switches to a
human layout.  Exit codes: 0 ok, 2 parse error, 3 cap exceeded, 4
verification mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coxeter import (
    CapExceededError,
    DEFAULT_SEQUENCE_CAP,
    Element,
    ParseError,
    element_of,
    format_word,
    parse_graph,
    parse_word,
    root_str,
)
from .classes import (
    PRECEDENCES,
    class_partition,
    commutation_graph,
    count_classes_and_check_bound,
    enumerate_reduced_words,
    f_signature,
    is_bipartite,
    parity,
    to_dot,
)
from .oracle import oracle_classes_by_bfs, oracle_contractible, oracle_reduced_words
from .triples import contractible_triples, inversion_triples, is_contractible, is_freely_braided
from .rootseq import root_sequence
from .typea import (
    enumerate_freely_braided,
    format_permutation,
    parse_permutation,
    perm_to_element,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_CAP = 3
EXIT_VERIFY = 4

DEFAULT_ENUM_RANK_LIMIT = 6


class VerificationError(RuntimeError):
    """Production and oracle disagreed under --verify."""


def _emit(doc: dict, args) -> None:
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))


def _cap(args) -> int:
    if getattr(args, "max_words", None) is not None:
        return args.max_words
    env = os.environ.get("FB_MAX_WORDS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"bad FB_MAX_WORDS value {env!r}") from None
    return DEFAULT_SEQUENCE_CAP


def _element(args) -> tuple[Element, dict]:
    """Build the element named by --graph/--word or --perm, plus echo fields."""
    meta: dict = {}
    if getattr(args, "perm", None) is not None:
        if args.graph or args.word is not None:
            raise ParseError("--perm cannot be combined with --graph/--word")
        p = parse_permutation(args.perm)
        meta["perm"] = format_permutation(p)
        meta["graph"] = f"A{len(p) - 1}"
        return perm_to_element(p), meta
    if not args.graph or args.word is None:
        raise ParseError("need --graph and --word (or --perm)")
    g = parse_graph(args.graph)
    word = parse_word(args.word)
    meta["graph"] = args.graph.strip()
    try:
        w = element_of(g, word)
    except ValueError as e:
        raise ParseError(str(e)) from None
    return w, meta


def cmd_reduce(args) -> int:
    g = parse_graph(args.graph) if args.graph else None
    if g is None or args.word is None:
        raise ParseError("reduce needs --graph and --word")
    word = parse_word(args.word)
    try:
        from .coxeter import reduce_word

        reduced = reduce_word(g, word)
    except ValueError as e:
        raise ParseError(str(e)) from None
    seq = root_sequence(g, reduced)
    inv = sorted(seq.roots)
    doc = {
        "graph": args.graph.strip(),
        "input_word": format_word(word),
        "reduced_word": format_word(reduced),
        "length": len(reduced),
        "inversion_set": [list(r) for r in inv],
        "root_sequence": [list(r) for r in seq.roots],
    }
    _emit(doc, args)
    if args.format == "text":
        print(f"graph: {doc['graph']}")
        print(f"word: {doc['input_word'] or 'e'}")
        print(f"reduced: {doc['reduced_word'] or 'e'}")
        print(f"length: {doc['length']}")
        print(f"inversion set: {', '.join(root_str(r) for r in inv) or '-'}")
        print(f"root sequence: {', '.join(root_str(r) for r in seq.roots) or '-'}")
    return EXIT_OK


def _verify(w: Element, cap: int) -> None:
    produced = set(enumerate_reduced_words(w, cap))
    expected = set(oracle_reduced_words(w, cap))
    if produced != expected:
        raise VerificationError("reduced-word enumeration disagrees with descent oracle")
    if set(class_partition(w, cap)) != set(oracle_classes_by_bfs(w, cap)):
        raise VerificationError("class partition disagrees with BFS oracle")
    for t in sorted(inversion_triples(w)):
        votes = {
            is_contractible(w, t),
            is_contractible(w, t, method="cover-above"),
            is_contractible(w, t, method="cover-below"),
            oracle_contractible(w, t, cap),
        }
        if len(votes) != 1:
            raise VerificationError(f"contractibility verdicts disagree for {t}")


def cmd_analyze(args) -> int:
    w, meta = _element(args)
    cap = _cap(args)
    precedence = PRECEDENCES[args.precedence]
    triples = sorted(inversion_triples(w))
    contractible = contractible_triples(w)
    bound = count_classes_and_check_bound(w, cap)
    graph = commutation_graph(w, cap)
    words = enumerate_reduced_words(w, cap)
    classes = []
    for c in graph.vertices:
        sig = f_signature(w, c, precedence)
        classes.append(
            {
                "canonical": format_word(c.canonical_word),
                "size": c.size,
                "signature_bits": list(sig.vector()),
                "parity": parity(w, c, precedence),
            }
        )
    doc = {
        **meta,
        "element": format_word(words[0]),
        "length": w.length,
        "n_triples": len(triples),
        "N": bound.contractible,
        "class_count": bound.classes,
        "bound_holds": bound.bound_holds,
        "achieves_bound": bound.achieves_bound,
        "freely_braided": is_freely_braided(w),
        "precedence": precedence.name,
        "triples": [
            {
                "low": list(t.low),
                "mid": list(t.mid),
                "high": list(t.high),
                "contractible": t in contractible,
            }
            for t in triples
        ],
        "classes": classes,
        "edges": [list(e) for e in sorted(graph.edges)],
    }
    if args.verify:
        _verify(w, cap)
        doc["verified"] = True
    _emit(doc, args)
    if args.format == "text":
        print(f"element: {doc['element'] or 'e'}  (length {doc['length']})")
        print(
            f"triples: {doc['n_triples']}  contractible: {doc['N']}  "
            f"classes: {doc['class_count']} <= 2^N = {2 ** doc['N']}"
        )
        print(
            f"achieves bound: {str(doc['achieves_bound']).lower()}  "
            f"freely braided: {str(doc['freely_braided']).lower()}"
        )
        for i, c in enumerate(classes):
            bits = "".join(str(b) for b in c["signature_bits"]) or "-"
            sign = "+" if c["parity"] > 0 else "-"
            print(f"class {i}: word={c['canonical'] or 'e'} size={c['size']} bits={bits} parity={sign}")
        if doc["edges"]:
            print("edges: " + " ".join(f"{i}-{j}" for i, j in doc["edges"]))
        if args.verify:
            print("verified against oracles: ok")
    return EXIT_OK


def cmd_graph(args) -> int:
    w, meta = _element(args)
    cap = _cap(args)
    precedence = PRECEDENCES[args.precedence]
    graph = commutation_graph(w, cap)
    parities = tuple(parity(w, c, precedence) for c in graph.vertices) if args.parity else None
    label = format_word(enumerate_reduced_words(w, cap)[0]) or "e"
    if args.dot:
        sys.stdout.write(to_dot(graph, parities, label))
        return EXIT_OK
    verdict = is_bipartite(graph)
    doc = {
        **meta,
        "element": label,
        "vertices": [
            {
                "canonical": format_word(c.canonical_word),
                "size": c.size,
                **({"parity": parities[i]} if parities else {}),
            }
            for i, c in enumerate(graph.vertices)
        ],
        "edges": [list(e) for e in sorted(graph.edges)],
        "bipartite": verdict.bipartite,
    }
    _emit(doc, args)
    if args.format == "text":
        print(f"element: {label}")
        for i, v in enumerate(doc["vertices"]):
            extra = f" parity={'+' if v.get('parity', 1) > 0 else '-'}" if args.parity else ""
            print(f"vertex {i}: {v['canonical'] or 'e'} (size {v['size']}){extra}")
        print("edges: " + (" ".join(f"{i}-{j}" for i, j in doc["edges"]) or "-"))
        print(f"bipartite: {str(verdict.bipartite).lower()}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    if args.type != "A":
        raise ParseError(f"unsupported type {args.type!r}; only A is available")
    if args.n < 1:
        raise ParseError("rank must be at least 1")
    if args.n > args.limit:
        raise CapExceededError(f"rank {args.n} exceeds the enumeration limit {args.limit}")
    from itertools import permutations

    rows = []
    for k in range(1, args.n + 1):
        count, _ = enumerate_freely_braided(k, limit=args.limit)
        achievers = 0
        for p in permutations(range(1, k + 1)):
            if count_classes_and_check_bound(perm_to_element(p)).achieves_bound:
                achievers += 1
        rows.append({"n": k, "freely_braided": count, "bound_achievers": achievers})
    doc = {"type": "A", "rows": rows}
    _emit(doc, args)
    if args.format == "text":
        print(f"{'n':>3} {'freely_braided':>15} {'bound_achievers':>16}")
        for row in rows:
            print(f"{row['n']:>3} {row['freely_braided']:>15} {row['bound_achievers']:>16}")
    return EXIT_OK


def _add_element_args(p: argparse.ArgumentParser, perm: bool = True) -> None:
    p.add_argument("-g", "--graph", help="graph spec: A5, D4, E8, or an edge list like 1-2,2-3")
    p.add_argument("-w", "--word", help="word as generator indices, e.g. '1 2 1' or 1,2,1")
    if perm:
        p.add_argument("--perm", help="one-line permutation (implies the matching path graph)")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-words", type=int, default=None,
                   help="cap on enumerated root sequences (overrides FB_MAX_WORDS)")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads; results are deterministic regardless "
                        "(the enumerator runs single-threaded per call)")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--precedence", choices=tuple(PRECEDENCES), default="lex",
                   help="root order used for signature bits")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fb", description="Root-sequence calculus for simply laced Coxeter groups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="reduce a word; print inversion set and root sequence")
    _add_element_args(p, perm=False)
    _add_common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("analyze", help="triples, classes, signatures, bound check")
    _add_element_args(p)
    _add_common(p)
    p.add_argument("--verify", action="store_true", help="cross-check against brute-force oracles")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("graph", help="commutation graph as JSON or DOT")
    _add_element_args(p)
    _add_common(p)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    p.add_argument("--parity", action="store_true", help="color vertices by signature parity")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("enumerate", help="type-A counts: freely braided vs bound achievers")
    p.add_argument("--type", default="A", help="Coxeter family (only A)")
    p.add_argument("-n", type=int, required=True, help="largest rank to tabulate")
    p.add_argument("--freely-braided", action="store_true",
                   help="tabulate freely braided counts (the default and only table)")
    p.add_argument("--limit", type=int, default=DEFAULT_ENUM_RANK_LIMIT,
                   help="largest rank the table may request")
    _add_common(p)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "threads", 1) < 1:
            raise ParseError("--threads must be at least 1")
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as e:
        partial = f" (partial count: {e.count})" if e.count is not None else ""
        print(f"error: {e}{partial}", file=sys.stderr)
        return EXIT_CAP
    except VerificationError as e:
        print(f"verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFY
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())

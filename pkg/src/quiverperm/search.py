"""Exhaustive desk-scale enumeration: green sequences, loops, and the
exchange graph of c-matrices.

Everything here is deterministic.  Depth-first searches visit mutation
directions in increasing vertex order, so enumerations come out in
lexicographic order; when a search is fanned out across workers the
collected results are sorted back into that order.

Counting functions deliberately use a different traversal style than their
enumerating counterparts (breadth-first level counts against depth-first
listings, flat replay against prefix-sharing search) so that agreement
between the two is evidence, not tautology.
"""

from __future__ import annotations

import json
import threading
from collections import Counter
from dataclasses import dataclass, field
from itertools import product
from typing import IO, Optional

from .formula import TrackedState
from .perm import Permutation
from .picture import PictureWord, SignedGenerator
from .quiver import (Color, ExchangeMatrix, ExtendedExchangeMatrix, IntMatrix,
                     find_row_permutation, framed, mutate, reconstructed_b,
                     vertex_color)
from .roots import vector_to_signed_root


@dataclass
class ExchangeGraph:
    """All states reachable from the framed quiver, keyed by c-matrix.

    The b-part is determined by the c-part (B = C B0 C^t), so the c-matrix
    alone is a faithful key; the builder checks that identity at every
    insert.  ``edges[key][k-1]`` is the key reached by mutating at k.
    """

    b0: ExchangeMatrix
    root: IntMatrix
    nodes: dict[IntMatrix, ExtendedExchangeMatrix] = field(default_factory=dict)
    edges: dict[IntMatrix, tuple[IntMatrix, ...]] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.b0.n

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def state(self, key: IntMatrix) -> ExtendedExchangeMatrix:
        return self.nodes[key]

    def standard_nodes(self) -> list[ExtendedExchangeMatrix]:
        from .standard import is_standard
        return [m for key, m in self.nodes.items() if is_standard(key)]


def build_exchange_graph(n: int, bound: int = 5) -> ExchangeGraph:
    """Breadth-first closure of the framed straight-A_n state under mutation.

    ``bound`` guards against accidentally huge runs; raise it consciously.
    """
    if n > bound:
        raise ValueError(f"n={n} exceeds the configured bound {bound}")
    b0 = ExchangeMatrix.straight_a(n)
    start = framed(b0)
    graph = ExchangeGraph(b0, start.c)
    graph.nodes[start.c] = start
    queue = [start]
    while queue:
        nxt = []
        for state in queue:
            neighbor_keys = []
            for k in range(1, n + 1):
                neighbor = mutate(state, k)
                neighbor_keys.append(neighbor.c)
                known = graph.nodes.get(neighbor.c)
                if known is None:
                    if neighbor.b != reconstructed_b(b0.b, neighbor.c):
                        raise AssertionError(
                            "b-part disagrees with C B0 C^t at a new node")
                    graph.nodes[neighbor.c] = neighbor
                    nxt.append(neighbor)
                elif known != neighbor:
                    raise AssertionError(
                        "two mutation paths reached the same c-matrix "
                        "with different b-parts")
            graph.edges[state.c] = tuple(neighbor_keys)
        queue = nxt
    return graph


def count_reachable_states(n: int) -> int:
    """Iterative depth-first recount of distinct c-matrices; shares no
    traversal code with build_exchange_graph."""
    start = framed(ExchangeMatrix.straight_a(n))
    seen = {start.c}
    stack = [start]
    while stack:
        state = stack.pop()
        for k in range(n, 0, -1):
            neighbor = mutate(state, k)
            if neighbor.c not in seen:
                seen.add(neighbor.c)
                stack.append(neighbor)
    return len(seen)


@dataclass(frozen=True)
class MGSResult:
    sequence: tuple[int, ...]
    word: PictureWord
    permutation: Permutation


def _green_vertices(state: ExtendedExchangeMatrix) -> list[int]:
    return [k for k in range(1, state.n + 1)
            if vertex_color(state, k) is Color.GREEN]


def enumerate_mgs(n: int, max_len: Optional[int] = None,
                  workers: int = 1) -> list[MGSResult]:
    """All maximal green sequences of straight A_n, lexicographic order.

    A sequence is emitted when no green vertex remains.  Each result
    carries the word it spells and the permutation predicted by the
    transposition product.  ``max_len`` abandons longer prefixes; finite
    type never needs it.  ``workers`` > 1 splits the top-level branches
    across threads; the result is identical.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    start = TrackedState.from_state(framed(ExchangeMatrix.straight_a(n)))
    out: list[MGSResult] = []
    lock = threading.Lock()

    def dfs(ts: TrackedState, seq: list[int],
            factors: list[SignedGenerator], sink: list[MGSResult]):
        greens = _green_vertices(ts.state)
        if not greens:
            sink.append(MGSResult(tuple(seq), PictureWord(tuple(factors)),
                                  ts.sigma))
            return
        if max_len is not None and len(seq) >= max_len:
            return
        for k in greens:
            sr = vector_to_signed_root(ts.state.c_row(k))
            seq.append(k)
            factors.append(SignedGenerator(sr.root, sr.sign))
            dfs(ts.step_vertex(k), seq, factors, sink)
            seq.pop()
            factors.pop()

    if workers <= 1:
        dfs(start, [], [], out)
        return out

    def branch(k: int):
        sr = vector_to_signed_root(start.state.c_row(k))
        local: list[MGSResult] = []
        dfs(start.step_vertex(k), [k], [SignedGenerator(sr.root, sr.sign)],
            local)
        with lock:
            out.extend(local)

    threads = [threading.Thread(target=branch, args=(k,))
               for k in _green_vertices(start.state)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    out.sort(key=lambda r: r.sequence)
    return out


def count_mgs(n: int, max_len: Optional[int] = None) -> int:
    """Breadth-first count of maximal green sequences.

    Walks level by level carrying path multiplicities per state, so no
    sequence is ever materialized.  Independent of enumerate_mgs.
    """
    start = framed(ExchangeMatrix.straight_a(n))
    level: Counter = Counter({start: 1})
    total = 0
    depth = 0
    while level:
        if max_len is not None and depth > max_len:
            raise RuntimeError(f"green sequences exceed max_len={max_len}")
        nxt: Counter = Counter()
        for state, mult in level.items():
            greens = _green_vertices(state)
            if not greens:
                total += mult
                continue
            for k in greens:
                nxt[mutate(state, k)] += mult
        level = nxt
        depth += 1
    return total


@dataclass(frozen=True)
class LoopResult:
    sequence: tuple[int, ...]
    permutation: Permutation


def enumerate_loops(m: ExtendedExchangeMatrix,
                    max_len: int = 10) -> list[LoopResult]:
    """Every sequence of length <= max_len that returns to ``m`` up to a
    row permutation, with that permutation.  Includes the trivial loops
    (k, k).  Depth-first over the full prefix tree, so lexicographic with
    prefixes first.
    """
    base_rows = frozenset(m.c)
    out: list[LoopResult] = []
    seq: list[int] = []

    def dfs(state: ExtendedExchangeMatrix):
        if len(seq) >= max_len:
            return
        for k in range(1, m.n + 1):
            neighbor = mutate(state, k)
            seq.append(k)
            if frozenset(neighbor.c) == base_rows:
                rho = find_row_permutation(m, neighbor)
                if rho is not None:
                    out.append(LoopResult(tuple(seq), rho))
            dfs(neighbor)
            seq.pop()

    dfs(m)
    return out


def count_loops_by_replay(m: ExtendedExchangeMatrix, max_len: int = 10) -> int:
    """Flat recount of loops: replay every sequence from scratch.  Shares
    no traversal state with enumerate_loops."""
    total = 0
    for length in range(1, max_len + 1):
        for seq in product(range(1, m.n + 1), repeat=length):
            state = m
            for k in seq:
                state = mutate(state, k)
            if frozenset(state.c) == frozenset(m.c) \
                    and find_row_permutation(m, state) is not None:
                total += 1
    return total


def mgs_census(n: int, max_len: Optional[int] = None) -> dict:
    """Count, length histogram, permutation histogram and length range of
    the maximal green sequences of straight A_n."""
    if n > 5:
        raise ValueError("census is desk-scale: need n <= 5")
    results = enumerate_mgs(n, max_len)
    lengths = Counter(len(r.sequence) for r in results)
    perms = Counter(r.permutation.cycle_string() for r in results)
    return {
        "n": n,
        "count": len(results),
        "lengths": dict(sorted(lengths.items())),
        "permutations": dict(sorted(perms.items())),
        "min_length": min(lengths) if results else None,
        "max_length": max(lengths) if results else None,
    }


def write_mgs_jsonl(results: list[MGSResult], fp: IO[str]) -> None:
    """One sequence per line: vertices, word, permutation, length."""
    for r in results:
        fp.write(json.dumps({
            "vertices": list(r.sequence),
            "word": r.word.to_json(),
            "permutation": r.permutation.cycle_string(),
            "length": len(r.sequence),
        }) + "\n")


def write_loops_jsonl(results: list[LoopResult], fp: IO[str]) -> None:
    for r in results:
        fp.write(json.dumps({
            "vertices": list(r.sequence),
            "permutation": r.permutation.cycle_string(),
            "length": len(r.sequence),
        }) + "\n")


def graph_to_dot(graph: ExchangeGraph) -> str:
    """DOT rendering of the exchange graph, nodes labeled by c-matrices."""
    ids = {key: f"s{idx}" for idx, key in enumerate(graph.nodes)}
    lines = ["graph exchange {", "  node [shape=box, fontname=monospace];"]
    for key, node_id in ids.items():
        label = "\\n".join(" ".join(str(x) for x in row) for row in key)
        lines.append(f'  {node_id} [label="{label}"];')
    for key, neighbors in graph.edges.items():
        for k, other in enumerate(neighbors, start=1):
            # mutation is involutive, so each edge shows up from both ends;
            # keep the copy from the smaller node id
            if ids[key] < ids[other]:
                lines.append(f'  {ids[key]} -- {ids[other]} [label="{k}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"

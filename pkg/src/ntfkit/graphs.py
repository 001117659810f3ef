"""Simple graphs on vertices 1..n and the monomial ideals attached to them.

Vertex ``i`` corresponds to variable ``x_i``; every graph ideal lives in a
context of exactly ``n`` variables.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .decomposition import alexander_dual
from .errors import BudgetExceededError, InvalidIdealError, ParseError
from .ideal import MonomialIdeal, intersect
from .monomial import Monomial, VarContext

DOMINATION_MAX_VERTICES = 16


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset  # of frozenset({u, v})

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        if n < 1:
            raise ValueError("a graph needs at least one vertex")
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge {u}-{v} outside vertices 1..{n}")
            e = frozenset((u, v))
            if e in seen:
                raise ValueError(f"duplicate edge {u}-{v}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def ctx(self) -> VarContext:
        return VarContext.standard(self.n)

    def edge_list(self):
        return sorted(tuple(sorted(e)) for e in self.edges)

    def neighbors(self, v: int) -> set:
        return {u for e in self.edges if v in e for u in e if u != v}

    def closed_neighborhood(self, v: int) -> frozenset:
        if not 1 <= v <= self.n:
            raise IndexError(f"vertex {v} outside 1..{self.n}")
        return frozenset(self.neighbors(v) | {v})

    def is_connected(self) -> bool:
        seen = {1}
        todo = [1]
        while todo:
            v = todo.pop()
            for u in self.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return len(seen) == self.n


def closed_neighborhood(G: Graph, v: int) -> frozenset:
    return G.closed_neighborhood(v)


# ---------------------------------------------------------------------------
# families


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def star_graph(n: int) -> Graph:
    """Star with center 1 and leaves 2..n."""
    return Graph.from_edges(n, [(1, i) for i in range(2, n + 1)])


def prufer_to_edges(seq, n: int):
    """Edges of the labeled tree on 1..n encoded by the Prüfer sequence ``seq``."""
    if len(seq) != n - 2:
        raise ValueError("Prüfer sequence must have length n - 2")
    degree = [1] * (n + 1)
    for a in seq:
        degree[a] += 1
    edges = []
    for a in seq:
        leaf = next(i for i in range(1, n + 1) if degree[i] == 1)
        edges.append((leaf, a))
        degree[leaf] -= 1
        degree[a] -= 1
    u, v = (i for i in range(1, n + 1) if degree[i] == 1)
    edges.append((u, v))
    return edges


def tree_from_prufer(seq, n: int) -> Graph:
    if n == 1:
        return Graph(1, frozenset())
    if n == 2:
        return Graph.from_edges(2, [(1, 2)])
    return Graph.from_edges(n, prufer_to_edges(seq, n))


def random_tree(n: int, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return tree_from_prufer([rng.randint(1, n) for _ in range(max(0, n - 2))], n)


def all_labeled_trees(n: int):
    """Every labeled tree on 1..n (``n^(n-2)`` of them), via Prüfer sequences."""
    if n <= 2:
        yield tree_from_prufer((), n)
        return
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        yield tree_from_prufer(seq, n)


def all_graphs(n: int):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def build_graph(kind: str, n: int, seed: int = 0, edges=None) -> Graph:
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "star":
        return star_graph(n)
    if kind in ("tree", "random-tree"):
        return random_tree(n, seed)
    if kind == "edge-list":
        return Graph.from_edges(n, edges or [])
    raise ValueError(f"unknown graph kind {kind!r}")


# ---------------------------------------------------------------------------
# ideals


def _require_edges(G: Graph) -> None:
    if not G.edges:
        raise InvalidIdealError("graph has no edges")


def edge_ideal(G: Graph) -> MonomialIdeal:
    _require_edges(G)
    ctx = G.ctx
    return MonomialIdeal.from_monomials(ctx, [Monomial.from_support(ctx, e) for e in G.edges])


def cover_ideal(G: Graph) -> MonomialIdeal:
    """Alexander dual of the edge ideal: generated by the minimal vertex covers."""
    return alexander_dual(edge_ideal(G))


def cover_ideal_by_intersection(G: Graph) -> MonomialIdeal:
    _require_edges(G)
    ctx = G.ctx
    return intersect(*(MonomialIdeal.generated_by_vars(ctx, e) for e in G.edge_list()))


def neighborhood_ideal(G: Graph) -> MonomialIdeal:
    """``NI(G)``: products over the closed neighborhood of each vertex."""
    ctx = G.ctx
    return MonomialIdeal.from_monomials(
        ctx, [Monomial.from_support(ctx, G.closed_neighborhood(v)) for v in range(1, G.n + 1)]
    )


def _neighborhood_masks(G: Graph):
    return [sum(1 << (u - 1) for u in G.closed_neighborhood(v)) for v in range(1, G.n + 1)]


def minimal_dominating_sets(G: Graph) -> list:
    """All inclusion-minimal dominating sets, in size-then-lex order."""
    if G.n > DOMINATION_MAX_VERTICES:
        raise BudgetExceededError(
            f"dominating-set enumeration limited to {DOMINATION_MAX_VERTICES} vertices"
        )
    nbhd = _neighborhood_masks(G)

    def dominates(mask):
        return all(nb & mask for nb in nbhd)

    found = []
    for size in range(1, G.n + 1):
        for S in itertools.combinations(range(1, G.n + 1), size):
            mask = sum(1 << (v - 1) for v in S)
            # skip supersets of a set already found; they are never minimal
            if any(f & mask == f for f in found):
                continue
            if not dominates(mask):
                continue
            if all(not dominates(mask & ~(1 << (v - 1))) for v in S):
                found.append(mask)
    return [frozenset(v for v in range(1, G.n + 1) if m >> (v - 1) & 1) for m in found]


def dominating_ideal(G: Graph, verify: bool = False) -> MonomialIdeal:
    """``DI(G)`` from the minimal dominating sets.

    With ``verify`` the result is compared with the Alexander dual of
    ``NI(G)`` and a mismatch raises ``AssertionError``.
    """
    ctx = G.ctx
    DI = MonomialIdeal.from_monomials(
        ctx, [Monomial.from_support(ctx, S) for S in minimal_dominating_sets(G)]
    )
    if verify and DI != alexander_dual(neighborhood_ideal(G)):
        raise AssertionError(f"DI(G) differs from NI(G)^dual for edges {G.edge_list()}")
    return DI


def domination_number(G: Graph) -> int:
    return min(len(S) for S in minimal_dominating_sets(G))


def is_bipartite(G: Graph) -> bool:
    color = {}
    for start in range(1, G.n + 1):
        if start in color:
            continue
        color[start] = 0
        todo = [start]
        while todo:
            v = todo.pop()
            for u in G.neighbors(v):
                if u not in color:
                    color[u] = 1 - color[v]
                    todo.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def is_tree(G: Graph) -> bool:
    return len(G.edges) == G.n - 1 and G.is_connected()


# ---------------------------------------------------------------------------
# graph files


def format_graph_file(G: Graph) -> str:
    lines = [f"graph {G.n}"] + [f"edge {u} {v}" for u, v in G.edge_list()]
    return "\n".join(lines) + "\n"


def parse_graph_file(text: str) -> Graph:
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "graph" or len(parts) != 2 or not parts[1].isdigit() or int(parts[1]) < 1:
                raise ParseError("expected 'graph <n>'", lineno, 1)
            n = int(parts[1])
            continue
        if parts[0] != "edge" or len(parts) != 3 or not all(p.isdigit() for p in parts[1:]):
            raise ParseError("expected 'edge <u> <v>'", lineno, 1)
        u, v = int(parts[1]), int(parts[2])
        if u == v:
            raise ParseError(f"loop edge at vertex {u}", lineno, 6)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex outside 1..{n}", lineno, 6)
        if frozenset((u, v)) in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno, 1)
        seen.add(frozenset((u, v)))
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'graph <n>' header")
    return Graph.from_edges(n, edges)

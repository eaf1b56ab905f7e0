"""Immutable simple undirected graphs: construction, parsing, generators,
and the structural queries every solver builds on.

Vertices are dense integers ``0..n-1``. Optional string labels ride along for
display purposes only; all computation happens on indices. Two adjacency views
are exposed: neighbor tuples (``adj_lists``, cheap at any scale) and per-vertex
integer bitmasks (``adj_masks``, built lazily, intended for small graphs where
the predicate and search code lives).
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

__all__ = [
    "Graph",
    "Block",
    "BlockDecomposition",
    "ParseError",
    "parse_graph",
    "serialize_graph",
    "generate",
    "from_edge_mask",
    "edge_mask_of",
    "FIGURE_MATCHINGS",
    "open_neighborhood",
    "closed_neighborhood",
    "induced_subgraph",
    "complement",
    "components",
    "is_connected",
    "is_bipartite",
    "is_acyclic_graph",
    "block_decomposition",
    "is_edge_cut",
]

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Edges are stored as a sorted tuple of (u, v) pairs with u < v; duplicates
    collapse silently, self-loops are rejected. Instances are immutable and
    hashable, so every query below is pure and safe to share across threads.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        seen = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            seen.add(_canon(u, v))
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.n:
                raise ValueError("labels must provide one entry per vertex")
            object.__setattr__(self, "labels", labels)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def adj_lists(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor tuples; linear in n + m, usable at any scale."""
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks. Memory grows with n**2 / 8; only ask
        for this on desk-scale graphs (the solvers and predicates do)."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def closed_adj_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.adj_masks))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        self._check_vertex(v)
        return frozenset(self.adj_lists[v])

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adj_lists[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edge_set

    def label(self, v: int) -> str:
        self._check_vertex(v)
        return self.labels[v] if self.labels is not None else str(v)

    def _check_vertex(self, v: int):
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")

    def _check_edge(self, e) -> Edge:
        u, v = e
        ce = _canon(u, v)
        if ce not in self.edge_set:
            raise ValueError(f"{e} is not an edge of this graph")
        return ce


# -- structural queries ----------------------------------------------------


def open_neighborhood(G: Graph, v: int) -> frozenset[int]:
    """N(v): the vertices adjacent to v (never contains v itself)."""
    return G.neighbors(v)


def closed_neighborhood(G: Graph, v: int) -> frozenset[int]:
    """N[v] = N(v) together with v."""
    return G.neighbors(v) | {v}


def induced_subgraph(G: Graph, S) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on vertex set S, plus the map from new indices back
    to the original ones (position i holds the original index)."""
    order = sorted(set(S))
    for v in order:
        G._check_vertex(v)
    index = {v: i for i, v in enumerate(order)}
    edges = [
        (index[u], index[v]) for u, v in G.edges if u in index and v in index
    ]
    labels = tuple(G.label(v) for v in order) if G.labels is not None else None
    return Graph(len(order), tuple(edges), labels), tuple(order)


def complement(G: Graph) -> Graph:
    edges = [
        (u, v) for u, v in combinations(range(G.n), 2) if not G.has_edge(u, v)
    ]
    return Graph(G.n, tuple(edges), G.labels)


def components(G: Graph) -> list[frozenset[int]]:
    """Connected components, sorted by smallest member. Empty graph: []."""
    seen = [False] * G.n
    out: list[frozenset[int]] = []
    adj = G.adj_lists
    for s in range(G.n):
        if seen[s]:
            continue
        comp = [s]
        seen[s] = True
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(G: Graph) -> bool:
    """True when G has at most one component (n = 0 counts as connected)."""
    return len(components(G)) <= 1


def is_bipartite(G: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A bipartition (A, B) with every edge crossing, or None when some odd
    cycle makes one impossible. Isolated vertices land in A."""
    color = [-1] * G.n
    adj = G.adj_lists
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    a = frozenset(v for v in range(G.n) if color[v] == 0)
    b = frozenset(v for v in range(G.n) if color[v] == 1)
    return a, b


def is_acyclic_graph(G: Graph) -> bool:
    """True iff G is a forest, i.e. |E| = n - #components."""
    return G.m == G.n - len(components(G))


@dataclass(frozen=True)
class Block:
    """One block (maximal biconnected subgraph); bridges appear as 2-vertex
    blocks. ``kind`` is "edge", "odd_cycle" (chordless, length >= 3) or
    "other"."""

    vertices: frozenset[int]
    edges: tuple[Edge, ...]
    kind: str


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]


def _classify_block(vertices: frozenset[int], edges: tuple[Edge, ...]) -> str:
    if len(vertices) == 2:
        return "edge"
    # A biconnected graph with |E| = |V| is a single cycle, and an induced
    # block carries no extra edges, so the cycle is automatically chordless.
    if len(vertices) % 2 == 1 and len(edges) == len(vertices):
        return "odd_cycle"
    return "other"


def block_decomposition(G: Graph) -> BlockDecomposition:
    """Standard biconnected components via an iterative lowpoint DFS.

    Every edge lands in exactly one block; isolated vertices are in none.
    """
    adj = G.adj_lists
    disc = [-1] * G.n
    low = [0] * G.n
    timer = 0
    edge_stack: list[Edge] = []
    raw_blocks: list[list[Edge]] = []
    cuts: set[int] = set()

    for root in range(G.n):
        if disc[root] != -1 or not adj[root]:
            continue
        root_children = 0
        # frames: (vertex, parent, iterator position)
        stack = [(root, -1, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, i = stack.pop()
            if i < len(adj[v]):
                stack.append((v, parent, i + 1))
                w = adj[v][i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append(_canon(v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                    if v == root:
                        root_children += 1
                elif disc[w] < disc[v]:
                    edge_stack.append(_canon(v, w))
                    low[v] = min(low[v], disc[w])
            else:
                if parent != -1:
                    low[parent] = min(low[parent], low[v])
                    if low[v] >= disc[parent]:
                        blk = []
                        while edge_stack:
                            e = edge_stack.pop()
                            blk.append(e)
                            if e == _canon(parent, v):
                                break
                        raw_blocks.append(blk)
                        if parent != root:
                            cuts.add(parent)
        if root_children > 1:
            cuts.add(root)

    blocks = []
    for blk in raw_blocks:
        vs = frozenset(v for e in blk for v in e)
        es = tuple(sorted(set(blk)))
        blocks.append(Block(vs, es, _classify_block(vs, es)))
    blocks.sort(key=lambda b: min(b.vertices))
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def is_edge_cut(G: Graph, F) -> bool:
    """True iff removing the edge set F leaves strictly more components."""
    removed = {G._check_edge(e) for e in F}
    if not removed:
        return False
    before = len(components(G))
    after = len(components(Graph(G.n, tuple(G.edge_set - removed))))
    return after > before


# -- parsing and serialization ---------------------------------------------


class ParseError(ValueError):
    pass


def _parse_int_pair(tokens, lineno):
    if len(tokens) != 2:
        raise ParseError(f"line {lineno}: expected two integers, got {tokens!r}")
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError:
        raise ParseError(f"line {lineno}: expected two integers, got {tokens!r}") from None


def parse_graph(text: str) -> Graph:
    """Parse a graph from edge-list or DIMACS-like text (auto-detected).

    Edge list: one "u v" pair per line, '#' comments, blank lines ignored.
    An optional "n m" header is recognized on the first data line when its
    second integer equals the number of remaining data lines and the pair is
    plausible as a header (not "0 0", and n >= 2 whenever m > 0); anything
    else reads as an edge, so "0 0" is rejected as a self-loop. A file with
    no data lines is the empty graph on zero vertices.

    DIMACS-like: a "p edge n m" header followed by m lines "e u v" with
    1-indexed endpoints; 'c' comment lines are skipped.

    Duplicate edge lines, self-loops, endpoints at or above the declared
    vertex count, and malformed lines are all errors.
    """
    data: list[tuple[int, str]] = []
    dimacs = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line[0] == "c" and line[:2] in ("c", "c "):
            continue
        if line.startswith("p "):
            dimacs = True
        data.append((lineno, line))

    if dimacs:
        return _parse_dimacs(data)
    return _parse_edge_list(data)


def _parse_edge_list(data) -> Graph:
    if not data:
        return Graph(0)
    declared_n = None
    start = 0
    first_tokens = data[0][1].split()
    if len(first_tokens) == 2 and all(t.lstrip("-").isdigit() for t in first_tokens):
        a, b = int(first_tokens[0]), int(first_tokens[1])
        plausible = (a, b) != (0, 0) and (b == 0 or a >= 2)
        if b == len(data) - 1 and plausible:
            declared_n = a
            start = 1

    edges: list[Edge] = []
    seen = set()
    max_v = -1
    for lineno, line in data[start:]:
        u, v = _parse_int_pair(line.split(), lineno)
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex index")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        e = _canon(u, v)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(e)
        edges.append(e)
        max_v = max(max_v, u, v)

    n = max_v + 1 if declared_n is None else declared_n
    if max_v >= n:
        raise ParseError(f"endpoint {max_v} exceeds declared vertex count {n}")
    return Graph(n, tuple(edges))


def _parse_dimacs(data) -> Graph:
    n = m = None
    edges: list[Edge] = []
    seen = set()
    for lineno, line in data:
        tokens = line.split()
        if tokens[0] == "p":
            if n is not None:
                raise ParseError(f"line {lineno}: second problem line")
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"line {lineno}: expected 'p edge n m'")
            n, m = int(tokens[2]), int(tokens[3])
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(f"line {lineno}: edge before problem line")
            u, v = _parse_int_pair(tokens[1:], lineno)
            u, v = u - 1, v - 1
            if u == v:
                raise ParseError(f"line {lineno}: self-loop at vertex {u + 1}")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"line {lineno}: endpoint outside 1..{n}")
            e = _canon(u, v)
            if e in seen:
                raise ParseError(f"line {lineno}: duplicate edge")
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"line {lineno}: unrecognized line {line!r}")
    if n is None:
        raise ParseError("missing 'p edge n m' line")
    if m is not None and m != len(edges):
        raise ParseError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, tuple(edges))


def serialize_graph(G: Graph) -> str:
    """Canonical edge-list text: "n m" header then sorted "u v" lines.

    The empty graph serializes to the empty string; parse_graph round-trips
    every serialized graph.
    """
    if G.n == 0:
        return ""
    lines = [f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


# -- generators -------------------------------------------------------------


def _pair_index(n: int) -> list[Edge]:
    return list(combinations(range(n), 2))


def from_edge_mask(n: int, mask: int) -> Graph:
    """Graph on n vertices whose edges are the set bits of ``mask`` over the
    lexicographic pair ordering (0,1), (0,2), ..., (n-2, n-1)."""
    pairs = _pair_index(n)
    if mask < 0 or mask >= (1 << len(pairs)):
        raise ValueError("edge mask out of range")
    edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
    return Graph(n, edges)


def edge_mask_of(G: Graph) -> int:
    pos = {e: i for i, e in enumerate(_pair_index(G.n))}
    mask = 0
    for e in G.edges:
        mask |= 1 << pos[e]
    return mask


def _path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def _complete(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(n), 2)))


def _complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ValueError("both part sizes must be at least 1")
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def _hypercube(d: int) -> Graph:
    if d < 1:
        raise ValueError("hypercube dimension must be at least 1")
    n = 1 << d
    edges = []
    for x in range(n):
        for b in range(d):
            y = x ^ (1 << b)
            if y > x:
                edges.append((x, y))
    return Graph(n, tuple(edges))


def _gnp(n: int, p: float, seed) -> Graph:
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = tuple(e for e in combinations(range(n), 2) if rng.random() < p)
    return Graph(n, edges)


def _random_tree(n: int, seed) -> Graph:
    rng = random.Random(seed)
    if n <= 1:
        return Graph(n)
    if n == 2:
        return Graph(2, ((0, 1),))
    prufer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in prufer:
        leaf = heapq.heappop(leaves)
        edges.append(_canon(leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append(_canon(u, w))
    return Graph(n, tuple(edges))


# Named example graphs: eight-vertex fixtures on two rows of four, built to
# exercise the rarer variants. Indices follow reading order, top row 0..3,
# bottom row 4..7 directly below; every fixture's bundled matching is the
# four vertical rungs 0-4, 1-5, 2-6, 3-7.
#
# fig2l: rungs plus slants 0-5, 0-6, 1-6, 3-6. The rung matching is uniquely
#   restricted (the only cycle, 0-5-1-6, carries a single matched edge).
# fig2r: rungs plus slants 0-7, 1-4, 2-5, 3-6, an 8-cycle in disguise, so the
#   rung matching sits on an alternating cycle and is not uniquely restricted.
# fig3: labels 1 2 3 4 / 1' 2' 3' 4'. Top path 2-3-4, rungs, and the slant
#   1'-2'. The rung matching is independent (orient tails to 1, 2, 3', 4).
# fig4: labels as fig3. Top edge 1-2, rungs, slants 2'-3 and 3'-4. The rung
#   matching is bipartite (tails 1, 2', 3', 4' against heads 1', 2, 3, 4).
_PRIMED = ("1", "2", "3", "4", "1'", "2'", "3'", "4'")

_FIGURES = {
    "fig2l": Graph(8, ((0, 4), (1, 5), (2, 6), (3, 7), (0, 5), (0, 6), (1, 6), (3, 6))),
    "fig2r": Graph(8, ((0, 4), (1, 5), (2, 6), (3, 7), (0, 7), (1, 4), (2, 5), (3, 6))),
    "fig3": Graph(8, ((1, 2), (2, 3), (0, 4), (4, 5), (1, 5), (2, 6), (3, 7)), _PRIMED),
    "fig4": Graph(8, ((0, 1), (0, 4), (1, 5), (2, 5), (2, 6), (3, 6), (3, 7)), _PRIMED),
}

#: The matching drawn in each named example graph (all four use the rungs).
FIGURE_MATCHINGS: dict[str, tuple[Edge, ...]] = {
    name: ((0, 4), (1, 5), (2, 6), (3, 7)) for name in _FIGURES
}


def generate(
    family: str,
    n: int | None = None,
    a: int | None = None,
    b: int | None = None,
    p: float | None = None,
    seed=None,
) -> Graph:
    """Build a graph from a named family.

    Families: path, cycle, complete, complete_bipartite (sizes a, b),
    hypercube (dimension n), gnp (size n, probability p, seed), random_tree
    (size n, seed), and the named example graphs fig2l, fig2r, fig3, fig4.
    Randomized families are deterministic for a fixed seed.
    """
    fam = family.lower().replace("-", "_")
    if fam in _FIGURES:
        return _FIGURES[fam]

    def need_n(minimum=1):
        if n is None or n < minimum:
            raise ValueError(f"family {family!r} needs n >= {minimum}")
        return n

    if fam == "path":
        return _path(need_n())
    if fam == "cycle":
        return _cycle(need_n(3))
    if fam == "complete":
        return _complete(need_n())
    if fam == "complete_bipartite":
        if a is None or b is None:
            raise ValueError("complete_bipartite needs part sizes a and b")
        return _complete_bipartite(a, b)
    if fam == "hypercube":
        return _hypercube(need_n())
    if fam == "gnp":
        if p is None:
            raise ValueError("gnp needs an edge probability p")
        return _gnp(need_n(), p, seed)
    if fam == "random_tree":
        return _random_tree(need_n(), seed)
    raise ValueError(f"unknown graph family {family!r}")

"""Simple undirected graphs: parsing, structure queries, and tree enumeration.

Everything downstream (index evaluation, inequality checks, QSPR) works on
the immutable :class:`Graph` container defined here.  The module also owns
the generation side: standard families (paths, cycles, stars, complete and
complete bipartite graphs), seeded random connected graphs, and the
enumeration of the 18 octane carbon skeletons (trees on 8 vertices with
maximum degree 4).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, NamedTuple


class GraphParseError(ValueError):
    """Raised when an edge-list document is malformed; names the bad line."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..vertex_count-1.

    Edges are stored as a frozenset of (u, v) pairs with u < v; the degree
    sequence is derived once and cached.  No self-loops, no multi-edges.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range or unnormalized")

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered vertex pairs, rejecting duplicates."""
        seen: set[tuple[int, int]] = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
        return cls(vertex_count, frozenset(seen))

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def edge_list(self) -> tuple[tuple[int, int], ...]:
        """Edges in sorted order; the deterministic iteration order."""
        return tuple(sorted(self.edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return self.degrees[u]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbr: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edge_list:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(ns) for ns in nbr)


class RegularityTag(Enum):
    REGULAR = "regular"
    BIREGULAR = "biregular"
    NEITHER = "neither"


@dataclass(frozen=True)
class RegularityClass:
    """Classification of a graph's degree structure.

    Regular: one degree value everywhere.  Biregular: exactly two distinct
    degrees a != b, and every edge joins an a-degree vertex to a b-degree
    vertex.  Anything else (including the empty edge set) is Neither.
    """

    tag: RegularityTag
    degrees: tuple[int, ...] = field(default=())


def degree_extremes(g: Graph) -> tuple[int, int]:
    """Minimum and maximum vertex degree, isolated vertices included."""
    return min(g.degrees), max(g.degrees)


def regularity_class(g: Graph) -> RegularityClass:
    """Classify a graph as Regular, Biregular, or Neither."""
    if not g.edges:
        return RegularityClass(RegularityTag.NEITHER)
    distinct = sorted(set(g.degrees))
    if len(distinct) == 1:
        return RegularityClass(RegularityTag.REGULAR, (distinct[0],))
    if len(distinct) == 2:
        a, b = distinct
        if all({g.degrees[u], g.degrees[v]} == {a, b} for u, v in g.edges):
            return RegularityClass(RegularityTag.BIREGULAR, (a, b))
    return RegularityClass(RegularityTag.NEITHER)


def is_connected(g: Graph) -> bool:
    """True iff one component spans all vertices (single vertex counts)."""
    if g.vertex_count == 1:
        return True
    seen = [False] * g.vertex_count
    stack = [0]
    seen[0] = True
    count = 1
    adj = g.adjacency
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                stack.append(v)
    return count == g.vertex_count


def connected_components(g: Graph) -> list[list[int]]:
    seen = [False] * g.vertex_count
    comps: list[list[int]] = []
    adj = g.adjacency
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def all_components_regular(g: Graph) -> bool:
    """True iff every connected component has a single degree value.

    Equivalent to every edge joining two vertices of equal degree, which is
    the equality condition shared by several of the bound checks.
    """
    return all(g.degrees[u] == g.degrees[v] for u, v in g.edges)


# ---------------------------------------------------------------------------
# Edge-list text format
# ---------------------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse an edge-list document.

    Format: first nonblank line is the vertex count N; each following
    nonblank line is "u v" with 0 <= u, v < N.  Lines starting with '#'
    are ignored.  Self-loops, duplicate edges, and out-of-range ids are
    rejected with the offending line number.
    """
    vertex_count: int | None = None
    pairs: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertex_count is None:
            try:
                vertex_count = int(line)
            except ValueError:
                raise GraphParseError(f"line {lineno}: expected vertex count, got {line!r}")
            if vertex_count < 1:
                raise GraphParseError(f"line {lineno}: vertex count must be positive")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphParseError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"line {lineno}: vertex ids must be integers, got {line!r}")
        if u == v:
            raise GraphParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphParseError(f"line {lineno}: vertex id out of range in {line!r}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise GraphParseError(f"line {lineno}: duplicate edge ({e[0]},{e[1]})")
        seen.add(e)
        pairs.append(e)
    if vertex_count is None:
        raise GraphParseError("line 1: empty document, expected vertex count")
    return Graph(vertex_count, frozenset(pairs))


def to_edge_list_text(g: Graph) -> str:
    """Serialize a graph in the edge-list format accepted by parse_graph."""
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edge_list)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Standard families
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.vertex_count
    edges = list(g1.edge_list) + [(u + off, v + off) for u, v in g2.edge_list]
    return Graph.from_edges(off + g2.vertex_count, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """One connected Erdos-Renyi style graph; resamples until connected."""
    if n < 2:
        raise ValueError("need at least 2 vertices")
    while True:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        if not pairs:
            continue
        g = Graph.from_edges(n, pairs)
        if is_connected(g):
            return g


def random_connected_graphs(count: int, seed: int, max_vertices: int = 12) -> list["NamedGraph"]:
    """Seeded corpus of random connected graphs (4..max_vertices vertices)."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, max_vertices)
        p = rng.uniform(0.25, 0.85)
        g = random_connected_graph(n, p, rng)
        out.append(NamedGraph(f"random_{seed}_{i:04d}", g))
    return out


# ---------------------------------------------------------------------------
# Tree canonical form and enumeration
# ---------------------------------------------------------------------------

def _subtree_sizes(g: Graph, root: int) -> list[int]:
    n = g.vertex_count
    size = [1] * n
    parent = [-1] * n
    order = [root]
    seen = [False] * n
    seen[root] = True
    for u in order:
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return size


def tree_centroids(g: Graph) -> list[int]:
    """The one or two centroid vertices of a tree (minimize the largest
    remaining component after removal)."""
    n = g.vertex_count
    if n == 1:
        return [0]
    size = _subtree_sizes(g, 0)
    # recompute "max component if removed" via rooted sizes
    best: list[int] = []
    best_val = n + 1
    parent_size = {}
    # rooted at 0: for vertex u, components are child subtrees + (n - size[u])
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for u in order:
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    for u in range(n):
        worst = n - size[u]
        for v in g.adjacency[u]:
            if v != parent[u]:
                worst = max(worst, size[v])
        if worst < best_val:
            best_val = worst
            best = [u]
        elif worst == best_val:
            best.append(u)
    return sorted(best)


def _rooted_code(g: Graph, root: int) -> tuple:
    """Canonical nested-tuple code of the tree rooted at `root` (children
    codes sorted), computed iteratively."""
    parent = [-1] * g.vertex_count
    order = [root]
    seen = [False] * g.vertex_count
    seen[root] = True
    for u in order:
        for v in g.adjacency[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                order.append(v)
    code: list[tuple | None] = [None] * g.vertex_count
    children: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for u in order[1:]:
        children[parent[u]].append(u)
    for u in reversed(order):
        code[u] = tuple(sorted((code[c] for c in children[u]), reverse=True))
    return code[root]  # type: ignore[return-value]


def _code_to_levels(code: tuple, depth: int = 0) -> list[int]:
    out = [depth]
    for child in code:
        out.extend(_code_to_levels(child, depth + 1))
    return out


def canonical_form(g: Graph) -> str:
    """Canonical level-sequence string for a tree, rooted at its centroid.

    Two trees get the same string iff they are isomorphic; the string doubles
    as the manifest label for enumerated skeletons.
    """
    if not is_connected(g) or g.edge_count != g.vertex_count - 1:
        raise ValueError("canonical_form is defined for trees only")
    best = min(_rooted_code(g, c) for c in tree_centroids(g))
    return ".".join(str(d) for d in _code_to_levels(best))


def _attach_leaf(g: Graph, v: int) -> Graph:
    edges = list(g.edge_list) + [(v, g.vertex_count)]
    return Graph.from_edges(g.vertex_count + 1, edges)


def enumerate_trees(n: int) -> list[Graph]:
    """All pairwise non-isomorphic trees on n vertices, by leaf growth with
    canonical-form deduplication, sorted by canonical form."""
    if n < 1:
        raise ValueError("n must be positive")
    level: dict[str, Graph] = {"0": Graph(1, frozenset())}
    for _ in range(n - 1):
        grown: dict[str, Graph] = {}
        for t in level.values():
            for v in range(t.vertex_count):
                t2 = _attach_leaf(t, v)
                c = canonical_form(t2)
                if c not in grown:
                    grown[c] = t2
        level = grown
    return [level[c] for c in sorted(level)]


class NamedGraph(NamedTuple):
    """A graph with a stable identifier; `canonical` is filled for trees."""

    name: str
    graph: Graph
    canonical: str = ""


# The 18 octane isomers, described by backbone length plus substituents
# (position, chain length).  Used to attach standard names to the
# enumerated skeletons and to cross-check the enumeration.
_OCTANE_STRUCTURES: list[tuple[str, int, list[tuple[int, int]]]] = [
    ("n-octane", 8, []),
    ("2-methylheptane", 7, [(2, 1)]),
    ("3-methylheptane", 7, [(3, 1)]),
    ("4-methylheptane", 7, [(4, 1)]),
    ("3-ethylhexane", 6, [(3, 2)]),
    ("2,2-dimethylhexane", 6, [(2, 1), (2, 1)]),
    ("2,3-dimethylhexane", 6, [(2, 1), (3, 1)]),
    ("2,4-dimethylhexane", 6, [(2, 1), (4, 1)]),
    ("2,5-dimethylhexane", 6, [(2, 1), (5, 1)]),
    ("3,3-dimethylhexane", 6, [(3, 1), (3, 1)]),
    ("3,4-dimethylhexane", 6, [(3, 1), (4, 1)]),
    ("3-ethyl-2-methylpentane", 5, [(3, 2), (2, 1)]),
    ("3-ethyl-3-methylpentane", 5, [(3, 2), (3, 1)]),
    ("2,2,3-trimethylpentane", 5, [(2, 1), (2, 1), (3, 1)]),
    ("2,2,4-trimethylpentane", 5, [(2, 1), (2, 1), (4, 1)]),
    ("2,3,3-trimethylpentane", 5, [(2, 1), (3, 1), (3, 1)]),
    ("2,3,4-trimethylpentane", 5, [(2, 1), (3, 1), (4, 1)]),
    ("2,2,3,3-tetramethylbutane", 4, [(2, 1), (2, 1), (3, 1), (3, 1)]),
]


def _build_alkane_skeleton(backbone: int, substituents: list[tuple[int, int]]) -> Graph:
    edges = [(i, i + 1) for i in range(backbone - 1)]
    nxt = backbone
    for pos, length in substituents:
        prev = pos - 1  # backbone positions are 1-based
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return Graph.from_edges(nxt, edges)


def octane_names_by_canonical() -> dict[str, str]:
    """Map canonical form -> standard isomer name for the 18 octane trees."""
    out: dict[str, str] = {}
    for name, backbone, subs in _OCTANE_STRUCTURES:
        c = canonical_form(_build_alkane_skeleton(backbone, subs))
        if c in out:
            raise RuntimeError(f"octane structure table is inconsistent: {name}")
        out[c] = name
    return out


def enumerate_octane_skeletons() -> list[NamedGraph]:
    """The 18 non-isomorphic trees on 8 vertices with maximum degree <= 4,
    in canonical order, labeled with standard isomer names."""
    names = octane_names_by_canonical()
    out: list[NamedGraph] = []
    for t in enumerate_trees(8):
        if max(t.degrees) <= 4:
            c = canonical_form(t)
            out.append(NamedGraph(names[c], t, c))
    if len(out) != 18:
        raise RuntimeError(f"expected 18 octane skeletons, got {len(out)}")
    return out


# ---------------------------------------------------------------------------
# Verification corpus
# ---------------------------------------------------------------------------

def default_corpus() -> list[NamedGraph]:
    """Named deterministic graph corpus used by the bound-verification sweep:
    octane skeletons, all trees on <=7 vertices, K_n (n<=6), K_{a,b}
    (a,b<=4), and paths/cycles/stars up to 10 vertices."""
    out: list[NamedGraph] = list(enumerate_octane_skeletons())
    for n in range(2, 8):
        for i, t in enumerate(enumerate_trees(n)):
            out.append(NamedGraph(f"tree{n}_{i:02d}", t, canonical_form(t)))
    for n in range(2, 7):
        out.append(NamedGraph(f"K{n}", complete_graph(n)))
    for a in range(1, 5):
        for b in range(a, 5):
            out.append(NamedGraph(f"K{a},{b}", complete_bipartite(a, b)))
    for n in range(2, 11):
        out.append(NamedGraph(f"P{n}", path_graph(n)))
    for n in range(3, 11):
        out.append(NamedGraph(f"C{n}", cycle_graph(n)))
    for k in range(2, 10):
        out.append(NamedGraph(f"star{k}", star_graph(k)))
    return out

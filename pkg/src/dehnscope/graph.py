"""Finite simplicial graphs with a fixed total order on the vertices.

Vertex sets are returned as tuples sorted in the graph's vertex order, which
is the canonical form used everywhere else in the package.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import Disconnected, EmptyGraph, InvalidVertex, ParseError

NAME_RE = re.compile(r"^[A-Za-z0-9_]+$")


class SimplicialGraph:
    """Immutable loop-free undirected graph; vertex order is the listing order."""

    __slots__ = ("_vertices", "_index", "_adj", "_edges", "_hash")

    def __init__(self, vertices: Iterable[str], edges: Iterable[tuple[str, str]] = ()):
        vs = tuple(vertices)
        index = {}
        for v in vs:
            if v in index:
                raise ValueError(f"duplicate vertex {v!r}")
            index[v] = len(index)
        adj = [set() for _ in vs]
        for u, v in edges:
            if u not in index:
                raise InvalidVertex(u)
            if v not in index:
                raise InvalidVertex(v)
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            adj[index[u]].add(index[v])
            adj[index[v]].add(index[u])
        self._vertices = vs
        self._index = index
        self._adj = tuple(frozenset(a) for a in adj)
        self._edges = tuple(
            (vs[i], vs[j]) for i in range(len(vs)) for j in sorted(self._adj[i]) if i < j
        )
        self._hash = None

    # basic accessors

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges (u, v) with u before v, sorted lexicographically in vertex order."""
        return self._edges

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._adj))
        return self._hash

    def __repr__(self) -> str:
        es = " ".join(f"{u}{v}" for u, v in self._edges)
        return f"SimplicialGraph([{' '.join(self._vertices)}] {es})"

    def index(self, v: str) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise InvalidVertex(v) from None

    def adjacent(self, u: str, v: str) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def commute(self, u: str, v: str) -> bool:
        """True when the generators u and v commute in the RAAG (equal or adjacent)."""
        return u == v or self.adjacent(u, v)

    def neighbours(self, v: str) -> tuple[str, ...]:
        return tuple(self._vertices[j] for j in sorted(self._adj[self.index(v)]))

    def degree(self, v: str) -> int:
        return len(self._adj[self.index(v)])

    def sort(self, names: Iterable[str]) -> tuple[str, ...]:
        """Canonical form of a vertex set: deduplicated, in vertex order."""
        idx = sorted({self.index(v) for v in names})
        return tuple(self._vertices[i] for i in idx)

    def key(self, names: Iterable[str]) -> tuple[int, ...]:
        return tuple(self.index(v) for v in names)

    # derived graphs

    def complement(self) -> "SimplicialGraph":
        vs = self._vertices
        n = len(vs)
        es = [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n) if j not in self._adj[i]]
        return SimplicialGraph(vs, es)

    def induced(self, s: Iterable[str]) -> "SimplicialGraph":
        keep = set(self.sort(s))
        vs = [v for v in self._vertices if v in keep]
        es = [(u, v) for u, v in self._edges if u in keep and v in keep]
        return SimplicialGraph(vs, es)

    def num_edges(self) -> int:
        return len(self._edges)

    def is_complete(self) -> bool:
        n = len(self)
        return self.num_edges() == n * (n - 1) // 2

    def link(self, v: str) -> tuple[str, ...]:
        return self.neighbours(v)

    def star(self, v: str) -> tuple[str, ...]:
        return self.sort(self.neighbours(v) + (v,))

    # connectivity

    def connected_components(self) -> list[tuple[str, ...]]:
        """Components sorted by least vertex; each component in vertex order."""
        seen = [False] * len(self)
        comps = []
        for start in range(len(self)):
            if seen[start]:
                continue
            seen[start] = True
            stack = [start]
            comp = []
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in self._adj[i]:
                    if not seen[j]:
                        seen[j] = True
                        stack.append(j)
            comps.append(tuple(self._vertices[i] for i in sorted(comp)))
        return comps

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    def is_tree(self) -> bool:
        return len(self) > 0 and self.is_connected() and self.num_edges() == len(self) - 1

    def triangles(self) -> list[tuple[str, str, str]]:
        out = []
        n = len(self)
        for i in range(n):
            for j in sorted(self._adj[i]):
                if j <= i:
                    continue
                for k in sorted(self._adj[i] & self._adj[j]):
                    if k > j:
                        out.append((self._vertices[i], self._vertices[j], self._vertices[k]))
        return out

    def cliques(self, size: int) -> list[tuple[str, ...]]:
        return [c for c in combinations(self._vertices, size)
                if all(self.adjacent(u, v) for u, v in combinations(c, 2))]

    # joins

    def join_decompose(self) -> "JoinDecomposition":
        if len(self) == 0:
            raise EmptyGraph("join decomposition of the empty graph")
        return JoinDecomposition(self, tuple(self.complement().connected_components()))

    def is_reducible(self) -> bool:
        return len(self.join_decompose().factors) >= 2

    def is_cone(self) -> bool:
        return any(len(f) == 1 for f in self.join_decompose().factors)

    def is_essential(self) -> bool:
        fs = self.join_decompose().factors
        return len(fs) == 2 and all(len(f) >= 2 for f in fs)

    def spanning_tree(self) -> "SpanningTree":
        if len(self) == 0:
            raise EmptyGraph("spanning tree of the empty graph")
        n = len(self)
        parent = [-1] * n
        seen = [False] * n
        seen[0] = True
        queue = deque([0])
        order = [0]
        while queue:
            i = queue.popleft()
            for j in sorted(self._adj[i]):
                if not seen[j]:
                    seen[j] = True
                    parent[j] = i
                    queue.append(j)
                    order.append(j)
        if not all(seen):
            raise Disconnected("spanning tree requires a connected graph")
        vs = self._vertices
        edges = sorted((min(i, parent[i]), max(i, parent[i])) for i in range(n) if parent[i] >= 0)
        return SpanningTree(self, tuple((vs[i], vs[j]) for i, j in edges))

    # io

    def to_text(self) -> str:
        lines = ["vertices: " + " ".join(self._vertices)]
        lines += [f"{u} {v}" for u, v in self._edges]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class JoinDecomposition:
    graph: SimplicialGraph
    factors: tuple[tuple[str, ...], ...]

    def __len__(self) -> int:
        return len(self.factors)

    def factor_of(self, v: str) -> int:
        for i, f in enumerate(self.factors):
            if v in f:
                return i
        raise InvalidVertex(v)


class SpanningTree:
    """A spanning tree with its edges oriented increasingly in vertex order."""

    def __init__(self, graph: SimplicialGraph, edges: tuple[tuple[str, str], ...]):
        self.graph = graph
        self.edges = edges
        self._adj: dict[str, list[str]] = {v: [] for v in graph.vertices}
        for u, v in edges:
            self._adj[u].append(v)
            self._adj[v].append(u)
        for v in self._adj:
            self._adj[v].sort(key=graph.index)

    def __repr__(self) -> str:
        return f"SpanningTree({' '.join(u + v for u, v in self.edges)})"

    def path(self, s: str, t: str) -> list[str]:
        """Vertices of the unique simple tree path from s to t, inclusive."""
        self.graph.index(s)
        self.graph.index(t)
        prev = {s: None}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for v in self._adj[u]:
                if v not in prev:
                    prev[v] = u
                    queue.append(v)
        out = [t]
        while out[-1] != s:
            out.append(prev[out[-1]])
        return out[::-1]


def parse_graph(text: str) -> SimplicialGraph:
    """Parse the graph text format: a `vertices:` header then one edge per line."""
    vertices = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if vertices is None:
            if not line.startswith("vertices:"):
                raise ParseError(f"line {lineno}: expected 'vertices:' header")
            vertices = line[len("vertices:"):].split()
            for v in vertices:
                if not NAME_RE.match(v):
                    raise ParseError(f"line {lineno}: bad vertex name {v!r}")
            if len(set(vertices)) != len(vertices):
                raise ParseError(f"line {lineno}: duplicate vertex name")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<u> <v>'")
        u, v = parts
        for x in parts:
            if x not in vertices:
                raise ParseError(f"line {lineno}: unknown vertex {x!r}")
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at {u!r}")
        key = frozenset(parts)
        if key in seen:
            raise ParseError(f"line {lineno}: duplicate edge {u} {v}")
        seen.add(key)
        edges.append((u, v))
    if vertices is None:
        raise ParseError("missing 'vertices:' header")
    return SimplicialGraph(vertices, edges)


def read_graph(path) -> SimplicialGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def join(*graphs: SimplicialGraph) -> SimplicialGraph:
    """Join of graphs on disjoint vertex sets, vertex order by concatenation."""
    vs = [v for g in graphs for v in g.vertices]
    es = [e for g in graphs for e in g.edges]
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            es += [(u, v) for u in g.vertices for v in h.vertices]
    return SimplicialGraph(vs, es)


def path_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = list(names)
    return SimplicialGraph(vs, list(zip(vs, vs[1:])))


def cycle_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = list(names)
    return SimplicialGraph(vs, list(zip(vs, vs[1:] + vs[:1])))


def empty_graph(names: Iterable[str]) -> SimplicialGraph:
    return SimplicialGraph(list(names))


def complete_graph(names: Iterable[str]) -> SimplicialGraph:
    vs = list(names)
    return SimplicialGraph(vs, list(combinations(vs, 2)))

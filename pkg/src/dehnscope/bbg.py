"""Finite presentation of the Bestvina-Brady group over spanning-tree edges,
the maps between tree-edge words and alternating words, and the flat norm."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapExceeded, Disconnected, NotAlternating, NotInKernel
from .flag import SCStatus, simply_connected_status
from .graph import SimplicialGraph, SpanningTree
from .words import Letter, Word, height, is_alternating, normal_form

DEFAULT_FLAT_CAP = 12


class EdgeLetter(NamedTuple):
    edge: tuple[str, str]
    sign: int

    def inverse(self) -> "EdgeLetter":
        return EdgeLetter(self.edge, -self.sign)

    def __str__(self) -> str:
        name = f"{self.edge[0]}-{self.edge[1]}"
        return name if self.sign > 0 else name + "'"


EdgeWord = tuple  # tuple[EdgeLetter, ...]


def edge_inverse(w: EdgeWord) -> EdgeWord:
    return tuple(x.inverse() for x in reversed(w))


def edge_free_reduce(w: EdgeWord) -> EdgeWord:
    out = []
    for x in w:
        if out and out[-1].edge == x.edge and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def format_edge_word(w: EdgeWord) -> str:
    return " ".join(str(x) for x in w) if w else "1"


def tree_path_word(tree: SpanningTree, s: str, t: str) -> EdgeWord:
    """Product of tree edges along the simple tree path from s to t."""
    path = tree.path(s, t)
    edges = set(tree.edges)
    out = []
    for x, y in zip(path, path[1:]):
        if (x, y) in edges:
            out.append(EdgeLetter((x, y), 1))
        else:
            out.append(EdgeLetter((y, x), -1))
    return tuple(out)


@dataclass
class Presentation:
    generators: list[tuple[str, str]]
    commutators: list[tuple[EdgeWord, EdgeWord]]
    triangles: list[tuple[str, str, str]]
    flagged: bool = False

    @property
    def relators(self) -> list[EdgeWord]:
        """Relators expanded to letters."""
        return [u + v + edge_inverse(u) + edge_inverse(v) for u, v in self.commutators]

    def to_text(self) -> str:
        lines = []
        if self.flagged:
            lines.append("# warning: flag complex is not simply connected")
        lines += [f"gen: {u}-{v}" for u, v in self.generators]
        lines += [f"rel: [{format_edge_word(u)}, {format_edge_word(v)}]" for u, v in self.commutators]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "generators": [f"{u}-{v}" for u, v in self.generators],
            "relators": [
                {"triangle": list(t), "left": format_edge_word(u), "right": format_edge_word(v)}
                for t, (u, v) in zip(self.triangles, self.commutators)
            ],
            "flagged": self.flagged,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def papadima_suciu(g: SimplicialGraph, tree: SpanningTree | None = None,
                   check: bool = True) -> Presentation:
    """Tree edges as generators, one commutator [w_e, w_f] per triangle v1<v2<v3."""
    if not g.is_connected() or len(g) == 0:
        raise Disconnected("presentation requires a connected graph")
    if tree is None:
        tree = g.spanning_tree()
    comms = []
    tris = g.triangles()
    for v1, v2, v3 in tris:
        comms.append((tree_path_word(tree, v1, v2), tree_path_word(tree, v2, v3)))
    flagged = check and simply_connected_status(g).status is SCStatus.REFUTED
    return Presentation(list(tree.edges), comms, tris, flagged)


def psi(w: EdgeWord) -> Word:
    """Edge (s,t)^e goes to (s t^-1)^e."""
    out = []
    for x in w:
        s, t = x.edge
        if x.sign > 0:
            out += [Letter(s, 1), Letter(t, -1)]
        else:
            out += [Letter(t, 1), Letter(s, -1)]
    return tuple(out)


def phi(tree: SpanningTree, u: Word) -> EdgeWord:
    """Concatenated tree-path words of the pairs s_i t_i^-1 of an alternating word."""
    if not is_alternating(u):
        raise NotAlternating(f"word of length {len(u)} is not alternating")
    out = []
    for i in range(0, len(u), 2):
        out += tree_path_word(tree, u[i].gen, u[i + 1].gen)
    return tuple(out)


def in_bbg(w: Word) -> bool:
    return height(w) == 0


def _pairs(g: SimplicialGraph) -> list[Word]:
    return [(Letter(s, 1), Letter(t, -1)) for s in g.vertices for t in g.vertices if s != t]


class _Ball:
    """Growing ball in the Cayley graph of pairs s t^-1, keyed by normal form."""

    def __init__(self, g: SimplicialGraph, centre: Word):
        self.g = g
        self.pairs = _pairs(g)
        start = normal_form(g, centre)
        self.members = {start}
        self.frontier = [start]
        self.radius = 0

    def grow(self) -> None:
        new = []
        for x in self.frontier:
            for p in self.pairs:
                y = normal_form(self.g, x + p)
                if y not in self.members:
                    self.members.add(y)
                    new.append(y)
        self.frontier = new
        self.radius += 1


def flat_norm(g: SimplicialGraph, w: Word, cap: int = DEFAULT_FLAT_CAP) -> int:
    """Length of the shortest alternating word equal to w in A(g).

    Two breadth-first balls (around 1 and around w) in the generating set of
    pairs s t^-1 are grown alternately until they meet.
    """
    if not in_bbg(w):
        raise NotInKernel(f"height {height(w)} is not zero")
    fwd = _Ball(g, ())
    bwd = _Ball(g, w)
    k = 0
    while True:
        if fwd.members & bwd.members:
            return 2 * k
        if 2 * (k + 1) > cap:
            raise CapExceeded(f"flat norm exceeds cap {cap}")
        if fwd.radius <= bwd.radius:
            fwd.grow()
        else:
            bwd.grow()
        k += 1


def flat_norm_witness(g: SimplicialGraph, w: Word, cap: int = DEFAULT_FLAT_CAP) -> Word:
    """A shortest alternating word representing w (plain BFS with parent links)."""
    if not in_bbg(w):
        raise NotInKernel(f"height {height(w)} is not zero")
    target = normal_form(g, w)
    pairs = _pairs(g)
    parent = {(): None}
    frontier = [()]
    depth = 0
    while True:
        for x in frontier:
            if x == target:
                out = []
                while parent[x] is not None:
                    x, p = parent[x]
                    out = list(p) + out
                return tuple(out)
        if 2 * (depth + 1) > cap:
            raise CapExceeded(f"flat norm exceeds cap {cap}")
        new = []
        for x in frontier:
            for p in pairs:
                y = normal_form(g, x + p)
                if y not in parent:
                    parent[y] = (x, p)
                    new.append(y)
        frontier = new
        depth += 1

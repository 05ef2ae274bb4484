"""Capped exact-area search for van Kampen diagrams over the standard RAAG
presentation, with reconstruction of a diagram from the optimal move sequence.

States are words. Moves, all on the cyclic word: swap two adjacent commuting
distinct letters (one relator application) or cancel an adjacent inverse pair
(free). The diagram is rebuilt backwards from the empty word: a cancellation
becomes a spike, a swap becomes a commutator square glued on two
consecutive boundary edges.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .diagrams import Diagram, single_vertex
from .errors import NotNullHomotopic
from .graph import SimplicialGraph
from .words import Word, is_trivial


@dataclass(frozen=True)
class Unknown:
    """Search gave up within its caps."""

    reason: str
    explored: int

    def __bool__(self) -> bool:
        return False


def _moves(g: SimplicialGraph, u: Word):
    n = len(u)
    for i in range(n):
        j = (i + 1) % n
        if n < 2 or (j == 0 and n == 2 and i == 1):
            continue
        x, y = u[i], u[j]
        if x.gen == y.gen and x.sign == -y.sign:
            if j == 0:
                yield 0, ("wcancel",), u[1:n - 1]
            else:
                yield 0, ("cancel", i), u[:i] + u[i + 2:]
        elif x.gen != y.gen and g.adjacent(x.gen, y.gen):
            if j == 0:
                yield 1, ("wswap",), (x,) + u[1:n - 1] + (y,)
            else:
                yield 1, ("swap", i), u[:i] + (y, x) + u[i + 2:]


def search_area(g: SimplicialGraph, w: Word, max_area: int, max_states: int):
    """Dijkstra over words; returns (area, moves) or Unknown."""
    w = tuple(w)
    dist = {w: 0}
    parent = {w: None}
    heap = [(0, 0, w)]
    counter = 1
    done = set()
    while heap:
        cost, _, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if not u:
            moves = []
            while parent[u] is not None:
                prev, mv = parent[u]
                moves.append((prev, mv, u))
                u = prev
            return cost, moves[::-1]
        for c, mv, v in _moves(g, u):
            nc = cost + c
            if nc > max_area:
                continue
            if v not in dist or nc < dist[v]:
                dist[v] = nc
                parent[v] = (u, mv)
                heapq.heappush(heap, (nc, counter, v))
                counter += 1
        if len(dist) > max_states:
            return Unknown("state cap reached", len(dist))
    return Unknown("area cap reached", len(dist))


class _Builder:
    """Diagram with an explicit boundary dart list, grown backwards."""

    def __init__(self):
        self.d = single_vertex()
        self.bd: list[int] = []

    def _prev_in(self, j: int) -> int | None:
        """Dart arriving at the corner before boundary position j."""
        if not self.bd:
            return None
        return self.bd[(j - 1) % len(self.bd)]

    def spike(self, j: int, letter, rebase: bool) -> None:
        d = self.d
        c = d.base_vertex if not self.bd else d.tail(self.bd[j % len(self.bd)])
        n = d.add_vertex()
        s = d.add_reading(c, n, letter)
        prev = self._prev_in(j)
        d.insert_before(c, s, None if prev is None else prev ^ 1)
        d.insert_before(n, s ^ 1, None)
        if rebase:
            self.bd = [s ^ 1] + self.bd + [s]
            d.base_vertex = n
        else:
            self.bd = self.bd[:j] + [s, s ^ 1] + self.bd[j:]
        d.base_dart = self.bd[0]

    def square(self, j: int, wrap: bool) -> None:
        """Replace boundary darts j, j+1 (reading p q) by a path reading q p."""
        d = self.d
        m = len(self.bd)
        b1 = self.bd[j]
        b2 = self.bd[(j + 1) % m]
        prev = self.bd[(j - 1) % m]
        u0 = d.tail(b1)
        x0 = d.head(b2)
        n = d.add_vertex()
        e1 = d.add_reading(u0, n, d.label(b2))
        e2 = d.add_reading(n, x0, d.label(b1))
        d.insert_before(u0, e1, prev ^ 1)
        d.insert_before(x0, e2 ^ 1, b2 ^ 1)
        d.insert_before(n, e1 ^ 1, None)
        d.insert_before(n, e2, None)
        if wrap:
            self.bd = [e2] + self.bd[1:m - 1] + [e1]
            d.base_vertex = n
        else:
            self.bd = self.bd[:j] + [e1, e2] + self.bd[j + 2:]
        d.base_dart = self.bd[0]


def build_from_moves(moves) -> Diagram:
    b = _Builder()
    for prev, mv, _ in reversed(moves):
        kind = mv[0]
        if kind == "cancel":
            b.spike(mv[1], prev[mv[1]], rebase=False)
        elif kind == "wcancel":
            b.spike(len(b.bd), prev[-1], rebase=True)
        elif kind == "swap":
            b.square(mv[1], wrap=False)
        else:
            b.square(len(b.bd) - 1, wrap=True)
    b.d.base_dart = b.bd[0] if b.bd else None
    return b.d


def fill_small(g: SimplicialGraph, w: Word, max_area: int = 12, max_len: int = 16,
               max_states: int = 200_000):
    """Minimal-area van Kampen diagram for a null-homotopic word, or Unknown."""
    w = tuple(w)
    if not is_trivial(g, w):
        raise NotNullHomotopic("word is not trivial in the RAAG")
    if len(w) > max_len:
        return Unknown("word longer than max_len", 0)
    res = search_area(g, w, max_area, max_states)
    if isinstance(res, Unknown):
        return res
    cost, moves = res
    d = build_from_moves(moves)
    d.minimal_within_caps = True
    d.search_area = cost
    return d

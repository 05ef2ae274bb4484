"""Random generators shared by the test modules."""

from __future__ import annotations

import random
from itertools import combinations

from dehnscope.coloured import ColouredLetter
from dehnscope.graph import SimplicialGraph, SpanningTree, join
from dehnscope.words import Letter, inverse


def names(n: int) -> list[str]:
    return [chr(97 + i) for i in range(n)]


def rgraph(rng: random.Random, n: int, p: float = 0.5) -> SimplicialGraph:
    vs = names(n)
    return SimplicialGraph(vs, [e for e in combinations(vs, 2) if rng.random() < p])


def rconnected(rng: random.Random, n: int, p: float = 0.5) -> SimplicialGraph:
    while True:
        g = rgraph(rng, n, p)
        if g.is_connected():
            return g


def rtree(rng: random.Random, n: int) -> SimplicialGraph:
    vs = names(n)
    order = vs[:]
    rng.shuffle(order)
    edges = [(order[i], rng.choice(order[:i])) for i in range(1, n)]
    return SimplicialGraph(vs, edges)


def rjoin(rng: random.Random, parts: int, lo: int = 1, hi: int = 3) -> SimplicialGraph:
    """Join of `parts` random graphs on disjoint vertex names."""
    factors = []
    k = 0
    for _ in range(parts):
        m = rng.randint(lo, hi)
        vs = [f"v{k + i}" for i in range(m)]
        k += m
        factors.append(SimplicialGraph(vs, [e for e in combinations(vs, 2)
                                            if rng.random() < 0.4]))
    return join(*factors)


def random_spanning_tree(rng: random.Random, g: SimplicialGraph) -> SpanningTree:
    """Random-order Kruskal spanning tree with increasingly oriented edges."""
    edges = list(g.edges)
    rng.shuffle(edges)
    parent = {v: v for v in g.vertices}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    chosen = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.append((u, v))
    return SpanningTree(g, tuple(sorted(chosen, key=g.key)))


def rword(rng: random.Random, g: SimplicialGraph, length: int) -> tuple:
    return tuple(Letter(rng.choice(g.vertices), rng.choice((1, -1))) for _ in range(length))


def ralternating(rng: random.Random, g: SimplicialGraph, pairs: int) -> tuple:
    out = []
    for _ in range(pairs):
        out += [Letter(rng.choice(g.vertices), 1), Letter(rng.choice(g.vertices), -1)]
    return tuple(out)


def scramble(rng: random.Random, g: SimplicialGraph, u: tuple, steps: int = 10) -> tuple:
    """Apply random relator moves: commuting swaps, free insertions, free cancellations."""
    u = list(u)
    for _ in range(steps):
        r = rng.random()
        if r < 0.6 and len(u) >= 2:
            i = rng.randrange(len(u) - 1)
            if u[i].gen != u[i + 1].gen and g.adjacent(u[i].gen, u[i + 1].gen):
                u[i], u[i + 1] = u[i + 1], u[i]
        elif r < 0.8:
            i = rng.randrange(len(u) + 1)
            x = Letter(rng.choice(g.vertices), rng.choice((1, -1)))
            u[i:i] = [x, x.inverse()]
        else:
            for i in range(len(u) - 1):
                if u[i] == u[i + 1].inverse():
                    del u[i:i + 2]
                    break
    return tuple(u)


def rtrivial(rng: random.Random, g: SimplicialGraph, length: int, steps: int = 6) -> tuple:
    """A null-homotopic word u v^-1 with v a scrambled copy of a random word u."""
    u = rword(rng, g, length)
    return u + inverse(scramble(rng, g, u, steps))


def rcolour(rng: random.Random, g: SimplicialGraph, x) -> ColouredLetter:
    return ColouredLetter(x.gen, rng.choice(g.star(x.gen)), x.sign)


def rcoloured(rng: random.Random, g: SimplicialGraph, length: int, blocky: float = 0.6) -> tuple:
    """Random coloured word; with probability `blocky` a letter keeps the previous colour."""
    out = []
    for x in rword(rng, g, length):
        if out and rng.random() < blocky and g.commute(x.gen, out[-1].colour):
            out.append(ColouredLetter(x.gen, out[-1].colour, x.sign))
        else:
            out.append(rcolour(rng, g, x))
    return tuple(out)


# acceptance results, printed by the terminal summary hook in conftest
ACCEPTANCE: dict[int, tuple[str, bool, float, str]] = {}

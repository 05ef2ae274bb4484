"""Maximal reducible induced subgraphs and the properties D3 and D4.

A vertex set S is reducible when S = X + Y with X, Y nonempty and every
vertex of X adjacent to every vertex of Y. Taking X to be a union of
complement components forces Y into the common neighbourhood CN(X), so every
maximal reducible set has the form X + CN(X) with X = CN(CN(X)). Closed sets
X are exactly the intersections of vertex neighbourhoods, which gives the
enumeration used here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import EmptySet, NotReducible, TooLarge
from .flag import join_simply_connected
from .graph import JoinDecomposition, SimplicialGraph

BRUTE_FORCE_LIMIT = 20


@dataclass(frozen=True)
class MaximalReducibleSet:
    vertices: tuple[str, ...]
    decomposition: JoinDecomposition
    essential: bool
    flag_simply_connected: bool
    cone: bool

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "factors": [list(f) for f in self.decomposition.factors],
            "essential": self.essential,
            "flag_simply_connected": self.flag_simply_connected,
            "cone": self.cone,
        }


def is_reducible_set(g: SimplicialGraph, s) -> bool:
    s = g.sort(s)
    if not s:
        raise EmptySet("reducibility of the empty set")
    return not g.induced(s).complement().is_connected()


def is_maximal_reducible_set(g: SimplicialGraph, s) -> bool:
    s = g.sort(s)
    if not is_reducible_set(g, s):
        raise NotReducible(f"{s} is not reducible")
    comps = g.induced(s).complement().connected_components()
    inside = set(s)
    for v in g.vertices:
        if v in inside:
            continue
        for comp in comps:
            if all(g.adjacent(v, f) for f in comp):
                return False
    return True


def canonical_key(g: SimplicialGraph, s) -> tuple:
    k = g.key(s)
    return (len(k), k)


def _describe(g: SimplicialGraph, s: tuple[str, ...]) -> MaximalReducibleSet:
    sub = g.induced(s)
    d = sub.join_decompose()
    return MaximalReducibleSet(
        vertices=s,
        decomposition=d,
        essential=sub.is_essential(),
        flag_simply_connected=join_simply_connected(d),
        cone=sub.is_cone(),
    )


def _masks(g: SimplicialGraph) -> list[int]:
    n = len(g)
    nb = [0] * n
    for u, v in g.edges:
        i, j = g.index(u), g.index(v)
        nb[i] |= 1 << j
        nb[j] |= 1 << i
    return nb


def _common(nb: list[int], x: int, n: int) -> int:
    out = (1 << n) - 1
    i = 0
    while x:
        if x & 1:
            out &= nb[i]
        x >>= 1
        i += 1
    return out


def _from_mask(g: SimplicialGraph, m: int) -> tuple[str, ...]:
    return tuple(v for i, v in enumerate(g.vertices) if m >> i & 1)


def maximal_reducible_masks(g: SimplicialGraph) -> list[int]:
    n = len(g)
    nb = _masks(g)
    # closed extents: intersections of neighbourhoods
    extents = set()
    frontier = {m for m in nb if m}
    while frontier:
        extents |= frontier
        new = set()
        for e in frontier:
            for m in nb:
                x = e & m
                if x and x not in extents:
                    new.add(x)
        frontier = new
    candidates = set()
    for x in extents:
        y = _common(nb, x, n)
        if y:
            candidates.add(x | y)
    cands = sorted(candidates, key=lambda m: -bin(m).count("1"))
    maximal = []
    for c in cands:
        if not any(c & m == c for m in maximal):
            maximal.append(c)
    return maximal


def maximal_reducible_subgraphs(g: SimplicialGraph) -> list[MaximalReducibleSet]:
    """All maximal reducible vertex sets, sorted by size then vertex order."""
    sets = [_from_mask(g, m) for m in maximal_reducible_masks(g)]
    sets.sort(key=lambda s: canonical_key(g, s))
    return [_describe(g, s) for s in sets]


def brute_force_maximal_reducible(g: SimplicialGraph) -> list[MaximalReducibleSet]:
    """Reference enumeration over all vertex subsets."""
    n = len(g)
    if n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{n} vertices exceeds brute-force limit {BRUTE_FORCE_LIMIT}")
    reducible = []
    for size in range(2, n + 1):
        for s in combinations(g.vertices, size):
            if not g.induced(s).complement().is_connected():
                reducible.append(frozenset(s))
    maximal = [s for s in reducible if not any(s < t for t in reducible)]
    sets = sorted((g.sort(s) for s in maximal), key=lambda s: canonical_key(g, s))
    return [_describe(g, s) for s in sets]


@dataclass(frozen=True)
class PropertyWitness:
    holds: bool
    witness: MaximalReducibleSet | None

    def __bool__(self) -> bool:
        return self.holds


def has_D3(g: SimplicialGraph, sets: list[MaximalReducibleSet] | None = None) -> PropertyWitness:
    if sets is None:
        sets = maximal_reducible_subgraphs(g)
    for s in sets:
        if s.essential:
            return PropertyWitness(True, s)
    return PropertyWitness(False, None)


def has_D4(g: SimplicialGraph, sets: list[MaximalReducibleSet] | None = None) -> PropertyWitness:
    if sets is None:
        sets = maximal_reducible_subgraphs(g)
    for s in sets:
        if not s.flag_simply_connected:
            return PropertyWitness(True, s)
    return PropertyWitness(False, None)

"""Topology of the flag complex: integral H1, a budgeted pi1 triviality test,
and the exact simple-connectivity criterion for joins."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from enum import Enum

from .errors import FewerThanTwoFactors
from .graph import JoinDecomposition, SimplicialGraph
from .smith import invariant_factors

DEFAULT_BUDGET = 10_000
BUDGET_ENV = "DEHNSCOPE_PI1_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else DEFAULT_BUDGET


def boundary_matrices(g: SimplicialGraph):
    """Boundary maps d1 (vertices x edges) and d2 (edges x triangles)."""
    edges = list(g.edges)
    eindex = {e: i for i, e in enumerate(edges)}
    d1 = [[0] * len(edges) for _ in g.vertices]
    for j, (u, v) in enumerate(edges):
        d1[g.index(u)][j] -= 1
        d1[g.index(v)][j] += 1
    tris = g.triangles()
    d2 = [[0] * len(tris) for _ in edges]
    for j, (u, v, w) in enumerate(tris):
        d2[eindex[(u, v)]][j] += 1
        d2[eindex[(v, w)]][j] += 1
        d2[eindex[(u, w)]][j] -= 1
    return d1, d2


def h1_invariants(g: SimplicialGraph) -> list[int]:
    """H1 of the flag complex as `[0]*rank + torsion divisors`; [] iff H1 = 0."""
    d1, d2 = boundary_matrices(g)
    ne = g.num_edges()
    r1 = len(invariant_factors(d1)) if ne else 0
    factors = invariant_factors(d2) if ne and d2 and d2[0] else []
    free = ne - r1 - len(factors)
    return [0] * free + [d for d in factors if d > 1]


def h1_rank(g: SimplicialGraph) -> int:
    return sum(1 for d in h1_invariants(g) if d == 0)


class SCStatus(Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    UNKNOWN = "Unknown"


@dataclass
class SCResult:
    status: SCStatus
    h1: list[int] = field(default_factory=list)
    moves: int = 0
    remaining_generators: int = 0
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "h1": list(self.h1),
            "moves": self.moves,
            "remaining_generators": self.remaining_generators,
            "reason": self.reason,
        }


@dataclass
class Pi1Presentation:
    """Generators are non-tree edges; letters are (generator index, +-1)."""

    generators: list[tuple[str, str]]
    relators: list[list[tuple[int, int]]]


def pi1_presentation(g: SimplicialGraph) -> Pi1Presentation:
    tree = set(g.spanning_tree().edges)
    gens = [e for e in g.edges if e not in tree]
    gindex = {e: i for i, e in enumerate(gens)}
    rels = []
    for u, v, w in g.triangles():
        word = []
        for e, sign in (((u, v), 1), ((v, w), 1), ((u, w), -1)):
            if e in gindex:
                word.append((gindex[e], sign))
        rels.append(word)
    return Pi1Presentation(gens, rels)


def _cyclic_reduce(word):
    out = []
    for x in word:
        if out and out[-1][0] == x[0] and out[-1][1] == -x[1]:
            out.pop()
        else:
            out.append(x)
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def tietze_trivialize(pres: Pi1Presentation, budget: int) -> tuple[bool, int, int]:
    """Eliminate generators that occur exactly once in some relator.

    Returns (trivialized, moves spent, generators left). One move is one
    substitution of a letter or one relator reduction.
    """
    rels = [_cyclic_reduce(r) for r in pres.relators]
    alive = set(range(len(pres.generators)))
    moves = 0
    while alive:
        rels = [r for r in rels if r]
        choice = None
        for ri, r in sorted(enumerate(rels), key=lambda p: (len(p[1]), p[0])):
            counts = {}
            for gen, _ in r:
                counts[gen] = counts.get(gen, 0) + 1
            once = [gen for gen, c in counts.items() if c == 1]
            if once:
                choice = (ri, min(once))
                break
        if choice is None:
            return False, moves, len(alive)
        ri, gen = choice
        r = rels[ri]
        pos = next(i for i, x in enumerate(r) if x[0] == gen)
        sign = r[pos][1]
        # r = A x^sign B  so  x^sign = A^-1 B^-1 (up to rotation: x^sign = (B A)^-1)
        rest = r[pos + 1:] + r[:pos]
        value = [(h, -s) for h, s in reversed(rest)]
        if sign == -1:
            value = [(h, -s) for h, s in reversed(value)]
        inverse = [(h, -s) for h, s in reversed(value)]
        new_rels = []
        for j, other in enumerate(rels):
            if j == ri:
                continue
            out = []
            for h, s in other:
                if h == gen:
                    out.extend(value if s == 1 else inverse)
                    moves += 1
                else:
                    out.append((h, s))
            reduced = _cyclic_reduce(out)
            if len(reduced) != len(out):
                moves += 1
            new_rels.append(reduced)
            if moves > budget:
                return False, moves, len(alive)
        rels = new_rels
        alive.discard(gen)
        moves += 1
        if moves > budget:
            return not alive, moves, len(alive)
    return True, moves, 0


def simply_connected_status(g: SimplicialGraph, budget: int | None = None) -> SCResult:
    """Three-valued test of simple connectivity of the flag complex."""
    if budget is None:
        budget = default_budget()
    if len(g) == 0:
        return SCResult(SCStatus.REFUTED, reason="empty complex")
    if not g.is_connected():
        return SCResult(SCStatus.REFUTED, reason="disconnected")
    h1 = h1_invariants(g)
    if h1:
        return SCResult(SCStatus.REFUTED, h1=h1, reason="nontrivial H1")
    pres = pi1_presentation(g)
    ok, moves, left = tietze_trivialize(pres, budget)
    if ok:
        return SCResult(SCStatus.VERIFIED, moves=moves, reason="presentation trivialized")
    return SCResult(SCStatus.UNKNOWN, moves=moves, remaining_generators=left,
                    reason="Tietze budget exhausted or stuck")


def join_simply_connected(d: JoinDecomposition) -> bool:
    """Flag complex of a join is simply connected iff >= 3 factors, or 2 with one connected."""
    if len(d.factors) < 2:
        raise FewerThanTwoFactors(f"{len(d.factors)} factor(s)")
    if len(d.factors) >= 3:
        return True
    return any(d.graph.induced(f).is_connected() for f in d.factors)

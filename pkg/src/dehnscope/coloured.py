"""Coloured words, transition words, pushdowns and efficient colourings.

A coloured letter (s, a, sign) carries a colour a that commutes with s
(a == s or a adjacent to s). Blocks are maximal runs of equal colour.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapExceeded, ColourClash, InvalidVertex, ParseError
from .graph import SimplicialGraph, SpanningTree
from .words import (DEFAULT_GEODESIC_CAP, Letter, Word, _dependence, height, inverse,
                    normal_form, reduce_raag)


class ColouredLetter(NamedTuple):
    gen: str
    colour: str
    sign: int

    def inverse(self) -> "ColouredLetter":
        return ColouredLetter(self.gen, self.colour, -self.sign)

    @property
    def letter(self) -> Letter:
        return Letter(self.gen, self.sign)

    def __str__(self) -> str:
        tok = f"{self.gen}:{self.colour}"
        return tok if self.sign > 0 else tok + "'"


ColouredWord = tuple  # tuple[ColouredLetter, ...]


def check_coloured(g: SimplicialGraph, cw: ColouredWord) -> None:
    for x in cw:
        if x.gen not in g:
            raise InvalidVertex(x.gen)
        if x.colour not in g:
            raise InvalidVertex(x.colour)
        if not g.commute(x.gen, x.colour):
            raise ColourClash(f"colour {x.colour} does not commute with {x.gen}")


def parse_coloured_word(text: str, g: SimplicialGraph) -> ColouredWord:
    out = []
    for tok in text.split():
        sign = 1
        body = tok
        if body.endswith("'"):
            sign = -1
            body = body[:-1]
        if body.count(":") != 1:
            raise ParseError(f"bad coloured token {tok!r}")
        s, a = body.split(":")
        if s not in g or a not in g:
            raise ParseError(f"unknown generator in {tok!r}")
        if not g.commute(s, a):
            raise ParseError(f"colour {a} does not commute with {s}")
        out.append(ColouredLetter(s, a, sign))
    return tuple(out)


def format_coloured_word(cw: ColouredWord) -> str:
    return " ".join(str(x) for x in cw) if cw else "1"


def coloured_inverse(cw: ColouredWord) -> ColouredWord:
    return tuple(x.inverse() for x in reversed(cw))


def colour_word(w: Word, a: str) -> ColouredWord:
    """The monochromatic word <w>_a."""
    return tuple(ColouredLetter(x.gen, a, x.sign) for x in w)


def underlying(cw: ColouredWord) -> Word:
    return tuple(x.letter for x in cw)


def self_colour(w: Word) -> ColouredWord:
    return tuple(ColouredLetter(x.gen, x.gen, x.sign) for x in w)


def blocks(cw: ColouredWord) -> list[tuple[Word, str]]:
    """Maximal monochromatic runs as (word, colour)."""
    out: list[tuple[list, str]] = []
    for x in cw:
        if out and out[-1][1] == x.colour:
            out[-1][0].append(x.letter)
        else:
            out.append(([x.letter], x.colour))
    return [(tuple(w), a) for w, a in out]


def coloured_free_reduce(cw: ColouredWord) -> ColouredWord:
    out = []
    for x in cw:
        if out and out[-1] == x.inverse():
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def balance(g: SimplicialGraph, w: Word, a: str) -> Word:
    """s -> s a^-1 and s^-1 -> a s^-1."""
    out = []
    for x in w:
        if not g.commute(x.gen, a):
            raise ColourClash(f"{x.gen} does not commute with colour {a}")
        if x.sign > 0:
            out += [Letter(x.gen, 1), Letter(a, -1)]
        else:
            out += [Letter(a, 1), Letter(x.gen, -1)]
    return tuple(out)


@dataclass(frozen=True)
class PushdownConfig:
    graph: SimplicialGraph
    s0: str
    tree: SpanningTree

    @classmethod
    def default(cls, g: SimplicialGraph, s0: str | None = None,
                tree: SpanningTree | None = None) -> "PushdownConfig":
        if s0 is None:
            s0 = g.vertices[0]
        g.index(s0)
        return cls(g, s0, tree if tree is not None else g.spanning_tree())


def transition_word(cfg: PushdownConfig, a: str, h: int) -> Word:
    """(t0 t1^-1)^h ... (t_{l-1} t_l^-1)^h along the tree path from s0 to a."""
    path = cfg.tree.path(cfg.s0, a)
    out = []
    for x, y in zip(path, path[1:]):
        if h >= 0:
            out += [Letter(x, 1), Letter(y, -1)] * h
        else:
            out += [Letter(y, 1), Letter(x, -1)] * (-h)
    return tuple(out)


def block_heights(cw: ColouredWord, h: int) -> list[int]:
    """h_0 = h and h_i = h + sum of heights of the first i blocks."""
    hs = [h]
    for w, _ in blocks(cw):
        hs.append(hs[-1] + height(w))
    return hs


def pushdown(cfg: PushdownConfig, cw: ColouredWord, h: int = 0) -> Word:
    out: list[Letter] = []
    hi = h
    for w, a in blocks(cw):
        nxt = hi + height(w)
        out += transition_word(cfg, a, hi)
        out += balance(cfg.graph, w, a)
        out += inverse(transition_word(cfg, a, nxt))
        hi = nxt
    return tuple(out)


def folded_pushdown(cfg: PushdownConfig, cw: ColouredWord, h: int = 0) -> Word:
    """The h-pushdown with the common prefix of the two transition words at
    each block junction removed; equal to the pushdown in the free group."""
    bs = blocks(cw)
    out: list[Letter] = []
    hi = h
    pending: Word = ()
    for i, (w, a) in enumerate(bs):
        t = transition_word(cfg, a, hi)
        c = 0
        while c < min(len(t), len(pending)) and t[c] == pending[c]:
            c += 1
        out += inverse(pending[c:])
        out += t[c:] if i else t
        nxt = hi + height(w)
        out += balance(cfg.graph, w, a)
        pending = transition_word(cfg, a, nxt)
        hi = nxt
    out += inverse(pending)
    return tuple(out)


# chromatic number and efficiency


def _star_masks(g: SimplicialGraph) -> dict[str, int]:
    out = {}
    for v in g.vertices:
        m = 0
        for u in g.star(v):
            m |= 1 << g.index(u)
        out[v] = m
    return out


def _ideal_search(g: SimplicialGraph, w: Word):
    """Fewest blocks over all linearizations of the commutation class of w.

    States are downsets of the dependence order of w. One step appends a
    block: letters with a common colour that extend the current downset to a
    larger one. Returns (k, plan) with plan a list of (positions, colour mask).
    """
    n = len(w)
    full = (1 << n) - 1
    preds = [0] * n
    for j, p in enumerate(_dependence(g, w)):
        for i in p:
            preds[j] |= 1 << i
    stars = _star_masks(g)
    allv = (1 << len(g)) - 1
    parent: dict[int, tuple[int, tuple[int, ...], int] | None] = {0: None}
    frontier = [0]
    k = 0
    while full not in parent:
        k += 1
        new = []
        for start in frontier:
            local = {start}
            stack = [(start, allv, ())]
            while stack:
                ideal, pal, order = stack.pop()
                for j in range(n):
                    if ideal >> j & 1 or preds[j] & ~ideal:
                        continue
                    p2 = pal & stars[w[j].gen]
                    if not p2:
                        continue
                    nxt = ideal | 1 << j
                    if nxt in local:
                        continue
                    local.add(nxt)
                    o2 = order + (j,)
                    if nxt not in parent:
                        parent[nxt] = (start, o2, p2)
                        new.append(nxt)
                    stack.append((nxt, p2, o2))
        frontier = new
    plan = []
    cur = full
    while cur:
        prev, order, pal = parent[cur]
        plan.append((order, pal))
        cur = prev
    return k, plan[::-1]


def _geodesic(g: SimplicialGraph, w: Word, cap: int) -> Word:
    nf = normal_form(g, w)
    if len(nf) > cap:
        raise CapExceeded(f"geodesic length {len(nf)} exceeds cap {cap}")
    return nf


def chromatic_number(g: SimplicialGraph, w: Word, cap: int = DEFAULT_GEODESIC_CAP) -> int:
    """Fewest blocks of a coloured word representing the same element as w.

    The search ranges over the whole geodesic commutation class; the empty
    word has chromatic number 0.
    """
    nf = _geodesic(g, w, cap)
    if not nf:
        return 0
    return _ideal_search(g, nf)[0]


def make_efficient(g: SimplicialGraph, w: Word, cap: int = DEFAULT_GEODESIC_CAP) -> ColouredWord:
    """A geodesic chromatically minimal coloured word for w; each block takes
    the least vertex of its palette as colour."""
    nf = _geodesic(g, w, cap)
    if not nf:
        return ()
    _, plan = _ideal_search(g, nf)
    out = []
    for order, pal in plan:
        colour = g.vertices[(pal & -pal).bit_length() - 1]
        out += [ColouredLetter(nf[j].gen, colour, nf[j].sign) for j in order]
    return tuple(out)


def is_chromatically_minimal(g: SimplicialGraph, cw: ColouredWord,
                             cap: int = DEFAULT_GEODESIC_CAP) -> bool:
    return len(blocks(cw)) == chromatic_number(g, underlying(cw), cap)


def is_efficient(g: SimplicialGraph, cw: ColouredWord, cap: int = DEFAULT_GEODESIC_CAP) -> bool:
    """Geodesic, and every proper block (blocks 2..k-1 and their runs) chromatically minimal."""
    w = underlying(cw)
    if len(reduce_raag(g, w)) != len(w):
        return False
    bs = blocks(cw)
    k = len(bs)
    for i in range(1, k - 1):
        for j in range(i, k - 1):
            sub = tuple(x for b in bs[i:j + 1] for x in b[0])
            if chromatic_number(g, sub, cap) != j - i + 1:
                return False
    return True


def min_blocks_for_word(g: SimplicialGraph, w: Word) -> int:
    """Position x colour dynamic program: fewest blocks over all colourings of w itself."""
    if not w:
        return 0
    inf = float("inf")
    cur = {a: 1 for a in g.star(w[0].gen)}
    for x in w[1:]:
        best = min(cur.values())
        nxt = {}
        for a in g.star(x.gen):
            nxt[a] = min(cur.get(a, inf), best + 1)
        cur = nxt
    return int(min(cur.values()))

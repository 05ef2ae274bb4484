"""Words in the standard generators of a right-angled Artin group A(g).

A word is a tuple of Letter(gen, sign). Functions that need the commutation
relation take the ambient graph as their first argument.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple

from .errors import CapExceeded, InvalidVertex, ParseError
from .graph import SimplicialGraph

DEFAULT_GEODESIC_CAP = 10


class Letter(NamedTuple):
    gen: str
    sign: int

    def inverse(self) -> "Letter":
        return Letter(self.gen, -self.sign)

    def __str__(self) -> str:
        return self.gen if self.sign > 0 else self.gen + "'"


Word = tuple  # tuple[Letter, ...]


def word(spec: str | Iterable, g: SimplicialGraph | None = None) -> Word:
    """Build a word from a token string like "a b' c" or from (gen, sign) pairs."""
    if isinstance(spec, str):
        return parse_word(spec, g)
    return tuple(Letter(x[0], x[1]) for x in spec)


def parse_word(text: str, g: SimplicialGraph | None = None) -> Word:
    out = []
    for tok in text.split():
        if tok == "1":
            continue
        sign = 1
        name = tok
        if tok.endswith("'"):
            sign = -1
            name = tok[:-1]
        if not name or "'" in name:
            raise ParseError(f"bad token {tok!r}")
        if g is not None and name not in g:
            raise ParseError(f"unknown generator {name!r}")
        out.append(Letter(name, sign))
    return tuple(out)


def format_word(w: Word) -> str:
    return " ".join(str(x) for x in w) if w else "1"


def inverse(w: Word) -> Word:
    return tuple(x.inverse() for x in reversed(w))


def power(w: Word, n: int) -> Word:
    if n < 0:
        return inverse(w) * (-n)
    return tuple(w) * n


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u v u^-1 v^-1."""
    return tuple(u) + tuple(v) + inverse(u) + inverse(v)


def check_letters(g: SimplicialGraph, w: Word) -> None:
    for x in w:
        if x.gen not in g:
            raise InvalidVertex(x.gen)


# free group


def free_reduce(w: Word) -> Word:
    out = []
    for x in w:
        if out and out[-1].gen == x.gen and out[-1].sign == -x.sign:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w: Word) -> Word:
    w = list(free_reduce(w))
    i, j = 0, len(w)
    while j - i >= 2 and w[i].gen == w[j - 1].gen and w[i].sign == -w[j - 1].sign:
        i += 1
        j -= 1
    return tuple(w[i:j])


def free_equal(u: Word, v: Word) -> bool:
    return free_reduce(u) == free_reduce(v)


def freely_conjugate(u: Word, v: Word) -> bool:
    """True when u and v are conjugate in the free group."""
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if len(cu) != len(cv):
        return False
    if not cu:
        return True
    doubled = cu + cu
    return any(doubled[i:i + len(cv)] == cv for i in range(len(cu)))


# RAAG word problem


def reduce_raag(g: SimplicialGraph, w: Word) -> Word:
    """Delete pairs s ... s^-1 whose intervening letters all commute with s."""
    out: list[Letter] = []
    for x in w:
        i = len(out) - 1
        while i >= 0:
            y = out[i]
            if y.gen == x.gen:
                if y.sign == -x.sign:
                    del out[i]
                    break
                i = -1
                break
            if not g.adjacent(y.gen, x.gen):
                i = -1
                break
            i -= 1
        if i < 0:
            out.append(x)
    return tuple(out)


def _dependence(g: SimplicialGraph, w: Word) -> list[list[int]]:
    """For each position, the earlier positions it must stay after."""
    preds = []
    for j, x in enumerate(w):
        preds.append([i for i in range(j) if w[i].gen == x.gen or not g.adjacent(w[i].gen, x.gen)])
    return preds


def lex_least(g: SimplicialGraph, w: Word) -> Word:
    """Lexicographically least word (vertex order) in the commutation class of w."""
    n = len(w)
    preds = _dependence(g, w)
    remaining = [len(p) for p in preds]
    succs = [[] for _ in range(n)]
    for j, p in enumerate(preds):
        for i in p:
            succs[i].append(j)
    ready = [j for j in range(n) if remaining[j] == 0]
    out = []
    while ready:
        j = min(ready, key=lambda k: (g.index(w[k].gen), k))
        ready.remove(j)
        out.append(w[j])
        for k in succs[j]:
            remaining[k] -= 1
            if remaining[k] == 0:
                ready.append(k)
    return tuple(out)


def normal_form(g: SimplicialGraph, w: Word) -> Word:
    return lex_least(g, reduce_raag(g, w))


def words_equal(g: SimplicialGraph, u: Word, v: Word) -> bool:
    return normal_form(g, u) == normal_form(g, v)


def is_trivial(g: SimplicialGraph, w: Word) -> bool:
    return not reduce_raag(g, w)


def height(w: Word) -> int:
    return sum(x.sign for x in w)


def is_alternating(w: Word) -> bool:
    if len(w) % 2:
        return False
    return all(x.sign == (1 if i % 2 == 0 else -1) for i, x in enumerate(w))


def support(g: SimplicialGraph, w: Word) -> tuple[str, ...]:
    return g.sort(x.gen for x in w)


def palette(g: SimplicialGraph, w: Word) -> tuple[str, ...]:
    """Intersection of the stars of the support; all vertices for the empty word."""
    pal = set(g.vertices)
    for s in support(g, w):
        pal &= set(g.star(s))
    return g.sort(pal)


def geodesic_length(g: SimplicialGraph, w: Word) -> int:
    return len(reduce_raag(g, w))


def is_geodesic_word(g: SimplicialGraph, w: Word) -> bool:
    return len(reduce_raag(g, w)) == len(w)


def commutation_class(g: SimplicialGraph, w: Word) -> list[Word]:
    """Every word obtained from w by swapping adjacent commuting distinct letters."""
    n = len(w)
    preds = _dependence(g, w)
    out = []

    def extend(prefix, used):
        if len(prefix) == n:
            out.append(tuple(w[i] for i in prefix))
            return
        for j in range(n):
            if not used >> j & 1 and all(used >> i & 1 for i in preds[j]):
                # among equal letters keep the original order to avoid duplicates
                prefix.append(j)
                extend(prefix, used | 1 << j)
                prefix.pop()

    extend([], 0)
    return sorted(set(out), key=lambda u: [(g.index(x.gen), x.sign) for x in u])


def enumerate_geodesics(g: SimplicialGraph, w: Word, cap: int = DEFAULT_GEODESIC_CAP) -> list[Word]:
    nf = normal_form(g, w)
    if len(nf) > cap:
        raise CapExceeded(f"geodesic length {len(nf)} exceeds cap {cap}")
    return commutation_class(g, nf)


# independent oracle


def cayley_search_trivial(g: SimplicialGraph, w: Word, cap: int | None = None,
                          max_states: int = 2_000_000) -> bool:
    """Breadth-first search over relator applications on words.

    Moves are adjacent commuting swaps and free cancellations; when `cap`
    exceeds len(w), free insertions are also allowed up to length cap.
    """
    w = tuple(w)
    if cap is None:
        cap = len(w)
    gens = g.vertices
    seen = {w}
    queue = deque([w])
    while queue:
        u = queue.popleft()
        if not u:
            return True
        nbrs = []
        for i in range(len(u) - 1):
            x, y = u[i], u[i + 1]
            if x.gen == y.gen and x.sign == -y.sign:
                nbrs.append(u[:i] + u[i + 2:])
            elif x.gen != y.gen and g.adjacent(x.gen, y.gen):
                nbrs.append(u[:i] + (y, x) + u[i + 2:])
        if len(u) + 2 <= cap:
            for i in range(len(u) + 1):
                for s in gens:
                    for e in (1, -1):
                        nbrs.append(u[:i] + (Letter(s, e), Letter(s, -e)) + u[i:])
        for v in nbrs:
            if v not in seen:
                seen.add(v)
                queue.append(v)
        if len(seen) > max_states:
            raise CapExceeded("Cayley search state budget exhausted")
    return False


def cayley_words_equal(g: SimplicialGraph, u: Word, v: Word, cap: int | None = None) -> bool:
    return cayley_search_trivial(g, tuple(u) + inverse(v), cap)

"""Witness words for the cubic lower bound and coloured filling skeletons.

The constructors return coloured diagrams whose bounded regions are coloured
bigons, monochromatic commutators or other null-homotopic coloured words;
they are the skeleton of the recursive almost-flat fillings, not the
fillings themselves.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloured import ColouredLetter, check_coloured, coloured_inverse, colour_word
from .diagrams import Diagram
from .errors import (ColourClash, NoCommonColour, NotEssential, NotIrreducible,
                     PreconditionFailed, SupportIrreducible, TooSmall)
from .graph import SimplicialGraph
from .planar import PathBuilder
from .reducible import is_maximal_reducible_set, is_reducible_set
from .words import Letter, Word, commutator, is_trivial, normal_form, palette, support


# closed walks and witness words


def noncommuting_closed_walk(factor: SimplicialGraph) -> list[str]:
    """Closed walk in the complement of `factor` through every vertex.

    Depth-first traversal from the least vertex, each tree edge walked down
    and back, so consecutive entries never commute. The walk starts and ends
    at the least vertex and has 2(|V| - 1) steps.
    """
    if len(factor) < 2:
        raise TooSmall("a closed non-commuting walk needs two vertices")
    comp = factor.complement()
    if not comp.is_connected():
        raise NotIrreducible("the factor splits as a join")
    walk = [factor.vertices[0]]
    seen = {walk[0]}

    def visit(v):
        for u in comp.neighbours(v):
            if u not in seen:
                seen.add(u)
                walk.append(u)
                visit(u)
                walk.append(v)

    visit(walk[0])
    return walk


@dataclass(frozen=True)
class WitnessFamily:
    graph: SimplicialGraph
    reducible: tuple[str, ...]
    factor1: tuple[str, ...]
    factor2: tuple[str, ...]
    a: tuple[str, ...]       # a_0, ..., a_k = a_0
    b: tuple[str, ...]       # b_0, ..., b_l = b_0
    n: int
    w1: Word
    w2: Word
    w: Word

    @property
    def k(self) -> int:
        return len(self.a) - 1

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.b) - 1

    def to_dict(self) -> dict:
        from .words import format_word
        return {
            "reducible": list(self.reducible),
            "factors": [list(self.factor1), list(self.factor2)],
            "a": list(self.a),
            "b": list(self.b),
            "k": self.k,
            "l": self.l,
            "n": self.n,
            "w1": format_word(self.w1),
            "w2": format_word(self.w2),
            "w": format_word(self.w),
            "length": len(self.w),
        }


def _pair(x: str, y: str) -> Word:
    return (Letter(x, 1), Letter(y, -1))


def witness_words(g: SimplicialGraph, lam, n: int, check: bool = True) -> WitnessFamily:
    """w'_n, w''_n and their commutator w_n for an essential maximal reducible set."""
    verts = g.sort(getattr(lam, "vertices", lam))
    if n < 1:
        raise ValueError("n must be positive")
    if not is_reducible_set(g, verts) or not is_maximal_reducible_set(g, verts):
        raise NotEssential("not a maximal reducible subgraph")
    sub = g.induced(verts)
    if not sub.is_essential():
        raise NotEssential("the reducible subgraph is not essential")
    f1, f2 = sub.join_decompose().factors
    a = noncommuting_closed_walk(g.induced(f1))
    b = noncommuting_closed_walk(g.induced(f2))
    a1, b1 = a[1], b[1]
    left = tuple(x for ai in a[1:] for x in _pair(ai, b1))
    right = tuple(x for ai in a[1:] for x in _pair(b1, ai))
    w1 = left * n + right * n
    left = tuple(x for bj in b[1:] for x in _pair(bj, a1))
    right = tuple(x for bj in b[1:] for x in _pair(a1, bj))
    w2 = left * n + right * n
    w = commutator(w1, w2)
    if check and not is_trivial(g, w):
        raise AssertionError("witness word is not null-homotopic")
    return WitnessFamily(g, verts, f1, f2, tuple(a), tuple(b), n, w1, w2, w)


# coloured filling skeletons


def _check_palette(g: SimplicialGraph, w: Word, *colours: str) -> None:
    pal = set(palette(g, w))
    for c in colours:
        g.index(c)
        if c not in pal:
            raise ColourClash(f"{c} is not in the palette of the word")


def _join_split(g: SimplicialGraph, w: Word) -> tuple[Word, Word]:
    """w = w' w'' with supp(w') in the first join factor of supp(w)."""
    nf = normal_form(g, w)
    supp = support(g, nf)
    if len(supp) < 2 or not g.induced(supp).is_reducible():
        raise SupportIrreducible("the support of the word does not split as a join")
    first = set(g.induced(supp).join_decompose().factors[0])
    return (tuple(x for x in nf if x.gen in first),
            tuple(x for x in nf if x.gen not in first))


def bigon_split_diagram(g: SimplicialGraph, w: Word, a: str, b: str) -> Diagram:
    """Four-region diagram for <w>_a <w>_b^-1 when supp(w) is a join."""
    _check_palette(g, w, a, b)
    w1, w2 = _join_split(g, w)
    pb = PathBuilder()
    p0, m, p2 = pb.vertex(), pb.vertex(), pb.vertex()
    pb.path(p0, p2, colour_word(w, a), 60, 120)
    pb.path(p0, p2, colour_word(w, b), 300, 240)
    pb.path(p0, m, colour_word(w1, a), 20, 160)
    pb.path(p0, m, colour_word(w1, b), 340, 200)
    pb.path(m, p2, colour_word(w2, a), 20, 160)
    pb.path(m, p2, colour_word(w2, b), 340, 200)
    return pb.finalize_with_boundary(p0, colour_word(w, a) + coloured_inverse(colour_word(w, b)))


def bigon_necklace(g: SimplicialGraph, w: Word, a: str, b: str) -> Diagram:
    """<w>_a <w>_b^-1 filled by one single-letter bigon per letter."""
    _check_palette(g, w, a, b)
    pb = PathBuilder()
    nodes = [pb.vertex() for _ in range(len(w) + 1)]
    for i, x in enumerate(w):
        pb.path(nodes[i], nodes[i + 1], [ColouredLetter(x.gen, a, x.sign)], 30, 150)
        pb.path(nodes[i], nodes[i + 1], [ColouredLetter(x.gen, b, x.sign)], 330, 210)
    return pb.finalize_with_boundary(nodes[0], colour_word(w, a) + coloured_inverse(colour_word(w, b)))


def _commutator_boundary(w1: Word, a: str, w2: Word, b: str):
    c1, c2 = colour_word(w1, a), colour_word(w2, b)
    return c1 + c2 + coloured_inverse(c1) + coloured_inverse(c2)


def _check_commutator(g: SimplicialGraph, w1: Word, a: str, w2: Word, b: str) -> None:
    check_coloured(g, colour_word(w1, a) + colour_word(w2, b))
    pal1, pal2 = set(palette(g, w1)), set(palette(g, w2))
    if not ({b} | set(support(g, w2))) <= pal1 or not ({a} | set(support(g, w1))) <= pal2:
        raise PreconditionFailed("not a coloured commutator")


def commutator_common_colour(g: SimplicialGraph, w1: Word, a: str, w2: Word, b: str,
                             c: str) -> Diagram:
    """[<w1>_a, <w2>_b] as four bigons around the monochromatic [<w1>_c, <w2>_c]."""
    _check_commutator(g, w1, a, w2, b)
    if c not in set(palette(g, w1)) & set(palette(g, w2)):
        raise NoCommonColour(f"{c} is not a common colour of the two words")
    pb = PathBuilder()
    p0, r0, r2, p2 = (pb.vertex() for _ in range(4))
    # square with p0 top-left; clockwise: top w1, right w2, bottom w1^-1, left w2^-1
    pb.path(p0, r0, colour_word(w1, a), 0, 180)
    pb.path(p0, r0, colour_word(w1, c), 345, 195)
    pb.path(r0, r2, colour_word(w2, b), 270, 90)
    pb.path(r0, r2, colour_word(w2, c), 255, 105)
    pb.path(p2, r2, colour_word(w1, a), 0, 180)
    pb.path(p2, r2, colour_word(w1, c), 15, 165)
    pb.path(p0, p2, colour_word(w2, b), 270, 90)
    pb.path(p0, p2, colour_word(w2, c), 285, 75)
    return pb.finalize_with_boundary(p0, _commutator_boundary(w1, a, w2, b))


def commutator_split(g: SimplicialGraph, w1: Word, a: str, w2: Word, b: str) -> Diagram:
    """[<w1>_a, <w2>_b] when supp(w1) is a join: two monochromatic regions
    and the two commutators [<w1'>_a, <w2>_b], [<w1''>_a, <w2>_b]."""
    _check_commutator(g, w1, a, w2, b)
    u1, u2 = _join_split(g, w1)
    pb = PathBuilder()
    p0, mt, r0, r2, mb, p2 = (pb.vertex() for _ in range(6))
    pb.path(p0, r0, colour_word(w1, a), 0, 180)
    pb.path(p0, mt, colour_word(u1, a), 330, 150)
    pb.path(mt, r0, colour_word(u2, a), 30, 210)
    pb.path(p2, r2, colour_word(w1, a), 0, 180)
    pb.path(p2, mb, colour_word(u1, a), 30, 210)
    pb.path(mb, r2, colour_word(u2, a), 330, 150)
    pb.path(mt, mb, colour_word(w2, b), 270, 90)
    pb.path(r0, r2, colour_word(w2, b), 270, 90)
    pb.path(p0, p2, colour_word(w2, b), 270, 90)
    return pb.finalize_with_boundary(p0, _commutator_boundary(w1, a, w2, b))


def commutator_grid(g: SimplicialGraph, w1: Word, a: str, w2: Word, b: str) -> Diagram:
    """[<w1>_a, <w2>_b] with 3k+1 bigons and k monochromatic commutators, k = |w1|.

    Requires supp(w1) + {b} and supp(w2) + {a} to span a join.
    """
    side1 = set(support(g, w1)) | {b}
    side2 = set(support(g, w2)) | {a}
    if side1 & side2 or not all(g.adjacent(x, y) for x in side1 for y in side2):
        raise PreconditionFailed("supp(w1)+b and supp(w2)+a do not span a join")
    k = len(w1)
    pb = PathBuilder()
    left = [pb.vertex() for _ in range(k + 1)]
    right = [pb.vertex() for _ in range(k + 1)]
    s = [x.gen for x in w1]
    # left column bottom to top reads w1; p0 is the bottom-left corner and the
    # boundary runs up the left side, along the top, down the right, back along the bottom
    for i, x in enumerate(w1):
        pb.path(left[i], left[i + 1], [ColouredLetter(x.gen, a, x.sign)], 90, 270)
        pb.path(left[i], left[i + 1], [ColouredLetter(x.gen, x.gen, x.sign)], 70, 290)
        pb.path(right[i], right[i + 1], [ColouredLetter(x.gen, a, x.sign)], 90, 270)
        pb.path(right[i], right[i + 1], [ColouredLetter(x.gen, x.gen, x.sign)], 110, 250)
    if k == 0:
        pb.path(left[0], right[0], colour_word(w2, b), 10, 170)
        pb.path(left[0], right[0], colour_word(w2, b), 350, 190)
    else:
        for i in range(k + 1):
            lower = b if i == 0 else s[i - 1]
            upper = b if i == k else s[i]
            pb.path(left[i], right[i], colour_word(w2, lower), 350, 190)
            pb.path(left[i], right[i], colour_word(w2, upper), 10, 170)
    target = (colour_word(w1, a) + colour_word(w2, b) + coloured_inverse(colour_word(w1, a))
              + coloured_inverse(colour_word(w2, b)))
    return pb.finalize_with_boundary(left[0], target)
